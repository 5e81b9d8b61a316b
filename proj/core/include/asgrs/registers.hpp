#pragma once

// Fibonacci-form shift registers.
//
// Cells are indexed 0..len-1. Each clock shifts cell i into cell i+1 and the
// feedback bit enters cell 0. Generating registers emit cell len-1; the control
// register emits cell 0. With feedback polynomial p(x) = x^L + sum p_j x^j the
// emitted sequence satisfies o(k+L) = sum_j p_j o(k+j), so p is its
// characteristic polynomial.

#include <cstddef>
#include <cstdint>
#include <utility>

#include "asgrs/gf2.hpp"

namespace asgrs {

class LfsrSpec {
 public:
  /// Length is the degree of `feedback`; degree 0 and the zero polynomial are rejected.
  explicit LfsrSpec(BinaryPolynomial feedback);

  std::size_t length() const noexcept { return length_; }
  const BinaryPolynomial& feedback() const noexcept { return feedback_; }
  /// taps()[i] is the coefficient of x^(len-1-i): the weight of cell i in the feedback sum.
  const BitVector& taps() const noexcept { return taps_; }
  /// Only computed for lengths the primitivity test supports; false otherwise.
  bool is_primitive() const noexcept { return primitive_; }

  friend bool operator==(const LfsrSpec& a, const LfsrSpec& b) noexcept {
    return a.feedback_ == b.feedback_;
  }

 private:
  std::size_t length_;
  BinaryPolynomial feedback_;
  BitVector taps_;
  bool primitive_;
};

struct RegisterState {
  BitVector cells;

  bool is_zero() const noexcept { return cells.none(); }
  friend bool operator==(const RegisterState&, const RegisterState&) = default;
};

/// Register state whose first `prefix.size()` outputs are `prefix` (cell i = prefix[len-1-i]).
RegisterState state_from_output_prefix(const BitVector& prefix);
/// The first len outputs of a state, i.e. its cells in emission order.
BitVector output_prefix(const RegisterState& state);

/// One clock in place. `cells` must match the spec length.
void step_in_place(const LfsrSpec& spec, BitVector& cells);

/// Advances k clocks. Small k is stepped directly, k >= len^2 goes through mat_pow.
RegisterState lfsr_step(const LfsrSpec& spec, const RegisterState& state, std::uint64_t k = 1);

/// Companion matrix T with state(t) = state(t-1) * T.
BitMatrix transition_matrix(const LfsrSpec& spec);

/// Bit t is cell len-1 after t clocks. A zero state for a primitive spec is a DegenerateState.
BitSequence output_sequence(const LfsrSpec& spec, const RegisterState& init, std::size_t count);

/// Bit t of the result is bit r*t of `seq`. r == 0 is a ContractViolation.
BitSequence decimate(const BitSequence& seq, std::size_t r);

/// Span-l de Bruijn register: a primitive LFSR whose feedback is complemented
/// whenever the l-1 cells that survive the shift are all zero, which splices the
/// all-zero state into the maximal cycle.
class DeBruijnRegister {
 public:
  DeBruijnRegister(LfsrSpec base, RegisterState state);

  std::size_t span() const noexcept { return base_.length(); }
  const LfsrSpec& base() const noexcept { return base_; }
  const RegisterState& state() const noexcept { return state_; }
  /// Cell 0, the clock-control output.
  bool control_bit() const noexcept { return state_.cells[0]; }

  /// Emits cell 0, then advances one clock.
  bool next();

 private:
  LfsrSpec base_;
  RegisterState state_;
};

std::pair<bool, DeBruijnRegister> de_bruijn_step(DeBruijnRegister reg);

/// First `count` control bits produced from the given initial state.
BitSequence control_sequence(const DeBruijnRegister& reg, std::size_t count);

}  // namespace asgrs
