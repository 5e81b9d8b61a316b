#pragma once

#include <cstddef>
#include <optional>

#include "asgrs/gf2.hpp"
#include "asgrs/registers.hpp"

namespace asgrs {

/// Shortest LFSR generating an analyzed sequence.
///
/// `connection` is C(x) = 1 + c_1 x + ... + c_L x^L where c_i multiplies the bit
/// i steps back: s(k) = sum_i c_i s(k-i). The matching register feedback
/// polynomial is characteristic() = x^L C(1/x).
struct LfsrFit {
  std::size_t linear_complexity = 0;
  BinaryPolynomial connection = BinaryPolynomial::from_mask(1);
  /// First L bits of the sequence.
  BitVector initial_state;

  BinaryPolynomial characteristic() const { return connection.reciprocal(linear_complexity); }
  /// Requires L >= 1.
  LfsrSpec to_spec() const { return LfsrSpec(characteristic()); }
  RegisterState to_register_state() const { return state_from_output_prefix(initial_state); }
  /// Runs the recurrence forward from the initial state.
  BitSequence generate(std::size_t count) const;
};

LfsrFit berlekamp_massey(const BitSequence& seq);

/// Least p with seq[t+p] == seq[t] for every valid t, provided the window holds
/// at least 2p bits; std::nullopt when no such p is visible.
std::optional<std::size_t> measure_period(const BitSequence& seq);

}  // namespace asgrs
