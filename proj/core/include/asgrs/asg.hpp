#pragma once

// Alternating step generator with jump clocking.
//
// Register A (de Bruijn, span l) selects each clock whether B advances r steps
// or C advances s steps. The output is out(B) xor out(C). Step order is
// emit-then-clock: z_0 comes from the initial states, and z_{t+1} is emitted
// after a_t (A's cell 0) has been read, one of B/C has jumped, and A has
// advanced once.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asgrs/gf2.hpp"
#include "asgrs/registers.hpp"

namespace asgrs {

/// Public parameters: register lengths and feedback polynomials.
struct AsgParams {
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  BinaryPolynomial poly_a;  // de Bruijn base, degree l
  BinaryPolynomial poly_b;  // degree m
  BinaryPolynomial poly_c;  // degree n
  /// Enforces gcd(m, n) = 1.
  bool strict = true;

  friend bool operator==(const AsgParams&, const AsgParams&) = default;
};

/// Secret key: three initial states and the jump amounts.
struct AsgKey {
  BitVector state_a;
  BitVector state_b;
  BitVector state_c;
  std::uint64_t r = 1;
  std::uint64_t s = 1;

  friend bool operator==(const AsgKey&, const AsgKey&) = default;
};

enum class ViolationKind {
  bad_length,
  degree_mismatch,
  unsupported_degree,
  not_primitive,
  lengths_not_coprime,
  state_length,
  zero_state,
  jump_out_of_range,
  jump_not_coprime,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

std::vector<Violation> validate_params(const AsgParams& params);
/// Every violated constraint of params and key; empty means valid.
std::vector<Violation> validate(const AsgParams& params, const AsgKey& key);
/// Throws ValidationError listing all violations.
void require_valid(const AsgParams& params, const AsgKey& key);
std::string describe(const std::vector<Violation>& violations);

/// 2^k - 1.
constexpr std::uint64_t mersenne(std::size_t k) noexcept { return (std::uint64_t{1} << k) - 1; }
/// Key with r reduced mod 2^m - 1 and s reduced mod 2^n - 1.
AsgKey canonical_key(const AsgParams& params, AsgKey key);

/// The classical generator obtained by replacing B and C with registers that
/// produce their r- and s-decimated outputs under unit clocking.
struct ReducedModel {
  LfsrSpec beta_spec;
  RegisterState beta_state;
  LfsrSpec lambda_spec;
  RegisterState lambda_state;
  DeBruijnRegister control;
};

/// Streaming generator. Copyable, so simulations can be forked.
class AsgGenerator {
 public:
  /// Validates, then runs with jumps r and s.
  AsgGenerator(const AsgParams& params, const AsgKey& key);
  /// Classical ASG over a reduced model (unit jumps). Zero beta/lambda states
  /// are rejected with DegenerateState.
  explicit AsgGenerator(const ReducedModel& model);

  bool next();
  BitSequence take(std::size_t count);

  /// Fresh copy with new initial states and the same registers and jumps.
  AsgGenerator rekeyed(const BitVector& state_a, const BitVector& state_b, const BitVector& state_c) const;

  /// Jumps taken so far by B (p) and by C (q).
  std::size_t beta_index() const noexcept { return beta_.jumps; }
  std::size_t lambda_index() const noexcept { return lambda_.jumps; }
  /// Control bit consumed to produce the most recent output; empty before z_1.
  std::optional<bool> last_control() const noexcept { return last_control_; }
  const BitVector& beta_cells() const noexcept { return beta_.cells; }
  const BitVector& lambda_cells() const noexcept { return lambda_.cells; }

 private:
  struct Clocked {
    LfsrSpec spec;
    BitVector cells;
    std::uint64_t jump = 1;
    std::optional<BitMatrix> jump_matrix;
    std::size_t jumps = 0;

    Clocked(LfsrSpec s, BitVector c, std::uint64_t k);
    void advance();
    bool output() const noexcept { return cells[cells.size() - 1]; }
  };

  DeBruijnRegister control_;
  Clocked beta_;
  Clocked lambda_;
  bool started_ = false;
  std::optional<bool> last_control_;
};

/// Exactly `count` keystream bits; invalid input raises ValidationError.
BitSequence keystream(const AsgParams& params, const AsgKey& key, std::size_t count);

ReducedModel reduce(const AsgParams& params, const AsgKey& key);
BitSequence classical_asg_keystream(const ReducedModel& model, std::size_t count);

}  // namespace asgrs
