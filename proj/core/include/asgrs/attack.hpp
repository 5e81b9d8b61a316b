#pragma once

// Algebraic key recovery against the jump-clocked alternating step generator.
//
// The generator is first viewed as a classical ASG over the decimated streams
// beta (B sampled every r clocks) and lambda (C sampled every s clocks). For each
// guess of A's initial state and of beta_0:
//
//   1. a_t gives which stream moved, and z_t ^ z_{t+1} is exactly the step of
//      that stream, so beta and lambda are rebuilt bit by bit;
//   2. Berlekamp-Massey over 2m beta bits and 2n lambda bits yields candidate
//      registers, which must regenerate the whole keystream;
//   3. for surviving candidates, r (resp. s) and the trace coefficient u are
//      found by solving beta_t = Tr(u * gamma^t), gamma = alpha^r, as an m x m
//      linear system for each admissible r, which also yields B's initial state.
//
// Cost: 2^(l+1) Berlekamp-Massey runs of O(m^2 + n^2), plus
// Phi_1 m^3 + Phi_2 n^3 for the decimation search per surviving candidate.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "asgrs/asg.hpp"
#include "asgrs/finite_field.hpp"
#include "asgrs/gf2.hpp"
#include "asgrs/sequence_analysis.hpp"

namespace asgrs {

/// 3(m + n): the shortest keystream the attack accepts.
std::size_t minimum_keystream_bits(const AsgParams& params);
/// l + 20: smallest allowed verification margin.
std::size_t minimum_verify_margin(const AsgParams& params);
/// 4(m + n) + l + 20: the default keystream budget for experiments.
std::size_t recommended_keystream_bits(const AsgParams& params);

struct AttackConfig {
  AsgParams params;
  BitSequence keystream;
  /// Keystream bits wanted beyond the fitting window for candidate verification.
  std::size_t verify_margin = 0;
  std::size_t max_candidates = 16;
  std::size_t worker_count = 1;
  /// Skip r unless minimal_polynomial(alpha^r) equals the fitted feedback.
  bool minpoly_prefilter = false;

  /// Config with verify_margin = l + 20 and the remaining defaults.
  static AttackConfig with_defaults(AsgParams params, BitSequence keystream);
};

/// Throws ConfigError naming the first broken requirement.
void validate_config(const AttackConfig& config);

struct ReconstructedStreams {
  BitSequence beta;
  BitSequence lambda;
  /// Keystream bits consumed to produce these prefixes.
  std::size_t keystream_bits_used = 0;
};

/// Rebuilds beta and lambda from the control bits and the keystream, starting
/// from beta_0 = beta0 and lambda_0 = z_0 ^ beta0. Requires
/// a_seq.size() + 1 >= keystream.size().
ReconstructedStreams reconstruct_streams(const BitSequence& a_seq, const BitSequence& keystream, bool beta0);

/// Same, but stops once at least `beta_bits` and `lambda_bits` are available.
ReconstructedStreams reconstruct_streams_until(const BitSequence& a_seq, const BitSequence& keystream, bool beta0,
                                               std::size_t beta_bits, std::size_t lambda_bits);

struct CandidateModel {
  BitVector a_init;
  bool beta0 = false;
  LfsrFit beta_fit;
  LfsrFit lambda_fit;
  /// Keystream bits consumed while harvesting the fitting prefixes.
  std::size_t fit_window = 0;
};

enum class FitStatus {
  fitted,
  insufficient_bits,
  /// Linear complexity above the register length, or a fit that contradicts
  /// the reconstructed prefix.
  rejected,
};

struct FitResult {
  FitStatus status = FitStatus::rejected;
  std::optional<CandidateModel> model;
  std::size_t bm_runs = 0;
};

/// Fit for an explicit control sequence (a_init is recorded, not re-run).
FitResult fit_streams(const AsgParams& params, const BitSequence& a_seq, const BitSequence& keystream,
                      const BitVector& a_init, bool beta0);
/// Runs A forward from a_init and fits.
FitResult fit_candidate(const AttackConfig& config, const BitVector& a_init, bool beta0);

/// Regenerates the whole keystream as a classical ASG over the fitted registers
/// and the candidate control register.
bool verify_candidate(const AttackConfig& config, const CandidateModel& candidate);

/// Rows t = 0..m-1, columns i = 0..m-1: Tr(alpha^i * gamma^t).
BitMatrix trace_system(const FieldContext& field, std::uint64_t gamma);

struct DecimationRecovery {
  std::uint64_t r = 0;
  FieldElement u;
  /// First m outputs of the undecimated register: Tr(u * alpha^t), t < m.
  BitVector init;
};

struct DecimationSearchStats {
  std::size_t exponents_tried = 0;
  std::size_t systems_solved = 0;
  std::size_t rank_deficient = 0;
};

struct DecimationOptions {
  /// When set, r is skipped unless minimal_polynomial(alpha^r) equals this.
  std::optional<BinaryPolynomial> required_minimal_polynomial;
};

/// Searches r = 1, 2, ..., 2^m - 2 with gcd(r, 2^m - 1) = 1; the first (r, u)
/// with Tr(u gamma^t) == observed[t] for all t < m + verify_bits wins.
/// Requires observed.size() >= m + verify_bits.
std::optional<DecimationRecovery> recover_decimation(const FieldContext& field, const BitSequence& observed,
                                                     std::size_t verify_bits, const DecimationOptions& options = {},
                                                     DecimationSearchStats* stats = nullptr);

struct AttackCounters {
  std::uint64_t a_states_tried = 0;
  std::uint64_t beta0_guesses = 0;
  std::uint64_t insufficient_bits = 0;
  std::uint64_t bm_runs = 0;
  std::uint64_t fit_rejections = 0;
  std::uint64_t verified_candidates = 0;
  std::uint64_t trace_solves = 0;
  std::uint64_t decimation_failures = 0;
  /// Verified candidates whose verification tail was shorter than verify_margin.
  std::uint64_t short_verification = 0;
  std::uint64_t keys_dropped = 0;

  AttackCounters& operator+=(const AttackCounters& other);
  friend bool operator==(const AttackCounters&, const AttackCounters&) = default;
};

struct AttackReport {
  std::vector<AsgKey> recovered_keys;
  AttackCounters counters;
  double wall_time_seconds = 0.0;
};

/// Exhausts all 2^l control states and both beta_0 guesses. Every reported key
/// regenerates the entire input keystream.
AttackReport run_attack(const AttackConfig& config);

/// 2^l * 2^m * 2^n * Phi_1 * Phi_2 with exact Phi counts.
double oracle_work(const AsgParams& params);
inline constexpr double kOracleWorkCap = 67108864.0;  // 2^26

/// Every valid key whose keystream prefix equals `keystream`, in enumeration
/// order (r, s, A, B, C ascending). Throws UnsupportedParameter over the cap.
std::vector<AsgKey> brute_force_oracle(const AsgParams& params, const BitSequence& keystream);

/// Admissible jumps in [1, 2^k - 2] coprime to 2^k - 1, ascending.
std::vector<std::uint64_t> admissible_jumps(std::size_t k);

}  // namespace asgrs
