#pragma once

// Closed-form attack cost estimates, all in log2 with big-O constants set to 1.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace asgrs {

struct ComplexityInputs {
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  /// Count admissible jumps with Euler's totient instead of 2^(k-1). Needs m, n <= 24.
  bool exact_phi = false;

  std::size_t total_length() const noexcept { return l + m + n; }  // L
  std::size_t max_length() const noexcept { return m > n ? m : n; }  // M
  /// 1 - 1/(0.19 m + 3.1)
  double gamma() const noexcept;
  double phi1_log2() const;
  double phi2_log2() const;
};

struct EstimateRow {
  std::string attack_name;
  /// Unspecified when the published table leaves the cell blank.
  std::optional<double> mklr_log2;
  double complexity_log2 = 0.0;
};

/// Original ASG. Requires l, m, n >= 2.
std::vector<EstimateRow> estimate_table1(const ComplexityInputs& inputs);
/// ASG(r,s). Requires l, m, n >= 2.
std::vector<EstimateRow> estimate_table2(const ComplexityInputs& inputs);

/// C(M, M/2) 2^-M, with an exact binomial. M even, 2 <= M <= 1024.
double johansson_segment_probability(std::size_t M);

/// log2((m^2+n^2) 2^(l+1) + Phi_1 m^3 + Phi_2 n^3).
double our_attack_complexity(const ComplexityInputs& inputs);

/// Last-column values published for l = m = n = 64.
struct PublishedValue {
  std::string attack_name;
  double log2_value;
};
const std::vector<PublishedValue>& published_table1_64();
const std::vector<PublishedValue>& published_table2_64();

struct RowCheck {
  std::string attack_name;
  double computed_log2;
  double published_log2;
  /// |computed - published| <= tolerance
  bool consistent;
};

/// Pairs rows with published values by name. Rows without a published
/// counterpart are skipped.
std::vector<RowCheck> check_against_published(const std::vector<EstimateRow>& rows,
                                              const std::vector<PublishedValue>& published,
                                              double tolerance = 0.5);

/// log2(2^a + 2^b) without overflow.
double log2_add(double a, double b);

}  // namespace asgrs
