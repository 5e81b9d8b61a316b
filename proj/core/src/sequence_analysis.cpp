#include "asgrs/sequence_analysis.hpp"

#include <vector>

namespace asgrs {

BitSequence LfsrFit::generate(std::size_t count) const {
  BitSequence out(count);
  const std::size_t len = linear_complexity;
  for (std::size_t k = 0; k < count; ++k) {
    bool bit = false;
    if (k < len) {
      bit = initial_state[k];
    } else {
      for (std::size_t i = 1; i <= len; ++i) {
        bit ^= connection.coefficient(i) && out[k - i];
      }
    }
    out.set(k, bit);
  }
  return out;
}

LfsrFit berlekamp_massey(const BitSequence& seq) {
  const std::size_t n = seq.size();
  std::vector<std::uint8_t> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = seq[i] ? 1 : 0;
  }

  std::vector<std::uint8_t> c(n + 1, 0);
  std::vector<std::uint8_t> b(n + 1, 0);
  c[0] = 1;
  b[0] = 1;
  std::size_t len = 0;
  std::size_t last_shift = 1;  // steps since b was last replaced

  for (std::size_t k = 0; k < n; ++k) {
    std::uint8_t discrepancy = s[k];
    for (std::size_t i = 1; i <= len; ++i) {
      discrepancy ^= c[i] & s[k - i];
    }
    if (discrepancy == 0) {
      ++last_shift;
      continue;
    }
    const std::vector<std::uint8_t> previous = c;
    for (std::size_t i = 0; i + last_shift <= n; ++i) {
      c[i + last_shift] ^= b[i];
    }
    if (2 * len <= k) {
      len = k + 1 - len;
      b = previous;
      last_shift = 1;
    } else {
      ++last_shift;
    }
  }

  LfsrFit fit;
  fit.linear_complexity = len;
  BinaryPolynomial connection;
  for (std::size_t i = 0; i <= len; ++i) {
    if (c[i]) {
      connection.set_coefficient(i, true);
    }
  }
  fit.connection = connection;
  fit.initial_state = seq.slice(0, len);
  return fit;
}

std::optional<std::size_t> measure_period(const BitSequence& seq) {
  const std::size_t n = seq.size();
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    bool periodic = true;
    for (std::size_t t = 0; t + p < n; ++t) {
      if (seq[t] != seq[t + p]) {
        periodic = false;
        break;
      }
    }
    if (periodic) {
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace asgrs
