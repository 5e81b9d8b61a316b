#pragma once

#include <random>

#include "asgrs/gf2.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Bits to_bits(const asgrs::BitVector& v) {
  oracle::Bits out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] ? 1 : 0;
  return out;
}

inline asgrs::BitVector from_bits(const oracle::Bits& b) {
  asgrs::BitVector v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) v.set(i, b[i] != 0);
  return v;
}

inline oracle::Bits random_bits(std::mt19937_64& rng, std::size_t n) {
  oracle::Bits b(n);
  for (auto& x : b) x = static_cast<int>(rng() & 1U);
  return b;
}

}  // namespace testing_support
