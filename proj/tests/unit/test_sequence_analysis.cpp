#include <doctest.h>

#include <random>

#include "asgrs/registers.hpp"
#include "asgrs/sampling.hpp"
#include "asgrs/sequence_analysis.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace asgrs;
using testing_support::from_bits;
using testing_support::to_bits;

TEST_CASE("Berlekamp-Massey finds the exhaustive-search linear complexity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const auto bits = testing_support::random_bits(rng, 1 + rng() % 14);
    const LfsrFit fit = berlekamp_massey(from_bits(bits));
    CAPTURE(trial);
    CHECK(fit.linear_complexity == oracle::linear_complexity(bits));
    CHECK(to_bits(fit.generate(bits.size())) == bits);
  }
}

TEST_CASE("m-sequences have linear complexity m and the feedback as characteristic") {
  for (std::size_t m = 2; m <= 16; ++m) {
    const BinaryPolynomial p = default_primitive_polynomial(m);
    const auto seq = output_sequence(LfsrSpec(p), RegisterState{BitVector::from_mask(1, m)}, 2 * m);
    const LfsrFit fit = berlekamp_massey(seq);
    CHECK(fit.linear_complexity == m);
    CHECK(fit.characteristic() == p);
    CHECK(fit.to_spec().feedback() == p);
    CHECK(output_sequence(fit.to_spec(), fit.to_register_state(), 500) ==
          output_sequence(LfsrSpec(p), RegisterState{BitVector::from_mask(1, m)}, 500));
  }
}

TEST_CASE("period-7 m-sequence: L = 3, connection 1 + x^2 + x^3, characteristic x^3 + x + 1") {
  const LfsrFit fit = berlekamp_massey(BitVector::from_string("1001011 1001011"));
  CHECK(fit.linear_complexity == 3);
  CHECK(fit.characteristic() == BinaryPolynomial::parse("x^3+x+1"));
  CHECK(fit.connection == BinaryPolynomial::parse("x^3+x^2+1"));
}

TEST_CASE("degenerate inputs") {
  CHECK(berlekamp_massey(BitVector()).linear_complexity == 0);
  CHECK(berlekamp_massey(BitVector(20)).linear_complexity == 0);
  // A single one at the end needs a register as long as the sequence.
  CHECK(berlekamp_massey(BitVector::from_string("00001")).linear_complexity == 5);
}

TEST_CASE("period measurement") {
  CHECK(measure_period(BitVector::from_string("1001011 1001011")) == 7u);
  CHECK(measure_period(BitVector::from_string("1001011 100101")) == std::nullopt);
  CHECK(measure_period(BitVector::from_string("1111")) == 1u);
  CHECK(measure_period(BitVector()) == std::nullopt);
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto bits = testing_support::random_bits(rng, 2 + rng() % 40);
    CHECK(measure_period(from_bits(bits)) == oracle::least_period(bits));
  }
}
