#include <doctest.h>

#include <random>
#include <set>

#include "asgrs/errors.hpp"
#include "asgrs/registers.hpp"
#include "asgrs/sampling.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace asgrs;
using testing_support::from_bits;
using testing_support::to_bits;

TEST_CASE("register output follows the characteristic recurrence") {
  std::mt19937_64 rng(21);
  for (std::uint64_t p : {0xbull, 0xdull, 0x13ull, 0x25ull, 0x11dull, 0x805ull, 0x1f5ull}) {
    const LfsrSpec spec(BinaryPolynomial::from_mask(p));
    const std::size_t len = spec.length();
    const auto prefix = testing_support::random_bits(rng, len);
    const RegisterState init = state_from_output_prefix(from_bits(prefix));
    if (spec.is_primitive() && init.is_zero()) continue;
    CHECK(to_bits(output_sequence(spec, init, 300)) == oracle::recurrence(p, prefix, 300));
    CHECK(output_prefix(init) == from_bits(prefix));
  }
}

TEST_CASE("primitive registers have period 2^m - 1") {
  for (std::size_t m = 2; m <= 12; ++m) {
    const LfsrSpec spec(default_primitive_polynomial(m));
    const std::size_t period = (std::size_t{1} << m) - 1;
    const auto seq = to_bits(output_sequence(spec, RegisterState{BitVector::from_mask(1, m)}, 2 * period + 2));
    CHECK(oracle::least_period(seq) == period);
  }
}

TEST_CASE("jumping k steps: loop and matrix power agree") {
  const LfsrSpec spec(BinaryPolynomial::from_mask(0x11d));
  const RegisterState s{BitVector::from_mask(0x5a, 8)};
  RegisterState walked = s;
  for (std::uint64_t k = 0; k < 200; ++k) {
    CHECK(lfsr_step(spec, s, k) == walked);
    step_in_place(spec, walked.cells);
  }
  // Full period returns to the start.
  CHECK(lfsr_step(spec, s, 255) == s);
  CHECK(vec_mul(s.cells, mat_pow(transition_matrix(spec), 77)) == lfsr_step(spec, s, 77).cells);
}

TEST_CASE("register contracts") {
  CHECK_THROWS_AS(LfsrSpec(BinaryPolynomial::from_mask(1)), ContractViolation);
  const LfsrSpec spec(BinaryPolynomial::from_mask(0xb));
  CHECK_THROWS_AS(output_sequence(spec, RegisterState{BitVector(3)}, 4), DegenerateState);
  CHECK_THROWS_AS(output_sequence(spec, RegisterState{BitVector(4)}, 4), ContractViolation);
  CHECK_THROWS_AS(decimate(BitVector(4), 0), ContractViolation);
  CHECK(decimate(BitVector::from_string("1011001"), 3).to_string() == "111");
}

TEST_CASE("de Bruijn register matches the window recurrence and covers every window once") {
  std::mt19937_64 rng(22);
  for (std::size_t l = 1; l <= 10; ++l) {
    const BinaryPolynomial base = default_primitive_polynomial(l);
    const std::size_t period = std::size_t{1} << l;
    const BitVector cells = BitVector::from_mask(rng() & (period - 1), l);
    const DeBruijnRegister reg(LfsrSpec(base), RegisterState{cells});
    const auto seq = to_bits(control_sequence(reg, 2 * period + l));

    // The oracle runs on the history: cell l-1 is the oldest bit, cell 0 the current output.
    oracle::Bits history(l);
    for (std::size_t i = 0; i < l; ++i) history[i] = cells[l - 1 - i];
    auto expected = oracle::de_bruijn(base.to_mask(), history, 2 * period + 2 * l - 1);
    expected.erase(expected.begin(), expected.begin() + static_cast<std::ptrdiff_t>(l - 1));
    CHECK(seq == expected);

    CHECK(oracle::least_period(seq) == period);
    std::set<std::uint64_t> windows;
    for (std::size_t t = 0; t < period; ++t) {
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < l; ++i) w |= std::uint64_t(seq[t + i]) << i;
      windows.insert(w);
    }
    CHECK(windows.size() == period);
  }
}

TEST_CASE("de Bruijn step helpers") {
  const DeBruijnRegister reg(LfsrSpec(BinaryPolynomial::from_mask(0xb)), RegisterState{BitVector::from_mask(5, 3)});
  CHECK(reg.control_bit() == true);
  auto [bit, next] = de_bruijn_step(reg);
  CHECK(bit == reg.control_bit());
  DeBruijnRegister copy = reg;
  copy.next();
  CHECK(copy.state() == next.state());
  CHECK_THROWS_AS(DeBruijnRegister(LfsrSpec(BinaryPolynomial::from_mask(0x1f)), RegisterState{BitVector(4)}),
                  ContractViolation);
}

TEST_CASE("decimating an m-sequence keeps period 2^m - 1 iff gcd(r, 2^m - 1) = 1") {
  const LfsrSpec spec(BinaryPolynomial::from_mask(0x13));
  const auto base = output_sequence(spec, RegisterState{BitVector::from_mask(1, 4)}, 15 * 15 * 3);
  std::set<std::size_t> failing;
  for (std::size_t r = 1; r <= 14; ++r) {
    const auto p = oracle::least_period(to_bits(decimate(base, r)));
    REQUIRE(p.has_value());
    CHECK((*p == 15) == (oracle::gcd(r, 15) == 1));
    if (*p != 15) failing.insert(r);
  }
  CHECK(failing == std::set<std::size_t>{3, 5, 6, 9, 10, 12});
}
