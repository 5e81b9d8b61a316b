#include "asgrs/sampling.hpp"

#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "asgrs/errors.hpp"
#include "asgrs/finite_field.hpp"

namespace asgrs {

namespace {

constexpr std::array<std::uint64_t, 25> kPrimitive{
    0,          0x3,        0x7,        0xb,        0x13,     0x25,     0x43,     0x83,     0x11d,
    0x211,      0x409,      0x805,      0x1053,     0x201b,   0x4443,   0x8003,   0x1100b,  0x20009,
    0x40081,    0x80027,    0x100009,   0x200005,   0x400003, 0x800021, 0x1000087,
};

}  // namespace

BinaryPolynomial default_primitive_polynomial(std::size_t degree) {
  if (degree == 0 || degree >= kPrimitive.size()) {
    throw UnsupportedParameter("no default primitive polynomial of degree " + std::to_string(degree));
  }
  return BinaryPolynomial::from_mask(kPrimitive[degree]);
}

AsgParams default_params(std::size_t l, std::size_t m, std::size_t n, bool strict) {
  AsgParams p;
  p.l = l;
  p.m = m;
  p.n = n;
  p.poly_a = default_primitive_polynomial(l);
  p.poly_b = default_primitive_polynomial(m);
  p.poly_c = default_primitive_polynomial(n);
  p.strict = strict;
  return p;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) {
    throw ContractViolation("uniform_below: bound must be positive");
  }
  if (bound == 1) {
    return 0;
  }
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
  for (;;) {
    const std::uint64_t x = rng() & mask;
    if (x < bound) {
      return x;
    }
  }
}

AsgKey random_key(const AsgParams& params, std::mt19937_64& rng) {
  const auto violations = validate_params(params);
  if (!violations.empty()) {
    throw ValidationError(describe(violations));
  }
  auto nonzero_state = [&](std::size_t len) {
    return BitVector::from_mask(1 + uniform_below(rng, mersenne(len)), len);
  };
  auto jump = [&](std::size_t len) {
    const std::uint64_t period = mersenne(len);
    for (;;) {
      const std::uint64_t r = 1 + uniform_below(rng, period - 1);
      if (std::gcd(r, period) == 1) {
        return r;
      }
    }
  };
  AsgKey key;
  key.state_a = BitVector::from_mask(uniform_below(rng, std::uint64_t{1} << params.l), params.l);
  key.state_b = nonzero_state(params.m);
  key.state_c = nonzero_state(params.n);
  key.r = jump(params.m);
  key.s = jump(params.n);
  return key;
}

BitSequence random_bits(std::size_t count, std::mt19937_64& rng) {
  BitSequence out(count);
  for (std::size_t t = 0; t < count; ++t) {
    out.set(t, rng() & 1U);
  }
  return out;
}

}  // namespace asgrs
