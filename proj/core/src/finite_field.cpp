#include "asgrs/finite_field.hpp"

#include <bit>
#include <string>

#include "asgrs/errors.hpp"

namespace asgrs {

namespace {

// Multiplication modulo a polynomial of degree d <= 32 given as a mask.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, std::size_t d) {
  std::uint64_t acc = 0;
  const std::uint64_t top = std::uint64_t{1} << d;
  while (b != 0) {
    if (b & 1U) {
      acc ^= a;
    }
    b >>= 1U;
    a <<= 1U;
    if (a & top) {
      a ^= modulus;
    }
  }
  return acc;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t modulus, std::size_t d) {
  std::uint64_t result = 1;
  if (d == 0) {
    return 0;
  }
  while (e != 0) {
    if (e & 1U) {
      result = mulmod(result, a, modulus, d);
    }
    e >>= 1U;
    if (e != 0) {
      a = mulmod(a, a, modulus, d);
    }
  }
  return result;
}

// The class of x modulo p; for p = x + 1 that is 1.
std::uint64_t alpha_bits(std::size_t d, std::uint64_t modulus) {
  return d == 1 ? (0b10 ^ modulus) : 0b10;
}

std::size_t checked_degree(const BinaryPolynomial& p) {
  const auto deg = p.degree();
  if (!deg || *deg == 0) {
    throw UnsupportedParameter("polynomial of degree < 1 has no roots to test: " + p.to_string());
  }
  if (*deg > kMaxFieldDegree) {
    throw UnsupportedParameter("degree " + std::to_string(*deg) + " exceeds the supported bound of " +
                               std::to_string(kMaxFieldDegree));
  }
  return *deg;
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) {
        n /= f;
      }
    }
  }
  if (n > 1) {
    out.push_back(n);
  }
  return out;
}

bool is_irreducible(const BinaryPolynomial& p) {
  const std::size_t d = checked_degree(p);
  const std::uint64_t mod = p.to_mask();
  // Rabin: x^(2^d) == x mod p, and gcd(x^(2^(d/q)) - x, p) == 1 for primes q | d.
  auto frobenius_power = [&](std::size_t k) {
    std::uint64_t y = alpha_bits(d, mod);
    for (std::size_t i = 0; i < k; ++i) {
      y = mulmod(y, y, mod, d);
    }
    return y;
  };
  const std::uint64_t x = alpha_bits(d, mod);
  if (frobenius_power(d) != x) {
    return false;
  }
  for (std::uint64_t q : prime_factors(d)) {
    const std::uint64_t diff = frobenius_power(d / q) ^ x;
    if (gcd(BinaryPolynomial::from_mask(diff), p).degree() != std::size_t{0}) {
      return false;
    }
  }
  return true;
}

bool is_primitive(const BinaryPolynomial& p) {
  const std::size_t d = checked_degree(p);
  if (!is_irreducible(p)) {
    return false;
  }
  const std::uint64_t mod = p.to_mask();
  const std::uint64_t order = (std::uint64_t{1} << d) - 1;
  const std::uint64_t x = alpha_bits(d, mod);
  if (powmod(x, order, mod, d) != 1) {
    return false;
  }
  for (std::uint64_t q : prime_factors(order)) {
    if (powmod(x, order / q, mod, d) == 1) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ FieldContext

FieldContext::FieldContext(const BinaryPolynomial& modulus) {
  const std::size_t m = checked_degree(modulus);
  if (!is_primitive(modulus)) {
    throw ContractViolation("field modulus is not primitive: " + modulus.to_string());
  }
  auto impl = std::make_shared<Impl>();
  impl->m = m;
  impl->modulus = modulus;
  impl->modulus_mask = modulus.to_mask();
  impl->element_mask = (std::uint64_t{1} << m) - 1;
  impl_ = impl;
  // Tr is linear: collect Tr(x^i) for each basis element.
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t basis = i == 0 ? 1 : power(alpha_bits(m, impl->modulus_mask), i);
    if (trace_by_conjugates(basis)) {
      mask |= std::uint64_t{1} << i;
    }
  }
  impl->trace_mask = mask;
}

FieldElement FieldContext::zero() const { return FieldElement(*this, 0); }
FieldElement FieldContext::one() const { return FieldElement(*this, 1); }
FieldElement FieldContext::alpha() const {
  return FieldElement(*this, alpha_bits(impl_->m, impl_->modulus_mask));
}

FieldElement FieldContext::element(std::uint64_t bits) const {
  return FieldElement(*this, bits & impl_->element_mask);
}

std::uint64_t FieldContext::multiply(std::uint64_t a, std::uint64_t b) const noexcept {
  return mulmod(a, b, impl_->modulus_mask, impl_->m);
}

std::uint64_t FieldContext::power(std::uint64_t a, std::uint64_t e) const noexcept {
  return powmod(a, e, impl_->modulus_mask, impl_->m);
}

bool FieldContext::trace(std::uint64_t a) const noexcept {
  return (std::popcount(a & impl_->trace_mask) & 1) != 0;
}

bool FieldContext::trace_by_conjugates(std::uint64_t a) const noexcept {
  std::uint64_t sum = 0;
  std::uint64_t conj = a;
  for (std::size_t i = 0; i < impl_->m; ++i) {
    sum ^= conj;
    conj = square(conj);
  }
  // The sum lies in GF(2): either 0 or 1.
  return sum == 1;
}

// ------------------------------------------------------------ FieldElement

FieldElement::FieldElement(FieldContext ctx, std::uint64_t bits) : ctx_(std::move(ctx)), bits_(bits) {
  if (bits_ >> ctx_.degree() != 0) {
    throw ContractViolation("field element has degree >= m");
  }
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.context() == b.context())) {
    throw ContractViolation("field elements belong to different fields");
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.ctx_, a.bits_ ^ b.bits_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.ctx_, a.ctx_.multiply(a.bits_, b.bits_));
}

FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement ff_pow(const FieldElement& a, std::uint64_t e) {
  return FieldElement(a.context(), a.context().power(a.bits(), e));
}

bool trace(const FieldElement& x) { return x.context().trace(x.bits()); }

BinaryPolynomial minimal_polynomial(const FieldElement& x) {
  const FieldContext& ctx = x.context();
  std::vector<std::uint64_t> conjugates;
  std::uint64_t c = x.bits();
  do {
    conjugates.push_back(c);
    c = ctx.square(c);
  } while (c != x.bits());

  // Coefficients (in the field) of the running product, lowest degree first.
  std::vector<std::uint64_t> coeffs{1};
  for (std::uint64_t root : conjugates) {
    std::vector<std::uint64_t> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] ^= coeffs[i];
      next[i] ^= ctx.multiply(coeffs[i], root);
    }
    coeffs = std::move(next);
  }
  BinaryPolynomial out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] > 1) {
      throw ContractViolation("minimal polynomial coefficient outside GF(2)");
    }
    if (coeffs[i] == 1) {
      out.set_coefficient(i, true);
    }
  }
  return out;
}

}  // namespace asgrs
