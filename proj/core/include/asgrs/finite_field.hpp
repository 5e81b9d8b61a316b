#pragma once

// GF(2^m) in the polynomial basis {1, x, ..., x^(m-1)} modulo a primitive
// polynomial. The class of x is the primitive element alpha.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "asgrs/gf2.hpp"

namespace asgrs {

/// Largest degree for which primitivity is checked (and fields are built).
inline constexpr std::size_t kMaxFieldDegree = 24;

/// Distinct prime factors of n, ascending, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// True iff p is irreducible and x has multiplicative order 2^deg - 1 modulo p.
/// Degrees above kMaxFieldDegree raise UnsupportedParameter.
bool is_primitive(const BinaryPolynomial& p);
bool is_irreducible(const BinaryPolynomial& p);

class FieldElement;

class FieldContext {
 public:
  /// Throws UnsupportedParameter for degree 0 or above kMaxFieldDegree, and
  /// ContractViolation if the modulus is not primitive.
  explicit FieldContext(const BinaryPolynomial& modulus);

  std::size_t degree() const noexcept { return impl_->m; }
  const BinaryPolynomial& modulus() const noexcept { return impl_->modulus; }
  /// 2^m - 1.
  std::uint64_t multiplicative_order() const noexcept { return (std::uint64_t{1} << impl_->m) - 1; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement alpha() const;
  /// Element whose polynomial-basis coordinates are the low m bits of `bits`.
  FieldElement element(std::uint64_t bits) const;

  // Raw arithmetic on coordinate masks; the hot loops of the attack use these.
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t power(std::uint64_t a, std::uint64_t e) const noexcept;
  std::uint64_t square(std::uint64_t a) const noexcept { return multiply(a, a); }
  /// Trace via the precomputed linear functional.
  bool trace(std::uint64_t a) const noexcept;
  /// Trace as the literal sum of Frobenius conjugates a + a^2 + ... + a^(2^(m-1)).
  bool trace_by_conjugates(std::uint64_t a) const noexcept;
  /// Coordinate mask w with Tr(a) = parity(a & w).
  std::uint64_t trace_functional() const noexcept { return impl_->trace_mask; }

  friend bool operator==(const FieldContext& a, const FieldContext& b) noexcept {
    return a.impl_ == b.impl_ || a.impl_->modulus == b.impl_->modulus;
  }

 private:
  struct Impl {
    std::size_t m = 0;
    BinaryPolynomial modulus;
    std::uint64_t modulus_mask = 0;
    std::uint64_t element_mask = 0;
    std::uint64_t trace_mask = 0;
  };
  std::shared_ptr<const Impl> impl_;
};

class FieldElement {
 public:
  FieldElement(FieldContext ctx, std::uint64_t bits);

  const FieldContext& context() const noexcept { return ctx_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  BinaryPolynomial as_polynomial() const { return BinaryPolynomial::from_mask(bits_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.bits_ == b.bits_ && a.ctx_ == b.ctx_;
  }

 private:
  FieldContext ctx_;
  std::uint64_t bits_;
};

FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_pow(const FieldElement& a, std::uint64_t e);
bool trace(const FieldElement& x);
/// Product of (y + c) over the distinct Frobenius conjugates c of x.
BinaryPolynomial minimal_polynomial(const FieldElement& x);

}  // namespace asgrs
