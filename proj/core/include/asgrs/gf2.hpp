#pragma once

// Dense linear algebra and polynomial arithmetic over GF(2).
//
// Bits are packed little-endian into 64-bit words: bit i lives in word i/64 at
// position i%64. State vectors are row vectors and are multiplied on the right
// by transition matrices (state(t) = state(t-1) * T).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace asgrs {

class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Low `length` bits of `mask`, bit i -> index i. Requires length <= 64.
  static BitVector from_mask(std::uint64_t mask, std::size_t length);
  /// ASCII '0'/'1'; whitespace is skipped, anything else is a FormatError.
  static BitVector from_string(std::string_view text);
  static BitVector from_bits(std::initializer_list<int> bits);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  /// Bounds-checked read.
  bool at(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);
  void push_back(bool bit);
  void resize(std::size_t length);

  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept;

  /// Packs the vector into an integer; requires size() <= 64.
  std::uint64_t to_mask() const;
  std::string to_string() const;

  /// Bits [first, first + count).
  BitVector slice(std::size_t first, std::size_t count) const;
  BitVector reversed() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  /// Inner product over GF(2).
  bool dot(const BitVector& other) const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Ordered bit stream: keystreams, register outputs, decimated sequences.
using BitSequence = BitVector;

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::initializer_list<std::string_view> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows() == cols_; }

  bool operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  void set(std::size_t r, std::size_t c, bool value = true);

  const BitVector& row(std::size_t r) const { return rows_.at(r); }
  void set_row(std::size_t r, BitVector row);

  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
/// m^t by repeated squaring; m^0 is the identity.
BitMatrix mat_pow(const BitMatrix& m, std::uint64_t t);
/// Row vector times matrix.
BitVector vec_mul(const BitVector& row, const BitMatrix& m);
/// Matrix times column vector.
BitVector mat_vec(const BitMatrix& m, const BitVector& column);

std::size_t rank(BitMatrix m);
std::optional<BitMatrix> inverse(const BitMatrix& m);

enum class SolveStatus { unique, no_solution, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::no_solution;
  BitVector solution;  // meaningful only when status == unique
  std::size_t rank = 0;

  bool ok() const noexcept { return status == SolveStatus::unique; }
};

/// Gaussian elimination on [a | rhs]. Inconsistent systems report no_solution
/// even when they are also rank deficient.
SolveResult solve_linear_system(const BitMatrix& a, const BitVector& rhs);

/// Element of GF(2)[x]. Bit i of the coefficient mask is the coefficient of x^i.
class BinaryPolynomial {
 public:
  /// Degree of a polynomial; std::nullopt stands for the zero polynomial's
  /// minus-infinity degree.
  using Degree = std::optional<std::size_t>;

  BinaryPolynomial() = default;

  static BinaryPolynomial from_mask(std::uint64_t mask);
  static BinaryPolynomial monomial(std::size_t exponent);
  static BinaryPolynomial from_exponents(std::initializer_list<std::size_t> exponents);
  /// Accepts hexadecimal masks ("0xb", "b") or sums of monomials ("x^3+x+1").
  static BinaryPolynomial parse(std::string_view text);

  bool is_zero() const noexcept { return words_.empty(); }
  Degree degree() const noexcept;
  bool coefficient(std::size_t i) const noexcept;
  void set_coefficient(std::size_t i, bool value);
  std::size_t weight() const noexcept;

  /// Requires degree < 64.
  std::uint64_t to_mask() const;
  /// "x^3 + x + 1"; the zero polynomial prints as "0".
  std::string to_string() const;
  /// "0xb"; the zero polynomial prints as "0x0".
  std::string to_hex() const;

  /// x^n * p(1/x). Requires n >= degree.
  BinaryPolynomial reciprocal(std::size_t n) const;

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) {
    a += b;
    return a;
  }
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);

  friend bool operator==(const BinaryPolynomial& a, const BinaryPolynomial& b) noexcept {
    return a.words_ == b.words_;
  }

 private:
  void normalize() noexcept;

  std::vector<std::uint64_t> words_;
};

struct PolyDivision {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
};

/// a = q*b + r with deg r < deg b. Division by zero is a ContractViolation.
PolyDivision divmod(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

}  // namespace asgrs
