#include "asgrs/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <utility>

#include "asgrs/errors.hpp"

namespace asgrs {

namespace {

constexpr std::size_t word_count(std::size_t bits) {
  return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits;
}

}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t length) : size_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_mask(std::uint64_t mask, std::size_t length) {
  if (length > kWordBits) {
    throw ContractViolation("BitVector::from_mask: length exceeds 64");
  }
  BitVector v(length);
  if (length > 0) {
    v.words_[0] = mask;
    v.clear_tail();
  }
  return v;
}

BitVector BitVector::from_string(std::string_view text) {
  BitVector v;
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      v.push_back(ch == '1');
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw FormatError(std::string("unexpected character in bit string: '") + ch + "'");
    }
  }
  return v;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
  BitVector v;
  for (int b : bits) {
    v.push_back(b != 0);
  }
  return v;
}

bool BitVector::at(std::size_t i) const {
  if (i >= size_) {
    throw ContractViolation("BitVector::at: index out of range");
  }
  return (*this)[i];
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= size_) {
    throw ContractViolation("BitVector::set: index out of range");
  }
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) {
  if (i >= size_) {
    throw ContractViolation("BitVector::flip: index out of range");
  }
  words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

void BitVector::push_back(bool bit) {
  if (size_ % kWordBits == 0) {
    words_.push_back(0);
  }
  if (bit) {
    words_[size_ / kWordBits] |= Word{1} << (size_ % kWordBits);
  }
  ++size_;
}

void BitVector::resize(std::size_t length) {
  words_.resize(word_count(length), 0);
  size_ = length;
  clear_tail();
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::uint64_t BitVector::to_mask() const {
  if (size_ > kWordBits) {
    throw ContractViolation("BitVector::to_mask: vector longer than 64 bits");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    out.push_back((*this)[i] ? '1' : '0');
  }
  return out;
}

BitVector BitVector::slice(std::size_t first, std::size_t count) const {
  if (first > size_ || count > size_ - first) {
    throw ContractViolation("BitVector::slice: range out of bounds");
  }
  BitVector out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if ((*this)[first + i]) {
      out.words_[i / kWordBits] |= Word{1} << (i % kWordBits);
    }
  }
  return out;
}

BitVector BitVector::reversed() const {
  BitVector out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) {
      out.set(size_ - 1 - i);
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw ContractViolation("BitVector xor: length mismatch");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) {
    throw ContractViolation("BitVector dot: length mismatch");
  }
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return (std::popcount(acc) & 1) != 0;
}

void BitVector::clear_tail() noexcept {
  const std::size_t used = size_ % kWordBits;
  if (used != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << used) - 1;
  }
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  BitMatrix m;
  bool first = true;
  for (std::string_view text : rows) {
    BitVector row = BitVector::from_string(text);
    if (first) {
      m.cols_ = row.size();
      first = false;
    } else if (row.size() != m.cols_) {
      throw ContractViolation("BitMatrix::from_rows: ragged rows");
    }
    m.rows_.push_back(std::move(row));
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows()) {
    throw ContractViolation("BitMatrix::set: row out of range");
  }
  rows_[r].set(c, value);
}

void BitMatrix::set_row(std::size_t r, BitVector row) {
  if (r >= rows() || row.size() != cols_) {
    throw ContractViolation("BitMatrix::set_row: shape mismatch");
  }
  rows_[r] = std::move(row);
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[r][c]) {
        t.set(c, r);
      }
    }
  }
  return t;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ContractViolation("mat_mul: a.cols != b.rows");
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out.set_row(r, vec_mul(a.row(r), b));
  }
  return out;
}

BitMatrix mat_pow(const BitMatrix& m, std::uint64_t t) {
  if (!m.is_square()) {
    throw ContractViolation("mat_pow: matrix is not square");
  }
  BitMatrix result = BitMatrix::identity(m.rows());
  BitMatrix base = m;
  while (t != 0) {
    if (t & 1U) {
      result = mat_mul(result, base);
    }
    t >>= 1U;
    if (t != 0) {
      base = mat_mul(base, base);
    }
  }
  return result;
}

BitVector vec_mul(const BitVector& row, const BitMatrix& m) {
  if (row.size() != m.rows()) {
    throw ContractViolation("vec_mul: vector length != matrix rows");
  }
  BitVector out(m.cols());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i]) {
      out ^= m.row(i);
    }
  }
  return out;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& column) {
  if (column.size() != m.cols()) {
    throw ContractViolation("mat_vec: vector length != matrix cols");
  }
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).dot(column)) {
      out.set(r);
    }
  }
  return out;
}

namespace {

// Reduces rows in place to reduced row echelon form over the first `cols`
// columns. Returns pivot column per pivot row.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p][c]) {
      ++p;
    }
    if (p == rows.size()) {
      continue;
    }
    std::swap(rows[p], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r][c]) {
        rows[r] ^= rows[next];
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

std::size_t rank(BitMatrix m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(m.row(r));
  }
  return eliminate(rows, m.cols()).size();
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
  if (!m.is_square()) {
    throw ContractViolation("inverse: matrix is not square");
  }
  const std::size_t n = m.rows();
  std::vector<BitVector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    BitVector aug(2 * n);
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c)) {
        aug.set(c);
      }
    }
    aug.set(n + r);
    rows.push_back(std::move(aug));
  }
  if (eliminate(rows, n).size() != n) {
    return std::nullopt;
  }
  BitMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    inv.set_row(r, rows[r].slice(n, n));
  }
  return inv;
}

SolveResult solve_linear_system(const BitMatrix& a, const BitVector& rhs) {
  if (a.rows() != rhs.size()) {
    throw ContractViolation("solve_linear_system: rows != rhs length");
  }
  const std::size_t n = a.cols();
  std::vector<BitVector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVector aug(n + 1);
    for (std::size_t c = 0; c < n; ++c) {
      if (a(r, c)) {
        aug.set(c);
      }
    }
    aug.set(n, rhs[r]);
    rows.push_back(std::move(aug));
  }
  const std::vector<std::size_t> pivots = eliminate(rows, n);

  SolveResult result;
  result.rank = pivots.size();
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (rows[r][n]) {
      result.status = SolveStatus::no_solution;
      return result;
    }
  }
  if (pivots.size() < n) {
    result.status = SolveStatus::underdetermined;
    return result;
  }
  result.status = SolveStatus::unique;
  result.solution = BitVector(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    result.solution.set(pivots[i], rows[i][n]);
  }
  return result;
}

// --------------------------------------------------------- BinaryPolynomial

BinaryPolynomial BinaryPolynomial::from_mask(std::uint64_t mask) {
  BinaryPolynomial p;
  if (mask != 0) {
    p.words_.push_back(mask);
  }
  return p;
}

BinaryPolynomial BinaryPolynomial::monomial(std::size_t exponent) {
  BinaryPolynomial p;
  p.set_coefficient(exponent, true);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<std::size_t> exponents) {
  BinaryPolynomial p;
  for (std::size_t e : exponents) {
    p.set_coefficient(e, !p.coefficient(e));
  }
  return p;
}

BinaryPolynomial BinaryPolynomial::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      compact.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (compact.empty()) {
    throw FormatError("empty polynomial text");
  }

  if (compact.find('x') == std::string::npos || compact.rfind("0x", 0) == 0) {
    std::string_view hex = compact;
    if (hex.rfind("0x", 0) == 0) {
      hex.remove_prefix(2);
    }
    if (hex.empty()) {
      throw FormatError("empty hexadecimal polynomial");
    }
    BinaryPolynomial p;
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
      const char ch = *it;
      int nibble = 0;
      if (ch >= '0' && ch <= '9') {
        nibble = ch - '0';
      } else if (ch >= 'a' && ch <= 'f') {
        nibble = ch - 'a' + 10;
      } else {
        throw FormatError("bad hexadecimal digit in polynomial: " + std::string(text));
      }
      for (int k = 0; k < 4; ++k) {
        if ((nibble >> k) & 1) {
          p.set_coefficient(bit + static_cast<std::size_t>(k), true);
        }
      }
    }
    return p;
  }

  BinaryPolynomial p;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t end = std::min(compact.find('+', pos), compact.size());
    const std::string term = compact.substr(pos, end - pos);
    std::size_t exponent = 0;
    if (term == "1") {
      exponent = 0;
    } else if (term == "x") {
      exponent = 1;
    } else if (term.rfind("x^", 0) == 0 && term.size() > 2 &&
               std::all_of(term.begin() + 2, term.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      exponent = std::stoul(term.substr(2));
    } else {
      throw FormatError("bad polynomial term '" + term + "' in: " + std::string(text));
    }
    p.set_coefficient(exponent, !p.coefficient(exponent));
    pos = end + 1;
  }
  return p;
}

BinaryPolynomial::Degree BinaryPolynomial::degree() const noexcept {
  if (words_.empty()) {
    return std::nullopt;
  }
  const std::uint64_t top = words_.back();
  return (words_.size() - 1) * 64 + (63 - static_cast<std::size_t>(std::countl_zero(top)));
}

bool BinaryPolynomial::coefficient(std::size_t i) const noexcept {
  const std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1U) != 0;
}

void BinaryPolynomial::set_coefficient(std::size_t i, bool value) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) {
    if (!value) {
      return;
    }
    words_.resize(w + 1, 0);
  }
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[w] |= bit;
  } else {
    words_[w] &= ~bit;
  }
  normalize();
}

std::size_t BinaryPolynomial::weight() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::uint64_t BinaryPolynomial::to_mask() const {
  if (words_.size() > 1) {
    throw ContractViolation("BinaryPolynomial::to_mask: degree >= 64");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string BinaryPolynomial::to_string() const {
  const Degree deg = degree();
  if (!deg) {
    return "0";
  }
  std::string out;
  for (std::size_t i = *deg + 1; i-- > 0;) {
    if (!coefficient(i)) {
      continue;
    }
    if (!out.empty()) {
      out += " + ";
    }
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

std::string BinaryPolynomial::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const Degree deg = degree();
  if (!deg) {
    return "0x0";
  }
  std::string digits;
  for (std::size_t nibble = 0; nibble <= *deg / 4; ++nibble) {
    int v = 0;
    for (int k = 0; k < 4; ++k) {
      if (coefficient(nibble * 4 + static_cast<std::size_t>(k))) {
        v |= 1 << k;
      }
    }
    digits.push_back(kDigits[v]);
  }
  std::reverse(digits.begin(), digits.end());
  return "0x" + digits;
}

BinaryPolynomial BinaryPolynomial::reciprocal(std::size_t n) const {
  const Degree deg = degree();
  if (deg && *deg > n) {
    throw ContractViolation("BinaryPolynomial::reciprocal: n below degree");
  }
  BinaryPolynomial out;
  if (!deg) {
    return out;
  }
  for (std::size_t i = 0; i <= *deg; ++i) {
    if (coefficient(i)) {
      out.set_coefficient(n - i, true);
    }
  }
  return out;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  if (other.words_.size() > words_.size()) {
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t w = 0; w < other.words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  normalize();
  return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial out;
  if (a.is_zero() || b.is_zero()) {
    return out;
  }
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (std::size_t wa = 0; wa < a.words_.size(); ++wa) {
    std::uint64_t word = a.words_[wa];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      word &= word - 1;
      const std::size_t shift = wa * 64 + static_cast<std::size_t>(bit);
      const std::size_t ws = shift / 64;
      const std::size_t bs = shift % 64;
      for (std::size_t wb = 0; wb < b.words_.size(); ++wb) {
        out.words_[ws + wb] ^= b.words_[wb] << bs;
        if (bs != 0) {
          out.words_[ws + wb + 1] ^= b.words_[wb] >> (64 - bs);
        }
      }
    }
  }
  out.normalize();
  return out;
}

void BinaryPolynomial::normalize() noexcept {
  while (!words_.empty() && words_.back() == 0) {
    words_.pop_back();
  }
}

PolyDivision divmod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  const auto db = b.degree();
  if (!db) {
    throw ContractViolation("polynomial division by zero");
  }
  PolyDivision out{BinaryPolynomial{}, a};
  while (true) {
    const auto dr = out.remainder.degree();
    if (!dr || *dr < *db) {
      break;
    }
    const std::size_t shift = *dr - *db;
    out.quotient.set_coefficient(shift, true);
    out.remainder += b * BinaryPolynomial::monomial(shift);
  }
  return out;
}

BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  return divmod(a, b).remainder;
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    BinaryPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace asgrs
