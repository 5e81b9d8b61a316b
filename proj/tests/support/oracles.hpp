#pragma once

// Slow, independent reference implementations. They deliberately avoid the
// library's register, field and solver code so tests compare two derivations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using Bits = std::vector<int>;

inline int parity(std::uint64_t x) { return __builtin_parityll(x); }

inline int degree_of(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

// Schoolbook multiply modulo `mod` in GF(2)[x], bit by bit.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  const int m = degree_of(mod);
  std::uint64_t prod = 0;
  for (int i = 0; i < 64; ++i) {
    if ((b >> i) & 1U) {
      std::uint64_t term = a;
      for (int k = 0; k < i; ++k) {
        term <<= 1;
        if ((term >> m) & 1U) term ^= mod;
      }
      prod ^= term;
    }
  }
  return prod;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = mulmod(r, a, mod);
  return r;
}

// Multiplicative order of x modulo mod by walking powers; 0 if x is not a unit
// or the walk hits zero. Only for small degrees.
inline std::uint64_t order_of_x(std::uint64_t mod) {
  const int m = degree_of(mod);
  if (m < 1 || (mod & 1U) == 0) return m == 1 && mod == 3 ? 1 : 0;
  const std::uint64_t x = m == 1 ? 1 : 2;
  std::uint64_t y = x;
  for (std::uint64_t k = 1; k <= (std::uint64_t{1} << m); ++k) {
    if (y == 1) return k;
    y = mulmod(y, x, mod);
    if (y == 0) return 0;
  }
  return 0;
}

// Irreducible iff no polynomial of degree 1..m/2 divides it (trial division).
inline bool irreducible(std::uint64_t p) {
  const int m = degree_of(p);
  if (m < 1) return false;
  for (std::uint64_t d = 2; degree_of(d) <= m / 2; ++d) {
    std::uint64_t r = p;
    while (degree_of(r) >= degree_of(d)) r ^= d << (degree_of(r) - degree_of(d));
    if (r == 0) return false;
  }
  return true;
}

inline bool primitive(std::uint64_t p) {
  const int m = degree_of(p);
  return irreducible(p) && order_of_x(p) == (std::uint64_t{1} << m) - 1;
}

// Output of the register with characteristic polynomial p started from the
// given first deg(p) outputs: o(k+L) = sum_j p_j o(k+j).
inline Bits recurrence(std::uint64_t p, const Bits& prefix, std::size_t count) {
  const int L = degree_of(p);
  Bits o(prefix.begin(), prefix.end());
  while (o.size() < count) {
    const std::size_t k = o.size() - L;
    int bit = 0;
    for (int j = 0; j < L; ++j) bit ^= ((p >> j) & 1U) ? o[k + j] : 0;
    o.push_back(bit);
  }
  o.resize(count);
  return o;
}

// Span-l de Bruijn sequence from its own first l bits: the next bit extends the
// window linearly, complemented when the window's last l-1 bits are all zero.
// The window stores the most recent bit last.
inline Bits de_bruijn(std::uint64_t base, const Bits& first_window, std::size_t count) {
  const int l = degree_of(base);
  Bits o(first_window.begin(), first_window.end());
  while (o.size() < count) {
    const std::size_t k = o.size() - l;
    int bit = 0;
    for (int j = 0; j < l; ++j) bit ^= ((base >> j) & 1U) ? o[k + j] : 0;
    bool tail_zero = true;
    for (int j = 1; j < l; ++j) tail_zero = tail_zero && o[k + j] == 0;
    o.push_back(bit ^ (tail_zero ? 1 : 0));
  }
  o.resize(count);
  return o;
}

// Keystream of ASG(r,s) by indexing into the periodic generator sequences:
// z_0 = b_0 ^ c_0, and after each control bit the B index grows by r or the C
// index by s.
inline Bits asg_by_index(const Bits& a, const Bits& b_period, const Bits& c_period, std::uint64_t r,
                         std::uint64_t s, std::size_t count) {
  Bits z;
  std::uint64_t i = 0, j = 0;
  for (std::size_t t = 0; t < count; ++t) {
    if (t > 0) {
      if (a[t - 1]) i = (i + r) % b_period.size();
      else j = (j + s) % c_period.size();
    }
    z.push_back(b_period[i] ^ c_period[j]);
  }
  return z;
}

// Linear complexity by exhaustive search over connection polynomials.
inline std::size_t linear_complexity(const Bits& s) {
  const std::size_t n = s.size();
  bool any = false;
  for (int v : s) any = any || v;
  if (!any) return 0;
  for (std::size_t L = 1; L <= n; ++L) {
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << L); ++c) {
      bool ok = true;
      for (std::size_t k = L; k < n && ok; ++k) {
        int bit = 0;
        for (std::size_t i = 1; i <= L; ++i) bit ^= ((c >> (i - 1)) & 1U) ? s[k - i] : 0;
        ok = bit == s[k];
      }
      if (ok) return L;
    }
  }
  return n;
}

// All solutions x (as masks) of A x = rhs by enumeration. rows[i] is a mask over columns.
inline std::vector<std::uint64_t> all_solutions(const std::vector<std::uint64_t>& rows, std::uint64_t rhs,
                                                std::size_t cols) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i) ok = parity(rows[i] & x) == static_cast<int>((rhs >> i) & 1U);
    if (ok) out.push_back(x);
  }
  return out;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Least period of the sequence, assuming it is purely periodic within the window.
inline std::optional<std::size_t> least_period(const Bits& s) {
  for (std::size_t p = 1; 2 * p <= s.size(); ++p) {
    bool ok = true;
    for (std::size_t t = 0; t + p < s.size() && ok; ++t) ok = s[t] == s[t + p];
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace oracle
