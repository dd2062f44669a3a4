#pragma once

// Polynomials over F_p for word-size primes p < 2^32, and Berlekamp factorization.

#include "szpiro/numeric.hpp"

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace szpiro::modp {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e != 0) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero modulo p");
  return pow_mod(a, p - 2, p);
}

inline bool is_word_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Reduces an integer to [0, p).
inline std::uint64_t reduce(const Integer& n, std::uint64_t p) {
  Integer r = n % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

inline Poly reduce(const std::vector<Integer>& a, std::uint64_t p) {
  Poly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(reduce(c, p));
  trim(r);
  return r;
}

inline Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, std::uint64_t s, std::uint64_t p) {
  Poly r;
  for (auto c : a) r.push_back(c * (s % p) % p);
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw DomainError("polynomial division by zero modulo p");
  Poly r = a;
  const int db = degree(b);
  if (degree(a) < db) return {{}, r};
  Poly q(static_cast<std::size_t>(degree(a) - db + 1), 0);
  const std::uint64_t inv = inverse(b.back(), p);
  for (int k = degree(a); k >= db; --k) {
    const std::uint64_t c = r[k] * inv % p;
    q[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] = (r[k - db + j] + p - c * b[j] % p) % p;
  }
  trim(q);
  trim(r);
  return {q, r};
}

inline Poly mod(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

inline Poly monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), p), p);
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// Returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t inv = inverse(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

inline Poly derivative(const Poly& a, std::uint64_t p) {
  Poly r;
  for (std::size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * (k % p) % p);
  trim(r);
  return r;
}

/// base^e mod m.
inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r = mod(Poly{1}, m, p);
  base = mod(base, m, p);
  while (e != 0) {
    if (e & 1u) r = mod(mul(r, base, p), m, p);
    e >>= 1;
    if (e != 0) base = mod(mul(base, base, p), m, p);
  }
  return r;
}

inline bool is_squarefree(const Poly& a, std::uint64_t p) {
  return degree(gcd(a, derivative(a, p), p)) == 0;
}

/// Number of distinct roots of a in F_p, via deg gcd(t^p - t, a).
inline unsigned distinct_root_count(const Poly& a, std::uint64_t p) {
  if (a.empty()) throw DomainError("root count of the zero polynomial");
  if (degree(a) == 0) return 0;
  Poly xp = powmod(Poly{0, 1}, p, a, p);
  Poly h = sub(xp, Poly{0, 1}, p);
  return static_cast<unsigned>(degree(gcd(a, h, p)));
}

/// Kernel basis of an n x n matrix over F_p (rows of `m`), via Gaussian elimination.
inline std::vector<std::vector<std::uint64_t>> kernel(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const std::size_t n = m.size();
  std::vector<int> pivot_row_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[row]);
    const std::uint64_t inv = inverse(m[row][col], p);
    for (auto& v : m[row]) v = v * inv % p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::uint64_t f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] = (m[r][c] + p - f * m[row][c] % p) % p;
    }
    pivot_row_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_row_of_col[free] >= 0) continue;
    std::vector<std::uint64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col) {
      const int r = pivot_row_of_col[col];
      if (r >= 0) v[col] = (p - m[r][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Monic irreducible factors of a squarefree polynomial (Berlekamp).
inline std::vector<Poly> berlekamp(const Poly& f_in, std::uint64_t p) {
  const Poly f = monic(f_in, p);
  const int n = degree(f);
  if (n <= 1) return {f};
  // Column j of (Q - I): coefficients of t^{p j} mod f minus e_j; kernel of the transpose.
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  const Poly xp = powmod(Poly{0, 1}, p, f, p);
  Poly cur{1};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) a[i][j] = i < static_cast<int>(cur.size()) ? cur[i] : 0;
    a[j][j] = (a[j][j] + p - 1) % p;
    cur = mod(mul(cur, xp, p), f, p);
  }
  const auto basis = kernel(a, p);
  const std::size_t r = basis.size();
  std::vector<Poly> factors{f};
  for (const auto& vec : basis) {
    if (factors.size() == r) break;
    Poly v(vec.begin(), vec.end());
    trim(v);
    if (degree(v) <= 0) continue;
    std::vector<Poly> next;
    for (const Poly& g : factors) {
      if (degree(g) <= 1) {
        next.push_back(g);
        continue;
      }
      Poly rest = g;
      for (std::uint64_t s = 0; s < p && degree(rest) > 1; ++s) {
        Poly h = gcd(rest, sub(v, Poly{s}, p), p);
        if (degree(h) > 0 && degree(h) < degree(rest)) {
          next.push_back(h);
          rest = divmod(rest, h, p).first;
          rest = monic(rest, p);
        }
      }
      next.push_back(rest);
    }
    factors = std::move(next);
  }
  return factors;
}

}  // namespace szpiro::modp
