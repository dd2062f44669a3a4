#pragma once

// Factorization, radicals, valuations and primality over big integers.
//
// Strategy: trial division up to a fixed bound, a deterministic Miller-Rabin
// test below 2^64 (BPSW-strength GMP test above), then Brent's variant of
// Pollard rho with a seeded start and a global iteration budget. Exceeding the
// budget raises IncompleteFactorization; a wrong answer is never returned.

#include "szpiro/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace szpiro {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A nonzero integer stored as sign * prod p^e with strictly increasing primes.
class FactoredInteger {
 public:
  FactoredInteger() = default;

  FactoredInteger(int sign, std::vector<PrimePower> factors) : sign_(sign), factors_(std::move(factors)) {
    if (sign != 1 && sign != -1) throw DomainError("FactoredInteger sign must be +1 or -1");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].exponent == 0) throw DomainError("FactoredInteger exponent must be positive");
      if (factors_[i].prime < 2) throw DomainError("FactoredInteger prime must be >= 2");
      if (i > 0 && !(factors_[i - 1].prime < factors_[i].prime))
        throw DomainError("FactoredInteger primes must be strictly increasing");
    }
  }

  int sign() const { return sign_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  Integer value() const {
    Integer v = sign_;
    for (const auto& [p, e] : factors_) v *= pow(p, e);
    return v;
  }

  Integer abs_value() const { return abs(value()); }

  Integer radical() const {
    Integer r = 1;
    for (const auto& f : factors_) r *= f.prime;
    return r;
  }

  unsigned valuation(const Integer& p) const {
    for (const auto& f : factors_)
      if (f.prime == p) return f.exponent;
    return 0;
  }

  FactoredInteger negated() const { return {-sign_, factors_}; }

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  int sign_ = 1;
  std::vector<PrimePower> factors_;
};

struct FactorOptions {
  std::uint64_t seed = 0x5eed5eedULL;
  // Total Pollard-rho iterations allowed for one factor() call.
  std::uint64_t rho_budget = std::uint64_t{1} << 26;
  unsigned trial_bound = 10000;
};

/// Raised when a composite cofactor could not be split within the budget.
class IncompleteFactorization : public BudgetExceeded {
 public:
  IncompleteFactorization(FactoredInteger partial, std::vector<Integer> unfactored)
      : BudgetExceeded("factorization incomplete: composite cofactor beyond effort budget"),
        partial_(std::move(partial)),
        unfactored_(std::move(unfactored)) {}

  /// Primes found so far (the unfactored cofactors are excluded).
  const FactoredInteger& partial() const { return partial_; }
  const std::vector<Integer>& unfactored() const { return unfactored_; }

 private:
  FactoredInteger partial_;
  std::vector<Integer> unfactored_;
};

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 100000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1u) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Deterministic for all 64-bit inputs with these twelve bases.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent-Pollard rho on a 64-bit odd composite. Returns a nontrivial divisor or 0
// when the budget runs out.
inline std::uint64_t rho_u64(std::uint64_t n, std::mt19937_64& rng, std::uint64_t& budget) {
  if (n % 2 == 0) return 2;
  while (budget > 0) {
    const std::uint64_t c = rng() % (n - 1) + 1;
    std::uint64_t y = rng() % n;
    std::uint64_t x = y, ys = y, q = 1, g = 1;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) {
      const std::uint64_t s = mulmod(v, v, n);
      return s >= n - c ? s - (n - c) : s + c;
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += steps;
        budget = budget > steps ? budget - steps : 0;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

inline Integer rho_big(const Integer& n, std::mt19937_64& rng, std::uint64_t& budget) {
  if (n % 2 == 0) return 2;
  while (budget > 0) {
    const Integer c = Integer(rng()) % (n - 1) + 1;
    Integer y = Integer(rng()) % n;
    Integer x = y, ys = y, q = 1, g = 1;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        g = gcd(q, n);
        k += steps;
        budget = budget > steps ? budget - steps : 0;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

inline void add_prime(std::vector<PrimePower>& out, const Integer& p, unsigned e) {
  for (auto& f : out) {
    if (f.prime == p) {
      f.exponent += e;
      return;
    }
  }
  out.push_back({p, e});
}

}  // namespace detail

/// Primality: deterministic below 2^64, BPSW plus extra Miller-Rabin rounds above.
inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return detail::is_prime_u64(to_u64(n));
  return mpz_probab_prime_p(n.backend().data(), 30) != 0;
}

/// Full factorization of n != 0. Known divisors in `hints` are split off first.
inline FactoredInteger factor(const Integer& n, std::span<const Integer> hints = {},
                              const FactorOptions& options = {}) {
  if (n == 0) throw DomainError("factor(0) is undefined");
  const int sgn = n < 0 ? -1 : 1;

  // Coprime-ish refinement of |n| by the hints.
  std::vector<Integer> pieces{abs(n)};
  for (const Integer& hint : hints) {
    const Integer h = abs(hint);
    if (h <= 1) continue;
    std::vector<Integer> next;
    for (const Integer& piece : pieces) {
      const Integer g = gcd(piece, h);
      if (g > 1 && g < piece) {
        next.push_back(g);
        next.push_back(piece / g);
      } else {
        next.push_back(piece);
      }
    }
    pieces = std::move(next);
  }

  std::vector<PrimePower> found;
  std::vector<Integer> unfactored;
  std::mt19937_64 rng(options.seed);
  std::uint64_t budget = options.rho_budget;

  std::vector<Integer> stack;
  for (Integer piece : pieces) {
    if (piece == 1) continue;
    // Trial division.
    if (fits_u64(piece)) {
      std::uint64_t m = to_u64(piece);
      for (std::uint32_t p : detail::small_primes()) {
        if (p > options.trial_bound) break;
        if (std::uint64_t{p} * p > m) break;
        if (m % p == 0) {
          unsigned e = 0;
          while (m % p == 0) {
            m /= p;
            ++e;
          }
          detail::add_prime(found, Integer(p), e);
        }
      }
      piece = Integer(m);
    } else {
      for (std::uint32_t p : detail::small_primes()) {
        if (p > options.trial_bound) break;
        if (mpz_divisible_ui_p(piece.backend().data(), p)) {
          unsigned e = 0;
          while (mpz_divisible_ui_p(piece.backend().data(), p)) {
            piece /= p;
            ++e;
          }
          detail::add_prime(found, Integer(p), e);
        }
      }
    }
    if (piece > 1) stack.push_back(piece);
  }

  while (!stack.empty()) {
    Integer m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      detail::add_prime(found, m, 1);
      continue;
    }
    if (is_perfect_square(m)) {
      const Integer r = iroot(m, 2);
      stack.push_back(r);
      stack.push_back(r);
      continue;
    }
    Integer d = 0;
    if (fits_u64(m)) {
      d = Integer(detail::rho_u64(to_u64(m), rng, budget));
    } else {
      d = detail::rho_big(m, rng, budget);
    }
    if (d == 0) {
      unfactored.push_back(m);
      continue;
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }

  std::sort(found.begin(), found.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  FactoredInteger result(sgn, std::move(found));
  if (!unfactored.empty()) throw IncompleteFactorization(std::move(result), std::move(unfactored));
  return result;
}

inline FactoredInteger factor(const Integer& n, const FactorOptions& options) { return factor(n, {}, options); }

inline Integer radical(const FactoredInteger& n) { return n.radical(); }

/// Product of the distinct primes dividing n; rad(0) is a domain error.
inline Integer radical(const Integer& n, const FactorOptions& options = {}) {
  if (n == 0) throw DomainError("radical(0) is undefined");
  return factor(n, {}, options).radical();
}

/// rad(n) for 0 < n < 2^62 by trial division up to n^{1/3}: the cofactor left is 1, p, pq or p^2.
inline std::uint64_t radical_u64(std::uint64_t n) {
  if (n == 0) throw DomainError("radical(0) is undefined");
  if (n >= (std::uint64_t{1} << 62)) return to_u64(radical(Integer(n)));
  std::uint64_t rad = 1;
  bool below_cube_root = false;
  for (std::uint32_t p : detail::small_primes()) {
    const std::uint64_t pp = p;
    if (pp * pp * pp > n) {
      below_cube_root = true;
      break;
    }
    if (n % pp != 0) continue;
    rad *= pp;
    do n /= pp;
    while (n % pp == 0);
  }
  if (n == 1) return rad;
  if (!below_cube_root) return rad * to_u64(radical(Integer(n)));
  std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return rad * (s * s == n ? s : n);
}

/// Largest e with p^e | n, for prime p and n != 0.
inline unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw DomainError("valuation of zero is undefined");
  if (!is_prime(p)) throw DomainError("valuation requires a prime modulus, got " + p.str());
  Integer m = abs(n);
  unsigned e = 0;
  while (mpz_divisible_p(m.backend().data(), p.backend().data())) {
    m /= p;
    ++e;
  }
  return e;
}

/// Factorization of the product a*b.
inline FactoredInteger merge_factored(const FactoredInteger& a, const FactoredInteger& b) {
  std::vector<PrimePower> out;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].prime < fb[j].prime)) {
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].prime < fa[i].prime) {
      out.push_back(fb[j++]);
    } else {
      out.push_back({fa[i].prime, fa[i].exponent + fb[j].exponent});
      ++i;
      ++j;
    }
  }
  return {a.sign() * b.sign(), std::move(out)};
}

/// Factorization of a^k.
inline FactoredInteger power_factored(const FactoredInteger& a, unsigned k) {
  std::vector<PrimePower> out;
  if (k == 0) return {};
  for (const auto& f : a.factors()) out.push_back({f.prime, f.exponent * k});
  return {(k % 2 == 0) ? 1 : a.sign(), std::move(out)};
}

/// Factorization of a/b; throws when b does not divide a.
inline FactoredInteger quotient_factored(const FactoredInteger& a, const FactoredInteger& b) {
  std::vector<PrimePower> out;
  for (const auto& f : a.factors()) {
    const unsigned eb = b.valuation(f.prime);
    if (eb > f.exponent) throw DomainError("quotient_factored: divisor does not divide");
    if (f.exponent > eb) out.push_back({f.prime, f.exponent - eb});
  }
  for (const auto& f : b.factors())
    if (a.valuation(f.prime) == 0) throw DomainError("quotient_factored: divisor does not divide");
  return {a.sign() * b.sign(), std::move(out)};
}

/// Exact factorization of a nonzero rational as a pair (numerator, denominator).
inline std::pair<FactoredInteger, FactoredInteger> factor_rational_number(const Rational& q,
                                                                         const FactorOptions& options = {}) {
  if (q == 0) throw DomainError("factor of zero rational");
  return {factor(numerator(q), {}, options), factor(denominator(q), {}, options)};
}

}  // namespace szpiro
