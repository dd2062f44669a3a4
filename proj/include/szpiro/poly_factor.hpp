#pragma once

// Factorization over Q: squarefree split, modular factorization (Berlekamp),
// linear Hensel lifting and Zassenhaus subset recombination.

#include "szpiro/modp.hpp"
#include "szpiro/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace szpiro {

struct PolyFactor {
  IntegerPoly poly;  // primitive, irreducible, positive leading coefficient
  unsigned multiplicity = 1;

  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// unit * y^{y_exponent} * prod F_i^{e_i}. For univariate input y_exponent is 0
/// and F_i are polynomials in t; for binary forms F_i(x, y) = y^{deg} F_i(x/y).
struct FormFactorization {
  Rational unit = 1;
  unsigned y_exponent = 0;
  std::vector<PolyFactor> factors;

  /// Dehomogenized product (y = 1).
  RationalPoly expand() const {
    RationalPoly p(unit);
    for (const auto& f : factors) p *= pow(to_rational_poly(f.poly), f.multiplicity);
    return p;
  }
};

inline constexpr unsigned kDefaultDegreeCap = 64;

namespace detail {

// Symmetric residue of n modulo m, in (-m/2, m/2].
inline Integer symmetric_mod(const Integer& n, const Integer& m) {
  Integer r = n % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

inline IntegerPoly to_integer_poly(const modp::Poly& a) {
  IntegerPoly r;
  for (auto c : a) r.emplace_back(c);
  return r;
}

inline IntegerPoly reduce_sym(IntegerPoly a, const Integer& m) {
  for (auto& c : a) c = symmetric_mod(c, m);
  trim(a);
  return a;
}

inline IntegerPoly sub(const IntegerPoly& a, const IntegerPoly& b) {
  IntegerPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Exact quotient a / b in Z[t] if it exists.
inline std::optional<IntegerPoly> divide_exact(const IntegerPoly& a, const IntegerPoly& b) {
  if (b.empty()) throw DomainError("division by the zero polynomial");
  if (a.empty()) return IntegerPoly{};
  if (a.size() < b.size()) return std::nullopt;
  if (b[0] != 0 && a[0] % b[0] != 0) return std::nullopt;
  IntegerPoly r = a;
  IntegerPoly q(a.size() - b.size() + 1, Integer(0));
  const Integer& lc = b.back();
  for (std::size_t k = a.size(); k-- > b.size() - 1;) {
    if (r[k] == 0) continue;
    if (r[k] % lc != 0) return std::nullopt;
    const Integer c = r[k] / lc;
    q[k - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[k - (b.size() - 1) + j] -= c * b[j];
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  return q;
}

// Lifts f = g*h mod p (g monic, gcd(g,h) = 1 mod p, lc(h) = lc(f)) to mod p^k.
inline std::pair<IntegerPoly, IntegerPoly> hensel_two(const IntegerPoly& f, const modp::Poly& g0, const modp::Poly& h0,
                                                      std::uint64_t p, unsigned k) {
  auto [one, s, t] = modp::ext_gcd(g0, h0, p);
  if (modp::degree(one) != 0) throw DomainError("Hensel lift: factors not coprime modulo p");
  IntegerPoly g = to_integer_poly(g0);
  IntegerPoly h = to_integer_poly(h0);
  // Keep the leading coefficient of h exactly equal to lc(f).
  h.back() = f.back();
  Integer pk = p;
  for (unsigned step = 1; step < k; ++step) {
    IntegerPoly e = sub(f, mul(g, h));
    for (auto& c : e) c /= pk;
    const modp::Poly ep = modp::reduce(e, p);
    auto [q, sigma] = modp::divmod(modp::mul(t, ep, p), g0, p);
    const modp::Poly tau = modp::add(modp::mul(s, ep, p), modp::mul(q, h0, p), p);
    for (std::size_t i = 0; i < sigma.size(); ++i) g[i] += pk * sigma[i];
    if (h.size() < tau.size()) h.resize(tau.size(), Integer(0));
    for (std::size_t i = 0; i < tau.size(); ++i) h[i] += pk * tau[i];
    pk *= p;
    g = reduce_sym(g, pk);
    h = reduce_sym(h, pk);
  }
  return {g, h};
}

// Lifts the monic modular factors of f to p^k; returns monic lifts (mod p^k).
inline std::vector<IntegerPoly> hensel_multi(const IntegerPoly& f, const std::vector<modp::Poly>& factors,
                                             std::uint64_t p, unsigned k, const Integer& pk) {
  std::vector<IntegerPoly> out;
  IntegerPoly rest = f;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    modp::Poly others = modp::Poly{modp::reduce(rest.back(), p)};
    for (std::size_t j = i + 1; j < factors.size(); ++j) others = modp::mul(others, factors[j], p);
    auto [g, h] = hensel_two(rest, factors[i], others, p, k);
    out.push_back(g);
    rest = h;
  }
  // The last factor: rest = lc * g_last mod p^k; normalize to monic.
  const Integer inv = [&] {
    Integer r;
    Integer lc = rest.back() % pk;
    if (lc < 0) lc += pk;
    mpz_invert(r.backend().data(), lc.backend().data(), pk.backend().data());
    return r;
  }();
  IntegerPoly last = rest;
  for (auto& c : last) c *= inv;
  out.push_back(reduce_sym(last, pk));
  return out;
}

inline bool less_poly(const IntegerPoly& a, const IntegerPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

inline IntegerPoly make_primitive(IntegerPoly a) {
  trim(a);
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Irreducible factors of a primitive squarefree polynomial with positive lc and f(0) != 0.
inline std::vector<IntegerPoly> factor_squarefree(const IntegerPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  // Prime choice: among the first good primes, the one giving the fewest modular factors.
  std::uint64_t best_p = 0;
  std::vector<modp::Poly> best;
  int good = 0;
  for (std::uint64_t p = 3; good < 5; p += 2) {
    if (!modp::is_word_prime(p)) continue;
    if (modp::reduce(f.back(), p) == 0) continue;
    const modp::Poly fp = modp::reduce(f, p);
    if (!modp::is_squarefree(fp, p)) continue;
    ++good;
    auto fac = modp::berlekamp(fp, p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  // Landau-Mignotte: 2 * |lc| * 2^n * ||f||_2 bounds the lc-scaled factor coefficients.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  const Integer bound = 2 * abs(f.back()) * pow(Integer(2), static_cast<unsigned>(n)) * (iroot(norm2, 2) + 1);
  unsigned k = 1;
  Integer pk = best_p;
  while (pk <= bound) {
    pk *= best_p;
    ++k;
  }
  std::vector<IntegerPoly> lifted = hensel_multi(f, best, best_p, k, pk);

  std::vector<IntegerPoly> result;
  IntegerPoly rest = f;
  std::size_t subset_size = 1;
  while (2 * subset_size <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    for (;;) {
      IntegerPoly g{rest.back()};
      for (std::size_t i : idx) g = reduce_sym(mul(g, lifted[i]), pk);
      const IntegerPoly cand = make_primitive(g);
      if (auto q = divide_exact(rest, cand)) {
        result.push_back(cand);
        rest = *q;
        std::vector<IntegerPoly> keep;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (pos < idx.size() && idx[pos] == i) {
            ++pos;
            continue;
          }
          keep.push_back(lifted[i]);
        }
        lifted = std::move(keep);
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t i = subset_size;
      while (i > 0 && idx[i - 1] == r - subset_size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++subset_size;
  }
  result.push_back(make_primitive(rest));
  return result;
}

}  // namespace detail

/// Complete irreducible factorization of a nonzero polynomial over Q.
inline FormFactorization factor_rational(const RationalPoly& p, unsigned degree_cap = kDefaultDegreeCap) {
  if (p.is_zero()) throw DomainError("factor_rational of the zero polynomial");
  if (p.degree() > static_cast<int>(degree_cap))
    throw BudgetExceeded("factor_rational: degree " + std::to_string(p.degree()) + " exceeds cap " +
                         std::to_string(degree_cap));
  FormFactorization out;
  if (p.degree() == 0) {
    out.unit = p.coeff(0);
    return out;
  }
  for (const auto& part : yun_squarefree(p)) {
    IntegerPoly f = primitive_part(part.poly).second;
    unsigned x_power = 0;
    while (f.front() == 0) {
      f.erase(f.begin());
      ++x_power;
    }
    if (x_power > 0) out.factors.push_back({IntegerPoly{0, 1}, part.multiplicity});
    if (f.size() > 1)
      for (auto& g : detail::factor_squarefree(f)) out.factors.push_back({std::move(g), part.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    if (a.poly != b.poly) return detail::less_poly(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  RationalPoly prod(Rational(1));
  for (const auto& f : out.factors) prod *= pow(to_rational_poly(f.poly), f.multiplicity);
  out.unit = p.leading() / prod.leading();
  return out;
}

}  // namespace szpiro
