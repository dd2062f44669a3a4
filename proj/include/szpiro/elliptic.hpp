#pragma once

// Short Weierstrass curves y^2 = x^3 + A x + B: minimal models, heights,
// discriminants, Tate's algorithm, conductor and Szpiro ratio.

#include "szpiro/integer_core.hpp"
#include "szpiro/invariants.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace szpiro {

struct Curve {
  Integer A;
  Integer B;

  friend bool operator==(const Curve&, const Curve&) = default;
};

inline Integer discriminant(const Curve& c) { return -16 * (4 * pow(c.A, 3) + 27 * c.B * c.B); }

inline void require_nonsingular(const Curve& c) {
  if (4 * pow(c.A, 3) + 27 * c.B * c.B == 0) throw DomainError("singular curve: 4A^3 + 27B^2 = 0");
}

inline Integer naive_height(const Curve& c) {
  const Integer a = 4 * pow(abs(c.A), 3);
  const Integer b = 27 * c.B * c.B;
  return a > b ? a : b;
}

struct MinimalShort {
  Curve curve;
  Integer u;
};

/// (A/u^4, B/u^6) with u maximal.
inline MinimalShort minimal_short(const Curve& c, const FactorOptions& options = {}) {
  require_nonsingular(c);
  const Integer g = gcd(c.A, c.B);
  Integer u = 1;
  const FactoredInteger factored = factor(g, {}, options);
  for (const auto& [p, e] : factored.factors()) {
    unsigned k = c.A == 0 ? ~0u : valuation(c.A, p) / 4;
    if (c.B != 0) k = std::min(k, valuation(c.B, p) / 6);
    if (k > 0) u *= pow(p, k);
  }
  if (u == 1) return {c, 1};
  return {{c.A / pow(u, 4), c.B / pow(u, 6)}, u};
}

struct LocalData {
  Integer p;
  unsigned f_p = 0;
  unsigned v_p_disc_min = 0;
  std::string kodaira = "I0";

  friend bool operator==(const LocalData&, const LocalData&) = default;
};

namespace detail {

// Long Weierstrass model with integer coefficients.
struct Weierstrass {
  Integer a1, a2, a3, a4, a6;

  Integer b2() const { return a1 * a1 + 4 * a2; }
  Integer b4() const { return 2 * a4 + a1 * a3; }
  Integer b6() const { return a3 * a3 + 4 * a6; }
  Integer b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
  Integer c4() const { return b2() * b2() - 24 * b4(); }
  Integer c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
  Integer disc() const {
    const Integer B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
  }

  // x = x' + r, y = y' + s x' + t (u = 1).
  void transform(const Integer& r, const Integer& s, const Integer& t) {
    const Integer n1 = a1 + 2 * s;
    const Integer n2 = a2 - s * a1 + 3 * r - s * s;
    const Integer n3 = a3 + r * a1 + 2 * t;
    const Integer n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    const Integer n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    a1 = n1;
    a2 = n2;
    a3 = n3;
    a4 = n4;
    a6 = n6;
  }
};

inline bool divides(const Integer& d, const Integer& n) { return n % d == 0; }

inline unsigned val(const Integer& n, const Integer& p) {
  if (n == 0) return ~0u;
  unsigned e = 0;
  Integer m = n;
  while (divides(p, m)) {
    m /= p;
    ++e;
  }
  return e;
}

inline Integer mod_p(const Integer& n, const Integer& p) {
  Integer r = n % p;
  if (r < 0) r += p;
  return r;
}

inline Integer inv_mod(const Integer& a, const Integer& p) {
  Integer r;
  const Integer x = mod_p(a, p);
  if (x == 0) throw std::logic_error("Tate: non-invertible residue");
  mpz_invert(r.backend().data(), x.backend().data(), p.backend().data());
  return r;
}

}  // namespace detail

/// f_p and v_p(Delta_min) for the short model (0,0,0,A,B), by Tate's algorithm.
inline LocalData tate_local_full(const Curve& c, const Integer& p) {
  using detail::divides;
  using detail::mod_p;
  if (!is_prime(p)) throw DomainError("tate_local requires a prime, got " + p.str());
  require_nonsingular(c);
  detail::Weierstrass E{0, 0, 0, c.A, c.B};
  const bool small = p < 5;
  const Integer p2 = p * p, p3 = p2 * p, p4 = p3 * p, p6 = p4 * p2;

  for (;;) {
    const Integer disc = E.disc();
    const unsigned v = detail::val(disc, p);
    auto done = [&](unsigned f, std::string kod) { return LocalData{p, f, v, std::move(kod)}; };
    if (v == 0) return done(0, "I0");

    // Move the singular point of the reduction to (0,0).
    if (small) {
      bool moved = false;
      for (Integer r = 0; r < p && !moved; ++r) {
        for (Integer t = 0; t < p && !moved; ++t) {
          detail::Weierstrass T = E;
          T.transform(r, 0, t);
          if (divides(p, T.a3) && divides(p, T.a4) && divides(p, T.a6)) {
            E = T;
            moved = true;
          }
        }
      }
      if (!moved) throw std::logic_error("Tate: singular point not found");
    } else {
      const Integer c4 = E.c4(), c6 = E.c6(), b2 = E.b2();
      Integer r = divides(p, c4) ? mod_p(-b2 * detail::inv_mod(12, p), p)
                                 : mod_p(-(c6 + b2 * c4) * detail::inv_mod(12 * c4, p), p);
      Integer t = mod_p(-(E.a1 * r + E.a3) * detail::inv_mod(2, p), p);
      E.transform(r, 0, t);
    }

    if (!divides(p, E.c4())) return done(1, "I" + std::to_string(v));
    if (!divides(p2, E.a6)) return done(v, "II");
    if (!divides(p3, E.b8())) return done(v - 1, "III");
    if (!divides(p3, E.b6())) return done(v - 2, "IV");

    // Arrange p | a1, a2; p^2 | a3, a4; p^3 | a6.
    if (small) {
      bool moved = false;
      for (Integer s = 0; s < p && !moved; ++s) {
        for (Integer t = 0; t < p3 && !moved; t += p) {
          detail::Weierstrass T = E;
          T.transform(0, s, t);
          if (divides(p, T.a1) && divides(p, T.a2) && divides(p2, T.a3) && divides(p2, T.a4) && divides(p3, T.a6)) {
            E = T;
            moved = true;
          }
        }
      }
      if (!moved) throw std::logic_error("Tate: normalization for type I0* and beyond failed");
    } else {
      const Integer half = detail::inv_mod(2, p);
      const Integer s = mod_p(-E.a1 * half, p);
      E.transform(0, s, 0);
      const Integer t = mod_p(-E.a3 * half, p2);
      E.transform(0, 0, t);
    }

    const Integer b = E.a2 / p, cc = E.a4 / p2, d = E.a6 / p3;
    const Integer w = 27 * d * d - b * b * cc * cc + 4 * b * b * b * d - 18 * b * cc * d + 4 * cc * cc * cc;
    const Integer x = 3 * cc - b * b;
    auto cubic = [&](const Integer& T) { return T * T * T + b * T * T + cc * T + d; };
    auto cubic_d = [&](const Integer& T) { return 3 * T * T + 2 * b * T + cc; };

    if (!divides(p, w)) return done(v - 4, "I0*");

    if (!divides(p, x)) {
      // Double root alpha of the cubic; move it to 0.
      Integer alpha;
      if (small) {
        bool found = false;
        for (Integer a = 0; a < p && !found; ++a)
          if (divides(p, cubic(a)) && divides(p, cubic_d(a))) {
            alpha = a;
            found = true;
          }
        if (!found) throw std::logic_error("Tate: double root not found");
      } else {
        alpha = mod_p((b * cc - 9 * d) * detail::inv_mod(2 * x, p), p);
      }
      E.transform(p * alpha, 0, 0);
      unsigned m = 1;
      Integer mx = p2, my = p2;
      for (;;) {
        const Integer xa3 = E.a3 / my;
        const Integer xa6 = E.a6 / (mx * my);
        if (!divides(p, xa3 * xa3 + 4 * xa6)) break;
        Integer y0;
        if (small) {
          bool found = false;
          for (Integer y = 0; y < p && !found; ++y)
            if (divides(p, y * y + xa3 * y - xa6)) {
              y0 = y;
              found = true;
            }
          if (!found) throw std::logic_error("Tate: quadratic root not found");
        } else {
          y0 = mod_p(-xa3 * detail::inv_mod(2, p), p);
        }
        E.transform(0, 0, my * y0);
        my *= p;
        ++m;
        const Integer xa2 = E.a2 / p;
        const Integer xa4 = E.a4 / (p * mx);
        const Integer ya6 = E.a6 / (mx * my);
        if (!divides(p, xa4 * xa4 - 4 * xa2 * ya6)) break;
        Integer x0;
        if (small) {
          bool found = false;
          for (Integer xx = 0; xx < p && !found; ++xx)
            if (divides(p, xa2 * xx * xx + xa4 * xx + ya6)) {
              x0 = xx;
              found = true;
            }
          if (!found) throw std::logic_error("Tate: quadratic root not found");
        } else {
          x0 = mod_p(-xa4 * detail::inv_mod(2 * xa2, p), p);
        }
        E.transform(mx * x0, 0, 0);
        mx *= p;
        ++m;
      }
      return done(v - m - 4, "I" + std::to_string(m) + "*");
    }

    // Triple root alpha; move it to 0.
    Integer alpha;
    if (small) {
      bool found = false;
      for (Integer a = 0; a < p && !found; ++a)
        if (divides(p, cubic(a)) && divides(p, cubic_d(a)) && divides(p, 6 * a + 2 * b)) {
          alpha = a;
          found = true;
        }
      if (!found) {
        // In characteristic 3 the second-derivative test is vacuous; fall back to simple roots.
        for (Integer a = 0; a < p && !found; ++a)
          if (divides(p, cubic(a))) {
            alpha = a;
            found = true;
          }
      }
      if (!found) throw std::logic_error("Tate: triple root not found");
    } else {
      alpha = mod_p(-b * detail::inv_mod(3, p), p);
    }
    E.transform(p * alpha, 0, 0);
    const Integer x3 = E.a3 / p2;
    const Integer x6 = E.a6 / p4;
    if (!divides(p, x3 * x3 + 4 * x6)) return done(v - 6, "IV*");
    Integer y0;
    if (small) {
      bool found = false;
      for (Integer y = 0; y < p && !found; ++y)
        if (divides(p, y * y + x3 * y - x6)) {
          y0 = y;
          found = true;
        }
      if (!found) throw std::logic_error("Tate: quadratic root not found");
    } else {
      y0 = mod_p(-x3 * detail::inv_mod(2, p), p);
    }
    E.transform(0, 0, p2 * y0);
    if (!divides(p4, E.a4)) return done(v - 7, "III*");
    if (!divides(p6, E.a6)) return done(v - 8, "II*");

    // Not minimal at p: scale down and restart.
    E.a1 /= p;
    E.a2 /= p2;
    E.a3 /= p3;
    E.a4 /= p4;
    E.a6 /= p6;
  }
}

/// Closed form for p >= 5 on a model minimal at p.
inline LocalData closed_form_local(const Curve& c, const Integer& p) {
  if (p < 5) throw DomainError("closed form applies to p >= 5 only");
  const Integer disc = discriminant(c);
  const unsigned v = detail::val(disc, p);
  if (v == 0) return {p, 0, 0, "I0"};
  if (!detail::divides(p, c.A)) return {p, 1, v, "I" + std::to_string(v)};
  return {p, 2, v, ""};
}

/// Tate's algorithm at p; for p >= 5 the result is cross-checked against the closed form.
inline LocalData tate_local(const Curve& c, const Integer& p) {
  LocalData local = tate_local_full(c, p);
  if (p >= 5 && !(detail::divides(pow(p, 4), c.A) && detail::divides(pow(p, 6), c.B))) {
    const LocalData closed = closed_form_local(c, p);
    if (closed.f_p != local.f_p || closed.v_p_disc_min != local.v_p_disc_min)
      throw std::logic_error("Tate's algorithm disagrees with the closed form at p = " + p.str());
  }
  return local;
}

struct GlobalInvariants {
  Integer H;
  FactoredInteger disc;
  FactoredInteger disc_min;
  Integer conductor;
  double sigma = 0;
  std::vector<LocalData> local;
};

/// H, Delta, Delta_min, N and sigma = log|Delta_min| / log N.
inline GlobalInvariants global_invariants(const Curve& c, const std::optional<FactoredInteger>& disc_hint = std::nullopt,
                                          const FactorOptions& options = {}) {
  require_nonsingular(c);
  const Integer disc = discriminant(c);
  GlobalInvariants g;
  g.H = naive_height(c);
  if (disc_hint) {
    if (disc_hint->value() != disc) throw DomainError("disc_hint does not match the discriminant");
    g.disc = *disc_hint;
  } else {
    g.disc = factor(disc, {}, options);
  }
  std::vector<PrimePower> dmin;
  std::vector<PrimePower> cond;
  g.conductor = 1;
  for (const auto& [p, e] : g.disc.factors()) {
    LocalData local = tate_local(c, p);
    if (local.v_p_disc_min > 0) dmin.push_back({p, local.v_p_disc_min});
    if (local.f_p > 0) {
      cond.push_back({p, local.f_p});
      g.conductor *= pow(p, local.f_p);
    }
    g.local.push_back(std::move(local));
  }
  g.disc_min = FactoredInteger(g.disc.sign(), std::move(dmin));
  for (const auto& [p, e] : g.disc_min.factors()) {
    const unsigned f = detail::val(g.conductor, p);
    if (f == 0 || f > e) throw std::logic_error("conductor does not satisfy rad(Delta_min) | N | Delta_min");
  }
  if (g.conductor == 1) throw std::logic_error("conductor 1 is impossible over Q");
  g.sigma = log_abs(g.disc_min.value()) / log_abs(g.conductor);
  return g;
}

/// Number of points on the reduction mod p (including infinity), p >= 5 of good reduction.
inline std::uint64_t count_points(const Curve& c, std::uint64_t p) {
  if (p < 5 || !modp::is_word_prime(p)) throw DomainError("count_points needs a prime p >= 5");
  if (p > 10000) throw DomainError("count_points is capped at p <= 10^4");
  if (detail::divides(Integer(p), discriminant(c))) throw DomainError("bad reduction at p = " + std::to_string(p));
  std::vector<int> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t y = 1; y < p; ++y) chi[y * y % p] = 1;
  const std::uint64_t a = modp::reduce(c.A, p), b = modp::reduce(c.B, p);
  long long total = static_cast<long long>(p) + 1;
  for (std::uint64_t x = 0; x < p; ++x) total += chi[(x * x % p * x + a * x + b) % p];
  return static_cast<std::uint64_t>(total);
}

struct TorsionCheck {
  bool pass = true;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;  // (p, #E(F_p))
};

/// Necessary condition |G| divides #E(F_p) at each listed good prime.
inline TorsionCheck torsion_multiple_check(const Curve& c, std::string_view group, std::span<const std::uint64_t> primes) {
  const unsigned order = group_order(group);
  TorsionCheck out;
  for (auto p : primes) {
    const auto n = count_points(c, p);
    out.counts.emplace_back(p, n);
    if (n % order != 0) out.pass = false;
  }
  return out;
}

}  // namespace szpiro
