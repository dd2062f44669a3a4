#pragma once

// Brute-force density oracles: local densities rho(q), prime sums of rho, the exceptional
// set |F(x)| >= rad(F(x))^beta, hypothesis checks, and radical/small-value censuses.

#include "szpiro/multipoly.hpp"
#include "szpiro/integer_core.hpp"
#include "szpiro/invariants.hpp"
#include "szpiro/modp.hpp"
#include "szpiro/parallel.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace szpiro {

inline constexpr std::uint64_t kDefaultCensusBudget = 100'000'000;

/// |x_i| <= bounds[i].
struct Box {
  std::vector<std::int64_t> bounds;

  explicit Box(std::vector<std::int64_t> b) : bounds(std::move(b)) {
    if (bounds.empty()) throw DomainError("box needs at least one bound");
    for (auto x : bounds)
      if (x < 1) throw DomainError("box bounds must be >= 1");
  }

  static Box square(std::size_t k, std::int64_t B) { return Box(std::vector<std::int64_t>(k, B)); }

  /// Number of lattice points, or nullopt above 2^63.
  std::optional<std::uint64_t> points() const {
    unsigned __int128 n = 1;
    for (auto b : bounds) {
      n *= static_cast<unsigned __int128>(2 * b + 1);
      if (n > (static_cast<unsigned __int128>(1) << 63)) return std::nullopt;
    }
    return static_cast<std::uint64_t>(n);
  }
};

struct CensusOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultCensusBudget;
  FactorOptions factor;
};

struct CensusResult {
  std::string operation;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t count = 0;
  std::uint64_t excluded_zeros = 0;
  std::uint64_t unknown = 0;
  std::uint64_t points = 0;
  double wall_time = 0;

  /// count / points.
  double density() const { return points == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(points); }
};

namespace detail {

struct CensusTally {
  std::uint64_t count = 0, zeros = 0, unknown = 0, points = 0;
  void merge(const CensusTally& o) {
    count += o.count;
    zeros += o.zeros;
    unknown += o.unknown;
    points += o.points;
  }
};

inline void require_budget(const Box& box, std::uint64_t budget) {
  const auto n = box.points();
  if (!n || *n > budget) throw BudgetExceeded("box has more lattice points than the census budget");
}

// Calls visit(x) for every lattice point of the box, slabs over x_0 in parallel, counts merged in order.
template <class Visit>
CensusTally box_census(const Box& box, unsigned workers, Visit&& visit) {
  const std::size_t k = box.bounds.size();
  const std::int64_t B0 = box.bounds[0];
  auto slabs = parallel_map(static_cast<std::size_t>(2 * B0 + 1), workers, [&](std::size_t i) {
    CensusTally t;
    std::vector<Integer> x(k);
    std::vector<std::int64_t> cur(k);
    cur[0] = static_cast<std::int64_t>(i) - B0;
    for (std::size_t j = 1; j < k; ++j) cur[j] = -box.bounds[j];
    for (;;) {
      for (std::size_t j = 0; j < k; ++j) x[j] = cur[j];
      ++t.points;
      visit(x, t);
      std::size_t j = 1;
      while (j < k && cur[j] == box.bounds[j]) {
        cur[j] = -box.bounds[j];
        ++j;
      }
      if (j >= k) break;
      ++cur[j];
    }
    return t;
  });
  CensusTally total;
  for (const auto& s : slabs) total.merge(s);
  return total;
}

inline std::optional<Integer> safe_radical(const Integer& n, const FactorOptions& opt) {
  const Integer a = abs(n);
  if (a < (Integer(1) << 62)) return Integer(radical_u64(a.convert_to<std::uint64_t>()));
  try {
    return factor(a, {}, opt).radical();
  } catch (const IncompleteFactorization&) {
    return std::nullopt;
  }
}

// lhs^e1 >= rhs^e2 for positive lhs, rhs and nonnegative exponents, exactly.
inline bool power_geq(const Integer& lhs, const Integer& e1, const Integer& rhs, const Integer& e2) {
  const double L = e1.convert_to<double>() * log_abs(lhs) - e2.convert_to<double>() * log_abs(rhs);
  const double scale = 1e-9 * (1 + std::fabs(e1.convert_to<double>() * log_abs(lhs)));
  if (L > scale) return true;
  if (L < -scale) return false;
  return pow(lhs, e1.convert_to<unsigned>()) >= pow(rhs, e2.convert_to<unsigned>());
}

template <class Fn>
CensusResult timed(std::string operation, std::vector<std::pair<std::string, std::string>> params, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  const CensusTally t = fn();
  CensusResult r;
  r.operation = std::move(operation);
  r.parameters = std::move(params);
  r.count = t.count;
  r.excluded_zeros = t.zeros;
  r.unknown = t.unknown;
  r.points = t.points;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string box_string(const Box& box) {
  std::string s;
  for (std::size_t i = 0; i < box.bounds.size(); ++i) s += (i ? "," : "") + std::to_string(box.bounds[i]);
  return s;
}

}  // namespace detail

/// Number of x in (Z/n)^k with F(x) = 0 mod n, by enumeration.
inline std::uint64_t count_solutions(const MultiPoly& F, std::uint64_t n, std::uint64_t budget = kDefaultCensusBudget) {
  const std::size_t k = F.nvars();
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= n;
    if (total > budget) throw BudgetExceeded("residue enumeration over budget");
  }
  const ModularPoly f(F, n);
  std::vector<std::uint64_t> x(k, 0);
  std::uint64_t count = 0;
  for (;;) {
    if (f(x) == 0) ++count;
    std::size_t j = 0;
    while (j < k && x[j] == n - 1) x[j++] = 0;
    if (j == k) break;
    ++x[j];
  }
  return count;
}

/// #{x mod q : F(x) = 0 mod q} / q^k, multiplied out over the prime powers of q.
inline Rational rho(const MultiPoly& F, const Integer& q, std::uint64_t budget = kDefaultCensusBudget) {
  if (q < 1) throw DomainError("rho needs q >= 1");
  if (F.nvars() == 0) throw DomainError("rho needs at least one variable");
  Rational r = 1;
  const FactoredInteger fq = factor(q);
  for (const auto& [p, e] : fq.factors()) {
    const Integer pe = pow(p, e);
    if (!fits_u64(pe) || pe >= (Integer(1) << 32)) throw BudgetExceeded("prime power too large for enumeration");
    const std::uint64_t n = pe.convert_to<std::uint64_t>();
    r *= Rational(Integer(count_solutions(F, n, budget)), pow(pe, static_cast<unsigned>(F.nvars())));
  }
  return r;
}

/// rho(q) by enumerating all of (Z/q)^k directly.
inline Rational rho_naive(const MultiPoly& F, const Integer& q, std::uint64_t budget = kDefaultCensusBudget) {
  if (q < 1) throw DomainError("rho needs q >= 1");
  if (!fits_u64(q) || q >= (Integer(1) << 32)) throw BudgetExceeded("modulus too large for enumeration");
  const std::uint64_t n = q.convert_to<std::uint64_t>();
  return Rational(Integer(count_solutions(F, n, budget)), pow(q, static_cast<unsigned>(F.nvars())));
}

struct FactorCount {
  unsigned r = 0;
  std::string method;  // "exact" or "specialization"
};

/// Number of distinct irreducible factors over Q. Exact for one variable and for binary forms;
/// otherwise the minimum over random specializations of all variables but x_j (exact when the
/// x_j^d coefficient is nonzero and the specialization is generic).
inline std::optional<FactorCount> irreducible_factor_count(const MultiPoly& F, std::size_t j = 0, std::uint64_t seed = 1) {
  if (F.is_zero()) throw DomainError("factor count of the zero polynomial");
  if (F.degree() == 0) return FactorCount{0, "exact"};
  if (F.nvars() == 1) return FactorCount{static_cast<unsigned>(factor_rational(to_rational_poly(to_univariate(F))).factors.size()), "exact"};
  if (F.nvars() == 2 && F.is_homogeneous()) {
    const FormFactorization fac = factor_form(to_binary_form(F));
    return FactorCount{static_cast<unsigned>(fac.factors.size()) + (fac.y_exponent > 0 ? 1u : 0u), "exact"};
  }
  const int d = F.degree();
  MultiPoly::Exponents top(F.nvars(), 0);
  top.at(j) = static_cast<unsigned>(d);
  if (F.coefficient(top) == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::optional<unsigned> best;
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Integer> u(F.nvars()), v(F.nvars(), 0);
    for (std::size_t i = 0; i < F.nvars(); ++i) u[i] = static_cast<std::int64_t>(rng() % 20001) - 10000;
    u[j] = 0;
    v[j] = 1;
    const RationalPoly g = restrict_to_line(F, u, v);
    if (g.degree() != d) continue;
    const auto n = static_cast<unsigned>(factor_rational(g).factors.size());
    best = best ? std::min(*best, n) : n;
  }
  if (!best) return std::nullopt;
  return FactorCount{*best, "specialization"};
}

struct RhoSumPoint {
  std::uint64_t X = 0;
  double sum = 0;
};

struct RhoSumResult {
  std::vector<RhoSumPoint> points;
  double slope = 0;                  // least squares of sum against log log X
  std::optional<FactorCount> r;
  double residual_min = 0;           // of sum - r log log X, when r is known
  double residual_max = 0;
  std::string method;                // "form", "univariate", "constant" or "enumeration"
};

namespace detail {

inline std::vector<std::uint32_t> primes_upto(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

inline double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  return den == 0 ? std::numeric_limits<double>::quiet_NaN() : (n * sxy - sx * sy) / den;
}

}  // namespace detail

/// Cumulative sums of rho(p) over primes p <= X' at checkpoints X' = x_min 10^{i/per_decade} up to X.
inline RhoSumResult rho_prime_sum(const MultiPoly& F, std::uint64_t X, std::uint64_t x_min = 1000,
                                  unsigned per_decade = 4, std::uint64_t budget = kDefaultCensusBudget) {
  if (F.is_zero()) throw DomainError("rho_prime_sum of the zero polynomial");
  if (X < 2) throw DomainError("rho_prime_sum needs X >= 2");
  if (X > 10'000'000) throw BudgetExceeded("rho_prime_sum is capped at X <= 10^7");
  if (per_decade == 0) throw DomainError("per_decade must be positive");
  x_min = std::min(std::max<std::uint64_t>(x_min, 3), X);
  std::vector<std::uint64_t> checkpoints;
  for (unsigned i = 0;; ++i) {
    const double c = static_cast<double>(x_min) * std::pow(10.0, static_cast<double>(i) / per_decade);
    if (c > static_cast<double>(X) * (1 + 1e-12)) break;
    const auto ci = static_cast<std::uint64_t>(std::floor(c + 1e-9));
    if (checkpoints.empty() || ci > checkpoints.back()) checkpoints.push_back(ci);
  }
  if (checkpoints.back() != X) checkpoints.push_back(X);

  RhoSumResult res;
  const std::size_t k = F.nvars();
  const bool constant = F.degree() == 0;
  const bool univariate = k == 1;
  const bool form = k == 2 && F.is_homogeneous();
  res.method = constant ? "constant" : univariate ? "univariate" : form ? "form" : "enumeration";
  IntegerPoly dehom;
  Integer lead_x;  // coefficient of x^d, zero iff [1:0] is a root
  if (univariate) dehom = to_univariate(F);
  if (form) {
    const BinaryForm bf = to_binary_form(F);
    const RationalPoly f = bf.dehomogenize();
    for (int i = 0; i <= f.degree(); ++i) dehom.push_back(numerator(f.coeff(i)));
    if (dehom.empty()) dehom.push_back(0);
    lead_x = F.coefficient({static_cast<unsigned>(F.degree()), 0u});
  }
  const Integer const_value = constant ? F.terms().begin()->second : Integer(0);
  std::uint64_t spent = 0;
  auto N_p = [&](std::uint64_t p) -> double {
    const double pk = std::pow(static_cast<double>(p), static_cast<double>(k));
    if (constant) return const_value % p == 0 ? pk : 0.0;
    if (univariate || form) {
      const modp::Poly f = modp::reduce(dehom, p);
      const bool vanishes = f.empty() && (!form || lead_x % p == 0);
      if (vanishes) return pk;
      if (univariate) return modp::degree(f) <= 0 ? 0.0 : modp::distinct_root_count(f, p);
      unsigned roots = modp::degree(f) <= 0 ? 0 : modp::distinct_root_count(f, p);
      if (lead_x % p == 0) ++roots;
      return 1.0 + static_cast<double>(p - 1) * roots;
    }
    spent += static_cast<std::uint64_t>(pk);
    if (spent > budget) throw BudgetExceeded("rho_prime_sum enumeration over budget");
    return static_cast<double>(count_solutions(F, p, budget));
  };
  const auto primes = detail::primes_upto(X);
  long double sum = 0;
  std::size_t ci = 0;
  for (std::uint32_t p : primes) {
    while (ci < checkpoints.size() && checkpoints[ci] < p) {
      res.points.push_back({checkpoints[ci], static_cast<double>(sum)});
      ++ci;
    }
    sum += static_cast<long double>(N_p(p)) / std::pow(static_cast<long double>(p), static_cast<long double>(k));
  }
  while (ci < checkpoints.size()) res.points.push_back({checkpoints[ci++], static_cast<double>(sum)});

  std::vector<double> lx, ly;
  for (const auto& pt : res.points) {
    lx.push_back(std::log(std::log(static_cast<double>(pt.X))));
    ly.push_back(pt.sum);
  }
  res.slope = lx.size() >= 2 ? detail::least_squares_slope(lx, ly) : std::numeric_limits<double>::quiet_NaN();
  res.r = irreducible_factor_count(F);
  if (res.r) {
    res.residual_min = std::numeric_limits<double>::infinity();
    res.residual_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lx.size(); ++i) {
      const double resid = ly[i] - res.r->r * lx[i];
      res.residual_min = std::min(res.residual_min, resid);
      res.residual_max = std::max(res.residual_max, resid);
    }
  }
  return res;
}

/// Points x of the box with F(x) != 0 and |F(x)| >= rad(F(x))^beta (beta > 0 exact).
inline CensusResult exceptional_count(const MultiPoly& F, const Box& box, const Rational& beta,
                                      const CensusOptions& opt = {}) {
  if (box.bounds.size() != F.nvars()) throw DomainError("box dimension does not match the variable count");
  if (beta <= 0) throw DomainError("beta must be positive");
  detail::require_budget(box, opt.budget);
  const Integer num = numerator(beta), den = denominator(beta);
  return detail::timed("exceptional_count", {{"F", to_string(F)}, {"box", detail::box_string(box)}, {"beta", to_string(beta)}},
                       [&] {
                         return detail::box_census(box, opt.workers, [&](const std::vector<Integer>& x, detail::CensusTally& t) {
                           const Integer v = F(x);
                           if (v == 0) {
                             ++t.zeros;
                             return;
                           }
                           const auto rad = detail::safe_radical(v, opt.factor);
                           if (!rad) {
                             ++t.unknown;
                             return;
                           }
                           if (detail::power_geq(abs(v), den, *rad, num)) ++t.count;
                         });
                       });
}

/// Points with rad(gcd(F1(x), F2(x))) >= X; points where both values vanish are excluded.
inline CensusResult radical_gcd_census(const MultiPoly& F1, const MultiPoly& F2, const Box& box, const Integer& X,
                                       const CensusOptions& opt = {}) {
  if (F1.vars() != F2.vars()) throw DomainError("F1 and F2 must use the same variables");
  if (box.bounds.size() != F1.nvars()) throw DomainError("box dimension does not match the variable count");
  detail::require_budget(box, opt.budget);
  return detail::timed("radical_gcd_census",
                       {{"F1", to_string(F1)}, {"F2", to_string(F2)}, {"box", detail::box_string(box)}, {"X", to_string(X)}},
                       [&] {
                         return detail::box_census(box, opt.workers, [&](const std::vector<Integer>& x, detail::CensusTally& t) {
                           const Integer g = gcd(F1(x), F2(x));
                           if (g == 0) {
                             ++t.zeros;
                             return;
                           }
                           const auto rad = detail::safe_radical(g, opt.factor);
                           if (!rad) {
                             ++t.unknown;
                             return;
                           }
                           if (*rad >= X) ++t.count;
                         });
                       });
}

/// Points |a| <= Y, |b| <= Y^{1/m} with F(a, b^m) != 0 whose part prime to 6 is <= Y^{d - eps}.
inline CensusResult small_value_census(const BinaryForm& F, std::int64_t Y, unsigned m, const Rational& eps,
                                       const CensusOptions& opt = {}) {
  if (Y < 1) throw DomainError("Y must be >= 1");
  if (m == 0) throw DomainError("m must be positive");
  if (eps < 0) throw DomainError("epsilon must be nonnegative");
  const std::int64_t bmax = iroot(Integer(Y), m).convert_to<std::int64_t>();
  const Box box({Y, bmax});
  detail::require_budget(box, opt.budget);
  // part^den <= Y^{d den - num}
  const Integer num = numerator(eps), den = denominator(eps);
  const Integer expo = Integer(F.degree()) * den - num;
  return detail::timed("small_value_census",
                       {{"F", to_string(F)}, {"Y", std::to_string(Y)}, {"m", std::to_string(m)}, {"epsilon", to_string(eps)}},
                       [&] {
                         return detail::box_census(box, opt.workers, [&](const std::vector<Integer>& x, detail::CensusTally& t) {
                           const Integer v = F(x[0], pow(x[1], m));
                           if (v == 0) {
                             ++t.zeros;
                             return;
                           }
                           Integer part = abs(v);
                           while (part % 2 == 0) part /= 2;
                           while (part % 3 == 0) part /= 3;
                           if (expo < 0) return;
                           if (detail::power_geq(Integer(Y), expo, part, den)) ++t.count;
                         });
                       });
}

struct AssumptionCheck {
  bool pass = false;
  std::string detail;
};

struct HypothesisReport {
  unsigned d = 0;
  std::size_t j = 0;
  AssumptionCheck a1;          // no repeated factor
  AssumptionCheck a2;          // x_j^d coefficient nonzero
  AssumptionCheck a3;          // some i with B_i = max B and gcd(F, dF/dx_i) = 1
  AssumptionCheck box;         // every monomial: B^e <= B_j Y^{d-1}
  double box_ratio = 0;        // max over monomials of B^e / (B_j Y^{d-1})
  std::string worst_monomial;
  double log_ratio = 0;        // log Y / log Z
  std::optional<FactorCount> r;
  unsigned tau = 0;            // number of divisors of d - 1 (d >= 3)
  std::optional<bool> tau_condition;  // tau > (d-1)/(d-r), informational
};

namespace detail {

struct LineSample {
  std::vector<Integer> u, v;
};

inline std::vector<LineSample> random_lines(std::size_t k, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LineSample> out;
  for (std::size_t n = 0; n < count; ++n) {
    LineSample l{std::vector<Integer>(k), std::vector<Integer>(k)};
    for (std::size_t i = 0; i < k; ++i) {
      l.u[i] = static_cast<std::int64_t>(rng() % 2001) - 1000;
      l.v[i] = static_cast<std::int64_t>(rng() % 2001) - 1000;
    }
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace detail

/// Checks the hypotheses of the exceptional-set bound for F on the box with distinguished variable j.
/// A full-degree line restriction that is squarefree (resp. coprime to the derivative's restriction)
/// certifies (A1) (resp. (A3)); failures report the repeated or common factor seen on every line.
inline HypothesisReport hypothesis_check(const MultiPoly& F, const Box& box, std::size_t j, std::uint64_t seed = 1) {
  if (box.bounds.size() != F.nvars()) throw DomainError("box dimension does not match the variable count");
  if (j >= F.nvars()) throw DomainError("variable index out of range");
  HypothesisReport rep;
  rep.j = j;
  if (F.is_zero() || F.degree() < 1) {
    rep.a1 = {false, "total degree must be at least 1"};
    rep.a2 = {false, "total degree must be at least 1"};
    rep.a3 = {false, "total degree must be at least 1"};
    rep.box = {false, "total degree must be at least 1"};
    return rep;
  }
  const int d = F.degree();
  rep.d = static_cast<unsigned>(d);
  const auto lines = detail::random_lines(F.nvars(), 12, seed);

  // (A1)
  {
    std::string witness = "no full-degree line found";
    rep.a1.pass = false;
    for (const auto& l : lines) {
      const RationalPoly g = restrict_to_line(F, l.u, l.v);
      if (g.degree() != d) continue;
      const auto parts = yun_squarefree(g);
      bool squarefree = true;
      for (const auto& sp : parts)
        if (sp.multiplicity > 1 && sp.poly.degree() > 0) {
          squarefree = false;
          witness = "repeated factor on a line: (" + to_string(sp.poly, 't') + ")^" + std::to_string(sp.multiplicity);
        }
      if (squarefree) {
        rep.a1 = {true, "squarefree restriction of full degree"};
        break;
      }
    }
    if (!rep.a1.pass) rep.a1.detail = witness;
  }

  // (A2)
  {
    MultiPoly::Exponents top(F.nvars(), 0);
    top[j] = static_cast<unsigned>(d);
    const Integer c = F.coefficient(top);
    rep.a2 = {c != 0, F.vars()[j] + "^" + std::to_string(d) + " coefficient " + c.str()};
  }

  // (A3)
  {
    const std::int64_t Y = *std::max_element(box.bounds.begin(), box.bounds.end());
    rep.a3 = {false, "no maximal variable with dF/dx_i coprime to F"};
    for (std::size_t i = 0; i < F.nvars() && !rep.a3.pass; ++i) {
      if (box.bounds[i] != Y) continue;
      const MultiPoly dF = F.derivative(i);
      if (dF.is_zero()) continue;
      for (const auto& l : lines) {
        const RationalPoly g = restrict_to_line(F, l.u, l.v);
        if (g.degree() != d) continue;
        const RationalPoly h = restrict_to_line(dF, l.u, l.v);
        if (gcd(g, h).degree() == 0) {
          rep.a3 = {true, "coprime to dF/d" + F.vars()[i]};
          break;
        }
      }
    }
  }

  // Box condition X << B_j Y^{d-1} and log Y << log Z.
  {
    const double Y = static_cast<double>(*std::max_element(box.bounds.begin(), box.bounds.end()));
    const double Z = static_cast<double>(*std::min_element(box.bounds.begin(), box.bounds.end()));
    const double rhs = std::log(static_cast<double>(box.bounds[j])) + (d - 1) * std::log(Y);
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& [e, c] : F.terms()) {
      double lhs = 0;
      for (std::size_t i = 0; i < e.size(); ++i) lhs += e[i] * std::log(static_cast<double>(box.bounds[i]));
      if (lhs - rhs > worst) {
        worst = lhs - rhs;
        MultiPoly mono(F.vars());
        mono.add_term(e, 1);
        rep.worst_monomial = to_string(mono);
      }
    }
    rep.box_ratio = std::exp(worst);
    rep.box = {rep.box_ratio <= 1 + 1e-12, "max B^e / (B_j Y^(d-1)) = " + std::to_string(rep.box_ratio) + " at " + rep.worst_monomial};
    rep.log_ratio = Z > 1 ? std::log(Y) / std::log(Z) : std::numeric_limits<double>::infinity();
  }

  rep.r = irreducible_factor_count(F, j, seed);
  if (d >= 3) {
    rep.tau = divisor_count(static_cast<unsigned>(d - 1));
    if (rep.r && rep.r->r < static_cast<unsigned>(d))
      rep.tau_condition = Rational(rep.tau) > Rational(d - 1, d - static_cast<int>(rep.r->r));
    else if (rep.r)
      rep.tau_condition = false;
  }
  return rep;
}

}  // namespace szpiro
