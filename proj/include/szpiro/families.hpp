#pragma once

// Torsion families E_t : y^2 = x^3 + f(t) x + g(t), their integral models at
// t = a / b^m, and factored discriminants.

#include "szpiro/elliptic.hpp"

#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace szpiro {

struct TorsionFamily {
  std::string G;
  RationalPoly f;
  RationalPoly g;
  unsigned nu = 1;
  FamilySignature signature;
  RationalPoly d;                  // 4 f^3 + 27 g^2
  FormFactorization d_factored;    // d = unit * prod F_i^{e_i}
  Homogenized D;                   // y^T d(x / y)
  FormFactorization D_factored;    // unit * y^{e0} * prod F_i(x, y)^{e_i}
  FormProfile profile;
  Rational lambda;
  Rational kappa;
  Rational beta;
  bool exceptional_branch = false;  // C3: y^2 = x^3 + b^2 lies outside the parameterization
};

namespace detail {

struct FamilySource {
  const char* G;
  unsigned nu;
  const char* f;
  const char* g;
  const char* d;  // the discriminant 4f^3 + 27g^2 in factored form
  unsigned n;
  unsigned m;
};

// Rows with nu = 1: f = -P/3 and g = 2Q/27 for the tabulated P, Q, and d = -2^8 * R.
inline const std::vector<FamilySource>& family_sources() {
  static const std::vector<FamilySource> rows{
      {"C2", 2, "t", "t+1", "(t+3)^2(4t+3)", 1, 2},
      {"C2xC2", 2, "-1/3*(t^2-t+1)", "1/27*(-2t^3+3t^2+3t-2)", "-t^2(t-1)^2", 1, 1},
      {"C3", 1, "-1/3*(-24t+1)", "2/27*(216t^2-36t+1)", "-256*t^3(-27t+1)", 1, 3},
      {"C4", 1, "-1/3*(16t^2-16t+1)", "2/27*(8t-1)(8t^2+16t-1)", "-256*t^4(-16t+1)", 1, 2},
      {"C5", 1, "-1/3*(t^4+12t^3+14t^2-12t+1)", "2/27*(t^2+1)(t^4+18t^3+74t^2-18t+1)",
       "-256*t^5(-t^2-11t+1)", 1, 1},
      {"C6", 1, "-1/3*(t+3)(t^3+9t^2+3t+3)", "2/27*(t^2+6t-3)(t^4+12t^3+30t^2+36t+9)", "-256*t^2(t+9)(t+1)^3", 1,
       1},
      {"C7", 1, "-1/3*(t^2-t+1)(t^6+5t^5-10t^4-15t^3+30t^2-11t+1)",
       "2/27*(t^12+6t^11-15t^10-46t^9+174t^8-222t^7+273t^6-486t^5+570t^4-354t^3+117t^2-18t+1)",
       "-256*t^7(-t+1)^7(t^3+5t^2-8t+1)", 2, 1},
      {"C8", 1, "-1/3*(t^8-16t^7+96t^6-288t^5+480t^4-448t^3+224t^2-64t+16)",
       "2/27*(t^4-8t^3+16t^2-16t+8)(t^8-16t^7+96t^6-288t^5+456t^4-352t^3+80t^2+32t-8)",
       "-256*t^2(t-2)^4(t-1)^8(t^2-8t+8)", 2, 1},
      {"C9", 1, "-1/3*(t^3-3t+1)(t^9-9t^7+27t^6-45t^5+54t^4-48t^3+27t^2-9t+1)",
       "2/27*(t^18-18t^16+42t^15+27t^14-306t^13+735t^12-1080t^11+1359t^10-2032t^9+3240t^8-4230t^7+4128t^6"
       "-2970t^5+1557t^4-570t^3+135t^2-18t+1)",
       "-256*t^9(-t+1)^9(t^2-t+1)^3(t^3+3t^2-6t+1)", 3, 1},
      {"C10", 1,
       "-1/3*(t^12-8t^11+16t^10+40t^9-240t^8+432t^7-256t^6-288t^5+720t^4-720t^3+416t^2-128t+16)",
       "2/27*(t^2-2t+2)(t^4-2t^3+2)(t^4-2t^3-6t^2+12t-4)(t^8-6t^7+4t^6+48t^5-146t^4+176t^3-104t^2+32t-4)",
       "-256*t^5(t-2)^5(t-1)^10(t^2+2t-4)(t^2-3t+1)^2", 3, 1},
      {"C12", 1,
       "-1/3*(t^4-6t^3+12t^2-12t+6)(t^12-18t^11+144t^10-684t^9+2154t^8-4728t^7+7368t^6-8112t^5+6132t^4"
       "-3000t^3+864t^2-144t+24)",
       "2/27*(t^8-12t^7+60t^6-168t^5+288t^4-312t^3+216t^2-96t+24)(t^16-24t^15+264t^14-1776t^13+8208t^12"
       "-27696t^11+70632t^10-138720t^9+211296t^8-248688t^7+222552t^6-146304t^5+65880t^4-17136t^3+1008t^2"
       "+576t-72)",
       "-256*t^2(t-2)^6(t-1)^12(t^2-6t+6)(t^2-2t+2)^3(t^2-3t+3)^4", 4, 1},
      {"C2xC4", 1, "-1/3*(t^4+16t^3+80t^2+128t+256)", "2/27*(t^2+8t-16)(t^2+8t+8)(t^2+8t+32)",
       "-256*t^2(t+8)^2(t+4)^4", 1, 1},
      {"C2xC6", 1, "-1/3*(21t^2-6t+1)(6861t^6-2178t^5-825t^4+180t^3+75t^2-18t+1)",
       "2/27*(183t^4-36t^3-30t^2+12t-1)(393t^4-156t^3+30t^2-12t+1)(759t^4-228t^3-30t^2+12t-1)",
       "-256*(2t)^6(-9t+1)^2(-3t+1)^2(3t+1)^2(-5t+1)^6(-t+1)^6", 2, 1},
      {"C2xC8", 1,
       "-1/3*(t^16+32t^15+448t^14+3584t^13+17664t^12+51200t^11+51200t^10-237568t^9-1183744t^8-1900544t^7"
       "+3276800t^6+26214400t^5+72351744t^4+117440512t^3+117440512t^2+67108864t+16777216)",
       "2/27*(t^8+16t^7+96t^6+256t^5-256t^4-4096t^3-12288t^2-16384t-8192)(t^8+16t^7+96t^6+256t^5+128t^4"
       "-1024t^3-3072t^2-4096t-2048)(t^8+16t^7+96t^6+256t^5+512t^4+2048t^3+6144t^2+8192t+4096)",
       "-256*(2t)^8(t+2)^8(t+4)^8(t^2-8)^2(t^2+8t+8)^2(t^2+4t+8)^4", 4, 1},
  };
  return rows;
}

inline TorsionFamily build_family(const FamilySource& src) {
  TorsionFamily fam;
  fam.G = src.G;
  fam.nu = src.nu;
  fam.f = parse_poly(src.f);
  fam.g = parse_poly(src.g);
  fam.signature = derive_signature(fam.f, fam.g, fam.nu);
  if (fam.signature.n != src.n || fam.signature.m != src.m)
    throw std::logic_error("family " + fam.G + ": derived signature differs from the tabulated one");
  fam.d = discriminant_poly(fam.f, fam.g);
  const RationalPoly tabulated = parse_poly(src.d);
  if (!(fam.d == tabulated))
    throw std::logic_error("family " + fam.G + ": 4f^3 + 27g^2 differs from the tabulated discriminant");
  fam.d_factored = factor_rational(fam.d);
  if (!(fam.d_factored.expand() == fam.d)) throw std::logic_error("family " + fam.G + ": factorization round trip");
  fam.D = homogenize(fam.d, fam.signature.homogenization_degree());
  fam.D_factored = fam.d_factored;
  fam.D_factored.y_exponent = fam.D.e0;
  fam.profile = profile(fam.D_factored, fam.signature.m, fam.signature.weighted_degree());
  std::tie(fam.lambda, fam.kappa) = lambda_kappa(fam.profile);
  fam.beta = beta_expected(fam.G);
  if (fam.lambda != fam.beta || fam.kappa != fam.beta)
    throw std::logic_error("family " + fam.G + ": lambda/kappa differ from the reference beta");
  fam.exceptional_branch = fam.G == "C3";
  return fam;
}

}  // namespace detail

/// The 14 groups with a parameterization, in table order.
inline std::vector<std::string> parameterized_groups() {
  std::vector<std::string> out;
  for (const auto& src : detail::family_sources()) out.emplace_back(src.G);
  return out;
}

/// Family data for G; every stored identity is verified on first use.
inline const TorsionFamily& registry(std::string_view label) {
  static std::mutex mu;
  static std::map<std::string, TorsionFamily> cache;
  const std::string G = canonical_group(label);
  if (G == "C1") throw DomainError("C1 has no parameterization");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(G);
  if (it != cache.end()) return it->second;
  for (const auto& src : detail::family_sources())
    if (G == src.G) return cache.emplace(G, detail::build_family(src)).first->second;
  throw DomainError("no family data for " + G);
}

struct FamilyParameter {
  Integer a;
  Integer b = 1;
  Integer c = 1;

  friend bool operator==(const FamilyParameter&, const FamilyParameter&) = default;
};

inline bool is_squarefree(const Integer& n, const FactorOptions& options = {}) {
  if (n == 0) return false;
  const FactoredInteger factored = factor(n, {}, options);
  for (const auto& f : factored.factors())
    if (f.exponent > 1) return false;
  return true;
}

/// b > 0; gcd(a, b^m) free of m-th powers; c = 1 for nu = 1, c squarefree (either sign) for nu = 2.
inline void check_parameter(const TorsionFamily& fam, const FamilyParameter& t) {
  if (t.b <= 0) throw DomainError("family parameter b must be positive");
  if (fam.nu == 1 && t.c != 1) throw DomainError("twist parameter c is only allowed when nu = 2");
  if (fam.nu == 2 && !is_squarefree(t.c)) throw DomainError("twist parameter c must be squarefree and nonzero");
  const unsigned m = fam.signature.m;
  const Integer g = gcd(t.a, t.b);
  if (g > 1) {
    const FactoredInteger factored = factor(g);
    for (const auto& f : factored.factors())
      if (t.a % pow(f.prime, m) == 0)
        throw DomainError("gcd(a, b^m) is divisible by an m-th power (" + f.prime.str() + "^" + std::to_string(m) + ")");
  }
}

struct FamilyModel {
  FamilyParameter param;
  Integer q;          // per-parameter scaling making the model integral
  Curve unreduced;    // ((qc)^{4/nu} X, (qc)^{6/nu} Y)
  Curve curve;        // after minimal_short
  Integer u;          // unreduced = (u^4 A, u^6 B)
};

namespace detail {

// b^{w} p(a / b^m) as an exact rational, for w >= m deg p.
inline Rational weighted_value(const RationalPoly& p, const Integer& a, const Integer& b, unsigned m, unsigned w) {
  Rational v = 0;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    v += p.coeff(k) * Rational(pow(a, k) * pow(b, w - m * static_cast<unsigned>(k)));
  }
  return v;
}

inline unsigned ceil_div(unsigned x, unsigned y) { return (x + y - 1) / y; }

}  // namespace detail

/// Integral model of the family member at t = a / b^m, twisted by c when nu = 2.
inline FamilyModel family_model(const TorsionFamily& fam, const FamilyParameter& t, const FactorOptions& options = {}) {
  check_parameter(fam, t);
  const unsigned m = fam.signature.m;
  const unsigned ex = 4 / fam.nu * fam.signature.n;
  const unsigned ey = 6 / fam.nu * fam.signature.n;
  const Rational X = detail::weighted_value(fam.f, t.a, t.b, m, ex);
  const Rational Y = detail::weighted_value(fam.g, t.a, t.b, m, ey);
  const unsigned kx = 4 / fam.nu, ky = 6 / fam.nu;
  // Smallest positive integer q with (qc)^{kx} X and (qc)^{ky} Y integral.
  Integer q = 1;
  const Integer den = boost::multiprecision::lcm(denominator(X), denominator(Y));
  if (den > 1) {
    const FactoredInteger factored = factor(den, {}, options);
    for (const auto& [p, e] : factored.factors()) {
      const unsigned vc = t.c == 0 ? 0 : detail::val(t.c, p);
      const unsigned dx = X == 0 ? 0 : detail::val(denominator(X), p);
      const unsigned dy = Y == 0 ? 0 : detail::val(denominator(Y), p);
      const unsigned need = std::max(detail::ceil_div(dx, kx), detail::ceil_div(dy, ky));
      if (need > vc) q *= pow(p, need - vc);
    }
  }
  const Integer s = q * t.c;
  const Rational A0 = X * Rational(pow(s, kx));
  const Rational B0 = Y * Rational(pow(s, ky));
  if (!is_integer(A0) || !is_integer(B0)) throw std::logic_error("family scaling failed to produce an integral model");
  FamilyModel model;
  model.param = t;
  model.q = q;
  model.unreduced = {numerator(A0), numerator(B0)};
  if (4 * pow(model.unreduced.A, 3) + 27 * pow(model.unreduced.B, 2) == 0)
    throw DomainError("parameter lies on the discriminant locus (singular fibre)");
  const MinimalShort reduced = minimal_short(model.unreduced, options);
  model.curve = reduced.curve;
  model.u = reduced.u;
  return model;
}

inline Curve curve_from_parameter(std::string_view G, const Integer& a, const Integer& b, const Integer& c = 1) {
  return family_model(registry(G), {a, b, c}).curve;
}

/// Factorization of the discriminant of the unreduced model, assembled from the
/// values of the irreducible factors of D at (a, b^m).
inline FactoredInteger discriminant_factored(const TorsionFamily& fam, const FamilyModel& model,
                                             const FactorOptions& options = {}) {
  const auto& t = model.param;
  const unsigned m = fam.signature.m;
  const Integer y = pow(t.b, m);
  const Rational K = Rational(-16) * fam.D_factored.unit;
  FactoredInteger num = factor(numerator(K), {}, options);
  const FactoredInteger den = factor(denominator(K), {}, options);
  const Integer s = abs(Integer(model.q * t.c));
  if (s > 1) num = merge_factored(num, power_factored(factor(s, {}, options), 12 / fam.nu));
  if (fam.D.e0 > 0 && t.b > 1) num = merge_factored(num, power_factored(factor(t.b, {}, options), m * fam.D.e0));
  for (const auto& F : fam.D_factored.factors) {
    const BinaryForm form = homogenize_factor(F.poly);
    const Integer value = form(t.a, y);
    if (value == 0) throw DomainError("parameter is a root of a discriminant factor");
    num = merge_factored(num, power_factored(factor(value, {}, options), F.multiplicity));
  }
  FactoredInteger disc = quotient_factored(num, den);
  if (disc.value() != discriminant(model.unreduced))
    throw std::logic_error("factored discriminant does not match -16(4A^3 + 27B^2)");
  return disc;
}

inline FactoredInteger discriminant_factored(std::string_view G, const Integer& a, const Integer& b,
                                             const Integer& c = 1) {
  const auto& fam = registry(G);
  return discriminant_factored(fam, family_model(fam, {a, b, c}));
}

/// Discriminant of the reduced model from the unreduced factorization.
inline FactoredInteger reduced_discriminant(const FactoredInteger& unreduced, const Integer& u,
                                            const FactorOptions& options = {}) {
  if (u == 1) return unreduced;
  return quotient_factored(unreduced, power_factored(factor(u, {}, options), 12));
}

}  // namespace szpiro
