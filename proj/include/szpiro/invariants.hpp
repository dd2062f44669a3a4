#pragma once

// Exponent calculus for torsion families: signatures, form profiles, lambda/kappa,
// the density exponent delta_d(r), and the reference beta table.

#include "szpiro/binary_form.hpp"

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace szpiro {

struct FamilySignature {
  unsigned nu = 1;
  unsigned n = 1;
  unsigned m = 1;

  /// Degree T used to homogenize d(t): 12n/(nu m).
  unsigned homogenization_degree() const { return 12 * n / (nu * m); }
  /// Total weighted degree md = 12n/nu of D(a, b^m).
  unsigned weighted_degree() const { return 12 * n / nu; }

  friend bool operator==(const FamilySignature&, const FamilySignature&) = default;
};

/// (n, m) with nu * max(deg f / 4, deg g / 6) = n/m, checked against the family constraints.
inline FamilySignature derive_signature(const RationalPoly& f, const RationalPoly& g, unsigned nu) {
  if (nu != 1 && nu != 2) throw DomainError("nu must be 1 or 2");
  if (gcd(f, g).degree() > 0) throw DomainError("derive_signature: f and g are not coprime");
  const Rational value = Rational(nu) * std::max(Rational(std::max(f.degree(), 0), 4), Rational(std::max(g.degree(), 0), 6));
  if (value == 0) throw DomainError("not in P_nu: f and g are constant");
  const Integer n = numerator(value);
  const Integer m = denominator(value);
  if (n != 1 && m != 1) throw DomainError("not in P_nu: " + to_string(value) + " is neither an integer nor a unit fraction");
  if (nu == 2 && n != 1) throw DomainError("not in P_nu: n must be 1 when nu = 2");
  const FamilySignature sig{nu, n.convert_to<unsigned>(), m.convert_to<unsigned>()};
  if (12 * sig.n % (sig.nu * sig.m) != 0) throw DomainError("not in P_nu: 12n/(nu m) is not an integer");
  return sig;
}

struct ProfileEntry {
  unsigned delta = 0;
  unsigned w = 1;
  bool x_divisible = false;

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

struct FormProfile {
  unsigned md = 0;
  unsigned delta0 = 0;
  std::vector<ProfileEntry> entries;

  unsigned delta_sum() const {
    unsigned s = 0;
    for (const auto& e : entries) s += e.delta;
    return s;
  }
};

/// Profile of a factored form evaluated at (a, b^m): delta_i = m * deg F_i, delta_0 = [e0 >= 1].
inline FormProfile profile(const FormFactorization& fac, unsigned m, unsigned md) {
  if (m == 0) throw DomainError("profile: m must be positive");
  FormProfile p;
  p.md = md;
  p.delta0 = fac.y_exponent >= 1 ? 1 : 0;
  for (const auto& f : fac.factors) {
    ProfileEntry e;
    e.delta = m * static_cast<unsigned>(f.poly.size() - 1);
    e.x_divisible = f.poly.size() == 2 && f.poly[0] == 0;
    e.w = e.x_divisible ? 1 : std::max(1, static_cast<int>(e.delta) - 2);
    p.entries.push_back(e);
  }
  if (p.delta0 + p.delta_sum() > md) throw DomainError("profile: total degree exceeds md");
  return p;
}

/// (lambda, kappa) = (md / (delta0 + sum delta_i), md / (delta0 + sum delta_i / w_i)).
inline std::pair<Rational, Rational> lambda_kappa(const FormProfile& p) {
  Rational lam_den = p.delta0;
  Rational kap_den = p.delta0;
  for (const auto& e : p.entries) {
    lam_den += e.delta;
    kap_den += Rational(e.delta, e.w);
  }
  if (lam_den == 0) throw DomainError("lambda_kappa: empty profile");
  return {Rational(p.md) / lam_den, Rational(p.md) / kap_den};
}

inline unsigned divisor_count(unsigned n) {
  unsigned c = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

/// delta_d(r): 1 for d <= 2, else (d-1)((d-r)/(d-1) - 1/tau) / (1 + (d-1)(1 - 1/tau)), tau = #divisors(d-1).
inline Rational theorem_delta(unsigned d, unsigned r) {
  if (d == 0 || r == 0 || r > d) throw DomainError("theorem_delta requires 1 <= r <= d");
  if (d <= 2) return 1;
  const Rational tau = divisor_count(d - 1);
  const Rational dm1 = d - 1;
  return dm1 * (Rational(d - r) / dm1 - 1 / tau) / (1 + dm1 * (1 - 1 / tau));
}

/// Torsion groups allowed by Mazur's theorem, in canonical spelling.
inline const std::array<std::string_view, 15>& mazur_groups() {
  static const std::array<std::string_view, 15> groups{"C1",  "C2",  "C3",    "C4",    "C5",
                                                       "C6",  "C7",  "C8",    "C9",    "C10",
                                                       "C12", "C2xC2", "C2xC4", "C2xC6", "C2xC8"};
  return groups;
}

/// Accepts "C2xC4", "C2×C4", "c2xc4", "Z/2xZ/4" style spellings.
inline std::string canonical_group(std::string_view label) {
  std::string s;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(label[i]);
    if (c == 0xC3 && i + 1 < label.size() && static_cast<unsigned char>(label[i + 1]) == 0x97) {
      s += 'x';
      ++i;
    } else if (c == ' ' || c == '_') {
      continue;
    } else {
      s += static_cast<char>(std::tolower(c));
    }
  }
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 2, "z/") == 0) {
      out += 'C';
      ++i;
    } else if (s[i] == 'c') {
      out += 'C';
    } else if (s[i] == '*') {
      out += 'x';
    } else {
      out += s[i];
    }
  }
  for (auto g : mazur_groups())
    if (out == g) return out;
  throw DomainError("unknown torsion group label: " + std::string(label));
}

inline unsigned group_order(std::string_view label) {
  const std::string g = canonical_group(label);
  const auto x = g.find('x');
  if (x == std::string::npos) return static_cast<unsigned>(std::stoul(g.substr(1)));
  return 2 * static_cast<unsigned>(std::stoul(g.substr(x + 2)));
}

/// Reference value of the expected Szpiro ratio for each torsion group.
inline Rational beta_expected(std::string_view label) {
  const std::string g = canonical_group(label);
  if (g == "C1") return 1;
  if (g == "C2") return Rational(3, 2);
  if (g == "C3" || g == "C2xC2") return 2;
  if (g == "C4") return Rational(12, 5);
  if (g == "C5" || g == "C6" || g == "C2xC4") return 3;
  if (g == "C7" || g == "C8" || g == "C2xC6") return 4;
  if (g == "C9" || g == "C10") return Rational(9, 2);
  return Rational(24, 5);  // C12, C2xC8
}

}  // namespace szpiro
