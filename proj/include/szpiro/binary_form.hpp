#pragma once

// Integer binary forms with optional variable weights.

#include "szpiro/poly_factor.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace szpiro {

struct FormTerm {
  unsigned x_exp = 0;
  unsigned y_exp = 0;
  Integer coeff;

  friend bool operator==(const FormTerm&, const FormTerm&) = default;
};

/// A polynomial in (x, y), homogeneous of `degree` when x has weight wx and y weight wy.
class BinaryForm {
 public:
  BinaryForm() = default;

  BinaryForm(std::vector<FormTerm> terms, unsigned degree, unsigned wx = 1, unsigned wy = 1)
      : terms_(std::move(terms)), degree_(degree), wx_(wx), wy_(wy) {
    if (wx == 0 || wy == 0) throw DomainError("BinaryForm weights must be positive");
    std::erase_if(terms_, [](const FormTerm& t) { return t.coeff == 0; });
    std::sort(terms_.begin(), terms_.end(), [](const FormTerm& a, const FormTerm& b) { return a.x_exp > b.x_exp; });
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (terms_[i].x_exp == terms_[i - 1].x_exp) throw DomainError("BinaryForm has a repeated monomial");
    for (const auto& t : terms_)
      if (wx * t.x_exp + wy * t.y_exp != degree)
        throw DomainError("BinaryForm monomial is not of weighted degree " + std::to_string(degree));
  }

  const std::vector<FormTerm>& terms() const { return terms_; }
  unsigned degree() const { return degree_; }
  unsigned wx() const { return wx_; }
  unsigned wy() const { return wy_; }
  bool is_zero() const { return terms_.empty(); }

  /// Value at (x, y).
  Integer operator()(const Integer& x, const Integer& y) const {
    Integer v = 0;
    for (const auto& t : terms_) v += t.coeff * pow(x, t.x_exp) * pow(y, t.y_exp);
    return v;
  }

  /// F(x, 1) as a polynomial in x.
  RationalPoly dehomogenize() const {
    std::vector<Rational> c;
    for (const auto& t : terms_) {
      if (c.size() <= t.x_exp) c.resize(t.x_exp + 1, Rational(0));
      c[t.x_exp] += t.coeff;
    }
    return RationalPoly(std::move(c));
  }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<FormTerm> terms_;
  unsigned degree_ = 0;
  unsigned wx_ = 1;
  unsigned wy_ = 1;
};

struct Homogenized {
  BinaryForm form;   // integer coefficients
  Rational unit;     // d(t) = unit * form(t, 1)
  unsigned e0 = 0;   // target_degree - deg d
};

/// t^k -> x^k y^{target - k}; the rational content is moved into `unit`.
inline Homogenized homogenize(const RationalPoly& d, unsigned target_degree) {
  if (d.is_zero()) throw DomainError("homogenize of the zero polynomial");
  if (d.degree() > static_cast<int>(target_degree))
    throw DomainError("homogenize: target degree " + std::to_string(target_degree) + " below polynomial degree " +
                      std::to_string(d.degree()));
  Integer den = 1;
  for (const auto& c : d.coeffs()) den = boost::multiprecision::lcm(den, denominator(c));
  std::vector<FormTerm> terms;
  for (int k = 0; k <= d.degree(); ++k) {
    const Rational c = d.coeff(k) * den;
    if (c != 0) terms.push_back({static_cast<unsigned>(k), target_degree - static_cast<unsigned>(k), numerator(c)});
  }
  return {BinaryForm(std::move(terms), target_degree), Rational(1, den),
          target_degree - static_cast<unsigned>(d.degree())};
}

/// F(x, y^m) carrying weights (m, 1).
inline BinaryForm weighted_substitute(const BinaryForm& f, unsigned m) {
  if (f.wx() != 1 || f.wy() != 1) throw DomainError("weighted_substitute expects an unweighted form");
  std::vector<FormTerm> terms;
  for (const auto& t : f.terms()) terms.push_back({t.x_exp, t.y_exp * m, t.coeff});
  return BinaryForm(std::move(terms), f.degree() * m, m, 1);
}

/// F(a, b^m).
inline Integer eval_form(const BinaryForm& f, const Integer& a, const Integer& b, unsigned m) {
  if (m == 0) throw DomainError("eval_form: m must be positive");
  return f(a, pow(b, m));
}

/// Factors a form with y-weight 1: F = unit * y^{e0} * prod F_i(x, y)^{e_i}, where
/// F_i is stored dehomogenized (its homogenization uses x-weight wx).
inline FormFactorization factor_form(const BinaryForm& f, unsigned degree_cap = kDefaultDegreeCap) {
  if (f.is_zero()) throw DomainError("factor_form of the zero form");
  if (f.wy() != 1) throw DomainError("factor_form supports y-weight 1 only");
  const RationalPoly d = f.dehomogenize();
  FormFactorization fac = factor_rational(d, degree_cap);
  fac.y_exponent = f.degree() - f.wx() * static_cast<unsigned>(d.degree());
  return fac;
}

/// Integer form for a dehomogenized factor, homogenized to weighted degree wx * deg.
inline BinaryForm homogenize_factor(const IntegerPoly& p, unsigned wx = 1) {
  std::vector<FormTerm> terms;
  const unsigned deg = static_cast<unsigned>(p.size() - 1);
  for (unsigned k = 0; k <= deg; ++k)
    if (p[k] != 0) terms.push_back({k, wx * (deg - k), p[k]});
  return BinaryForm(std::move(terms), wx * deg, wx, 1);
}

inline std::string to_string(const BinaryForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    const bool neg = t.coeff < 0;
    const Integer a = abs(t.coeff);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    if (t.x_exp > 0) mono += t.x_exp == 1 ? "x" : "x^" + std::to_string(t.x_exp);
    if (t.y_exp > 0) mono += (mono.empty() ? "" : "*") + (t.y_exp == 1 ? std::string("y") : "y^" + std::to_string(t.y_exp));
    if (a != 1 || mono.empty()) out += a.str() + (mono.empty() ? "" : "*");
    out += mono;
  }
  return out;
}

}  // namespace szpiro
