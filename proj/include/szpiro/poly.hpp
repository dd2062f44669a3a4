#pragma once

// Exact univariate polynomials over Q and Z.

#include "szpiro/numeric.hpp"

#include <cctype>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace szpiro {

/// Dense polynomial with rational coefficients; coeffs()[k] multiplies t^k.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  RationalPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit RationalPoly(const Rational& constant) : c_{constant} { trim(); }

  static RationalPoly monomial(const Rational& coeff, unsigned k) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = coeff;
    return RationalPoly(std::move(c));
  }
  static RationalPoly x() { return monomial(1, 1); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
  }

  RationalPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = c_;
    const Rational lc = c.back();
    for (auto& x : c) x /= lc;
    return RationalPoly(std::move(c));
  }

  RationalPoly derivative() const {
    std::vector<Rational> c;
    for (std::size_t k = 1; k < c_.size(); ++k) c.push_back(c_[k] * static_cast<long>(k));
    return RationalPoly(std::move(c));
  }

  RationalPoly operator-() const {
    std::vector<Rational> c = c_;
    for (auto& x : c) x = -x;
    return RationalPoly(std::move(c));
  }

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator*(const Rational& s, const RationalPoly& a) { return RationalPoly(s) * a; }

  RationalPoly& operator+=(const RationalPoly& o) { return *this = *this + o; }
  RationalPoly& operator-=(const RationalPoly& o) { return *this = *this - o; }
  RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline RationalPoly pow(const RationalPoly& p, unsigned k) {
  RationalPoly result(Rational(1));
  RationalPoly b = p;
  while (k != 0) {
    if (k & 1u) result *= b;
    k >>= 1;
    if (k != 0) b *= b;
  }
  return result;
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lc = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational coef = r[k] / lc;
    q[k - db] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= coef * b.coeffs()[j];
  }
  return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

inline RationalPoly operator/(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).first; }
inline RationalPoly operator%(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0,0) = 0.
inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Substitution p(q(t)).
inline RationalPoly compose(const RationalPoly& p, const RationalPoly& q) {
  RationalPoly v;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) v = v * q + RationalPoly(*it);
  return v;
}

/// Squarefree decomposition: p = unit * prod q_i^{m_i} with q_i monic squarefree and coprime.
struct SquarefreePart {
  RationalPoly poly;
  unsigned multiplicity;
};

inline std::vector<SquarefreePart> yun_squarefree(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreePart> out;
  if (p.degree() == 0) return out;
  const RationalPoly f = p.monic();
  const RationalPoly df = f.derivative();
  RationalPoly a = gcd(f, df);
  RationalPoly b = f / a;
  RationalPoly c = df / a;
  RationalPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    RationalPoly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// 4 f^3 + 27 g^2 for coprime f, g.
inline RationalPoly discriminant_poly(const RationalPoly& f, const RationalPoly& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("discriminant_poly: f and g are both zero");
  if (gcd(f, g).degree() > 0) throw DomainError("discriminant_poly: f and g share a nonconstant factor");
  return RationalPoly(Rational(4)) * f * f * f + RationalPoly(Rational(27)) * g * g;
}

inline std::string to_string(const RationalPoly& p, char var = 't') {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(k);
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = a == 1;
    if (!unit || k == 0) out += to_string(a);
    if (k >= 1) {
      if (!unit) out += "*";
      out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace detail {

// Recursive-descent parser for expressions in one variable:
// sums, products, juxtaposition, '^' with nonnegative integer exponents, parentheses.
class PolyParser {
 public:
  PolyParser(std::string_view text, char var) : s_(text), var_(var) {}

  RationalPoly parse() {
    RationalPoly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("polynomial parse error at offset " + std::to_string(i_) + ": " + why + " in '" +
                      std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  RationalPoly expr() {
    RationalPoly acc;
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (peek('+') || peek('-')) {
        neg = s_[i_] == '-';
        ++i_;
      } else if (!first) {
        return acc;
      }
      RationalPoly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
  }

  RationalPoly term() {
    RationalPoly acc = power();
    for (;;) {
      skip();
      if (peek('*')) {
        ++i_;
        acc *= power();
      } else if (peek('/')) {
        ++i_;
        RationalPoly d = power();
        if (d.degree() != 0) fail("division by a non-constant");
        acc = RationalPoly(Rational(1) / d.coeff(0)) * acc;
      } else if (i_ < s_.size() && (s_[i_] == '(' || s_[i_] == var_ || std::isdigit(static_cast<unsigned char>(s_[i_])))) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RationalPoly power() {
    RationalPoly base = atom();
    if (peek('^')) {
      ++i_;
      skip();
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      base = szpiro::pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start)))));
    }
    return base;
  }

  RationalPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      RationalPoly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return p;
    }
    if (c == var_) {
      ++i_;
      return RationalPoly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return RationalPoly(Rational(Integer(std::string(s_.substr(start, i_ - start)))));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  char var_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses text such as "(t^2+1)(t^4+18t^3+74t^2-18t+1)" or "-1/3*(t^2-t+1)".
inline RationalPoly parse_poly(std::string_view text, char var = 't') {
  return detail::PolyParser(text, var).parse();
}

/// Coefficients as "num/den" strings, lowest degree first.
inline std::vector<std::string> to_coefficient_strings(const RationalPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(numerator(c).str() + "/" + denominator(c).str());
  return out;
}

inline RationalPoly from_coefficient_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return RationalPoly(std::move(c));
}

/// Dense integer polynomial, used by the modular factorization machinery.
using IntegerPoly = std::vector<Integer>;

inline void trim(IntegerPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Integer content(const IntegerPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

/// Writes p = unit * q with q primitive in Z[t] and positive leading coefficient.
inline std::pair<Rational, IntegerPoly> primitive_part(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("primitive part of the zero polynomial");
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = boost::multiprecision::lcm(den, denominator(c));
  IntegerPoly q;
  for (const auto& c : p.coeffs()) q.push_back(numerator(c) * (den / denominator(c)));
  Integer g = content(q);
  if (q.back() < 0) g = -g;
  for (auto& c : q) c /= g;
  return {Rational(g, den), q};
}

inline RationalPoly to_rational_poly(const IntegerPoly& p) {
  std::vector<Rational> c(p.begin(), p.end());
  return RationalPoly(std::move(c));
}

inline IntegerPoly mul(const IntegerPoly& a, const IntegerPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntegerPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace szpiro
