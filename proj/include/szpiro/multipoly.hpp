#pragma once

// Integer polynomials in k variables: parsing, evaluation (exact and modular),
// restriction to lines, and conversion to binary forms.

#include "szpiro/binary_form.hpp"

#include <cctype>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace szpiro {

class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Integer& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
  }

  static MultiPoly variable(std::vector<std::string> vars, std::size_t j) {
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e.at(j) = 1;
    p.terms_[e] = 1;
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Integer& c) {
    if (e.size() != vars_.size()) throw DomainError("monomial arity does not match the variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (unsigned x : e) s += static_cast<int>(x);
      d = std::max(d, s);
    }
    return d;
  }

  int degree_in(std::size_t j) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.at(j)));
    return d;
  }

  bool is_homogeneous() const {
    const int d = degree();
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (unsigned x : e) s += static_cast<int>(x);
      if (s != d) return false;
    }
    return true;
  }

  Integer coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Integer operator()(std::span<const Integer> x) const {
    if (x.size() != vars_.size()) throw DomainError("evaluation point has the wrong arity");
    Integer v = 0;
    for (const auto& [e, c] : terms_) {
      Integer t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) t *= pow(x[i], e[i]);
      v += t;
    }
    return v;
  }

  MultiPoly derivative(std::size_t j) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(j) == 0) continue;
      Exponents f = e;
      --f[j];
      out.add_term(f, c * e[j]);
    }
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out(a.vars_);
    for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Integer> terms_;
};

inline MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly r = MultiPoly::constant(p.vars(), 1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Coefficients of p reduced into [0, q) for modular evaluation.
class ModularPoly {
 public:
  ModularPoly(const MultiPoly& p, std::uint64_t q) : q_(q) {
    if (q == 0 || q >= (std::uint64_t{1} << 32)) throw DomainError("modulus must lie in [1, 2^32)");
    for (const auto& [e, c] : p.terms()) {
      Integer r = c % q;
      if (r < 0) r += q;
      if (r != 0) terms_.push_back({e, r.convert_to<std::uint64_t>()});
    }
  }

  std::uint64_t operator()(std::span<const std::uint64_t> x) const {
    std::uint64_t v = 0;
    for (const auto& [e, c] : terms_) {
      std::uint64_t t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t = t * x[i] % q_;
      v = (v + t) % q_;
    }
    return v;
  }

  bool is_zero() const { return terms_.empty(); }

 private:
  std::uint64_t q_;
  std::vector<std::pair<MultiPoly::Exponents, std::uint64_t>> terms_;
};

/// p(u + v t) as a univariate polynomial in t.
inline RationalPoly restrict_to_line(const MultiPoly& p, std::span<const Integer> u, std::span<const Integer> v) {
  if (u.size() != p.nvars() || v.size() != p.nvars()) throw DomainError("line has the wrong arity");
  std::vector<RationalPoly> coords;
  for (std::size_t i = 0; i < u.size(); ++i) coords.push_back(RationalPoly({Rational(u[i]), Rational(v[i])}));
  RationalPoly out;
  for (const auto& [e, c] : p.terms()) {
    RationalPoly t{Rational(c)};
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t = t * pow(coords[i], e[i]);
    out = out + t;
  }
  return out;
}

/// Two-variable homogeneous polynomial as a binary form in (x, y) = (vars[0], vars[1]).
inline BinaryForm to_binary_form(const MultiPoly& p) {
  if (p.nvars() != 2) throw DomainError("binary form needs exactly two variables");
  if (p.is_zero()) throw DomainError("binary form of the zero polynomial");
  if (!p.is_homogeneous()) throw DomainError("polynomial is not homogeneous");
  std::vector<FormTerm> terms;
  for (const auto& [e, c] : p.terms()) terms.push_back({e[0], e[1], c});
  return BinaryForm(std::move(terms), static_cast<unsigned>(p.degree()));
}

/// Coefficient vector of a one-variable polynomial, lowest degree first.
inline IntegerPoly to_univariate(const MultiPoly& p) {
  if (p.nvars() != 1) throw DomainError("univariate conversion needs exactly one variable");
  IntegerPoly out(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, Integer(0));
  for (const auto& [e, c] : p.terms()) out[e[0]] = c;
  trim(out);
  return out;
}

namespace detail {

class MultiParser {
 public:
  MultiParser(std::string_view text, std::vector<std::string> vars) : s_(text), vars_(std::move(vars)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
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
  bool starts_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(s_[i_]);
    return c == '(' || std::isalnum(c) || c == '_';
  }

  MultiPoly expr() {
    MultiPoly acc = MultiPoly::constant(vars_, 0);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (peek('+') || peek('-')) {
        neg = s_[i_] == '-';
        ++i_;
      } else if (!first) {
        return acc;
      }
      MultiPoly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      if (peek('*')) {
        ++i_;
        acc = acc * power();
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek('^')) {
      ++i_;
      skip();
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      MultiPoly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return MultiPoly::constant(vars_, Integer(std::string(s_.substr(start, i_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      ++i_;
      // Letters followed by digits form one name (x1, x2); a bare letter run splits into single letters.
      if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      }
      const std::string name(s_.substr(start, i_ - start));
      for (std::size_t j = 0; j < vars_.size(); ++j)
        if (vars_[j] == name) return MultiPoly::variable(vars_, j);
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::vector<std::string> vars_;
  std::size_t i_ = 0;
};

inline std::vector<std::string> scan_variables(std::string_view text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = i++;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(std::move(name));
    } else if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace detail

/// Parses "4x^3 + 27y^2", "x*(x+y)", "x1^2 - 3 x2". Without explicit variables the
/// names found are used in sorted order (x before y).
inline MultiPoly parse_multipoly(std::string_view text, std::vector<std::string> vars = {}) {
  if (vars.empty()) vars = detail::scan_variables(text);
  if (vars.empty()) vars = {"x"};
  return detail::MultiParser(text, std::move(vars)).parse();
}

inline std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    Integer a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1 || constant) out += a.str();
    bool first = a == 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first) out += "*";
      out += p.vars()[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      first = false;
    }
  }
  return out;
}

}  // namespace szpiro
