#pragma once

// Exact number types shared by every module, plus the error hierarchy.

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace szpiro {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Precondition violated by the caller (zero where nonzero required, bad label, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation refused to start or stopped because it would exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& n) { return n.str(); }

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  return q.str();
}

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Integer abs(const Integer& n) { return n < 0 ? Integer(-n) : n; }

inline int sign(const Integer& n) { return n.sign(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer pow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

/// Floor of the k-th root of a nonnegative integer.
inline Integer iroot(const Integer& n, unsigned k) {
  if (n < 0) throw DomainError("iroot of a negative integer");
  Integer r;
  mpz_root(r.backend().data(), n.backend().data(), k);
  return r;
}

inline bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.backend().data()) != 0;
}

inline bool fits_u64(const Integer& n) {
  return n >= 0 && mpz_sizeinbase(n.backend().data(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& n) {
  return n.convert_to<std::uint64_t>();
}

/// Natural logarithm of |n| for n != 0, accurate to double precision for any size.
inline double log_abs(const Integer& n) {
  if (n == 0) throw DomainError("log of zero");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, n.backend().data());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

/// Parses a decimal integer, also accepting "1e12" style exact powers of ten.
inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  const auto e = s.find_first_of("eE");
  try {
    if (e == std::string::npos) return Integer(s);
    const Integer mantissa(s.substr(0, e));
    const long exponent = std::stol(s.substr(e + 1));
    if (exponent < 0) throw DomainError("negative exponent in integer literal: " + s);
    return mantissa * pow(Integer(10), static_cast<unsigned>(exponent));
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("not an integer: " + s);
  }
}

/// Parses "p/q", an integer, or a terminating decimal such as "1.3" exactly.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator: " + s);
    return Rational(parse_integer(s.substr(0, slash)), den);
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(parse_integer(s));
  const bool negative = s[0] == '-';
  std::string whole = s.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
  std::string frac = s.substr(dot + 1);
  if (whole.empty()) whole = "0";
  for (char c : whole + frac)
    if (c < '0' || c > '9') throw DomainError("not a decimal: " + s);
  Rational value(Integer(whole + frac), pow(Integer(10), static_cast<unsigned>(frac.size())));
  return negative ? Rational(-value) : value;
}

}  // namespace szpiro
