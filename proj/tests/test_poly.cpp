#include "szpiro/binary_form.hpp"
#include "szpiro/modp.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace szpiro {
namespace {

RationalPoly P(std::string_view s) { return parse_poly(s); }

IntegerPoly ip(std::initializer_list<long> c) {
  IntegerPoly p;
  for (long x : c) p.emplace_back(x);
  return p;
}

std::vector<PolyFactor> sorted(std::vector<PolyFactor> v) {
  std::sort(v.begin(), v.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    return std::lexicographical_compare(a.poly.begin(), a.poly.end(), b.poly.begin(), b.poly.end());
  });
  return v;
}

// Integer cubic with no rational root (so irreducible over Q), by the rational root test.
bool cubic_irreducible(const IntegerPoly& f) {
  const Integer a0 = abs(f[0]), a3 = abs(f[3]);
  if (a0 == 0) return false;
  for (Integer p = 1; p <= a0; ++p) {
    if (a0 % p != 0) continue;
    for (Integer q = 1; q <= a3; ++q) {
      if (a3 % q != 0) continue;
      for (int s : {1, -1}) {
        const Integer x = s * p;
        if (f[3] * x * x * x + f[2] * x * x * q + f[1] * x * q * q + f[0] * q * q * q == 0) return false;
      }
    }
  }
  return true;
}

TEST(RationalPoly, ParseAndPrint) {
  EXPECT_EQ(P("t^2-1"), RationalPoly({-1, 0, 1}));
  EXPECT_EQ(P("-1/3*(t^2-t+1)"), RationalPoly({Rational(-1, 3), Rational(1, 3), Rational(-1, 3)}));
  EXPECT_EQ(P("(2t)^3"), RationalPoly({0, 0, 0, 8}));
  EXPECT_EQ(P("t(t-1)^2"), RationalPoly({0, 1, -2, 1}));
  const RationalPoly q = P("3/2t^5-7t+1/9");
  EXPECT_EQ(P(to_string(q)), q);
  EXPECT_THROW(P("t^"), DomainError);
  EXPECT_THROW(P("(t+1"), DomainError);
}

TEST(RationalPoly, Arithmetic) {
  const RationalPoly a = P("t^3-2t+1");
  const RationalPoly b = P("t-1");
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, P("t^2+t-1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(P("t^2-1"), P("2t^2+4t+2")), P("t+1"));
  EXPECT_EQ(compose(P("t^2"), P("t+1")), P("t^2+2t+1"));
  EXPECT_EQ(P("t^3").derivative(), P("3t^2"));
  EXPECT_EQ(P("t^2+1")(Rational(1, 2)), Rational(5, 4));
  EXPECT_THROW(divmod(a, RationalPoly()), DomainError);
}

TEST(Yun, Examples) {
  auto parts = yun_squarefree(P("t^2(t-1)"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].poly, P("t-1"));
  EXPECT_EQ(parts[0].multiplicity, 1u);
  EXPECT_EQ(parts[1].poly, P("t"));
  EXPECT_EQ(parts[1].multiplicity, 2u);

  parts = yun_squarefree(P("t^3"));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].poly, P("t"));
  EXPECT_EQ(parts[0].multiplicity, 3u);

  parts = yun_squarefree(P("t^4+t+1"));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].poly, P("t^4+t+1"));
  EXPECT_EQ(parts[0].multiplicity, 1u);

  EXPECT_THROW(yun_squarefree(RationalPoly()), DomainError);
}

TEST(Yun, ReconstructsRandomProducts) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    RationalPoly p(Rational(static_cast<long>(rng() % 7) + 1));
    for (int k = 0; k < 3; ++k) {
      RationalPoly lin({Rational(static_cast<long>(rng() % 21) - 10), Rational(1)});
      p *= pow(lin, static_cast<unsigned>(rng() % 3) + 1);
    }
    RationalPoly prod(p.leading());
    for (const auto& part : yun_squarefree(p)) prod *= pow(part.poly, part.multiplicity);
    EXPECT_EQ(prod, p);
  }
}

TEST(DiscriminantPoly, Examples) {
  EXPECT_EQ(discriminant_poly(P("-1/3*(t^2-t+1)"), P("1/27*(-2t^3+3t^2+3t-2)")), P("-t^2(t-1)^2"));
  EXPECT_EQ(discriminant_poly(RationalPoly(), P("1")), P("27"));
  EXPECT_EQ(discriminant_poly(P("-1/3*(-24t+1)"), P("2/27*(216t^2-36t+1)")), P("256*t^3(27t-1)"));
  EXPECT_THROW(discriminant_poly(P("t"), P("t^2")), DomainError);
}

TEST(FactorRational, Examples) {
  FormFactorization f = factor_rational(P("t^2-1"));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].poly, ip({-1, 1}));
  EXPECT_EQ(f.factors[1].poly, ip({1, 1}));
  EXPECT_EQ(f.unit, 1);

  f = factor_rational(P("-t^9(-t+1)^9(t^2-t+1)^3(t^3+3t^2-6t+1)"));
  const std::vector<PolyFactor> expected{
      {ip({0, 1}), 9}, {ip({-1, 1}), 9}, {ip({1, -1, 1}), 3}, {ip({1, -6, 3, 1}), 1}};
  EXPECT_EQ(sorted(f.factors), sorted(expected));
  EXPECT_EQ(f.expand(), P("-t^9(-t+1)^9(t^2-t+1)^3(t^3+3t^2-6t+1)"));
}

TEST(FactorRational, IrreducibleInputsStayWhole) {
  for (const char* s : {"t^2+1", "t^4+1", "t^3-2", "t^6+t^3+1", "t^8-16t^7+96t^6-288t^5+480t^4-448t^3+224t^2-64t+16"}) {
    const FormFactorization f = factor_rational(P(s));
    ASSERT_EQ(f.factors.size(), 1u) << s;
    EXPECT_EQ(f.factors[0].multiplicity, 1u);
  }
  // Swinnerton-Dyer style: irreducible over Q but reducible modulo every prime.
  EXPECT_EQ(factor_rational(P("t^4-10t^2+1")).factors.size(), 1u);
}

TEST(FactorRational, RecoversRandomCubicProducts) {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 40) {
    std::vector<IntegerPoly> cubics;
    while (cubics.size() < 2) {
      IntegerPoly c;
      for (int k = 0; k < 3; ++k) c.emplace_back(static_cast<long>(rng() % 41) - 20);
      c.emplace_back(static_cast<long>(rng() % 5) + 1);
      if (content(c) != 1 || !cubic_irreducible(c)) continue;
      if (!cubics.empty() && cubics[0] == c) continue;
      cubics.push_back(c);
    }
    const RationalPoly p = to_rational_poly(cubics[0]) * to_rational_poly(cubics[1]);
    const FormFactorization f = factor_rational(p);
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(sorted(f.factors), sorted({{cubics[0], 1}, {cubics[1], 1}}));
    EXPECT_EQ(f.unit, 1);
    ++done;
  }
}

TEST(FactorRational, DegreeCapRefuses) {
  EXPECT_THROW(factor_rational(P("t^10+1"), 8), BudgetExceeded);
  EXPECT_THROW(factor_rational(RationalPoly()), DomainError);
  EXPECT_EQ(factor_rational(P("7/2")).unit, Rational(7, 2));
}

TEST(Homogenize, Examples) {
  Homogenized h = homogenize(P("t"), 2);
  EXPECT_EQ(h.e0, 1u);
  EXPECT_EQ(h.form, BinaryForm({{1, 1, Integer(1)}}, 2));

  h = homogenize(P("256*t^4(16t-1)"), 6);
  EXPECT_EQ(h.e0, 1u);
  EXPECT_EQ(h.unit, 1);
  EXPECT_EQ(h.form, BinaryForm({{5, 1, Integer(4096)}, {4, 2, Integer(-256)}}, 6));

  h = homogenize(P("1/3*t^2+1/2"), 3);
  EXPECT_EQ(h.unit, Rational(1, 6));
  EXPECT_EQ(h.form, BinaryForm({{2, 1, Integer(2)}, {0, 3, Integer(3)}}, 3));

  EXPECT_THROW(homogenize(P("t^3"), 2), DomainError);
}

TEST(BinaryForm, Evaluation) {
  const BinaryForm xy({{1, 1, Integer(1)}}, 2);
  EXPECT_EQ(eval_form(xy, 3, 2, 2), 12);
  const BinaryForm f({{3, 0, Integer(4)}}, 3);
  EXPECT_THROW(BinaryForm({{3, 0, Integer(4)}, {0, 2, Integer(27)}}, 3), DomainError);
  const BinaryForm w({{3, 0, Integer(4)}, {0, 2, Integer(27)}}, 6, 2, 3);
  EXPECT_EQ(w(1, 1), 31);
  EXPECT_EQ(f(-2, 5), -32);
  EXPECT_THROW(eval_form(xy, 1, 1, 0), DomainError);
}

TEST(BinaryForm, WeightedSubstitution) {
  const BinaryForm f({{1, 1, Integer(3)}, {0, 2, Integer(-1)}}, 2);
  const BinaryForm g = weighted_substitute(f, 3);
  EXPECT_EQ(g.degree(), 6u);
  for (long a = -4; a <= 4; ++a)
    for (long b = 1; b <= 3; ++b) EXPECT_EQ(g(a, b), eval_form(f, a, b, 3));
}

TEST(BinaryForm, FactorForm) {
  const Homogenized h = homogenize(P("256*t^4(16t-1)"), 6);
  const FormFactorization f = factor_form(h.form);
  EXPECT_EQ(f.y_exponent, 1u);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].poly, ip({0, 1}));
  EXPECT_EQ(f.factors[0].multiplicity, 4u);
  EXPECT_EQ(f.factors[1].poly, ip({-1, 16}));
  Integer prod = f.unit.convert_to<Integer>() * 2;  // y^1 at y = 2
  for (const auto& F : f.factors) prod *= pow(homogenize_factor(F.poly)(3, 2), F.multiplicity);
  EXPECT_EQ(prod, h.form(3, 2));
}

TEST(ModP, BerlekampSplitsCompletely) {
  const std::uint64_t p = 101;
  const modp::Poly f = modp::reduce(std::vector<Integer>{Integer(-1), 0, 0, 0, 1}, p);  // x^4 - 1
  const auto parts = modp::berlekamp(f, p);
  EXPECT_EQ(parts.size(), 4u);
  EXPECT_EQ(modp::distinct_root_count(f, p), 4u);
  const modp::Poly g = modp::reduce(std::vector<Integer>{Integer(1), 0, 1}, 103);  // x^2 + 1, 103 = 3 mod 4
  EXPECT_EQ(modp::distinct_root_count(g, 103), 0u);
  EXPECT_EQ(modp::berlekamp(g, 103).size(), 1u);
}

TEST(ModP, RootCountMatchesEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{5, 7, 11, 13, 101, 257}[trial % 6];
    modp::Poly f;
    for (int k = 0; k < 5; ++k) f.push_back(rng() % p);
    f.push_back(1);
    unsigned brute = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * x + *it) % p;
      if (v == 0) ++brute;
    }
    EXPECT_EQ(modp::distinct_root_count(f, p), brute);
  }
}

}  // namespace
}  // namespace szpiro
