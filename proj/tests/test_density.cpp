#include "szpiro/density.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace szpiro {
namespace {

MultiPoly M(const char* s) { return parse_multipoly(s); }

TEST(MultiPoly, ParseEvaluatePrint) {
  const MultiPoly F = M("4x^3+27y^2");
  EXPECT_EQ(F.vars(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(F.degree(), 3);
  EXPECT_FALSE(F.is_homogeneous());
  const std::vector<Integer> pt{Integer(1), Integer(1)};
  EXPECT_EQ(F(pt), 31);
  EXPECT_EQ(to_string(F), "4*x^3 + 27*y^2");
  EXPECT_EQ(parse_multipoly(to_string(F)), F);

  const MultiPoly G = M("(x1 - 2x2)^2 x3");
  EXPECT_EQ(G.nvars(), 3u);
  EXPECT_TRUE(G.is_homogeneous());
  EXPECT_EQ(G.degree_in(0), 2);
  const std::vector<Integer> q{Integer(5), Integer(1), Integer(-2)};
  EXPECT_EQ(G(q), -18);
  EXPECT_EQ(G.derivative(2), parse_multipoly("(x1-2x2)^2", {"x1", "x2", "x3"}));

  EXPECT_THROW(M("x^"), DomainError);
  EXPECT_THROW(M("2x)"), DomainError);
  EXPECT_EQ(parse_multipoly("x", {"x", "y"}).nvars(), 2u);
}

TEST(MultiPoly, FormConversions) {
  const BinaryForm f = to_binary_form(M("x^3-2y^3"));
  EXPECT_EQ(f.degree(), 3u);
  EXPECT_EQ(f(Integer(2), Integer(1)), 6);
  EXPECT_THROW(to_binary_form(M("x^2+y")), DomainError);
  EXPECT_EQ(to_univariate(M("x^2+1")), (IntegerPoly{Integer(1), Integer(0), Integer(1)}));
  const std::vector<Integer> u{Integer(0), Integer(3)}, v{Integer(1), Integer(0)};
  EXPECT_EQ(restrict_to_line(M("4x^3+27y^2"), u, v), parse_poly("4t^3+243"));
}

TEST(Rho, Examples) {
  for (int p : {2, 3, 5, 7, 11, 101}) EXPECT_EQ(rho(M("x"), p), Rational(1, p));
  EXPECT_EQ(rho(M("x^2+y^2"), 3), Rational(1, 9));
  EXPECT_EQ(rho(M("x"), 12), rho(M("x"), 4) * rho(M("x"), 3));
  EXPECT_EQ(rho(M("x^2+y^2"), 5), Rational(9, 25));
  EXPECT_EQ(rho(M("x^2"), 8), Rational(2, 8));
  EXPECT_EQ(rho(M("x"), 1), 1);
  EXPECT_THROW(rho(M("x*y*z"), 1000, 1000), BudgetExceeded);
  EXPECT_THROW(rho(M("x"), 0), DomainError);
}

TEST(Rho, CrtMatchesNaive) {
  std::mt19937_64 rng(17);
  const std::vector<const char*> monomials{"x^2", "x*y", "y^2", "x^3", "y^3", "x", "y", "x^2*y", "1"};
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly F({"x", "y"});
    for (const char* m : monomials) {
      const long c = static_cast<long>(rng() % 11) - 5;
      if (c != 0) F = F + MultiPoly::constant({"x", "y"}, c) * parse_multipoly(m, {"x", "y"});
    }
    if (F.is_zero()) continue;
    const Integer q = 1 + static_cast<long>(rng() % 200);
    EXPECT_EQ(rho(F, q), rho_naive(F, q)) << to_string(F) << " mod " << q;
  }
}

TEST(Rho, SolutionCounts) {
  EXPECT_EQ(count_solutions(M("x^2+y^2"), 5), 9u);
  EXPECT_EQ(count_solutions(M("x^2-2"), 7), 2u);
  EXPECT_EQ(count_solutions(M("x^2-2"), 5), 0u);
}

TEST(RhoPrimeSum, Forms) {
  const RhoSumResult r1 = rho_prime_sum(M("x^3-2y^3"), 100000);
  ASSERT_TRUE(r1.r.has_value());
  EXPECT_EQ(r1.r->r, 1u);
  EXPECT_EQ(r1.method, "form");
  EXPECT_NEAR(r1.slope, 1.0, 0.3);
  const RhoSumResult r2 = rho_prime_sum(M("x*(x+y)"), 100000);
  EXPECT_EQ(r2.r->r, 2u);
  EXPECT_NEAR(r2.slope, 2.0, 0.3);
  EXPECT_GE(r2.residual_max, r2.residual_min);
}

TEST(RhoPrimeSum, AgreesWithEnumerationAtSmallX) {
  const MultiPoly F = M("x^2*y+3y^3-x^3");
  const RhoSumResult fast = rho_prime_sum(F, 300, 30, 4);
  ASSERT_GE(fast.points.size(), 4u);
  for (const auto& pt : fast.points) {
    double sum = 0;
    for (auto p : detail::primes_upto(pt.X)) sum += rho_naive(F, p).convert_to<double>();
    EXPECT_NEAR(pt.sum, sum, 1e-9) << pt.X;
  }
}

TEST(RhoPrimeSum, ConstantAndUnivariate) {
  const RhoSumResult c = rho_prime_sum(M("7"), 10000);
  for (const auto& pt : c.points) EXPECT_EQ(pt.sum, 1.0);
  const RhoSumResult u = rho_prime_sum(M("x^2+1"), 100000);
  EXPECT_EQ(u.r->r, 1u);
  EXPECT_NEAR(u.slope, 1.0, 0.3);
  EXPECT_THROW(rho_prime_sum(M("x"), 100'000'000), BudgetExceeded);
}

TEST(FactorCount, Methods) {
  EXPECT_EQ(irreducible_factor_count(M("x*(x+y)*(x^2+y^2)"))->r, 3u);
  EXPECT_EQ(irreducible_factor_count(M("x^2*y"))->r, 2u);
  EXPECT_EQ(irreducible_factor_count(M("x^4-1"))->r, 3u);
  const auto s = irreducible_factor_count(M("4x^3+27y^2"));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->r, 1u);
  EXPECT_EQ(s->method, "specialization");
  EXPECT_EQ(irreducible_factor_count(M("(x^3+y^2)*(x^3+y^2+1)"))->r, 2u);
}

TEST(Exceptional, Examples) {
  EXPECT_EQ(exceptional_count(M("x"), Box({50}), 1).count, 100u);
  const CensusResult r = exceptional_count(M("x"), Box({100}), 2);
  EXPECT_EQ(r.count, 34u);
  EXPECT_EQ(r.excluded_zeros, 1u);
  EXPECT_EQ(r.points, 201u);
  EXPECT_THROW(exceptional_count(M("x*y"), Box::square(2, 1000), 2, {1, 1000}), BudgetExceeded);
  EXPECT_THROW(exceptional_count(M("x*y"), Box({10}), 2), DomainError);
}

TEST(Exceptional, BetaAtMostOneCountsAllNonzero) {
  const MultiPoly F = M("x^2-3y^2+x*y");
  const Box box = Box::square(2, 30);
  const CensusResult r = exceptional_count(F, box, Rational(9, 10));
  EXPECT_EQ(r.count + r.excluded_zeros, *box.points());
}

TEST(Exceptional, DensityDecaysAndCountsGrow) {
  const MultiPoly F = M("4x^3+27y^2");
  std::uint64_t last_count = 0;
  double last_density = 2;
  for (std::int64_t B : {30, 60, 120}) {
    const CensusResult r = exceptional_count(F, Box::square(2, B), Rational(13, 10));
    EXPECT_GE(r.count, last_count);
    EXPECT_LT(r.density(), last_density);
    last_count = r.count;
    last_density = r.density();
  }
}

TEST(Exceptional, WorkerCountDoesNotMatter) {
  const MultiPoly F = M("x^3-y^2+5");
  CensusOptions one, three;
  three.workers = 3;
  EXPECT_EQ(exceptional_count(F, Box::square(2, 60), Rational(3, 2), one).count,
            exceptional_count(F, Box::square(2, 60), Rational(3, 2), three).count);
}

TEST(RadicalGcd, Examples) {
  const MultiPoly x = parse_multipoly("x", {"x", "y"});
  const MultiPoly y = parse_multipoly("y", {"x", "y"});
  EXPECT_EQ(radical_gcd_census(x, y, Box::square(2, 20), 2).count, 656u);
  EXPECT_EQ(radical_gcd_census(M("x"), M("x+1"), Box({100}), 2).count, 0u);
  std::uint64_t last = ~std::uint64_t{0};
  for (int X : {2, 3, 6, 10, 30}) {
    const auto c = radical_gcd_census(x, y, Box::square(2, 20), X).count;
    EXPECT_LE(c, last);
    last = c;
  }
  EXPECT_LE(radical_gcd_census(x, y, Box::square(2, 10), 2).count, radical_gcd_census(x, y, Box::square(2, 20), 2).count);
}

TEST(SmallValue, Examples) {
  const BinaryForm xy = to_binary_form(M("x*y"));
  const CensusResult r = small_value_census(xy, 100, 1, Rational(1, 2));
  EXPECT_EQ(r.count, 32664u);
  EXPECT_EQ(r.excluded_zeros, 401u);
  EXPECT_EQ(small_value_census(xy, 100, 1, 0).count, 40000u);
  std::uint64_t last = ~std::uint64_t{0};
  for (const Rational eps : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1), Rational(3, 2)}) {
    const auto c = small_value_census(xy, 100, 1, eps).count;
    EXPECT_LE(c, last);
    last = c;
  }
}

TEST(Hypothesis, Examples) {
  const HypothesisReport h = hypothesis_check(M("4x^3+27y^2"), Box::square(2, 100), 0);
  EXPECT_TRUE(h.a1.pass) << h.a1.detail;
  EXPECT_TRUE(h.a2.pass) << h.a2.detail;
  EXPECT_TRUE(h.a3.pass) << h.a3.detail;
  EXPECT_TRUE(h.box.pass) << h.box.detail;
  EXPECT_EQ(h.d, 3u);

  const HypothesisReport sq = hypothesis_check(M("x^2"), Box({10}), 0);
  EXPECT_FALSE(sq.a1.pass);
  EXPECT_FALSE(sq.a1.detail.empty());

  const HypothesisReport lin = hypothesis_check(M("x+y"), Box::square(2, 10), 0);
  EXPECT_TRUE(lin.a1.pass);
  EXPECT_TRUE(lin.a2.pass);
  EXPECT_TRUE(lin.a3.pass);

  const HypothesisReport a2 = hypothesis_check(M("x*y^2+y^3+x"), Box::square(2, 10), 0);
  EXPECT_FALSE(a2.a2.pass);

  const HypothesisReport lopsided = hypothesis_check(M("x^3+y^3"), Box({10, 1000}), 0);
  EXPECT_FALSE(lopsided.box.pass);
  EXPECT_GT(lopsided.box_ratio, 1.0);
}

TEST(Box, Validation) {
  EXPECT_THROW(Box({}), DomainError);
  EXPECT_THROW(Box({3, 0}), DomainError);
  EXPECT_EQ(*Box({1, 2}).points(), 15u);
  EXPECT_FALSE(Box::square(4, 1'000'000'000).points().has_value());
}

}  // namespace
}  // namespace szpiro
