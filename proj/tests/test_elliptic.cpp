#include "szpiro/families.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace szpiro {
namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& name) {
  std::ifstream in(std::string(SZPIRO_TEST_DATA) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

TEST(Curve, MinimalShort) {
  MinimalShort m = minimal_short({0, 64});
  EXPECT_EQ(m.curve, (Curve{0, 1}));
  EXPECT_EQ(m.u, 2);
  m = minimal_short({16, 64});
  EXPECT_EQ(m.curve, (Curve{1, 1}));
  EXPECT_EQ(m.u, 2);
  m = minimal_short({1, 1});
  EXPECT_EQ(m.curve, (Curve{1, 1}));
  EXPECT_EQ(m.u, 1);
  m = minimal_short({-81 * 16, 0});
  EXPECT_EQ(m.curve, (Curve{-1, 0}));
  EXPECT_EQ(m.u, 6);
  EXPECT_THROW(minimal_short({-3, 2}), DomainError);
}

TEST(Curve, HeightAndDiscriminant) {
  EXPECT_EQ(naive_height({0, 1}), 27);
  EXPECT_EQ(naive_height({-1, 0}), 4);
  EXPECT_EQ(naive_height({2, 3}), 243);
  EXPECT_EQ(discriminant({0, 1}), -432);
  EXPECT_EQ(discriminant({-1, 0}), 64);
}

TEST(Curve, C2DiscriminantIdentity) {
  for (long a = -5; a <= 4; ++a)
    for (long b = -5; b <= 4; ++b) {
      const Integer A = a, B = Integer(b) * b * b + Integer(a) * b;
      EXPECT_EQ(discriminant({A, B}), -16 * pow(A + 3 * Integer(b) * b, 2) * (4 * A + 3 * Integer(b) * b));
    }
}

TEST(Tate, Examples) {
  LocalData l = tate_local({0, 1}, 5);
  EXPECT_EQ(l.f_p, 0u);
  EXPECT_EQ(l.v_p_disc_min, 0u);
  l = tate_local({1, 1}, 31);
  EXPECT_EQ(l.f_p, 1u);
  EXPECT_EQ(l.v_p_disc_min, 1u);
  EXPECT_EQ(l.kodaira, "I1");
  l = tate_local({-1, 0}, 2);
  EXPECT_EQ(l.f_p, 5u);
  EXPECT_EQ(l.v_p_disc_min, 6u);
  l = tate_local({0, 1}, 3);
  EXPECT_EQ(l.f_p, 2u);
  EXPECT_EQ(l.v_p_disc_min, 3u);
  l = tate_local({0, 1}, 2);
  EXPECT_EQ(l.f_p, 2u);
  EXPECT_EQ(l.v_p_disc_min, 4u);
}

TEST(Tate, NonMinimalModelsReduce) {
  // The u = 5 scaling of y^2 = x^3 + x + 1 is not minimal at 5.
  const LocalData l = tate_local({Integer(625), Integer(15625)}, 5);
  EXPECT_EQ(l.f_p, 0u);
  EXPECT_EQ(l.v_p_disc_min, 0u);
}

TEST(Global, Examples) {
  GlobalInvariants g = global_invariants({-1, 0});
  EXPECT_EQ(g.disc_min.value(), 64);
  EXPECT_EQ(g.conductor, 32);
  EXPECT_NEAR(g.sigma, 1.2, 1e-12);
  g = global_invariants({0, 1});
  EXPECT_EQ(g.disc_min.value(), -432);
  EXPECT_EQ(g.conductor, 36);
  EXPECT_NEAR(g.sigma, std::log(432.0) / std::log(36.0), 1e-12);
  EXPECT_THROW(global_invariants({0, 0}), DomainError);
  EXPECT_THROW(global_invariants({-1, 0}, factor(Integer(65))), DomainError);
}

TEST(Global, MatchesPariOracle) {
  const auto rows = read_csv("tate_oracle.csv");
  ASSERT_GE(rows.size(), 1000u);
  for (const auto& r : rows) {
    ASSERT_EQ(r.size(), 8u);
    const Curve c{Integer(r[0]), Integer(r[1])};
    const GlobalInvariants g = global_invariants(c);
    EXPECT_EQ(g.conductor, Integer(r[2])) << r[0] << "," << r[1];
    EXPECT_EQ(g.disc_min.value(), Integer(r[3])) << r[0] << "," << r[1];
    const LocalData l2 = tate_local(c, 2);
    const LocalData l3 = tate_local(c, 3);
    EXPECT_EQ(l2.f_p, std::stoul(r[4]));
    EXPECT_EQ(l2.v_p_disc_min, std::stoul(r[5]));
    EXPECT_EQ(l3.f_p, std::stoul(r[6]));
    EXPECT_EQ(l3.v_p_disc_min, std::stoul(r[7]));
  }
}

TEST(Global, ConductorSandwich) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const Curve c{Integer(static_cast<long>(rng() % 200001) - 100000), Integer(static_cast<long>(rng() % 2000001) - 1000000)};
    if (4 * pow(c.A, 3) + 27 * c.B * c.B == 0) continue;
    const GlobalInvariants g = global_invariants(c);
    const Integer D = g.disc_min.abs_value();
    EXPECT_EQ(g.conductor % g.disc_min.radical(), 0);
    EXPECT_EQ(D % g.conductor, 0);
    for (const auto& l : g.local) {
      if (l.p == 2) EXPECT_LE(l.f_p, 8u);
      if (l.p == 3) EXPECT_LE(l.f_p, 5u);
      if (l.p >= 5) EXPECT_LE(l.f_p, 2u);
    }
  }
}

TEST(ClosedForm, AgreesWithTateAtLargePrimes) {
  std::mt19937_64 rng(1234);
  int checked = 0;
  while (checked < 500) {
    const Curve c{Integer(static_cast<long>(rng() % 20001) - 10000), Integer(static_cast<long>(rng() % 200001) - 100000)};
    if (4 * pow(c.A, 3) + 27 * c.B * c.B == 0) continue;
    const MinimalShort m = minimal_short(c);
    if (m.u != 1) continue;
    const FactoredInteger disc = factor(discriminant(c));
    for (const auto& [p, e] : disc.factors()) {
      if (p < 5) continue;
      const LocalData full = tate_local_full(c, p);
      const LocalData closed = closed_form_local(c, p);
      EXPECT_EQ(full.f_p, closed.f_p);
      EXPECT_EQ(full.v_p_disc_min, closed.v_p_disc_min);
    }
    ++checked;
  }
  EXPECT_THROW(closed_form_local({1, 1}, 3), DomainError);
}

TEST(Torsion, Examples) {
  const std::vector<std::uint64_t> primes{5, 7, 13};
  EXPECT_TRUE(torsion_multiple_check({-1, 0}, "C2xC2", primes).pass);
  EXPECT_TRUE(torsion_multiple_check({0, 1}, "C6", primes).pass);
  EXPECT_FALSE(torsion_multiple_check({1, 1}, "C5", primes).pass);
  EXPECT_THROW(count_points({1, 1}, 31), DomainError);
  EXPECT_THROW(count_points({1, 1}, 9), DomainError);
}

TEST(Torsion, PointCountsMatchPariOracle) {
  const auto rows = read_csv("point_counts.csv");
  ASSERT_GE(rows.size(), 100u);
  for (const auto& r : rows) {
    ASSERT_EQ(r.size(), 5u);
    const Curve c{Integer(r[1]), Integer(r[2])};
    const std::uint64_t p = std::stoull(r[3]);
    const std::uint64_t n = std::stoull(r[4]);
    EXPECT_EQ(count_points(c, p), n) << r[0] << " " << r[1] << "," << r[2] << " p=" << p;
    EXPECT_EQ(n % group_order(r[0]), 0u) << r[0];
  }
}

}  // namespace
}  // namespace szpiro
