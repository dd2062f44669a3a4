#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "szpiro");
  std::ostringstream out, err;
  const int code = szpiro::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& r) { return nlohmann::json::parse(r.out); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, Beta) {
  const Outcome r = run({"beta", "--group", "C4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"lambda\":\"12/5\",\"kappa\":\"12/5\",\"reference\":\"12/5\",\"match\":true}\n");
  const Outcome all = run({"beta", "--all"});
  EXPECT_EQ(all.code, 0);
  EXPECT_NE(all.out.find("C2xC8"), std::string::npos);
}

TEST(Cli, Curve) {
  const Outcome r = run({"curve", "--A", "-1", "--B", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["conductor"], "32");
  EXPECT_EQ(j["disc_min"], "64");
  EXPECT_DOUBLE_EQ(j["sigma"].get<double>(), 1.2);
  EXPECT_EQ(j["local"][0]["kodaira"], "III");
}

TEST(Cli, Tate) {
  const Outcome r = run({"tate", "--A", "0", "--B", "1", "--p", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["f_p"], 2);
  EXPECT_EQ(j["v_p_disc_min"], 3);
  EXPECT_EQ(run({"tate", "--A", "0", "--B", "1", "--p", "9"}).code, 1);
}

TEST(Cli, FamilyIsDeterministic) {
  const std::vector<std::string> args{"family", "--group", "C2", "--hmax", "1e6", "--count", "200", "--seed", "7"};
  const Outcome a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("G,a,b,c,A,B,H,disc_min,conductor,sigma,flags\r\n", 0), 0u);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 201);
}

TEST(Cli, ReplayReproducesOutput) {
  const auto dir = std::filesystem::temp_directory_path() / "szpiro_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv1 = dir / "a.csv", csv2 = dir / "b.csv", cfg = dir / "cfg.json", sum = dir / "sum.json";
  const Outcome a = run({"family", "--group", "C3", "--hmax", "1e8", "--count", "40", "--seed", "3", "--out", csv1.string(),
                     "--config", cfg.string(), "--summary", sum.string()});
  ASSERT_EQ(a.code, 0) << a.err;
  const Outcome b = run({"replay", cfg.string(), "--out", csv2.string()});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_FALSE(slurp(csv1).empty());
  EXPECT_EQ(slurp(csv1), slurp(csv2));
  const auto s = nlohmann::json::parse(slurp(sum));
  EXPECT_TRUE(s.contains("median"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, Count) {
  const Outcome r = run({"count", "--group", "C2", "--hmin", "1e4", "--hmax", "1e6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["expected"], "1/2");
  ASSERT_EQ(j["points"].size(), 3u);
  EXPECT_EQ(j["points"][0]["count"], 99);
}

TEST(Cli, Density) {
  Outcome r = run({"density", "--poly", "x", "--box", "100", "--beta", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["count"], 34);
  r = run({"density", "--op", "radical-gcd", "--poly", "x", "--poly2", "y", "--box", "20", "--X", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["count"], 656);
  r = run({"density", "--poly", "x*y", "--box", "1000", "--beta", "2", "--budget", "1000"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Rho) {
  Outcome r = run({"rho", "--poly", "x^2+y^2", "--q", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["rho"], "9/25");
  r = run({"rho", "--poly", "x^3-2y^3", "--X", "1e4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["r"], 1);
  EXPECT_EQ(run({"rho", "--poly", "x", "--X", "1e8"}).code, 2);
}

TEST(Cli, Check) {
  const Outcome r = run({"check", "--poly", "4x^3+27y^2", "--box", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_TRUE(j["A1"]["pass"].get<bool>());
  EXPECT_EQ(j["d"], 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"beta", "--group", "C13"}).code, 1);
  EXPECT_EQ(run({"curve", "--A", "0", "--B", "0"}).code, 1);
  EXPECT_EQ(run({"curve", "--A", "x", "--B", "0"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"family", "--help"}).code, 0);
}

}  // namespace
