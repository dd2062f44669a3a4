#pragma once

// The szpiro command line: curve, tate, beta, family, count, density, rho, check, replay.

#include "szpiro/szpiro.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace szpiro::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kSigmaDigits = 15;

/// sigma rounded to kSigmaDigits significant digits.
inline double round_sigma(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kSigmaDigits, s);
  return std::stod(buf);
}

inline std::string sigma_text(double s) {
  if (std::isnan(s)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kSigmaDigits, s);
  return buf;
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline Json poly_json(const RationalPoly& p) { return Json(to_coefficient_strings(p)); }

/// Accepts a JSON array of "num/den" strings (lowest degree first) or an expression in t.
inline RationalPoly read_poly(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const std::exception& e) {
      throw DomainError(std::string("bad polynomial JSON: ") + e.what());
    }
    std::vector<std::string> coeffs;
    for (const auto& c : j) coeffs.push_back(c.is_string() ? c.get<std::string>() : c.dump());
    return from_coefficient_strings(coeffs);
  }
  return parse_poly(text);
}

inline Json local_json(const LocalData& l) {
  return Json{{"p", l.p.str()}, {"f_p", l.f_p}, {"v_p_disc_min", l.v_p_disc_min}, {"kodaira", l.kodaira}};
}

inline Json census_json(const CensusResult& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return Json{{"operation", r.operation},     {"parameters", params},
              {"count", r.count},             {"excluded_zeros", r.excluded_zeros},
              {"unknown", r.unknown},         {"points", r.points},
              {"density", r.density()},       {"wall_time", r.wall_time}};
}

inline std::vector<std::int64_t> parse_bounds(const std::string& text, std::size_t k) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Integer v = parse_integer(item);
    if (!fits_u64(v) || v > Integer(std::int64_t{1} << 40)) throw DomainError("box bound out of range: " + item);
    out.push_back(v.convert_to<std::int64_t>());
  }
  if (out.size() == 1 && k > 1) out.assign(k, out[0]);
  if (out.size() != k) throw DomainError("box needs " + std::to_string(k) + " bounds");
  return out;
}

inline std::size_t variable_index(const MultiPoly& F, const std::string& j) {
  for (std::size_t i = 0; i < F.nvars(); ++i)
    if (F.vars()[i] == j) return i;
  try {
    const std::size_t i = std::stoul(j);
    if (i < F.nvars()) return i;
  } catch (const std::exception&) {
  }
  throw DomainError("unknown variable: " + j);
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + path);
  f << text;
}

inline std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Options {
  // curve / tate
  std::string A, B, p;
  // beta
  std::string group;
  std::string f, g;
  unsigned nu = 1;
  bool all = false;
  // family / count
  std::string hmax, hmin = "1e6";
  std::size_t count = 500;
  std::uint64_t seed = 1;
  std::string strategy = "random";
  std::string epsilon = "0.5";
  unsigned workers = 0;
  std::string out_path, summary_path, hist_path, config_path;
  unsigned per_decade = 1;
  unsigned checkpoints = 4;
  bool csv = false;
  // density / rho / check
  std::string poly, poly2, box = "100", beta = "1.3", op = "exceptional", X, q, Y, var = "0";
  unsigned m = 1;
  std::uint64_t budget = kDefaultCensusBudget;
  std::string xmin = "1000";
  bool naive = false;
  // replay
  std::string replay_path;
};

inline Json config_block(const std::string& command, const std::vector<std::pair<std::string, std::string>>& args) {
  Json a = Json::object();
  for (const auto& [k, v] : args) a[k] = v;
  return Json{{"command", command}, {"arguments", a}};
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

inline int cmd_curve(const Options& o, std::ostream& out) {
  const Curve c{parse_integer(o.A), parse_integer(o.B)};
  const MinimalShort ms = minimal_short(c);
  const GlobalInvariants inv = global_invariants(ms.curve);
  Json local = Json::array();
  for (const auto& l : inv.local) local.push_back(local_json(l));
  Json j{{"A", c.A.str()},
         {"B", c.B.str()},
         {"minimal_A", ms.curve.A.str()},
         {"minimal_B", ms.curve.B.str()},
         {"H", inv.H.str()},
         {"disc", inv.disc.value().str()},
         {"disc_min", inv.disc_min.value().str()},
         {"conductor", inv.conductor.str()},
         {"sigma", round_sigma(inv.sigma)},
         {"digits", kSigmaDigits},
         {"local", local}};
  out << j.dump() << "\n";
  return kExitOk;
}

inline int cmd_tate(const Options& o, std::ostream& out) {
  const Curve c{parse_integer(o.A), parse_integer(o.B)};
  require_nonsingular(c);
  const Integer p = parse_integer(o.p);
  if (p < 2 || !is_prime(p)) throw DomainError("p must be prime");
  Json j = local_json(tate_local(c, p));
  j["A"] = c.A.str();
  j["B"] = c.B.str();
  out << j.dump() << "\n";
  return kExitOk;
}

inline Json beta_json(const std::string& G) {
  const TorsionFamily& fam = registry(G);
  return Json{{"lambda", to_string(fam.lambda)},
              {"kappa", to_string(fam.kappa)},
              {"reference", to_string(beta_expected(G))},
              {"match", fam.lambda == fam.kappa && fam.kappa == beta_expected(G)}};
}

inline int cmd_beta(const Options& o, std::ostream& out) {
  if (!o.f.empty() || !o.g.empty()) {
    if (o.f.empty() || o.g.empty()) throw DomainError("--f and --g must be given together");
    const RationalPoly f = read_poly(o.f), g = read_poly(o.g);
    const FamilySignature sig = derive_signature(f, g, o.nu);
    const RationalPoly d = discriminant_poly(f, g);
    const Homogenized D = homogenize(d, sig.homogenization_degree());
    FormFactorization fac = factor_rational(d);
    fac.y_exponent = D.e0;
    const FormProfile prof = profile(fac, sig.m, sig.weighted_degree());
    const auto [lam, kap] = lambda_kappa(prof);
    Json j{{"lambda", to_string(lam)}, {"kappa", to_string(kap)}, {"n", sig.n}, {"m", sig.m}, {"nu", sig.nu},
           {"e0", D.e0}, {"d", poly_json(d)}};
    if (!o.group.empty()) {
      const Rational ref = beta_expected(o.group);
      j["reference"] = to_string(ref);
      j["match"] = lam == kap && kap == ref;
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  if (o.all) {
    Json j = Json::object();
    for (const auto& G : parameterized_groups()) j[G] = beta_json(G);
    out << j.dump() << "\n";
    return kExitOk;
  }
  if (o.group.empty()) throw DomainError("beta needs --group, --all, or --f/--g");
  const std::string G = canonical_group(o.group);
  if (G == "C1") {
    out << Json{{"lambda", nullptr}, {"kappa", nullptr}, {"reference", "1"}, {"match", true}}.dump() << "\n";
    return kExitOk;
  }
  out << beta_json(G).dump() << "\n";
  return kExitOk;
}

inline std::string record_flags(const SampleRecord& r) {
  std::string f;
  auto add = [&](const char* s) { f += (f.empty() ? "" : ";") + std::string(s); };
  if (r.exceptional) add("exceptional");
  if (!r.complete) add("incomplete");
  if (!r.torsion_ok) add("torsion_fail");
  return f;
}

inline int cmd_family(const Options& o, std::ostream& out) {
  if (o.group.empty() || o.hmax.empty()) throw DomainError("family needs --group and --hmax");
  const std::string G = canonical_group(o.group);
  const Integer H = parse_integer(o.hmax);
  const double eps = parse_rational(o.epsilon).convert_to<double>();
  const unsigned workers = o.workers ? o.workers : default_workers();
  const Strategy strategy = parse_strategy(o.strategy);
  ExperimentResult res;
  if (strategy == Strategy::random || G == "C1") {
    res = szpiro_experiment(G, H, o.count, eps, o.seed, workers);
  } else {
    SampleOptions so;
    so.seed = o.seed;
    so.epsilon = eps;
    so.workers = workers;
    so.strategy = strategy;
    res.records = sample_family(G, H, o.count, so);
    res.summary = summarize(G, res.records, H, o.count, eps, o.seed);
  }
  std::ostringstream csv;
  csv << "G,a,b,c,A,B,H,disc_min,conductor,sigma,flags\r\n";
  for (const auto& r : res.records) {
    const std::vector<std::string> row{r.G,
                                       r.parameterized ? r.a.str() : "",
                                       r.parameterized ? r.b.str() : "",
                                       r.parameterized ? r.c.str() : "",
                                       r.curve.A.str(),
                                       r.curve.B.str(),
                                       r.H.str(),
                                       r.complete ? r.disc_min.value().str() : "",
                                       r.complete ? r.conductor.str() : "",
                                       sigma_text(r.sigma),
                                       record_flags(r)};
    for (std::size_t i = 0; i < row.size(); ++i) csv << (i ? "," : "") << csv_field(row[i]);
    csv << "\r\n";
  }
  const Json config = config_block("family", {{"group", G},
                                              {"hmax", o.hmax},
                                              {"count", std::to_string(o.count)},
                                              {"seed", std::to_string(o.seed)},
                                              {"strategy", o.strategy},
                                              {"epsilon", o.epsilon}});
  if (o.out_path.empty())
    out << csv.str();
  else
    write_text(o.out_path, csv.str());
  const auto& s = res.summary;
  if (!o.summary_path.empty()) {
    Json hist = Json::array();
    for (const auto& b : s.histogram) hist.push_back(Json{{"center", b.center}, {"count", b.count}});
    Json j{{"group", s.G},
           {"beta", to_string(s.beta)},
           {"H_max", s.H_max.str()},
           {"requested", s.requested},
           {"sample_size", s.sample_size},
           {"median", s.median},
           {"mean", s.mean},
           {"min", s.min},
           {"max", s.max},
           {"epsilon", s.epsilon},
           {"outlier_fraction", s.outlier_fraction},
           {"outside_half", s.outside_half},
           {"exceptional_count", s.exceptional_count},
           {"incomplete", s.incomplete},
           {"torsion_failures", s.torsion_failures},
           {"bin_width", kHistogramWidth},
           {"histogram", hist},
           {"config", config}};
    write_text(o.summary_path, j.dump(2) + "\n");
  }
  if (!o.hist_path.empty()) {
    std::ostringstream h;
    for (const auto& b : s.histogram) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.3f %.3f %zu\n", b.center - kHistogramWidth / 2, b.center + kHistogramWidth / 2, b.count);
      h << buf;
    }
    write_text(o.hist_path, h.str());
  }
  if (!o.config_path.empty()) write_text(o.config_path, config.dump(2) + "\n");
  const std::size_t got = res.records.size();
  return s.incomplete > 0 || got < o.count ? kExitBudget : kExitOk;
}

inline int cmd_count(const Options& o, std::ostream& out) {
  if (o.group.empty() || o.hmax.empty()) throw DomainError("count needs --group and --hmax");
  const Integer lo = parse_integer(o.hmin), hi = parse_integer(o.hmax);
  if (lo < 3 || hi < lo) throw DomainError("need 3 <= hmin <= hmax");
  if (o.per_decade == 0) throw DomainError("--per-decade must be positive");
  std::vector<Integer> grid;
  // lo * 10^{i / per_decade}, with the fractional power rounded to six decimals.
  for (unsigned i = 0;; ++i) {
    const unsigned whole = i / o.per_decade, frac = i % o.per_decade;
    const auto scaled = static_cast<std::uint64_t>(std::llround(std::pow(10.0, 6.0 + static_cast<double>(frac) / o.per_decade)));
    const Integer H = lo * pow(Integer(10), whole) * scaled / 1000000;
    if (H > hi) break;
    if (grid.empty() || H > grid.back()) grid.push_back(H);
  }
  if (grid.back() != hi) grid.push_back(hi);
  const unsigned workers = o.workers ? o.workers : default_workers();
  const GrowthResult g = growth_counts(o.group, grid, workers);
  if (o.csv) {
    out << "H,count\r\n";
    for (const auto& p : g.points) out << p.H.str() << "," << p.count << "\r\n";
    return kExitOk;
  }
  Json pts = Json::array();
  for (const auto& p : g.points) pts.push_back(Json{{"H", p.H.str()}, {"count", p.count}});
  Json j{{"group", g.G}, {"expected", to_string(g.expected)}, {"slope", g.slope}, {"points", pts}};
  if (registry(g.G).exceptional_branch) j["exceptional_total"] = g.exceptional_total;
  out << j.dump() << "\n";
  return kExitOk;
}

inline int cmd_density(const Options& o, std::ostream& out) {
  if (o.poly.empty()) throw DomainError("density needs --poly");
  CensusOptions co;
  co.workers = o.workers ? o.workers : default_workers();
  co.budget = o.budget;
  CensusResult r;
  if (o.op == "exceptional") {
    const MultiPoly F = parse_multipoly(o.poly);
    r = exceptional_count(F, Box(parse_bounds(o.box, F.nvars())), parse_rational(o.beta), co);
  } else if (o.op == "radical-gcd") {
    if (o.poly2.empty() || o.X.empty()) throw DomainError("radical-gcd needs --poly2 and --X");
    auto vars = detail::scan_variables(o.poly + " " + o.poly2);
    const MultiPoly F1 = parse_multipoly(o.poly, vars), F2 = parse_multipoly(o.poly2, vars);
    r = radical_gcd_census(F1, F2, Box(parse_bounds(o.box, F1.nvars())), parse_integer(o.X), co);
  } else if (o.op == "small-value") {
    if (o.Y.empty()) throw DomainError("small-value needs --Y");
    const Integer Y = parse_integer(o.Y);
    if (!fits_u64(Y)) throw DomainError("Y out of range");
    r = small_value_census(to_binary_form(parse_multipoly(o.poly)), Y.convert_to<std::int64_t>(), o.m, parse_rational(o.epsilon), co);
  } else {
    throw DomainError("unknown census operation: " + o.op);
  }
  out << census_json(r).dump() << "\n";
  return r.unknown > 0 ? kExitBudget : kExitOk;
}

inline int cmd_rho(const Options& o, std::ostream& out) {
  if (o.poly.empty()) throw DomainError("rho needs --poly");
  const MultiPoly F = parse_multipoly(o.poly);
  if (!o.q.empty()) {
    const Integer q = parse_integer(o.q);
    const Rational v = o.naive ? rho_naive(F, q, o.budget) : rho(F, q, o.budget);
    out << Json{{"poly", to_string(F)}, {"q", q.str()}, {"rho", to_string(v)}}.dump() << "\n";
    return kExitOk;
  }
  if (o.X.empty()) throw DomainError("rho needs --q or --X");
  const Integer X = parse_integer(o.X);
  if (!fits_u64(X)) throw BudgetExceeded("X out of range");
  const RhoSumResult r = rho_prime_sum(F, X.convert_to<std::uint64_t>(), parse_integer(o.xmin).convert_to<std::uint64_t>(),
                                       o.checkpoints, o.budget);
  if (o.csv) {
    out << "X,sum\r\n";
    for (const auto& p : r.points) out << p.X << "," << sigma_text(p.sum) << "\r\n";
    return kExitOk;
  }
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(Json{{"X", p.X}, {"sum", p.sum}});
  Json j{{"poly", to_string(F)}, {"method", r.method}, {"slope", r.slope}, {"points", pts}};
  if (r.r) {
    j["r"] = r.r->r;
    j["r_method"] = r.r->method;
    j["residual_window"] = Json::array({r.residual_min, r.residual_max});
  }
  out << j.dump() << "\n";
  return kExitOk;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  if (o.poly.empty()) throw DomainError("check needs --poly");
  const MultiPoly F = parse_multipoly(o.poly);
  const HypothesisReport h = hypothesis_check(F, Box(parse_bounds(o.box, F.nvars())), variable_index(F, o.var));
  auto a = [](const AssumptionCheck& c) { return Json{{"pass", c.pass}, {"detail", c.detail}}; };
  Json j{{"poly", to_string(F)}, {"d", h.d},       {"j", F.vars()[h.j]}, {"A1", a(h.a1)},
         {"A2", a(h.a2)},       {"A3", a(h.a3)}, {"box", a(h.box)},    {"box_ratio", h.box_ratio},
         {"worst_monomial", h.worst_monomial},    {"log_ratio", h.log_ratio}};
  if (h.r) {
    j["r"] = h.r->r;
    j["r_method"] = h.r->method;
  }
  if (h.d >= 3) j["tau"] = h.tau;
  if (h.tau_condition) j["tau_condition"] = *h.tau_condition;
  out << j.dump() << "\n";
  return kExitOk;
}

inline int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
  Json cfg;
  try {
    cfg = Json::parse(read_text(o.replay_path));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad config block: ") + e.what());
  }
  if (!cfg.contains("command") || !cfg.contains("arguments")) throw DomainError("config block needs command and arguments");
  std::vector<std::string> args{"szpiro", cfg["command"].get<std::string>()};
  for (const auto& [k, v] : cfg["arguments"].items()) {
    args.push_back("--" + k);
    args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  }
  for (const char* pass : {"out", "summary", "hist", "config"}) {
    const std::string* target = nullptr;
    if (std::string(pass) == "out") target = &o.out_path;
    if (std::string(pass) == "summary") target = &o.summary_path;
    if (std::string(pass) == "hist") target = &o.hist_path;
    if (std::string(pass) == "config") target = &o.config_path;
    if (!target->empty()) {
      args.push_back(std::string("--") + pass);
      args.push_back(*target);
    }
  }
  if (o.workers) {
    args.push_back("--workers");
    args.push_back(std::to_string(o.workers));
  }
  return run(args, out, err);
}

/// args[0] is the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Szpiro ratio toolkit for elliptic curves with prescribed torsion", "szpiro"};
  app.require_subcommand(1);
  Options o;

  auto* curve = app.add_subcommand("curve", "Invariants of y^2 = x^3 + Ax + B");
  curve->add_option("--A", o.A, "coefficient A")->required();
  curve->add_option("--B", o.B, "coefficient B")->required();

  auto* tate = app.add_subcommand("tate", "Local data at p by Tate's algorithm");
  tate->add_option("--A", o.A, "coefficient A")->required();
  tate->add_option("--B", o.B, "coefficient B")->required();
  tate->add_option("--p", o.p, "prime")->required();

  auto* beta = app.add_subcommand("beta", "lambda, kappa and the reference beta for a torsion group");
  beta->add_option("--group", o.group, "torsion group label, e.g. C4 or C2xC8");
  beta->add_flag("--all", o.all, "all parameterized groups");
  beta->add_option("--f", o.f, "custom f(t): expression or JSON coefficient array");
  beta->add_option("--g", o.g, "custom g(t)");
  beta->add_option("--nu", o.nu, "1 or 2")->check(CLI::IsMember({1u, 2u}));

  auto* family = app.add_subcommand("family", "Sample a family by height and record Szpiro ratios (CSV)");
  family->add_option("--group", o.group, "torsion group label")->required();
  family->add_option("--hmax", o.hmax, "height bound, e.g. 1e12")->required();
  family->add_option("--count", o.count, "number of distinct curves");
  family->add_option("--seed", o.seed, "random seed");
  family->add_option("--strategy", o.strategy, "random or grid")->check(CLI::IsMember({"random", "grid"}));
  family->add_option("--epsilon", o.epsilon, "outlier window and twist exponent");
  family->add_option("--workers", o.workers, "worker threads (default SZPIRO_WORKERS or all cores)");
  family->add_option("--out", o.out_path, "CSV output file (default stdout)");
  family->add_option("--summary", o.summary_path, "JSON summary file");
  family->add_option("--hist", o.hist_path, "histogram text file");
  family->add_option("--config", o.config_path, "write the replayable config block here");

  auto* count = app.add_subcommand("count", "Growth table of distinct curves with H <= bound");
  count->add_option("--group", o.group, "torsion group label")->required();
  count->add_option("--hmin", o.hmin, "smallest height on the grid");
  count->add_option("--hmax", o.hmax, "largest height on the grid")->required();
  count->add_option("--per-decade", o.per_decade, "grid points per decade");
  count->add_option("--workers", o.workers, "worker threads");
  count->add_flag("--csv", o.csv, "print the table as CSV");

  auto* density = app.add_subcommand("density", "Exact censuses over a box");
  density->add_option("--op", o.op, "exceptional, radical-gcd or small-value")
      ->check(CLI::IsMember({"exceptional", "radical-gcd", "small-value"}));
  density->add_option("--poly", o.poly, "polynomial, e.g. 4x^3+27y^2")->required();
  density->add_option("--poly2", o.poly2, "second polynomial (radical-gcd)");
  density->add_option("--box", o.box, "bound or comma-separated bounds");
  density->add_option("--beta", o.beta, "exponent beta (exact decimal or p/q)");
  density->add_option("--X", o.X, "radical threshold (radical-gcd)");
  density->add_option("--Y", o.Y, "box scale (small-value)");
  density->add_option("--m", o.m, "power of b (small-value)");
  density->add_option("--epsilon", o.epsilon, "exponent slack (small-value)");
  density->add_option("--budget", o.budget, "maximum lattice points");
  density->add_option("--workers", o.workers, "worker threads");

  auto* rho = app.add_subcommand("rho", "Local densities rho(q) or prime sums of rho(p)");
  rho->add_option("--poly", o.poly, "polynomial")->required();
  rho->add_option("--q", o.q, "modulus");
  rho->add_flag("--naive", o.naive, "enumerate modulo q directly");
  rho->add_option("--X", o.X, "prime bound for the cumulative sum");
  rho->add_option("--xmin", o.xmin, "first checkpoint");
  rho->add_option("--per-decade", o.checkpoints, "checkpoints per decade");
  rho->add_option("--budget", o.budget, "maximum residues enumerated");
  rho->add_flag("--csv", o.csv, "print the table as CSV");

  auto* check = app.add_subcommand("check", "Hypothesis report for the exceptional-set bound");
  check->add_option("--poly", o.poly, "polynomial")->required();
  check->add_option("--box", o.box, "bound or comma-separated bounds");
  check->add_option("--var", o.var, "distinguished variable (name or index)");

  auto* replay = app.add_subcommand("replay", "Re-run a command from its config block");
  replay->add_option("file", o.replay_path, "config JSON file")->required();
  replay->add_option("--out", o.out_path, "CSV output file");
  replay->add_option("--summary", o.summary_path, "JSON summary file");
  replay->add_option("--hist", o.hist_path, "histogram text file");
  replay->add_option("--config", o.config_path, "config block output");
  replay->add_option("--workers", o.workers, "worker threads");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitDomain;
  }

  try {
    if (*curve) return cmd_curve(o, out);
    if (*tate) return cmd_tate(o, out);
    if (*beta) return cmd_beta(o, out);
    if (*family) return cmd_family(o, out);
    if (*count) return cmd_count(o, out);
    if (*density) return cmd_density(o, out);
    if (*rho) return cmd_rho(o, out);
    if (*check) return cmd_check(o, out);
    if (*replay) return cmd_replay(o, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  err << app.help();
  return kExitDomain;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace szpiro::cli
