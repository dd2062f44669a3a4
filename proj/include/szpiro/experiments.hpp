#pragma once

// Sampling torsion families by height, Szpiro-ratio experiments and growth counts.
//
// Parameter boxes come from a lower bound H >= r_min * |c|^{12/nu} * M(a, b), where
// M(a, b) = max(4|X|^3, 27 Y^2) is the unscaled height of the family model at (a, b)
// and r_min is the smallest observed value of H / (|c|^{12/nu} M) over a calibration
// grid (it absorbs the scaling q and the reduction u). Since M is weighted homogeneous,
// M(a, b) >= c_M * max(|a|^{1/m}, b)^{12n/nu} with c_M its minimum on the unit boundary.

#include "szpiro/families.hpp"
#include "szpiro/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace szpiro {

enum class Strategy { grid, random };

inline Strategy parse_strategy(std::string_view s) {
  if (s == "grid") return Strategy::grid;
  if (s == "random") return Strategy::random;
  throw DomainError("unknown sampling strategy: " + std::string(s));
}

inline std::string to_string(Strategy s) { return s == Strategy::grid ? "grid" : "random"; }

struct SampleRecord {
  std::string G;
  bool parameterized = true;  // false for uniform C1 samples
  bool exceptional = false;   // C3 branch y^2 = x^3 + b^2
  Integer a, b, c;
  Curve curve;
  Integer H;
  FactoredInteger disc_min;
  Integer conductor;
  double sigma = std::numeric_limits<double>::quiet_NaN();
  bool torsion_ok = true;
  bool complete = true;
};

struct SampleOptions {
  std::uint64_t seed = 1;
  Strategy strategy = Strategy::random;
  double epsilon = 0.5;       // twists capped at |c| <= H^{epsilon/6} for random sampling when nu = 2
  unsigned workers = 1;
  FactorOptions factor;
  bool torsion_check = true;
  bool exceptional = true;    // include the C3 exceptional branch
  double box_slack = 1.0;     // multiplies the height bound used to size boxes
  std::uint64_t max_attempts = 0;  // random strategy; 0 means 10000 * count
};

namespace detail {

inline double weighted_value_double(const RationalPoly& p, double a, double b, unsigned m, unsigned w) {
  double v = 0;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    v += p.coeff(k).convert_to<double>() * std::pow(a, k) * std::pow(b, static_cast<int>(w - m * k));
  }
  return v;
}

inline double unscaled_height_double(const TorsionFamily& fam, double a, double b) {
  const unsigned m = fam.signature.m;
  const double X = weighted_value_double(fam.f, a, b, m, 4 / fam.nu * fam.signature.n);
  const double Y = weighted_value_double(fam.g, a, b, m, 6 / fam.nu * fam.signature.n);
  return std::max(4 * std::fabs(X * X * X), 27 * Y * Y);
}

// log of max(4|X|^3, 27Y^2) at integer (a, b), exactly evaluated.
inline double log_unscaled_height(const TorsionFamily& fam, const Integer& a, const Integer& b) {
  const unsigned m = fam.signature.m;
  const Rational X = weighted_value(fam.f, a, b, m, 4 / fam.nu * fam.signature.n);
  const Rational Y = weighted_value(fam.g, a, b, m, 6 / fam.nu * fam.signature.n);
  const Rational hx = 4 * abs(Rational(X * X * X));
  const Rational hy = 27 * Y * Y;
  const Rational h = hx > hy ? hx : hy;
  return log_abs(numerator(h)) - log_abs(denominator(h));
}

}  // namespace detail

struct HeightScale {
  double log_cM = 0;         // log of (half) the minimum of M on the weighted unit boundary
  double log_min_ratio = 0;  // log of the smallest H / (|c|^{12/nu} M) on the calibration grid
};

/// Constants used to size parameter boxes for a family (computed once per family).
inline const HeightScale& height_scale(const TorsionFamily& fam) {
  static std::mutex mu;
  static std::map<std::string, HeightScale> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(fam.G); it != cache.end()) return it->second;
  HeightScale hs;
  const unsigned m = fam.signature.m;
  double mn = std::numeric_limits<double>::infinity();
  constexpr int steps = 4000;
  for (int i = 0; i <= steps; ++i) {
    const double s = -1.0 + 2.0 * i / steps;
    mn = std::min(mn, detail::unscaled_height_double(fam, s, 1.0));
    const double b = static_cast<double>(i) / steps;
    mn = std::min(mn, detail::unscaled_height_double(fam, 1.0, b));
    mn = std::min(mn, detail::unscaled_height_double(fam, -1.0, b));
  }
  if (!(mn > 0)) throw std::logic_error("family height is not positive definite on the unit boundary");
  hs.log_cM = std::log(0.5 * mn);

  double min_ratio = std::numeric_limits<double>::infinity();
  const std::vector<long> twists = fam.nu == 2 ? std::vector<long>{1, -1, 2, -2, 3, -3, 6, -6} : std::vector<long>{1};
  const long b_max = 24;
  const long a_max = m >= 2 ? 216 : 144;
  for (long c : twists) {
    for (long b = 1; b <= b_max; ++b) {
      for (long a = -a_max; a <= a_max; ++a) {
        try {
          const FamilyModel model = family_model(fam, {a, b, c});
          const double r = log_abs(naive_height(model.curve)) - (12.0 / fam.nu) * std::log(std::abs(static_cast<double>(c))) -
                           detail::log_unscaled_height(fam, a, b);
          min_ratio = std::min(min_ratio, r);
        } catch (const DomainError&) {
        }
      }
    }
  }
  hs.log_min_ratio = min_ratio - 1e-9;
  (void)m;
  return cache.emplace(fam.G, hs).first->second;
}

struct ParameterBox {
  Integer a_max;  // |a| <= a_max
  Integer b_max;  // 1 <= b <= b_max
};

/// Box containing every parameter (a, b) at twist c whose curve can have height <= H.
inline std::optional<ParameterBox> parameter_box(const TorsionFamily& fam, const Integer& H, const Integer& c,
                                                 double slack = 1.0) {
  const HeightScale& hs = height_scale(fam);
  const double md = 12.0 * fam.signature.n / fam.nu;
  const double logR = (log_abs(H) + std::log(slack) - hs.log_min_ratio - (12.0 / fam.nu) * log_abs(c) - hs.log_cM) / md;
  if (logR < 0) return std::nullopt;
  const double R = std::exp(logR) * (1 + 1e-12);
  ParameterBox box;
  box.b_max = Integer(static_cast<std::uint64_t>(std::floor(R)));
  const double Rm = std::pow(R, fam.signature.m);
  if (Rm > 9e18) throw BudgetExceeded("parameter box too large for enumeration");
  box.a_max = Integer(static_cast<std::uint64_t>(std::floor(Rm)));
  return box;
}

/// Cheap necessary condition for the member at (a, b, c) to have height <= H (log_H = log H).
inline bool may_reach_height(const TorsionFamily& fam, std::int64_t a, std::int64_t b, const Integer& c, double log_H) {
  const HeightScale& hs = height_scale(fam);
  const double M = detail::unscaled_height_double(fam, static_cast<double>(a), static_cast<double>(b));
  if (!(M > 0)) return true;
  return std::log(M) + (12.0 / fam.nu) * log_abs(c) + hs.log_min_ratio <= log_H + 1e-6;
}

/// Height bound whose untwisted parameter box has side about R (b <= R, |a| <= R^m), as a power of 10.
inline Integer height_for_parameter_scale(const TorsionFamily& fam, double R) {
  if (!(R >= 1)) throw DomainError("parameter scale must be at least 1");
  const HeightScale& hs = height_scale(fam);
  const double md = 12.0 * fam.signature.n / fam.nu;
  const double log10H = (md * std::log(R) + hs.log_cM + hs.log_min_ratio) / std::log(10.0);
  return pow(Integer(10), static_cast<unsigned>(std::max(1.0, std::ceil(log10H))));
}

/// Largest |c| for which the box at twist c can be nonempty.
inline Integer twist_bound(const TorsionFamily& fam, const Integer& H, double slack = 1.0) {
  if (fam.nu == 1) return 1;
  const HeightScale& hs = height_scale(fam);
  const double logc = (log_abs(H) + std::log(slack) - hs.log_min_ratio - hs.log_cM) / (12.0 / fam.nu);
  if (logc < 0) return 0;
  return Integer(static_cast<std::uint64_t>(std::floor(std::exp(logc) * (1 + 1e-12))));
}

namespace detail {

inline std::vector<std::uint64_t> good_primes(const Integer& disc, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 5; out.size() < count && p <= 10000; p += 2) {
    if (!modp::is_word_prime(p)) continue;
    if (disc % p != 0) out.push_back(p);
  }
  return out;
}

inline void finish_record(SampleRecord& rec, const std::optional<FactoredInteger>& disc_hint, const SampleOptions& opt) {
  try {
    const GlobalInvariants inv = global_invariants(rec.curve, disc_hint, opt.factor);
    rec.H = inv.H;
    rec.disc_min = inv.disc_min;
    rec.conductor = inv.conductor;
    rec.sigma = inv.sigma;
  } catch (const BudgetExceeded&) {
    rec.complete = false;
    rec.H = naive_height(rec.curve);
  }
  if (opt.torsion_check && rec.G != "C1") {
    const auto primes = good_primes(discriminant(rec.curve), 3);
    rec.torsion_ok = torsion_multiple_check(rec.curve, rec.G, primes).pass;
  }
}

}  // namespace detail

/// Invariants of the family member at (a, b, c), or nullopt when the parameter is
/// invalid or the curve's height exceeds H_max.
inline std::optional<SampleRecord> family_record(const TorsionFamily& fam, const FamilyParameter& t,
                                                 const Integer& H_max, const SampleOptions& opt) {
  FamilyModel model;
  try {
    model = family_model(fam, t, opt.factor);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  if (naive_height(model.curve) > H_max) return std::nullopt;
  SampleRecord rec;
  rec.G = fam.G;
  rec.a = t.a;
  rec.b = t.b;
  rec.c = t.c;
  rec.curve = model.curve;
  std::optional<FactoredInteger> hint;
  try {
    hint = reduced_discriminant(discriminant_factored(fam, model, opt.factor), model.u, opt.factor);
  } catch (const BudgetExceeded&) {
    hint.reset();
  }
  detail::finish_record(rec, hint, opt);
  return rec;
}

/// The C3 exceptional curve y^2 = x^3 + b^2 (b cube-free), or nullopt.
inline std::optional<SampleRecord> exceptional_record(const Integer& b, const Integer& H_max, const SampleOptions& opt) {
  if (b <= 0) return std::nullopt;
  const FactoredInteger fb = factor(b, {}, opt.factor);
  for (const auto& f : fb.factors())
    if (f.exponent >= 3) return std::nullopt;
  SampleRecord rec;
  rec.G = "C3";
  rec.exceptional = true;
  rec.a = 0;
  rec.b = b;
  rec.c = 1;
  rec.curve = {0, b * b};
  if (naive_height(rec.curve) > H_max) return std::nullopt;
  const FactoredInteger hint = merge_factored(factor(Integer(-432)), power_factored(fb, 4));
  detail::finish_record(rec, hint, opt);
  return rec;
}

namespace detail {

// Uniform integer in [lo, hi] from raw 64-bit engine output (portable across standard libraries).
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

inline double uniform_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::vector<std::int64_t> squarefree_upto(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= n; ++k) {
    bool ok = true;
    for (std::int64_t d = 2; d * d <= k && ok; ++d)
      if (k % (d * d) == 0) ok = false;
    if (ok) out.push_back(k);
  }
  return out;
}

struct Candidate {
  FamilyParameter param;
  bool exceptional = false;
};

}  // namespace detail

/// Distinct curves of height <= H_max from the family, deduplicated on the minimal (A, B).
/// grid: exhaustive box walk in (|c|, sign, b, a) order, truncated to `count` records.
/// random: uniform draws from the box (twist |c| drawn with weight |c|^{-(m+1)}).
inline std::vector<SampleRecord> sample_family(std::string_view G, const Integer& H_max, std::size_t count,
                                               const SampleOptions& opt) {
  if (H_max < 3) throw DomainError("H_max must be at least 3");
  const TorsionFamily& fam = registry(G);
  const unsigned m = fam.signature.m;
  std::vector<SampleRecord> out;
  std::set<std::pair<Integer, Integer>> seen;
  auto accept = [&](std::optional<SampleRecord>& rec) {
    if (!rec || out.size() >= count) return;
    if (!seen.emplace(rec->curve.A, rec->curve.B).second) return;
    out.push_back(std::move(*rec));
  };
  auto run_batch = [&](const std::vector<detail::Candidate>& batch) {
    auto results = parallel_map(batch.size(), opt.workers, [&](std::size_t i) -> std::optional<SampleRecord> {
      const auto& cand = batch[i];
      if (cand.exceptional) return exceptional_record(cand.param.b, H_max, opt);
      return family_record(fam, cand.param, H_max, opt);
    });
    for (auto& r : results) accept(r);
  };
  const bool with_exceptional = opt.exceptional && fam.exceptional_branch;
  const Integer exc_b_max = iroot(H_max / 27, 4);
  const double log_H = log_abs(H_max);

  if (opt.strategy == Strategy::grid) {
    const Integer cmax = twist_bound(fam, H_max, opt.box_slack);
    for (Integer ac = 1; ac <= cmax && out.size() < count; ++ac) {
      if (fam.nu == 2 && !is_squarefree(ac)) continue;
      for (int sgn : {1, -1}) {
        if (fam.nu == 1 && sgn < 0) continue;
        const Integer c = sgn * ac;
        const auto box = parameter_box(fam, H_max, c, opt.box_slack);
        if (!box) continue;
        for (Integer b = 1; b <= box->b_max && out.size() < count; ++b) {
          std::vector<detail::Candidate> row;
          const auto amax = box->a_max.convert_to<std::int64_t>();
          const auto bi = b.convert_to<std::int64_t>();
          for (std::int64_t a = -amax; a <= amax; ++a)
            if (may_reach_height(fam, a, bi, c, log_H)) row.push_back({{a, b, c}, false});
          run_batch(row);
        }
      }
    }
    if (with_exceptional) {
      std::vector<detail::Candidate> row;
      for (Integer b = 1; b <= exc_b_max; ++b) row.push_back({{0, b, 1}, true});
      run_batch(row);
    }
    return out;
  }

  std::mt19937_64 rng(opt.seed);
  // Twist distribution for nu = 2.
  std::vector<std::int64_t> twists{1};
  std::vector<double> cdf{1.0};
  if (fam.nu == 2) {
    const double cap = std::min(twist_bound(fam, H_max, opt.box_slack).convert_to<double>(),
                                std::floor(std::exp(opt.epsilon / 6.0 * log_abs(H_max))));
    twists = detail::squarefree_upto(std::max<std::int64_t>(1, static_cast<std::int64_t>(cap)));
    cdf.clear();
    double total = 0;
    for (auto c : twists) {
      total += std::pow(static_cast<double>(c), -static_cast<double>(m + 1));
      cdf.push_back(total);
    }
    for (auto& x : cdf) x /= total;
  }
  std::vector<std::optional<ParameterBox>> boxes;
  for (auto c : twists) boxes.push_back(parameter_box(fam, H_max, Integer(c), opt.box_slack));
  if (!boxes[0]) return out;
  double exceptional_share = 0;
  if (with_exceptional) {
    const double volume = (2 * boxes[0]->a_max.convert_to<double>() + 1) * boxes[0]->b_max.convert_to<double>();
    const double n_exc = exc_b_max.convert_to<double>();
    exceptional_share = n_exc / (n_exc + volume);
  }
  const std::uint64_t max_attempts = opt.max_attempts ? opt.max_attempts : 10000 * static_cast<std::uint64_t>(count) + 100000;
  std::uint64_t attempts = 0;
  constexpr std::size_t batch_size = 256;
  while (out.size() < count && attempts < max_attempts) {
    std::vector<detail::Candidate> batch;
    while (batch.size() < batch_size && attempts < max_attempts) {
      ++attempts;
      if (with_exceptional && detail::uniform_real(rng) < exceptional_share) {
        const auto b = detail::uniform_int(rng, 1, exc_b_max.convert_to<std::int64_t>());
        batch.push_back({{0, b, 1}, true});
        continue;
      }
      std::size_t ci = 0;
      if (twists.size() > 1) {
        const double u = detail::uniform_real(rng);
        ci = static_cast<std::size_t>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        ci = std::min(ci, twists.size() - 1);
      }
      const auto& box = boxes[ci];
      if (!box) continue;
      Integer c = twists[ci];
      if (fam.nu == 2 && (rng() & 1u)) c = -c;
      const auto b = detail::uniform_int(rng, 1, box->b_max.convert_to<std::int64_t>());
      const auto amax = box->a_max.convert_to<std::int64_t>();
      const auto a = detail::uniform_int(rng, -amax, amax);
      if (!may_reach_height(fam, a, b, c, log_H)) continue;
      batch.push_back({{a, b, c}, false});
    }
    run_batch(batch);
  }
  return out;
}

/// Uniform reduced curves (A, B) with H <= H_max, deduplicated.
inline std::vector<SampleRecord> sample_uniform(const Integer& H_max, std::size_t count, const SampleOptions& opt) {
  if (H_max < 3) throw DomainError("H_max must be at least 3");
  const auto amax = iroot(H_max / 4, 3).convert_to<std::int64_t>();
  const auto bmax = iroot(H_max / 27, 2).convert_to<std::int64_t>();
  std::mt19937_64 rng(opt.seed);
  std::vector<SampleRecord> out;
  std::set<std::pair<Integer, Integer>> seen;
  const std::uint64_t max_attempts = opt.max_attempts ? opt.max_attempts : 400 * static_cast<std::uint64_t>(count) + 1000;
  std::uint64_t attempts = 0;
  while (out.size() < count && attempts < max_attempts) {
    std::vector<Curve> batch;
    while (batch.size() < 256 && attempts < max_attempts) {
      ++attempts;
      const Curve c{detail::uniform_int(rng, -amax, amax), detail::uniform_int(rng, -bmax, bmax)};
      if (4 * pow(c.A, 3) + 27 * c.B * c.B == 0) continue;
      if (naive_height(c) > H_max) continue;
      if (minimal_short(c, opt.factor).u != 1) continue;
      batch.push_back(c);
    }
    auto results = parallel_map(batch.size(), opt.workers, [&](std::size_t i) {
      SampleRecord rec;
      rec.G = "C1";
      rec.parameterized = false;
      rec.curve = batch[i];
      detail::finish_record(rec, std::nullopt, opt);
      return rec;
    });
    for (auto& r : results) {
      if (out.size() >= count) break;
      if (seen.emplace(r.curve.A, r.curve.B).second) out.push_back(std::move(r));
    }
  }
  return out;
}

struct HistogramBin {
  double center;
  std::size_t count;
};

struct ExperimentSummary {
  std::string G;
  Rational beta;
  Integer H_max;
  std::size_t requested = 0;
  std::size_t sample_size = 0;      // complete, non-exceptional records
  double median = 0;
  double mean = 0;
  double min = 0;
  double max = 0;
  double epsilon = 0;
  double outlier_fraction = 0;      // outside (beta - epsilon, beta + epsilon)
  double outside_half = 0;          // outside (beta - 1/2, beta + 1/2)
  std::vector<HistogramBin> histogram;
  std::size_t exceptional_count = 0;
  double exceptional_median = 0;
  std::size_t incomplete = 0;
  std::size_t torsion_failures = 0;
  std::uint64_t seed = 0;
};

inline constexpr double kHistogramWidth = 0.05;

inline double median_of(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline std::vector<HistogramBin> histogram(const std::vector<double>& values, double width = kHistogramWidth) {
  std::map<long, std::size_t> bins;
  for (double x : values) ++bins[static_cast<long>(std::floor(x / width))];
  std::vector<HistogramBin> out;
  for (const auto& [k, n] : bins) out.push_back({(static_cast<double>(k) + 0.5) * width, n});
  return out;
}

inline ExperimentSummary summarize(std::string_view G, const std::vector<SampleRecord>& records, const Integer& H_max,
                                   std::size_t requested, double epsilon, std::uint64_t seed) {
  ExperimentSummary s;
  s.G = canonical_group(G);
  s.beta = beta_expected(s.G);
  s.H_max = H_max;
  s.requested = requested;
  s.epsilon = epsilon;
  s.seed = seed;
  const double beta = s.beta.convert_to<double>();
  std::vector<double> sig, exc;
  for (const auto& r : records) {
    if (!r.complete) {
      ++s.incomplete;
      continue;
    }
    if (!r.torsion_ok) ++s.torsion_failures;
    (r.exceptional ? exc : sig).push_back(r.sigma);
  }
  s.sample_size = sig.size();
  s.exceptional_count = exc.size();
  s.exceptional_median = median_of(exc);
  if (!sig.empty()) {
    s.median = median_of(sig);
    double total = 0;
    std::size_t out_eps = 0, out_half = 0;
    for (double x : sig) {
      total += x;
      if (!(x > beta - epsilon && x < beta + epsilon)) ++out_eps;
      if (!(x > beta - 0.5 && x < beta + 0.5)) ++out_half;
    }
    s.mean = total / static_cast<double>(sig.size());
    s.min = *std::min_element(sig.begin(), sig.end());
    s.max = *std::max_element(sig.begin(), sig.end());
    s.outlier_fraction = static_cast<double>(out_eps) / static_cast<double>(sig.size());
    s.outside_half = static_cast<double>(out_half) / static_cast<double>(sig.size());
  }
  s.histogram = histogram(sig);
  return s;
}

struct ExperimentResult {
  std::vector<SampleRecord> records;
  ExperimentSummary summary;
};

/// Random-sample Szpiro ratios for G (uniform (A, B) sampling when G = C1).
inline ExperimentResult szpiro_experiment(std::string_view G, const Integer& H_max, std::size_t count, double epsilon,
                                          std::uint64_t seed, unsigned workers = 1) {
  if (count == 0) throw DomainError("count must be positive");
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  SampleOptions opt;
  opt.seed = seed;
  opt.epsilon = epsilon;
  opt.workers = workers;
  opt.strategy = Strategy::random;
  const std::string g = canonical_group(G);
  ExperimentResult res;
  res.records = g == "C1" ? sample_uniform(H_max, count, opt) : sample_family(g, H_max, count, opt);
  res.summary = summarize(g, res.records, H_max, count, epsilon, seed);
  return res;
}

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_slope needs at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0) throw DomainError("fit_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / den;
}

struct GrowthPoint {
  Integer H;
  std::size_t count;
};

struct GrowthResult {
  std::string G;
  std::vector<GrowthPoint> points;
  std::size_t exceptional_total = 0;  // C3 exceptional curves up to the largest H (not in the counts)
  double slope = 0;
  Rational expected;                  // nu (m + 1) / (12 n)
};

/// #S(H) on a height grid: distinct minimal (A, B) from the parameterization with height <= H.
inline GrowthResult growth_counts(std::string_view G, const std::vector<Integer>& heights, unsigned workers = 1,
                                  double slack = 1.0) {
  if (heights.size() < 2) throw DomainError("growth_counts needs at least two heights");
  const TorsionFamily& fam = registry(G);
  const Integer H_max = *std::max_element(heights.begin(), heights.end());
  const double log_H = log_abs(H_max);
  std::set<std::pair<Integer, Integer>> seen;
  std::vector<Integer> found;
  const Integer cmax = twist_bound(fam, H_max, slack);
  for (Integer ac = 1; ac <= cmax; ++ac) {
    if (fam.nu == 2 && !is_squarefree(ac)) continue;
    for (int sgn : {1, -1}) {
      if (fam.nu == 1 && sgn < 0) continue;
      const Integer c = sgn * ac;
      const auto box = parameter_box(fam, H_max, c, slack);
      if (!box) continue;
      const std::int64_t amax = box->a_max.convert_to<std::int64_t>();
      const std::int64_t bmax = box->b_max.convert_to<std::int64_t>();
      auto rows = parallel_map(static_cast<std::size_t>(bmax), workers, [&](std::size_t bi) {
        std::vector<Curve> curves;
        const Integer b = static_cast<std::int64_t>(bi) + 1;
        for (std::int64_t a = -amax; a <= amax; ++a) {
          if (!may_reach_height(fam, a, static_cast<std::int64_t>(bi) + 1, c, log_H)) continue;
          try {
            const FamilyModel model = family_model(fam, {a, b, c});
            if (naive_height(model.curve) <= H_max) curves.push_back(model.curve);
          } catch (const DomainError&) {
          }
        }
        return curves;
      });
      for (auto& row : rows)
        for (auto& cv : row)
          if (seen.emplace(cv.A, cv.B).second) found.push_back(naive_height(cv));
    }
  }
  std::sort(found.begin(), found.end());
  GrowthResult res;
  res.G = fam.G;
  std::vector<double> lx, ly;
  for (const auto& H : heights) {
    const auto n = static_cast<std::size_t>(std::upper_bound(found.begin(), found.end(), H) - found.begin());
    res.points.push_back({H, n});
    if (n > 0) {
      lx.push_back(log_abs(H));
      ly.push_back(std::log(static_cast<double>(n)));
    }
  }
  if (fam.exceptional_branch) {
    for (Integer b = 1; 27 * pow(b, 4) <= H_max; ++b) {
      const FactoredInteger fb = factor(b);
      bool cube_free = true;
      for (const auto& f : fb.factors()) cube_free = cube_free && f.exponent < 3;
      if (cube_free) ++res.exceptional_total;
    }
  }
  res.slope = lx.size() >= 2 ? fit_slope(lx, ly) : std::numeric_limits<double>::quiet_NaN();
  res.expected = Rational(fam.nu * (fam.signature.m + 1), 12 * fam.signature.n);
  return res;
}

/// Counts of cube-free b with 27 b^4 <= H (the C3 exceptional branch) on a height grid.
inline std::vector<GrowthPoint> exceptional_growth(const std::vector<Integer>& heights) {
  std::vector<GrowthPoint> out;
  for (const auto& H : heights) {
    std::size_t n = 0;
    for (Integer b = 1; 27 * pow(b, 4) <= H; ++b) {
      const FactoredInteger fb = factor(b);
      bool cube_free = true;
      for (const auto& f : fb.factors()) cube_free = cube_free && f.exponent < 3;
      if (cube_free) ++n;
    }
    out.push_back({H, n});
  }
  return out;
}

}  // namespace szpiro
