#pragma once

// Verification suites. Each suite pairs deterministic witness instances with
// randomized trials that check the documented identities, inequalities, and
// equivalent forms on freshly generated measures and functions. Failures
// carry a replayable payload; a passing report has an empty failure list.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "benvenuti.hpp"
#include "core.hpp"
#include "integral.hpp"
#include "maps.hpp"
#include "measure.hpp"
#include "random_instances.hpp"
#include "report.hpp"
#include "scientometrics.hpp"

namespace nsugeno {

struct SuiteOptions {
  std::uint64_t seed = 0;
  long long trials = 1000;
  int threads = 0;  // 0 = hardware concurrency; NSUGENO_THREADS caps either way
  bool inject_fault = false;  // adds a deliberately broken map to the axiom runs
};

namespace detail {

inline int suite_threads(int requested) {
  int n = requested;
  if (n <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    n = hw == 0 ? 1 : static_cast<int>(hw);
  }
  if (const char* env = std::getenv("NSUGENO_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min<long>(n, std::min<long>(cap, 256));
  }
  return std::max(1, n);
}

// Runs `body(trial, rng, local_report)` for trials 0..trials-1, striped over
// worker threads. Each trial draws its own generator from (seed, stream,
// trial), so the outcome is independent of the thread count; failures are
// merged back in trial order.
template <class Body>
void run_trials(VerificationReport& rep, const SuiteOptions& opt,
                std::uint64_t stream, Body&& body) {
  const long long trials = opt.trials;
  if (trials <= 0) return;
  const int threads = static_cast<int>(
      std::min<long long>(suite_threads(opt.threads), trials));
  std::vector<std::vector<CheckFailure>> buckets(
      static_cast<std::size_t>(threads));
  std::vector<std::string> errors(static_cast<std::size_t>(threads));
  auto work = [&](int w) {
    VerificationReport local;
    try {
      for (long long t = w; t < trials; t += threads) {
        std::mt19937_64 rng =
            trial_rng(opt.seed, stream, static_cast<std::uint64_t>(t));
        body(t, rng, local);
      }
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(w)] = e.what();
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = "unknown exception";
    }
    buckets[static_cast<std::size_t>(w)] = std::move(local.failures);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& err : errors)
    if (!err.empty())
      throw std::runtime_error("suite worker failed: " + err);
  std::vector<CheckFailure> merged;
  for (auto& b : buckets)
    merged.insert(merged.end(), std::make_move_iterator(b.begin()),
                  std::make_move_iterator(b.end()));
  std::stable_sort(
      merged.begin(), merged.end(),
      [](const CheckFailure& a, const CheckFailure& b) { return a.trial < b.trial; });
  for (auto& f : merged) rep.failures.push_back(std::move(f));
  rep.trials += trials;
}

inline std::string num_str(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

inline std::string vec_str(const std::vector<double>& v) {
  std::string s = "(";
  std::size_t shown = std::min<std::size_t>(v.size(), 40);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) s += ",";
    s += num_str(v[i]);
  }
  if (shown < v.size()) s += ",...";
  return s + ")";
}

inline std::string fn_str(const LevelFunction& f) { return "f=" + vec_str(f.values()); }

inline std::string measure_str(const MonotoneMeasure& mu) {
  std::string s = std::string(backend_name(mu.backend())) +
                  " m=" + std::to_string(mu.space().m);
  s += mu.space().finite_ybar() ? " ybar=" + num_str(mu.space().y_bar)
                                : " ybar=inf";
  if (mu.backend() == MeasureBackend::table)
    s += " mu=" + vec_str(mu.raw_values());
  else if (mu.backend() == MeasureBackend::cardinality)
    s += " g=" + vec_str(mu.raw_values());
  return s;
}

inline std::string instance_str(const MonotoneMeasure& mu,
                                const LevelFunction& f) {
  return measure_str(mu) + " " + fn_str(f);
}

// Re-tags a sub-report's failures with the given trial index and context and
// counts the whole sub-check as one trial of the enclosing suite.
inline void fold(VerificationReport& rep, const VerificationReport& sub,
                 long long trial, const std::string& context) {
  ++rep.trials;
  for (const auto& f : sub.failures) {
    std::string inst = context;
    if (!f.instance.empty()) inst += " | " + f.instance;
    rep.fail(trial, inst, f.relation, f.observed);
  }
}

template <class Op>
LevelFunction fn_zip(const LevelFunction& f, const LevelFunction& g, Op op) {
  std::vector<double> v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(f[i], g[i]);
  return LevelFunction(f.space(), std::move(v));
}

template <class Op>
LevelFunction fn_map(const LevelFunction& f, Op op) {
  std::vector<double> v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(f[i]);
  return LevelFunction(f.space(), std::move(v));
}

inline std::vector<double> value_lattice(double ybar) {
  std::vector<double> out;
  out.reserve(9);
  for (int k = 0; k <= 8; ++k)
    out.push_back(std::isinf(ybar) ? static_cast<double>(k)
                                   : ybar * k / 8.0);
  return out;
}

// The map catalog exercised by the suites, one instance per family with
// fixed parameters, admissible for the requested role at the given scale.
inline std::vector<CombineMap> fusion_catalog(double ybar) {
  std::vector<std::string> specs;
  if (std::isinf(ybar))
    specs = {"plus",
             "plus_capped(ybar=4)",
             "times",
             "min",
             "max",
             "owa(p=0.3)",
             "scale(lambda=2)",
             "power(gamma=0.5)",
             "mix(lambda=0.5)",
             "pnorm(q=2)",
             "geo(p=0.4)",
             "unary(s=linear,lambda=2)",
             "unary(s=sqrt)",
             "unary(s=floor_div,alpha=2)",
             "unary(s=ceil_div,beta=2)"};
  else
    specs = {"plus_capped",
             "times",
             "min",
             "max",
             "owa(p=0.3)",
             "scale(lambda=0.7)",
             "power(gamma=0.5)",
             "probsum",
             "geo(p=0.4)",
             "unary(s=linear,lambda=0.8)",
             "unary(s=sqrt)",
             "unary(s=square)",
             "unary(s=floor_linear,lambda=0.5)"};
  std::vector<CombineMap> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(make_map(s, MapKind::fusion, ybar));
  return out;
}

inline std::vector<CombineMap> link_catalog(double ybar) {
  std::vector<std::string> specs = {"plus",
                                    "times",
                                    "min",
                                    "max",
                                    "owa(p=0.3)",
                                    "pnorm(q=2)",
                                    "geo(p=0.4)",
                                    "mix(lambda=0.5)",
                                    "scale(lambda=1.5)",
                                    "unary(s=linear,lambda=2)",
                                    "unary(s=floor_div,alpha=2)"};
  specs.push_back(std::isinf(ybar) ? "plus_capped(ybar=4)" : "plus_capped");
  std::vector<CombineMap> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(make_map(s, MapKind::link, ybar));
  return out;
}

inline const CombineMap& by_name(const std::vector<CombineMap>& maps,
                                 const std::string& name) {
  for (const auto& m : maps)
    if (m.name() == name) return m;
  throw config_error("suite catalog has no map named " + name);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// axioms: map admissibility and declared algebraic flags, measure checks,
// monotonicity of the integrals in f and mu, indicator identities, constant
// functions, scaling, measure recovery, and the homogeneity laws with their
// strictness witnesses.
// ---------------------------------------------------------------------------
inline VerificationReport suite_axioms(const SuiteOptions& opt) {
  using namespace detail;
  VerificationReport rep;
  rep.suite = "axioms";

  const std::vector<CombineMap> fusions1 = fusion_catalog(1.0);
  const std::vector<CombineMap> links1 = link_catalog(1.0);
  const std::vector<CombineMap> fusionsInf = fusion_catalog(kInf);
  const std::vector<CombineMap> linksInf = link_catalog(kInf);
  const std::vector<double> lattice1 = value_lattice(1.0);

  auto det = [&rep](bool ok, const std::string& inst, const std::string& rel,
                    const std::string& obs) {
    ++rep.trials;
    if (!ok) rep.fail(-1, inst, rel, obs);
  };

  // Every catalog entry satisfies the admissibility axioms and each algebraic
  // flag it declares, on both scales and in both roles.
  for (double ybar : {1.0, kInf}) {
    for (MapKind kind : {MapKind::fusion, MapKind::link}) {
      const std::vector<CombineMap>& maps =
          kind == MapKind::fusion ? (ybar == 1.0 ? fusions1 : fusionsInf)
                                  : (ybar == 1.0 ? links1 : linksInf);
      for (const CombineMap& map : maps) {
        std::vector<double> grid = default_grid(ybar, map);
        std::string ctx = (kind == MapKind::fusion ? "fusion " : "link ") +
                          map.spec_string() + " at ybar=" + num_str(ybar);
        fold(rep, check_map_axioms(map, kind, grid), -1, ctx);
        for (MapFlag flag :
             {kGeqMin, kIdempotent, kMinDistributive, kMaxDistributive,
              kYbarAbsorbing, kBoundedBetween, kScaleSuper, kScaleSub})
          if (map.has(flag))
            fold(rep, check_map_property(map, flag, grid), -1, ctx);
        if (map.name().rfind("unary:", 0) == 0)
          fold(rep, check_constant_in_second(map, grid), -1, ctx);
      }
    }
  }

  // Negative soundness: the product map must fail the geq_min grid check, and
  // the weighted-order map must fail lattice distributivity; neither declares
  // the corresponding flag.
  {
    const CombineMap& times = by_name(fusions1, "times");
    std::vector<double> grid = default_grid(1.0, times);
    det(!times.has(kGeqMin) && !check_map_property(times, kGeqMin, grid).passed(),
        "times on [0,1]", "product map violates a o b >= a AND b somewhere",
        "grid check unexpectedly passed");
    const CombineMap& owa = by_name(fusions1, "owa");
    det(!owa.has(kMinDistributive) &&
            !check_map_property(owa, kMinDistributive, grid).passed(),
        "owa(p=0.3)", "strict convex mix violates min-distributivity",
        "grid check unexpectedly passed");
  }

  if (opt.inject_fault) {
    CombineMap broken(
        "broken_minus", MapKind::fusion, 1.0, kContinuousFirstArg,
        [](double a, double b) { return a - b; });
    fold(rep,
         check_map_axioms(broken, MapKind::fusion, default_grid(1.0, broken)),
         -1, "injected fault fixture a o b = a - b");
  }

  // Strictness witnesses: min/max homogeneity can fail strictly for the
  // capped sum, and the product link can land strictly below the clipped
  // value, so the homogeneity laws really need their hypotheses.
  {
    GroundSpace space(2, 1.0);
    MonotoneMeasure mu = MonotoneMeasure::table(space, {0.0, 0.25, 0.5, 1.0});
    LevelFunction f(space, {0.25, 0.75});
    const CombineMap& pc = by_name(fusions1, "plus_capped");
    const double c = 1.0 / 3.0;
    double base = upper_n(mu, f, pc, 2);
    det(near(base, 0.75, 1e-12), "two-point capped-sum witness",
        "upper_2 == 3/4", num_str(base));
    double vmin = upper_n(mu, fn_map(f, [&](double v) { return std::min(c, v); }), pc, 2);
    det(near(vmin, 7.0 / 12.0, 1e-12), "two-point capped-sum witness",
        "upper_2(f AND 1/3) == 7/12", num_str(vmin));
    det(vmin > std::min(c, base) + 0.1, "two-point capped-sum witness",
        "upper_2(f AND 1/3) strictly exceeds 1/3 AND upper_2(f)", num_str(vmin));
    double vmax = upper_n(mu, fn_map(f, [&](double v) { return std::max(c, v); }), pc, 2);
    det(near(vmax, 5.0 / 6.0, 1e-12), "two-point capped-sum witness",
        "upper_2(f OR 1/3) == 5/6", num_str(vmax));
    det(vmax > std::max(c, base) + 0.05, "two-point capped-sum witness",
        "upper_2(f OR 1/3) strictly exceeds 1/3 OR upper_2(f)", num_str(vmax));
  }
  {
    GroundSpace space(2, 1.0);
    MonotoneMeasure mu = MonotoneMeasure::table(space, {0.0, 0.25, 0.25, 1.0});
    LevelFunction f(space, {0.25, 0.75});
    const CombineMap& plus = by_name(links1, "plus");
    const double c = 1.0 / 3.0;
    double base = lower_n(mu, f, plus, 2);
    det(near(base, 0.5, 1e-12), "two-point additive-link witness",
        "lower_2 == 1/2", num_str(base));
    double vmax = lower_n(mu, fn_map(f, [&](double v) { return std::max(c, v); }), plus, 2);
    det(near(vmax, 7.0 / 12.0, 1e-12), "two-point additive-link witness",
        "lower_2(f OR 1/3) == 7/12", num_str(vmax));
    det(vmax > std::max(c, base) + 0.05, "two-point additive-link witness",
        "lower_2(f OR 1/3) strictly exceeds 1/3 OR lower_2(f)", num_str(vmax));
  }
  {
    GroundSpace space(2, 1.0);
    MonotoneMeasure mu = MonotoneMeasure::table(space, {0.0, 0.5, 0.5, 1.0});
    LevelFunction f(space, {0.5, 0.0});
    const CombineMap& times = by_name(links1, "times");
    double base = lower_n(mu, f, times, 2);
    det(near(base, 0.25, 1e-12), "product-link witness", "lower_2 == 1/4",
        num_str(base));
    double clipped = lower_n(mu, fn_map(f, [](double v) { return std::min(0.1, v); }),
                             times, 2);
    det(near(clipped, 0.05, 1e-12), "product-link witness",
        "lower_2(f AND 0.1) == 0.05", num_str(clipped));
    det(clipped < std::min(0.1, base) - 0.02, "product-link witness",
        "clipping can land strictly below the clipped value", num_str(clipped));
  }

  // The sufficient condition for min-homogeneity of the lower integral holds
  // exactly on a grid for the links used below, and fails for owa.
  {
    std::vector<double> bs;
    for (int k = 0; k <= 16; ++k) bs.push_back(k / 8.0);
    auto condition_holds = [&](const CombineMap& lk) {
      for (double a : lattice1)
        for (double c : lattice1)
          for (double b : bs)
            if (std::min(a, lk(b, std::min(a, c))) != std::min(a, lk(b, c)))
              return false;
      return true;
    };
    for (const char* nm : {"plus", "max", "pnorm", "min"})
      det(condition_holds(by_name(links1, nm)), std::string("link ") + nm,
          "a AND (b * (a AND c)) == a AND (b * c) on the grid", "violated");
    det(!condition_holds(by_name(links1, "owa")), "link owa(p=0.3)",
        "the clipping condition must fail for a strict convex mix",
        "grid check unexpectedly passed");
  }

  // Randomized core: measure axioms, level measures, monotonicity in f and
  // mu, indicator identities, zero propagation, and the candidate bound.
  run_trials(rep, opt, 11, [&](long long t, std::mt19937_64& rng,
                               VerificationReport& local) {
    const int m = rnd_int(rng, 2, 6);
    GroundSpace space(m, 1.0);
    MonotoneMeasure mu = random_monotone_table(rng, space, false, 2.0);
    LevelFunction f = random_function(rng, space);
    const CombineMap& ring = fusions1[static_cast<std::size_t>(t) % fusions1.size()];
    const CombineMap& link = links1[static_cast<std::size_t>(t) % links1.size()];
    const int n = rnd_int(rng, 2, 4);
    const std::string inst = instance_str(mu, f) + " ring=" + ring.spec_string() +
                             " link=" + link.spec_string() +
                             " n=" + std::to_string(n);
    auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
      if (!ok) local.fail(t, inst, rel, obs);
    };

    fold(local, validate_monotone(mu), t, "generated table " + measure_str(mu));

    // Level measures: nonincreasing in the threshold, strict form agrees off
    // the value set and never exceeds the non-strict form on it.
    std::vector<double> cands = f.values();
    cands.push_back(0.0);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    double prev = mu.whole_space();
    for (double tv : cands) {
      double lv = level_measure(mu, f, tv);
      expect(lv <= prev, "level measure nonincreasing in the threshold",
             num_str(lv) + " after " + num_str(prev) + " at t=" + num_str(tv));
      expect(level_measure(mu, f, tv, true) <= lv,
             "strict level measure bounded by the non-strict one",
             "at t=" + num_str(tv));
      prev = lv;
    }
    for (std::size_t i = 0; i + 1 < cands.size(); ++i) {
      double mid = cands[i] + (cands[i + 1] - cands[i]) / 2.0;
      if (mid == cands[i] || mid == cands[i + 1]) continue;
      expect(level_measure(mu, f, mid, false) == level_measure(mu, f, mid, true),
             "strict and non-strict level measures agree off the value set",
             "at t=" + num_str(mid));
    }

    // Monotonicity in the function (pointwise domination) and reflexivity /
    // transitivity of the domination order.
    LevelFunction g = fn_zip(f, random_function(rng, space),
                             [](double a, double b) { return std::max(a, b); });
    LevelFunction h = fn_zip(g, random_function(rng, space),
                             [](double a, double b) { return std::max(a, b); });
    expect(dominates(mu, f, f), "domination is reflexive", "f !<= f");
    expect(dominates(mu, f, g), "pointwise larger implies dominated", "f !<= f OR g2");
    expect(dominates(mu, f, h), "domination chains compose", "f !<= h");
    expect(sugeno(mu, g) >= sugeno(mu, f) - kEvalTol,
           "Sugeno value monotone in f", num_str(sugeno(mu, f)) + " vs " + num_str(sugeno(mu, g)));
    expect(upper_n(mu, g, ring, n) >= upper_n(mu, f, ring, n) - kEvalTol,
           "upper value monotone in f",
           num_str(upper_n(mu, f, ring, n)) + " vs " + num_str(upper_n(mu, g, ring, n)));
    expect(lower_n(mu, g, link, n) >= lower_n(mu, f, link, n) - kEvalTol,
           "lower value monotone in f",
           num_str(lower_n(mu, f, link, n)) + " vs " + num_str(lower_n(mu, g, link, n)));

    // Monotonicity in the measure.
    {
      MonotoneMeasure rho = random_monotone_table(rng, space, false, 1.0);
      std::vector<double> sum = mu.raw_values();
      const std::vector<double>& add = rho.raw_values();
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += add[i];
      MonotoneMeasure nu = MonotoneMeasure::table(space, std::move(sum));
      expect(sugeno(nu, f) >= sugeno(mu, f) - kEvalTol,
             "Sugeno value monotone in mu", num_str(sugeno(nu, f)));
      expect(upper_n(nu, f, ring, n) >= upper_n(mu, f, ring, n) - kEvalTol,
             "upper value monotone in mu", num_str(upper_n(nu, f, ring, n)));
      expect(lower_n(nu, f, link, n) >= lower_n(mu, f, link, n) - kEvalTol,
             "lower value monotone in mu", num_str(lower_n(nu, f, link, n)));
    }

    // Indicator functions reduce to the scalar level recursion, exactly.
    {
      Subset A = static_cast<Subset>(
          rnd_int(rng, 1, static_cast<int>(space.full_mask())));
      double a = rnd_lattice(rng, 1.0);
      LevelFunction ind = LevelFunction::indicator(space, A, a);
      double up = upper_n(mu, ind, ring, n);
      double upRef = indicator_level(ring, IntegralSpec::Kind::upper, a, mu(A), n);
      expect(up == upRef,
             "upper value of an indicator equals the scalar level recursion",
             num_str(up) + " vs " + num_str(upRef) + " (a=" + num_str(a) +
                 ", A=" + mask_str(A, m) + ")");
      double lo = lower_n(mu, ind, link, n);
      double loRef = indicator_level(link, IntegralSpec::Kind::lower, a, mu(A), n);
      expect(lo == loRef,
             "lower value of an indicator equals the scalar level recursion",
             num_str(lo) + " vs " + num_str(loRef) + " (a=" + num_str(a) +
                 ", A=" + mask_str(A, m) + ")");
    }

    // Null zones and the zero function force the value zero.
    {
      Subset full = space.full_mask();
      Subset zone = static_cast<Subset>(rnd_int(rng, 1, static_cast<int>(full) - 1));
      std::vector<double> zvals = mu.raw_values();
      for (Subset s = zone;; s = (s - 1) & zone) {
        zvals[s] = 0.0;
        if (s == 0) break;
      }
      MonotoneMeasure muz = MonotoneMeasure::table(space, std::move(zvals));
      Subset B = zone & static_cast<Subset>(rnd_int(rng, 1, static_cast<int>(full)));
      if (B == 0) B = zone;
      LevelFunction indz = LevelFunction::indicator(space, B, 1.0);
      expect(sugeno(muz, indz) == 0.0, "indicators of null sets integrate to zero",
             num_str(sugeno(muz, indz)));
      expect(upper_n(muz, indz, ring, n) == 0.0,
             "upper value vanishes on null supports", num_str(upper_n(muz, indz, ring, n)));
      expect(lower_n(muz, indz, link, n) == 0.0,
             "lower value vanishes on null supports", num_str(lower_n(muz, indz, link, n)));
      LevelFunction zero = LevelFunction::constant(space, 0.0);
      expect(upper_n(mu, zero, ring, n) == 0.0 && lower_n(mu, zero, link, n) == 0.0,
             "the zero function integrates to zero", "nonzero value");
    }

    // Candidates strictly above the Sugeno value exceed their level measure;
    // candidates strictly below stay under it.
    {
      double su = sugeno(mu, f);
      for (double tv : cands) {
        double lv = level_measure(mu, f, tv);
        if (tv > su)
          expect(tv > lv, "candidates above the value exceed their level measure",
                 "t=" + num_str(tv) + " mu_t=" + num_str(lv) + " value=" + num_str(su));
        else if (tv < su)
          expect(tv < lv, "candidates below the value stay under their level measure",
                 "t=" + num_str(tv) + " mu_t=" + num_str(lv) + " value=" + num_str(su));
      }
    }

    // Iterated link applications of an additive link are exact multiples.
    {
      const CombineMap& plus = by_name(links1, "plus");
      Subset A = static_cast<Subset>(
          rnd_int(rng, 1, static_cast<int>(space.full_mask())));
      int reps = rnd_int(rng, 2, 6);
      double it = star_iterate(mu, plus, reps, A);
      expect(it == reps * mu(A), "iterated additive link is an exact multiple",
             num_str(it) + " vs " + num_str(reps * mu(A)));
    }
  });

  // Randomized algebra: scaling, measure recovery, constant-function
  // characterizations, and the homogeneity laws.
  const CombineMap plusFInf = make_map(std::string("plus"), MapKind::fusion, kInf);
  const CombineMap plusLInf = make_map(std::string("plus"), MapKind::link, kInf);
  run_trials(rep, opt, 12, [&](long long t, std::mt19937_64& rng,
                               VerificationReport& local) {
    const int m = rnd_int(rng, 2, 6);
    GroundSpace space(m, 1.0);
    const CombineMap& ring = fusions1[static_cast<std::size_t>(t) % fusions1.size()];
    const CombineMap& link = links1[static_cast<std::size_t>(t) % links1.size()];
    const int n = rnd_int(rng, 2, 4);

    // Scaling comparisons for the plain additive maps on the unbounded scale.
    {
      GroundSpace ispace(m, kInf);
      MonotoneMeasure imu = random_monotone_table(rng, ispace, true, 8.0);
      LevelFunction fi = random_function(rng, ispace);
      const std::string inst = instance_str(imu, fi);
      auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
        if (!ok) local.fail(t, inst, rel, obs);
      };
      double aUp = (t % 2) ? 2.0 : 4.0;
      double aDn = (t % 2) ? 0.5 : 0.25;
      int ns = rnd_int(rng, 1, 4);
      LevelFunction fUp = fn_map(fi, [&](double v) { return aUp * v; });
      LevelFunction fDn = fn_map(fi, [&](double v) { return aDn * v; });
      expect(upper_n(imu, fUp, plusFInf, ns) <=
                 aUp * upper_n(imu, fi, plusFInf, ns) + kEvalTol,
             "upper value sub-homogeneous for factors above one",
             num_str(upper_n(imu, fUp, plusFInf, ns)));
      expect(upper_n(imu, fDn, plusFInf, ns) >=
                 aDn * upper_n(imu, fi, plusFInf, ns) - kEvalTol,
             "upper value super-homogeneous for factors below one",
             num_str(upper_n(imu, fDn, plusFInf, ns)));
      expect(lower_n(imu, fUp, plusLInf, ns) <=
                 aUp * lower_n(imu, fi, plusLInf, ns) + kEvalTol,
             "lower value sub-homogeneous for factors above one",
             num_str(lower_n(imu, fUp, plusLInf, ns)));
      expect(lower_n(imu, fDn, plusLInf, ns) >=
                 aDn * lower_n(imu, fi, plusLInf, ns) - kEvalTol,
             "lower value super-homogeneous for factors below one",
             num_str(lower_n(imu, fDn, plusLInf, ns)));
    }

    // Top-height indicators recover the measure (upper, when the map keeps
    // the top level) and the iterated link values (lower, when they fit).
    {
      MonotoneMeasure mur = random_monotone_table(rng, space, false, 1.0);
      Subset A = static_cast<Subset>(
          rnd_int(rng, 1, static_cast<int>(space.full_mask())));
      LevelFunction top = LevelFunction::indicator(space, A, 1.0);
      const std::string inst = measure_str(mur) + " A=" + mask_str(A, m) +
                               " ring=" + ring.spec_string() +
                               " link=" + link.spec_string() +
                               " n=" + std::to_string(n);
      auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
        if (!ok) local.fail(t, inst, rel, obs);
      };
      bool keepsTop = true;
      for (double b : lattice1)
        if (!(ring(1.0, b) >= b)) {
          keepsTop = false;
          break;
        }
      if (keepsTop) {
        double up = upper_n(mur, top, ring, n);
        expect(up == mur(A), "top indicator recovers the measure",
               num_str(up) + " vs " + num_str(mur(A)));
      }
      double amax = 0.0;
      for (int k = 1; k <= n; ++k)
        amax = std::max(amax, star_iterate(mur, link, k, A));
      if (amax <= 1.0) {
        double lo = lower_n(mur, top, link, n);
        double ref = star_iterate(mur, link, n, A);
        expect(lo == ref, "top indicator recovers the iterated link value",
               num_str(lo) + " vs " + num_str(ref));
      }
    }

    // Constant functions are fixed for every order and every height exactly
    // when mu(X) covers the scale and the map fixes the diagonal.
    {
      MonotoneMeasure mur = random_monotone_table(rng, space, false, 1.0);
      MonotoneMeasure mutop = random_monotone_table_with_top(rng, space, 2.0, 1.0);
      for (const MonotoneMeasure* M : {&mur, &mutop}) {
        const std::string inst = measure_str(*M) + " ring=" + ring.spec_string() +
                                 " link=" + link.spec_string();
        auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
          if (!ok) local.fail(t, inst, rel, obs);
        };
        bool lhs = true;
        for (int nn : {1, 2, 3}) {
          for (double a : lattice1)
            if (upper_n(*M, LevelFunction::constant(space, a), ring, nn) != a) {
              lhs = false;
              break;
            }
          if (!lhs) break;
        }
        bool rhs = M->whole_space() >= 1.0;
        if (rhs)
          for (double a : lattice1)
            if (ring(a, a) != a) {
              rhs = false;
              break;
            }
        expect(lhs == rhs,
               "constants are fixed exactly when mu(X) covers the scale and "
               "the fusion map fixes the diagonal",
               std::string("integral says ") + (lhs ? "yes" : "no") +
                   ", algebra says " + (rhs ? "yes" : "no"));
        bool llhs = true;
        for (int nn : {1, 2, 3}) {
          for (double a : lattice1)
            if (lower_n(*M, LevelFunction::constant(space, a), link, nn) != a) {
              llhs = false;
              break;
            }
          if (!llhs) break;
        }
        bool lrhs = M->whole_space() >= 1.0;
        if (lrhs)
          for (double a : lattice1)
            if (!(link(M->whole_space(), a) >= a)) {
              lrhs = false;
              break;
            }
        expect(llhs == lrhs,
               "constants are fixed exactly when mu(X) covers the scale and "
               "the link lifts every height at mu(X)",
               std::string("integral says ") + (llhs ? "yes" : "no") +
                   ", algebra says " + (lrhs ? "yes" : "no"));
      }
    }

    // Homogeneity laws.
    {
      MonotoneMeasure mu = random_monotone_table(rng, space, false, 2.0);
      MonotoneMeasure mutop = random_monotone_table_with_top(rng, space, 2.0, 1.0);
      LevelFunction f = random_function(rng, space);
      double c = rnd_lattice(rng, 1.0);
      LevelFunction fAnd = fn_map(f, [&](double v) { return std::min(c, v); });
      LevelFunction fOr = fn_map(f, [&](double v) { return std::max(c, v); });
      const std::string inst = instance_str(mu, f) + " c=" + num_str(c) +
                               " n=" + std::to_string(n);
      auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
        if (!ok) local.fail(t, inst, rel, obs);
      };

      for (const char* nm : {"min", "max"}) {
        const CombineMap& lat = by_name(fusions1, nm);
        double both = upper_n(mu, fAnd, lat, n);
        double one = std::min(c, upper_n(mu, f, lat, n));
        expect(both == one,
               std::string("upper value min-homogeneous for lattice map ") + nm,
               num_str(both) + " vs " + num_str(one));
        double vor = upper_n(mutop, fOr, lat, n);
        double ref = std::max(c, upper_n(mutop, f, lat, n));
        expect(vor == ref,
               std::string("upper value max-homogeneous for lattice map ") + nm +
                   " under a covering measure",
               num_str(vor) + " vs " + num_str(ref));
      }

      for (const char* nm : {"plus", "max", "pnorm", "min"}) {
        const CombineMap& lk = by_name(links1, nm);
        double both = lower_n(mu, fAnd, lk, n);
        double one = std::min(c, lower_n(mu, f, lk, n));
        expect(both == one,
               std::string("lower value min-homogeneous for clipping link ") + nm,
               num_str(both) + " vs " + num_str(one));
      }

      for (const CombineMap& lk : links1) {
        if (!lk.has(kBoundedBetween)) continue;
        double vor = lower_n(mutop, fOr, lk, n);
        double ref = std::max(c, lower_n(mutop, f, lk, n));
        expect(near(vor, ref, 1e-12),
               "lower value max-homogeneous for averaging links under a "
               "covering measure (" + lk.spec_string() + ")",
               num_str(vor) + " vs " + num_str(ref));
      }
    }
  });

  return rep;
}

// ---------------------------------------------------------------------------
// equivalent-forms: the recurrences agree with the subset-supremum forms for
// every catalog map, and with the infimum forms for the continuous ones.
// ---------------------------------------------------------------------------
inline VerificationReport suite_equivalent_forms(const SuiteOptions& opt) {
  using namespace detail;
  VerificationReport rep;
  rep.suite = "equivalent-forms";

  const std::vector<CombineMap> fusions1 = fusion_catalog(1.0);
  const std::vector<CombineMap> links1 = link_catalog(1.0);
  const std::vector<CombineMap> fusionsInf = fusion_catalog(kInf);
  const std::vector<CombineMap> linksInf = link_catalog(kInf);

  auto det = [&rep](bool ok, const std::string& inst, const std::string& rel,
                    const std::string& obs) {
    ++rep.trials;
    if (!ok) rep.fail(-1, inst, rel, obs);
  };

  // Reference instance with a known value through every form.
  {
    GroundSpace space(2, 1.0);
    MonotoneMeasure mu = MonotoneMeasure::table(space, {0.0, 0.25, 0.5, 1.0});
    LevelFunction f(space, {0.25, 0.75});
    const CombineMap& pc = by_name(fusions1, "plus_capped");
    det(near(upper_n(mu, f, pc, 2), 0.75, 1e-12), "two-point reference",
        "recurrence == 3/4", num_str(upper_n(mu, f, pc, 2)));
    det(near(upper_n_setform(mu, f, pc, 2), 0.75, 1e-12), "two-point reference",
        "subset form == 3/4", num_str(upper_n_setform(mu, f, pc, 2)));
    det(near(upper_n_infform(mu, f, pc, 2), 0.75, 1e-12), "two-point reference",
        "infimum form == 3/4", num_str(upper_n_infform(mu, f, pc, 2)));
  }

  // The infimum forms reject maps that are not continuous in the first
  // argument instead of returning a wrong number.
  {
    GroundSpace space(2, 1.0);
    MonotoneMeasure mu = MonotoneMeasure::table(space, {0.0, 0.5, 0.5, 1.0});
    LevelFunction f = LevelFunction::constant(space, 0.5);
    CombineMap fl = make_map("unary(s=floor_linear,lambda=0.5)", MapKind::fusion, 1.0);
    bool threw = false;
    try {
      upper_n_infform(mu, f, fl, 2);
    } catch (const config_error&) {
      threw = true;
    }
    det(threw, "floor-rounded fusion map", "infimum form rejects discontinuous maps",
        "no exception");
    CombineMap fd = make_map("unary(s=floor_div,alpha=2)", MapKind::link, 1.0);
    threw = false;
    try {
      lower_n_infform(mu, f, fd, 2);
    } catch (const config_error&) {
      threw = true;
    }
    det(threw, "floor-rounded link map", "infimum form rejects discontinuous maps",
        "no exception");
  }

  run_trials(rep, opt, 21, [&](long long t, std::mt19937_64& rng,
                               VerificationReport& local) {
    const bool infworld = (t % 2) == 1;
    const int m = rnd_int(rng, 2, 6);
    GroundSpace space(m, infworld ? kInf : 1.0);
    MonotoneMeasure mu = infworld
                             ? random_monotone_table(rng, space, true, 8.0)
                             : random_monotone_table(rng, space, false, 2.0);
    LevelFunction f = random_function(rng, space);
    const int n = rnd_int(rng, 2, 4);
    const auto& fus = infworld ? fusionsInf : fusions1;
    const auto& lnk = infworld ? linksInf : links1;
    const std::string inst = instance_str(mu, f) + " n=" + std::to_string(n);
    auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
      if (!ok) local.fail(t, inst, rel, obs);
    };

    for (const CombineMap& ring : fus) {
      double rec = upper_n(mu, f, ring, n);
      double setf = upper_n_setform(mu, f, ring, n);
      expect(near(rec, setf, 1e-12),
             "upper recurrence == subset form (" + ring.spec_string() + ")",
             num_str(rec) + " vs " + num_str(setf));
      if (ring.has(kContinuousFirstArg)) {
        double inff = upper_n_infform(mu, f, ring, n);
        expect(near(rec, inff, 1e-12),
               "upper recurrence == infimum form (" + ring.spec_string() + ")",
               num_str(rec) + " vs " + num_str(inff));
      }
    }
    for (const CombineMap& link : lnk) {
      double rec = lower_n(mu, f, link, n);
      double setf = lower_n_setform(mu, f, link, n);
      expect(near(rec, setf, 1e-12),
             "lower recurrence == subset form (" + link.spec_string() + ")",
             num_str(rec) + " vs " + num_str(setf));
      if (link.has(kContinuousFirstArg)) {
        double inff = lower_n_infform(mu, f, link, n);
        expect(near(rec, inff, 1e-12),
               "lower recurrence == infimum form (" + link.spec_string() + ")",
               num_str(rec) + " vs " + num_str(inff));
      }
    }
  });

  return rep;
}

// ---------------------------------------------------------------------------
// monotone-sequence: maps with the geq_min flag produce nondecreasing iterate
// sequences; the product map is the documented counterexample; detected
// fixpoints really are fixpoints.
// ---------------------------------------------------------------------------
inline VerificationReport suite_monotone_sequence(const SuiteOptions& opt) {
  using namespace detail;
  VerificationReport rep;
  rep.suite = "monotone-sequence";

  const std::vector<CombineMap> fusions1 = fusion_catalog(1.0);
  const std::vector<CombineMap> links1 = link_catalog(1.0);
  const std::vector<CombineMap> fusionsInf = fusion_catalog(kInf);
  const std::vector<CombineMap> linksInf = link_catalog(kInf);

  auto det = [&rep](bool ok, const std::string& inst, const std::string& rel,
                    const std::string& obs) {
    ++rep.trials;
    if (!ok) rep.fail(-1, inst, rel, obs);
  };

  // The product map shrinks a half-height indicator: S_2 = 1/4 < 1/2 = S_1.
  {
    GroundSpace space(2, 1.0);
    MonotoneMeasure mu = MonotoneMeasure::table(space, {0.0, 0.5, 0.5, 1.0});
    LevelFunction f(space, {0.5, 0.0});
    const CombineMap& times = by_name(fusions1, "times");
    det(!times.has(kGeqMin), "times", "the product map does not claim geq_min",
        "flag set");
    double s1 = upper_n(mu, f, times, 1);
    double s2 = upper_n(mu, f, times, 2);
    det(s1 == 0.5 && s2 == 0.25 && s2 < s1, "half-height indicator, product map",
        "iterate sequence strictly decreases (witness)",
        num_str(s1) + " then " + num_str(s2));
  }

  run_trials(rep, opt, 31, [&](long long t, std::mt19937_64& rng,
                               VerificationReport& local) {
    const bool infworld = (t % 2) == 1;
    const int m = rnd_int(rng, 2, 6);
    GroundSpace space(m, infworld ? kInf : 1.0);
    MonotoneMeasure mu = infworld
                             ? random_monotone_table(rng, space, true, 8.0)
                             : random_monotone_table(rng, space, false, 2.0);
    LevelFunction f = random_function(rng, space);
    const std::string inst = instance_str(mu, f);
    auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
      if (!ok) local.fail(t, inst, rel, obs);
    };

    const auto& fus = infworld ? fusionsInf : fusions1;
    const auto& lnk = infworld ? linksInf : links1;
    for (const CombineMap& ring : fus) {
      if (!ring.has(kGeqMin)) continue;
      EvalTrace tr;
      upper_n(mu, f, ring, 6, &tr);
      for (std::size_t i = 0; i + 1 < tr.levels.size(); ++i)
        expect(tr.levels[i + 1] >= tr.levels[i] - kEvalTol,
               "upper iterates nondecreasing (" + ring.spec_string() + ")",
               num_str(tr.levels[i]) + " then " + num_str(tr.levels[i + 1]));
    }
    for (const CombineMap& link : lnk) {
      if (!link.has(kGeqMin)) continue;
      EvalTrace tr;
      lower_n(mu, f, link, 6, &tr);
      for (std::size_t i = 0; i + 1 < tr.levels.size(); ++i)
        expect(tr.levels[i + 1] >= tr.levels[i] - kEvalTol,
               "lower iterates nondecreasing (" + link.spec_string() + ")",
               num_str(tr.levels[i]) + " then " + num_str(tr.levels[i + 1]));
    }

    // A detected fixpoint reproduces itself one step further on.
    {
      std::vector<const CombineMap*> geq;
      for (const CombineMap& ring : fus)
        if (ring.has(kGeqMin)) geq.push_back(&ring);
      const CombineMap& ring = *geq[static_cast<std::size_t>(t) % geq.size()];
      LimitResult lr = limit_value(mu, f, ring, IntegralSpec::Kind::upper, 64);
      if (lr.converged) {
        double again = upper_n(mu, f, ring, lr.n_at_fixpoint + 1);
        expect(again == lr.value,
               "limit value is a fixpoint (" + ring.spec_string() + ")",
               num_str(lr.value) + " then " + num_str(again));
      }
      if (infworld && ring.name() == "plus")
        expect(lr.converged, "integer instances reach their limit within the cap",
               "no fixpoint by n=64");
    }

    // Converse witness family: the product map strictly decreases whenever
    // the support has positive measure and the height is below one.
    if (!infworld) {
      const CombineMap& times = by_name(fusions1, "times");
      Subset A = static_cast<Subset>(
          rnd_int(rng, 1, static_cast<int>(space.full_mask())));
      double c = rnd_int(rng, 2, 6) / 8.0;
      if (mu(A) > 0.0) {
        LevelFunction ind = LevelFunction::indicator(space, A, c);
        double s1 = upper_n(mu, ind, times, 1);
        double s2 = upper_n(mu, ind, times, 2);
        expect(s2 < s1,
               "product map strictly decreases on positive-measure indicators",
               num_str(s1) + " then " + num_str(s2) + " (A=" + mask_str(A, m) +
                   ", c=" + num_str(c) + ")");
      }
    }
  });

  return rep;
}

// ---------------------------------------------------------------------------
// subadditivity: capped-sum upper values and additive lower values are
// subadditive for subadditive measures and for comonotone pairs, and every
// subadditivity violation of the measure produces a strict counterexample.
// ---------------------------------------------------------------------------
inline VerificationReport suite_subadditivity(const SuiteOptions& opt) {
  using namespace detail;
  VerificationReport rep;
  rep.suite = "subadditivity";

  const CombineMap pc1 = make_map(std::string("plus_capped"), MapKind::fusion, 1.0);
  const CombineMap plusLInf = make_map(std::string("plus"), MapKind::link, kInf);

  run_trials(rep, opt, 41, [&](long long t, std::mt19937_64& rng,
                               VerificationReport& local) {
    const int m = rnd_int(rng, 2, 5);
    GroundSpace s1(m, 1.0);
    GroundSpace si(m, kInf);
    const int n = rnd_int(rng, 1, 4);

    // Subadditive measures keep the capped-sum upper value subadditive.
    {
      MonotoneMeasure msub = random_subadditive(rng, s1, 1.0);
      auto [f, g] = random_summable_pair(rng, s1);
      LevelFunction fg = fn_zip(f, g, [](double a, double b) { return a + b; });
      const std::string inst = instance_str(msub, f) + " g=" + vec_str(g.values()) +
                               " n=" + std::to_string(n);
      auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
        if (!ok) local.fail(t, inst, rel, obs);
      };
      expect(is_subadditive(msub).passed(), "generated measure is subadditive",
             "violation found");
      double both = upper_n(msub, fg, pc1, n);
      double split = upper_n(msub, f, pc1, n) + upper_n(msub, g, pc1, n);
      expect(both <= split + kEvalTol,
             "upper value subadditive for subadditive measures",
             num_str(both) + " vs " + num_str(split));
    }

    // Comonotone pairs keep it subadditive for every monotone measure.
    {
      MonotoneMeasure many = random_monotone_table(rng, s1, false, 1.0);
      auto [cf, cg] = random_comonotone_pair(rng, s1, 0.5);
      LevelFunction cfg = fn_zip(cf, cg, [](double a, double b) { return a + b; });
      const std::string inst = instance_str(many, cf) + " g=" + vec_str(cg.values()) +
                               " n=" + std::to_string(n);
      auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
        if (!ok) local.fail(t, inst, rel, obs);
      };
      double both = upper_n(many, cfg, pc1, n);
      double split = upper_n(many, cf, pc1, n) + upper_n(many, cg, pc1, n);
      expect(both <= split + kEvalTol,
             "upper value subadditive for comonotone arguments",
             num_str(both) + " vs " + num_str(split));
    }

    // Lower values with the additive link, on the unbounded scale.
    {
      MonotoneMeasure misub = random_subadditive(rng, si, 8.0);
      LevelFunction fi = random_function(rng, si);
      LevelFunction gi = random_function(rng, si);
      LevelFunction figi = fn_zip(fi, gi, [](double a, double b) { return a + b; });
      const std::string inst = instance_str(misub, fi) + " g=" + vec_str(gi.values()) +
                               " n=" + std::to_string(n);
      auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
        if (!ok) local.fail(t, inst, rel, obs);
      };
      double both = lower_n(misub, figi, plusLInf, n);
      double split =
          lower_n(misub, fi, plusLInf, n) + lower_n(misub, gi, plusLInf, n);
      expect(both <= split + kEvalTol,
             "lower value subadditive for subadditive measures",
             num_str(both) + " vs " + num_str(split));

      MonotoneMeasure mixx = random_monotone_table(rng, si, true, 8.0);
      auto [cfi, cgi] = random_comonotone_pair(rng, si, 8.0);
      LevelFunction cfgi = fn_zip(cfi, cgi, [](double a, double b) { return a + b; });
      double cboth = lower_n(mixx, cfgi, plusLInf, n);
      double csplit =
          lower_n(mixx, cfi, plusLInf, n) + lower_n(mixx, cgi, plusLInf, n);
      expect(cboth <= csplit + kEvalTol,
             "lower value subadditive for comonotone arguments",
             num_str(cboth) + " vs " + num_str(csplit));
    }

    // Converse: any violation of measure subadditivity yields disjoint
    // indicator witnesses with strictly superadditive values.
    {
      MonotoneMeasure bad = random_non_subadditive(rng, s1, 1.0);
      auto [found, AB] = find_subadditivity_violation(bad);
      for (int attempt = 0; attempt < 9 && !found; ++attempt) {
        bad = random_non_subadditive(rng, s1, 1.0);
        std::tie(found, AB) = find_subadditivity_violation(bad);
      }
      if (!found) {
        std::vector<double> gprof(static_cast<std::size_t>(m) + 1);
        for (int k = 0; k <= m; ++k)
          gprof[static_cast<std::size_t>(k)] =
              (static_cast<double>(k) / m) * (static_cast<double>(k) / m);
        bad = MonotoneMeasure::cardinality(s1, std::move(gprof));
        std::tie(found, AB) = find_subadditivity_violation(bad);
      }
      const std::string inst = measure_str(bad);
      auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
        if (!ok) local.fail(t, inst, rel, obs);
      };
      expect(found, "a violating pair exists for the convex families", "none found");
      if (found) {
        expect(!is_subadditive(bad).passed(),
               "the violation finder agrees with the checker", "checker passed");
        Subset A = AB.first;
        Subset Bd = AB.second & ~AB.first;
        expect(Bd != 0, "the violating pair has a disjoint remainder", "B within A");
        if (Bd != 0) {
          Subset C = A | Bd;
          for (int nn : {1, 2, 3}) {
            double u = upper_n(bad, LevelFunction::indicator(s1, C, 1.0), pc1, nn);
            double su = upper_n(bad, LevelFunction::indicator(s1, A, 1.0), pc1, nn) +
                        upper_n(bad, LevelFunction::indicator(s1, Bd, 1.0), pc1, nn);
            expect(u > su, "upper value strictly superadditive on the witness",
                   num_str(u) + " vs " + num_str(su) + " (n=" + std::to_string(nn) +
                       ", A=" + mask_str(A, m) + ", B=" + mask_str(Bd, m) + ")");
          }
        }
      }

      MonotoneMeasure badi = random_non_subadditive(rng, si, 8.0);
      auto [foundi, ABi] = find_subadditivity_violation(badi);
      for (int attempt = 0; attempt < 9 && !foundi; ++attempt) {
        badi = random_non_subadditive(rng, si, 8.0);
        std::tie(foundi, ABi) = find_subadditivity_violation(badi);
      }
      if (foundi) {
        Subset A = ABi.first;
        Subset Bd = ABi.second & ~ABi.first;
        if (Bd != 0) {
          Subset C = A | Bd;
          const std::string insti = measure_str(badi);
          auto expecti = [&](bool ok, const std::string& rel, const std::string& obs) {
            if (!ok) local.fail(t, insti, rel, obs);
          };
          for (int nn : {1, 2, 3}) {
            double a = 8.0 * nn;  // tall enough to saturate every iterate
            double u = lower_n(badi, LevelFunction::indicator(si, C, a), plusLInf, nn);
            double su =
                lower_n(badi, LevelFunction::indicator(si, A, a), plusLInf, nn) +
                lower_n(badi, LevelFunction::indicator(si, Bd, a), plusLInf, nn);
            expecti(u > su, "lower value strictly superadditive on the witness",
                    num_str(u) + " vs " + num_str(su) + " (n=" + std::to_string(nn) +
                        ", A=" + mask_str(A, m) + ", B=" + mask_str(Bd, m) + ")");
          }
        }
      }
    }
  });

  return rep;
}

// ---------------------------------------------------------------------------
// benvenuti: the additive-link lower recurrence against the independent chain
// search, the dual chain form, and the discretized reference instances with
// their closed-form limits.
// ---------------------------------------------------------------------------
inline VerificationReport suite_benvenuti(const SuiteOptions& opt) {
  using namespace detail;
  VerificationReport rep;
  rep.suite = "benvenuti";

  const CombineMap plusL1 = make_map(std::string("plus"), MapKind::link, 1.0);

  auto det = [&rep](bool ok, const std::string& inst, const std::string& rel,
                    const std::string& obs) {
    ++rep.trials;
    if (!ok) rep.fail(-1, inst, rel, obs);
  };

  // Frozen integer reference: citation record (6,6,4,3,1,1,1).
  {
    ScientificRecord x({6, 6, 4, 3, 1, 1, 1});
    MonotoneMeasure mu = record_measure(x);
    LevelFunction f = record_function(x);
    const std::string inst = "record (6,6,4,3,1,1,1)";
    double rec = benvenuti_plus_min(mu, f, 2);
    det(rec == 5.0, inst, "second-order value == 5", num_str(rec));
    BracketResult br = benvenuti_oracle(mu, f, 2, 6);
    det(br.value == 5.0, inst, "chain supremum == 5", num_str(br.value));
    BracketResult cq = lower_choquet_form(mu, f, 2, 6);
    det(cq.value == 5.0, inst, "dual chain form == 5", num_str(cq.value));
    double s = sugeno(mu, f);
    det(benvenuti_plus_min(mu, f, 1) == s && benvenuti_oracle(mu, f, 1, 6).value == s,
        inst, "first order collapses to the Sugeno value", num_str(s));
  }

  // Frozen two-point reference.
  {
    GroundSpace space(2, 1.0);
    MonotoneMeasure mu = MonotoneMeasure::table(space, {0.0, 0.25, 0.5, 1.0});
    LevelFunction f(space, {0.25, 0.75});
    const std::string inst = "two-point reference";
    double rec = benvenuti_plus_min(mu, f, 2);
    det(near(rec, 0.75, 1e-12), inst, "second-order value == 3/4", num_str(rec));
    BracketResult br = benvenuti_oracle(mu, f, 2, 256);
    det(near(br.value, 0.75, 1e-12), inst, "chain supremum == 3/4", num_str(br.value));
  }

  // Closed-form iterate sequences and their discretized counterparts.
  {
    auto sq = analytic_example_sequence(AnalyticKind::sqrt_measure, 4);
    auto qd = analytic_example_sequence(AnalyticKind::square_measure, 4);
    det(near(sq[0], (std::sqrt(5.0) - 1.0) / 2.0, 1e-15), "square-root profile",
        "first level == (sqrt 5 - 1)/2", num_str(sq[0]));
    det(near(sq[1], 0.9129969195, 1e-7), "square-root profile",
        "second level == 0.9129969...", num_str(sq[1]));
    det(near(qd[0], (3.0 - std::sqrt(5.0)) / 2.0, 1e-15), "squared profile",
        "first level == (3 - sqrt 5)/2", num_str(qd[0]));
    for (std::size_t i = 0; i + 1 < sq.size(); ++i) {
      det(sq[i + 1] >= sq[i], "square-root profile", "levels nondecreasing",
          num_str(sq[i]) + " then " + num_str(sq[i + 1]));
      det(qd[i + 1] >= qd[i], "squared profile", "levels nondecreasing",
          num_str(qd[i]) + " then " + num_str(qd[i + 1]));
    }

    const int M = 10000;
    GroundSpace big(M, 1.0);
    std::vector<double> fv(static_cast<std::size_t>(M));
    for (int i = 1; i <= M; ++i)
      fv[static_cast<std::size_t>(i - 1)] = static_cast<double>(i) / M;
    LevelFunction fbig(big, std::move(fv));
    std::vector<double> gs(static_cast<std::size_t>(M) + 1);
    for (int k = 0; k <= M; ++k)
      gs[static_cast<std::size_t>(k)] = std::sqrt(static_cast<double>(k) / M);
    MonotoneMeasure musq = MonotoneMeasure::cardinality(big, std::move(gs));
    EvalTrace tr;
    lower_n(musq, fbig, plusL1, 4, &tr);
    for (int k = 1; k <= 4; ++k)
      det(near(tr.levels[static_cast<std::size_t>(k - 1)],
               sq[static_cast<std::size_t>(k - 1)], 5e-3),
          "discretized square-root profile (10^4 points)",
          "level " + std::to_string(k) + " within 5e-3 of the closed form",
          num_str(tr.levels[static_cast<std::size_t>(k - 1)]) + " vs " +
              num_str(sq[static_cast<std::size_t>(k - 1)]));
    std::vector<double> gq(static_cast<std::size_t>(M) + 1);
    for (int k = 0; k <= M; ++k) {
      double r = static_cast<double>(k) / M;
      gq[static_cast<std::size_t>(k)] = r * r;
    }
    MonotoneMeasure muqd = MonotoneMeasure::cardinality(big, std::move(gq));
    EvalTrace tr2;
    lower_n(muqd, fbig, plusL1, 4, &tr2);
    for (int k = 1; k <= 4; ++k)
      det(near(tr2.levels[static_cast<std::size_t>(k - 1)],
               qd[static_cast<std::size_t>(k - 1)], 5e-3),
          "discretized squared profile (10^4 points)",
          "level " + std::to_string(k) + " within 5e-3 of the closed form",
          num_str(tr2.levels[static_cast<std::size_t>(k - 1)]) + " vs " +
              num_str(qd[static_cast<std::size_t>(k - 1)]));
  }

  run_trials(rep, opt, 51, [&](long long t, std::mt19937_64& rng,
                               VerificationReport& local) {
    const bool integer = (t % 2) == 0;
    if (integer) {
      const int m = rnd_int(rng, 2, 8);
      GroundSpace sp(m, kInf);
      MonotoneMeasure mu = (t % 4 == 0)
                               ? MonotoneMeasure::counting(sp)
                               : random_monotone_table(rng, sp, true, 12.0);
      LevelFunction f = random_integer_function(rng, sp, 12);
      const int n = rnd_int(rng, 1, 5);
      const std::string inst = instance_str(mu, f) + " n=" + std::to_string(n);
      auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
        if (!ok) local.fail(t, inst, rel, obs);
      };
      double ref = benvenuti_plus_min(mu, f, n);
      int res = std::max(1, static_cast<int>(f.max_value()));
      BracketResult br = benvenuti_oracle(mu, f, n, res);
      expect(br.value == ref,
             "chain supremum equals the recurrence on integer instances",
             num_str(br.value) + " vs " + num_str(ref));
      expect(chain_objective(mu, f, br.chain.levels) == br.value,
             "the returned chain reproduces its objective", num_str(br.value));
      BracketResult cq = lower_choquet_form(mu, f, n, res);
      expect(cq.value >= ref - 1e-12 &&
                 cq.value <= ref + n * cq.grid_step + 1e-12,
             "dual chain form brackets the value from above",
             num_str(cq.value) + " vs " + num_str(ref) + " step " +
                 num_str(cq.grid_step));
      if (n > 1)
        expect(benvenuti_plus_min(mu, f, n - 1) <= ref,
               "value nondecreasing in the order",
               num_str(benvenuti_plus_min(mu, f, n - 1)) + " vs " + num_str(ref));
      expect(benvenuti_plus_min(mu, f, 1) == sugeno(mu, f),
             "first order collapses to the Sugeno value", num_str(ref));
    } else {
      const int m = rnd_int(rng, 2, 6);
      GroundSpace sp(m, 1.0);
      MonotoneMeasure mu = random_monotone_table(rng, sp, false, 2.0);
      LevelFunction f = random_function(rng, sp);
      const int n = rnd_int(rng, 1, 4);
      const std::string inst = instance_str(mu, f) + " n=" + std::to_string(n);
      auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
        if (!ok) local.fail(t, inst, rel, obs);
      };
      double ref = benvenuti_plus_min(mu, f, n);
      BracketResult br = benvenuti_oracle(mu, f, n, 256);
      expect(br.value <= ref + 1e-12 &&
                 br.value >= ref - n * br.grid_step - 1e-12,
             "chain supremum brackets the value from below",
             num_str(br.value) + " vs " + num_str(ref) + " step " +
                 num_str(br.grid_step));
      expect(near(chain_objective(mu, f, br.chain.levels), br.value, 1e-12),
             "the returned chain reproduces its objective", num_str(br.value));
      BracketResult cq = lower_choquet_form(mu, f, n, 256);
      expect(cq.value >= ref - 1e-12 &&
                 cq.value <= ref + n * cq.grid_step + 1e-12,
             "dual chain form brackets the value from above",
             num_str(cq.value) + " vs " + num_str(ref) + " step " +
                 num_str(cq.grid_step));
      expect(benvenuti_plus_min(mu, f, 1) == sugeno(mu, f),
             "first order collapses to the Sugeno value",
             num_str(benvenuti_plus_min(mu, f, 1)));
      EvalTrace tr;
      lower_n(mu, f, plusL1, 4, &tr);
      for (std::size_t i = 0; i + 1 < tr.levels.size(); ++i)
        expect(tr.levels[i + 1] >= tr.levels[i] - kEvalTol,
               "additive-link iterates nondecreasing",
               num_str(tr.levels[i]) + " then " + num_str(tr.levels[i + 1]));
    }
  });

  return rep;
}

// ---------------------------------------------------------------------------
// scientometrics: the index family against its integral representations,
// conjugation dualities, and the limit indices.
// ---------------------------------------------------------------------------
inline VerificationReport suite_scientometrics(const SuiteOptions& opt) {
  using namespace detail;
  VerificationReport rep;
  rep.suite = "scientometrics";

  const CombineMap plusF = make_map(std::string("plus"), MapKind::fusion, kInf);
  const CombineMap plusL = make_map(std::string("plus"), MapKind::link, kInf);
  const CombineMap lin2F = make_unary_map(UnaryFn::linear(2.0), MapKind::fusion, kInf);
  const CombineMap lin2L = make_unary_map(UnaryFn::linear(2.0), MapKind::link, kInf);
  const CombineMap sqF = make_unary_map(UnaryFn::square(), MapKind::fusion, kInf);
  const CombineMap sqL = make_unary_map(UnaryFn::square(), MapKind::link, kInf);
  const CombineMap fdiv2F = make_unary_map(UnaryFn::floor_div(2.0), MapKind::fusion, kInf);
  const CombineMap fdiv2L = make_unary_map(UnaryFn::floor_div(2.0), MapKind::link, kInf);

  // Inverse stages used by the counting-style index identities.
  struct StagePair {
    UnaryFn s;          // the stage defining the index
    UnaryFn inv;        // its continuous inverse
    CombineMap floorInvF;  // floored inverse, fusion role
    CombineMap contInvF;   // continuous inverse, fusion role
    CombineMap stageL;     // the stage itself, link role
  };
  auto floored = [](UnaryFn u) {
    u.round = UnaryFn::Round::down;
    return u;
  };
  std::vector<StagePair> stages;
  for (auto& [s, inv] : std::vector<std::pair<UnaryFn, UnaryFn>>{
           {UnaryFn::square(), UnaryFn::sqrt_fn()},
           {UnaryFn::linear(2.0), UnaryFn::divide(2.0)},
           {UnaryFn::linear(3.0), UnaryFn::divide(3.0)}}) {
    stages.push_back({s, inv,
                      make_unary_map(floored(inv), MapKind::fusion, kInf),
                      make_unary_map(inv, MapKind::fusion, kInf),
                      make_unary_map(s, MapKind::link, kInf)});
  }
  std::vector<CombineMap> fdivF, cdivL;
  for (double a : {1.0, 2.0, 3.0}) {
    fdivF.push_back(make_unary_map(UnaryFn::floor_div(a), MapKind::fusion, kInf));
    cdivL.push_back(make_unary_map(UnaryFn::ceil_div(a), MapKind::link, kInf));
  }

  auto det = [&rep](bool ok, const std::string& inst, const std::string& rel,
                    const std::string& obs) {
    ++rep.trials;
    if (!ok) rep.fail(-1, inst, rel, obs);
  };

  // Frozen reference record.
  {
    ScientificRecord x({6, 6, 4, 3, 1, 1, 1});
    const std::string inst = "record (6,6,4,3,1,1,1)";
    det(h_index(x) == 3, inst, "h == 3", std::to_string(h_index(x)));
    det(two_h_lower(x) == 4, inst, "lower second-order index == 4",
        std::to_string(two_h_lower(x)));
    det(two_h_upper(x) == 5, inst, "upper second-order index == 5",
        std::to_string(two_h_upper(x)));
    det(p_index(x) == 7 && c_index(x) == 6 && s_index(x) == 22, inst,
        "p == 7, c == 6, s == 22",
        std::to_string(p_index(x)) + "," + std::to_string(c_index(x)) + "," +
            std::to_string(s_index(x)));
    ScientificRecord cj = conjugate(x);
    det(cj.citations() == std::vector<long long>({7, 4, 4, 3, 2, 2}), inst,
        "conjugate == (7,4,4,3,2,2)", "mismatch");
    det(conjugate(cj).citations() == x.citations(), inst,
        "conjugation is an involution", "mismatch");
    det(record_upper_n(x, plusF, 2) == 4.0 && record_lower_n(x, plusL, 2) == 5.0,
        inst, "second-order additive values == 4 (upper) and 5 (lower)",
        num_str(record_upper_n(x, plusF, 2)) + "," +
            num_str(record_lower_n(x, plusL, 2)));
    det(record_upper_n(cj, plusF, 2) == 5.0 && record_lower_n(cj, plusL, 2) == 4.0,
        inst, "conjugate swaps the two second-order additive values",
        num_str(record_upper_n(cj, plusF, 2)) + "," +
            num_str(record_lower_n(cj, plusL, 2)));
    std::vector<long long> ih = iterated_h(x, 6);
    det(ih == std::vector<long long>({3, 1, 1, 1, 1, 0}), inst,
        "iterated h-vector == (3,1,1,1,1,0)", "mismatch");
    long long acc = 0;
    bool sums = true;
    for (int k = 1; k <= 6; ++k) {
      acc += ih[static_cast<std::size_t>(k - 1)];
      sums = sums && (record_upper_n(x, plusF, k) == static_cast<double>(acc));
    }
    det(sums, inst, "prefix sums of the iterated h-vector match the upper values",
        "mismatch");
    // The opposite pairing must fail on this record: the lower value is not
    // the prefix sum, and the two limits are not swapped.
    det(record_lower_n(x, plusL, 2) != static_cast<double>(ih[0] + ih[1]), inst,
        "lower second-order value differs from the prefix sum (5 vs 4)",
        num_str(record_lower_n(x, plusL, 2)));
    LimitResult pu = limit_value(record_measure(x), record_function(x), plusF,
                                 IntegralSpec::Kind::upper, 64);
    LimitResult cl = limit_value(record_measure(x), record_function(x), plusL,
                                 IntegralSpec::Kind::lower, 64);
    det(pu.converged && pu.value == 7.0, inst, "upper limit == p == 7",
        num_str(pu.value));
    det(cl.converged && cl.value == 6.0, inst, "lower limit == c == 6",
        num_str(cl.value));
    det(pu.value != static_cast<double>(c_index(x)) &&
            cl.value != static_cast<double>(p_index(x)),
        inst, "the two limits are not interchangeable on this record",
        num_str(pu.value) + "," + num_str(cl.value));
    det(h_alpha(x, 1.0) == 3 && h_beta(x, 1.0) == 3, inst,
        "unit-slope variants collapse to h", "mismatch");
    det(h_alpha(x, 2.0) == 2 && h_beta(x, 2.0) == 2, inst,
        "slope-two variants == 2",
        std::to_string(h_alpha(x, 2.0)) + "," + std::to_string(h_beta(x, 2.0)));
    det(kosmulski(x, UnaryFn::square()) == 2, inst, "quadratic-threshold index == 2",
        std::to_string(kosmulski(x, UnaryFn::square())));
    det(kosmulski(x, UnaryFn::identity()) == 3, inst,
        "identity-threshold index collapses to h", "mismatch");
  }

  // Single-paper record and its conjugate: the two second-order values swap
  // and differ, so the pairing is genuinely asymmetric.
  {
    ScientificRecord x3({3});
    ScientificRecord cj = conjugate(x3);
    const std::string inst = "record (3) with doubling stage";
    det(cj.citations() == std::vector<long long>({1, 1, 1}), inst,
        "conjugate == (1,1,1)", "mismatch");
    double ux = record_upper_n(x3, lin2F, 2);
    double lx = record_lower_n(x3, lin2L, 2);
    double ucj = record_upper_n(cj, lin2F, 2);
    double lcj = record_lower_n(cj, lin2L, 2);
    det(ux == 1.0 && lcj == 1.0, inst, "upper(x) == lower(conjugate) == 1",
        num_str(ux) + "," + num_str(lcj));
    det(lx == 2.0 && ucj == 2.0, inst, "lower(x) == upper(conjugate) == 2",
        num_str(lx) + "," + num_str(ucj));
    det(ux != ucj, inst, "the upper value is not conjugation-invariant",
        num_str(ux) + " vs " + num_str(ucj));
  }

  // The two second-order indices are not comparable in general.
  {
    ScientificRecord ones({1, 1, 1});
    det(two_h_lower(ones) == 2 && two_h_upper(ones) == 1, "record (1,1,1)",
        "lower index 2 exceeds upper index 1 on this record",
        std::to_string(two_h_lower(ones)) + "," + std::to_string(two_h_upper(ones)));
  }

  // Degenerate and unsorted inputs.
  {
    ScientificRecord z({0, 0, 0});
    det(h_index(z) == 0 && p_index(z) == 0 && c_index(z) == 0 && s_index(z) == 0 &&
            two_h_upper(z) == 0 && two_h_lower(z) == 0,
        "all-zero record", "every index vanishes", "nonzero index");
    det(conjugate(z).citations().empty(), "all-zero record",
        "conjugate is empty", "nonempty");
    ScientificRecord u({1, 3, 2});
    det(!u.was_sorted_input() &&
            u.citations() == std::vector<long long>({3, 2, 1}),
        "record (1,3,2)", "input is sorted on construction", "mismatch");
    det(h_index(ScientificRecord({5, 4, 3, 2, 1})) == 3, "record (5,4,3,2,1)",
        "h == 3", "mismatch");
  }

  run_trials(rep, opt, 61, [&](long long t, std::mt19937_64& rng,
                               VerificationReport& local) {
    ScientificRecord x = random_record(rng);
    ScientificRecord cj = conjugate(x);
    std::string inst = "record (";
    for (std::size_t i = 0; i < x.citations().size(); ++i) {
      if (i) inst += ",";
      inst += std::to_string(x.citations()[i]);
    }
    inst += ")";
    auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
      if (!ok) local.fail(t, inst, rel, obs);
    };

    expect(h_index(x) == h_index(cj), "h is conjugation-invariant",
           std::to_string(h_index(x)) + " vs " + std::to_string(h_index(cj)));
    expect(conjugate(cj).citations() == x.citations(),
           "conjugation is an involution", "mismatch");

    long long h = h_index(x);
    long long hl = two_h_lower(x);
    long long hu = two_h_upper(x);
    expect(record_upper_n(x, plusF, 1) == static_cast<double>(h) &&
               record_lower_n(x, plusL, 1) == static_cast<double>(h),
           "first-order additive values collapse to h", num_str(record_upper_n(x, plusF, 1)));
    expect(record_upper_n(x, plusF, 2) == static_cast<double>(hl),
           "upper second-order additive value == lower second-order index",
           num_str(record_upper_n(x, plusF, 2)) + " vs " + std::to_string(hl));
    expect(record_lower_n(x, plusL, 2) == static_cast<double>(hu),
           "lower second-order additive value == upper second-order index",
           num_str(record_lower_n(x, plusL, 2)) + " vs " + std::to_string(hu));
    expect(record_lower_n(cj, plusL, 2) == static_cast<double>(hl) &&
               record_upper_n(cj, plusF, 2) == static_cast<double>(hu),
           "conjugation swaps the two second-order additive values",
           num_str(record_lower_n(cj, plusL, 2)) + "," +
               num_str(record_upper_n(cj, plusF, 2)));

    // Conjugation swaps the two values for any nondecreasing stage.
    for (const CombineMap* sF : {&lin2F, &sqF, &fdiv2F}) {
      const CombineMap* sL = sF == &lin2F ? &lin2L : (sF == &sqF ? &sqL : &fdiv2L);
      expect(record_upper_n(x, *sF, 2) == record_lower_n(cj, *sL, 2),
             "upper(x) == lower(conjugate) for stage " + sF->spec_string(),
             num_str(record_upper_n(x, *sF, 2)) + " vs " +
                 num_str(record_lower_n(cj, *sL, 2)));
      expect(record_lower_n(x, *sL, 2) == record_upper_n(cj, *sF, 2),
             "lower(x) == upper(conjugate) for stage " + sF->spec_string(),
             num_str(record_lower_n(x, *sL, 2)) + " vs " +
                 num_str(record_upper_n(cj, *sF, 2)));
    }

    // Counting-style indices through their integral representations.
    for (const StagePair& sp : stages) {
      long long k = kosmulski(x, sp.s);
      expect(static_cast<double>(k) == record_upper_n(x, sp.floorInvF, 2),
             "threshold index equals the floored-inverse upper value (" +
                 sp.stageL.spec_string() + ")",
             std::to_string(k) + " vs " + num_str(record_upper_n(x, sp.floorInvF, 2)));
      expect(static_cast<double>(k) ==
                 std::floor(record_upper_n(x, sp.contInvF, 2)),
             "threshold index equals the floored continuous-inverse upper value",
             std::to_string(k) + " vs " + num_str(record_upper_n(x, sp.contInvF, 2)));
      expect(static_cast<double>(k) ==
                 std::floor(sp.inv(record_lower_n(x, sp.stageL, 2))),
             "threshold index recovered from the lower value through the inverse",
             std::to_string(k) + " vs " +
                 num_str(sp.inv(record_lower_n(x, sp.stageL, 2))));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      double alpha = static_cast<double>(i + 1);
      expect(static_cast<double>(h_alpha(x, alpha)) ==
                 record_upper_n(x, fdivF[i], 2),
             "slope index equals the floored-ratio upper value (alpha=" +
                 num_str(alpha) + ")",
             std::to_string(h_alpha(x, alpha)) + " vs " +
                 num_str(record_upper_n(x, fdivF[i], 2)));
      expect(static_cast<double>(h_beta(x, alpha)) ==
                 record_lower_n(x, cdivL[i], 2),
             "slope index equals the ceiled-ratio lower value (beta=" +
                 num_str(alpha) + ")",
             std::to_string(h_beta(x, alpha)) + " vs " +
                 num_str(record_lower_n(x, cdivL[i], 2)));
    }

    // Iterated h-vector prefix sums, the limits, and the index chains.
    std::vector<long long> ih = iterated_h(x, 6);
    long long acc = 0;
    for (int k = 1; k <= 6; ++k) {
      acc += ih[static_cast<std::size_t>(k - 1)];
      expect(record_upper_n(x, plusF, k) == static_cast<double>(acc),
             "prefix sums of the iterated h-vector match the upper values",
             num_str(record_upper_n(x, plusF, k)) + " vs " + std::to_string(acc) +
                 " at n=" + std::to_string(k));
    }
    LimitResult pu = limit_value(record_measure(x), record_function(x), plusF,
                                 IntegralSpec::Kind::upper, 64);
    LimitResult cl = limit_value(record_measure(x), record_function(x), plusL,
                                 IntegralSpec::Kind::lower, 64);
    expect(pu.converged && pu.value == static_cast<double>(p_index(x)),
           "the upper additive limit is the paper count", num_str(pu.value));
    expect(cl.converged && cl.value == static_cast<double>(c_index(x)),
           "the lower additive limit is the top citation count", num_str(cl.value));
    expect(h <= hl && hl <= p_index(x), "h <= lower second-order index <= p",
           std::to_string(h) + "," + std::to_string(hl) + "," +
               std::to_string(p_index(x)));
    expect(h <= hu && hu <= c_index(x), "h <= upper second-order index <= c",
           std::to_string(h) + "," + std::to_string(hu) + "," +
               std::to_string(c_index(x)));
  });

  return rep;
}

// ---------------------------------------------------------------------------
// aggregation: qualifying integral specs behave as idempotent-boundary
// monotone aggregation maps with the weighted max-min representation.
// ---------------------------------------------------------------------------
inline VerificationReport suite_aggregation(const SuiteOptions& opt) {
  using namespace detail;
  VerificationReport rep;
  rep.suite = "aggregation";

  const std::vector<CombineMap> fusions1 = fusion_catalog(1.0);
  const std::vector<CombineMap> links1 = link_catalog(1.0);
  std::vector<CombineMap> aggFus, aggLnk;
  for (const CombineMap& mp : fusions1)
    if (mp.has(kYbarAbsorbing)) aggFus.push_back(mp);
  for (const CombineMap& mp : links1)
    if (mp.has(kGeqMin)) aggLnk.push_back(mp);

  auto det = [&rep](bool ok, const std::string& inst, const std::string& rel,
                    const std::string& obs) {
    ++rep.trials;
    if (!ok) rep.fail(-1, inst, rel, obs);
  };

  // Reference instance: a concave cardinality profile on three points.
  {
    GroundSpace sp3(3, 1.0);
    MonotoneMeasure card =
        MonotoneMeasure::cardinality(sp3, {0.0, 0.5, 1.0, 1.0});
    IntegralSpec up;
    up.kind = IntegralSpec::Kind::upper;
    up.map = by_name(fusions1, "plus_capped");
    up.n = 2;
    fold(rep, check_aggregation(up, card, 200, 7), -1,
         "three-point concave profile, capped sum");
    IntegralSpec lo;
    lo.kind = IntegralSpec::Kind::lower;
    lo.map = by_name(links1, "max");
    lo.n = 2;
    fold(rep, check_aggregation(lo, card, 200, 7), -1,
         "three-point concave profile, max link");

    // Disqualified setups are rejected, not silently accepted.
    IntegralSpec badMap = up;
    badMap.map = by_name(fusions1, "scale");
    bool threw = false;
    try {
      check_aggregation(badMap, card, 8, 7);
    } catch (const config_error&) {
      threw = true;
    }
    det(threw, "scale(lambda=0.7) as aggregation map",
        "maps that shrink the top are rejected", "no exception");
    MonotoneMeasure low = MonotoneMeasure::cardinality(sp3, {0.0, 0.25, 0.5, 0.75});
    threw = false;
    try {
      check_aggregation(up, low, 8, 7);
    } catch (const config_error&) {
      threw = true;
    }
    det(threw, "measure with mu(X) < ybar",
        "non-covering measures are rejected", "no exception");
  }

  run_trials(rep, opt, 71, [&](long long t, std::mt19937_64& rng,
                               VerificationReport& local) {
    const int m = rnd_int(rng, 2, 5);
    GroundSpace sp(m, 1.0);
    MonotoneMeasure mu = random_monotone_table_with_top(rng, sp, 2.0, 1.0);
    const CombineMap& ring = aggFus[static_cast<std::size_t>(t) % aggFus.size()];
    const CombineMap& link = aggLnk[static_cast<std::size_t>(t) % aggLnk.size()];
    const int n = rnd_int(rng, 2, 3);

    IntegralSpec up;
    up.kind = IntegralSpec::Kind::upper;
    up.map = ring;
    up.n = n;
    fold(local, check_aggregation(up, mu, 24, opt.seed ^ (static_cast<std::uint64_t>(t) * 1000003ull)),
         t, measure_str(mu) + " ring=" + ring.spec_string() + " n=" + std::to_string(n));
    IntegralSpec lo;
    lo.kind = IntegralSpec::Kind::lower;
    lo.map = link;
    lo.n = n;
    fold(local, check_aggregation(lo, mu, 24, opt.seed ^ (static_cast<std::uint64_t>(t) * 2000003ull)),
         t, measure_str(mu) + " link=" + link.spec_string() + " n=" + std::to_string(n));

    // Exhaustive lattice sweep of the representation on small spaces.
    if (m <= 4) {
      const std::string inst = measure_str(mu) + " ring=" + ring.spec_string() +
                               " link=" + link.spec_string() +
                               " n=" + std::to_string(n);
      auto expect = [&](bool ok, const std::string& rel, const std::string& obs) {
        if (!ok) local.fail(t, inst, rel, obs);
      };
      std::vector<int> idx(static_cast<std::size_t>(m), 0);
      const int steps = 4;
      while (true) {
        std::vector<double> values(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
          values[static_cast<std::size_t>(i)] =
              static_cast<double>(idx[static_cast<std::size_t>(i)]) / steps;
        LevelFunction xf(sp, std::move(values));
        double ur = upper_n(mu, xf, ring, n);
        double us = upper_n_setform(mu, xf, ring, n);
        expect(near(ur, us, 1e-12),
               "upper representation matches on the full lattice",
               num_str(ur) + " vs " + num_str(us) + " at " + vec_str(xf.values()));
        double lr = lower_n(mu, xf, link, n);
        double ls = lower_n_setform(mu, xf, link, n);
        expect(near(lr, ls, 1e-12),
               "lower representation matches on the full lattice",
               num_str(lr) + " vs " + num_str(ls) + " at " + vec_str(xf.values()));
        int i = 0;
        while (i < m && idx[static_cast<std::size_t>(i)] == steps) {
          idx[static_cast<std::size_t>(i)] = 0;
          ++i;
        }
        if (i == m) break;
        ++idx[static_cast<std::size_t>(i)];
      }
    }
  });

  return rep;
}

inline std::vector<std::string> suite_names() {
  return {"axioms",       "equivalent-forms", "monotone-sequence",
          "subadditivity", "benvenuti",        "scientometrics",
          "aggregation"};
}

inline VerificationReport run_suite(const std::string& name,
                                    const SuiteOptions& opt) {
  if (name == "axioms") return suite_axioms(opt);
  if (name == "equivalent-forms") return suite_equivalent_forms(opt);
  if (name == "monotone-sequence") return suite_monotone_sequence(opt);
  if (name == "subadditivity") return suite_subadditivity(opt);
  if (name == "benvenuti") return suite_benvenuti(opt);
  if (name == "scientometrics") return suite_scientometrics(opt);
  if (name == "aggregation") return suite_aggregation(opt);
  throw config_error(
      "unknown suite: " + name +
      " (valid: axioms, equivalent-forms, monotone-sequence, subadditivity, "
      "benvenuti, scientometrics, aggregation, all)");
}

inline std::vector<VerificationReport> run_all_suites(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
  return out;
}

}  // namespace nsugeno
