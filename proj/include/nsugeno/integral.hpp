#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nsugeno/core.hpp"
#include "nsugeno/maps.hpp"
#include "nsugeno/measure.hpp"
#include "nsugeno/report.hpp"

namespace nsugeno {

// What to evaluate: the plain Sugeno integral or an n-fold upper/lower
// iterate driven by a fusion (upper) or link (lower) map.
struct IntegralSpec {
  enum class Kind { sugeno, upper, lower };
  Kind kind = Kind::sugeno;
  std::optional<CombineMap> map;  // absent exactly for sugeno
  int n = 1;

  void validate() const {
    if (n < 1) throw input_error("integral order n must be >= 1");
    if (kind == Kind::sugeno) {
      if (map) throw config_error("the Sugeno integral takes no map");
      if (n != 1) throw config_error("the Sugeno integral is first order");
      return;
    }
    if (!map) throw config_error("upper/lower integrals need a map");
    MapKind want = kind == Kind::upper ? MapKind::fusion : MapKind::link;
    if (map->kind() != want)
      throw config_error(kind == Kind::upper
                             ? "the upper integral needs a fusion map"
                             : "the lower integral needs a link map");
  }
};

// Per-level diagnostics: iterate values, the candidate thresholds used, and
// the first candidate attaining each level's extremum. The lower tail term
// (t past max f) is recorded under the threshold y_bar.
struct EvalTrace {
  std::vector<double> levels;
  std::vector<double> candidates;
  std::vector<double> argmax;
};

namespace detail {

// Distinct ascending values of f with their strict/non-strict level measures.
// Both recurrences only ever query level measures at these thresholds, so
// everything downstream is O(levels * r) after this O(m log m + r * cost)
// pass.
struct LevelProfile {
  std::vector<double> values;
  std::vector<double> mu_geq;  // mu({f >= v})
  std::vector<double> mu_gt;   // mu({f > v})
  double mu_all = 0.0;         // mu(X) = mu({f >= 0})
  double max_value = 0.0;
  double ybar = 0.0;

  static LevelProfile build(const MonotoneMeasure& mu, const LevelFunction& f) {
    require_same_space(mu, f);
    LevelProfile prof;
    prof.ybar = mu.space().y_bar;
    prof.values = f.values();
    std::sort(prof.values.begin(), prof.values.end());
    prof.values.erase(std::unique(prof.values.begin(), prof.values.end()),
                      prof.values.end());
    prof.max_value = prof.values.empty() ? 0.0 : prof.values.back();
    const std::size_t r = prof.values.size();
    prof.mu_geq.resize(r);
    prof.mu_gt.resize(r);
    if (mu.symmetric()) {
      std::vector<double> sorted = f.values();
      std::sort(sorted.begin(), sorted.end());
      const auto m = static_cast<long long>(sorted.size());
      for (std::size_t i = 0; i < r; ++i) {
        double v = prof.values[i];
        auto lo = std::lower_bound(sorted.begin(), sorted.end(), v);
        auto hi = std::upper_bound(sorted.begin(), sorted.end(), v);
        prof.mu_geq[i] = mu.of_count(m - (lo - sorted.begin()));
        prof.mu_gt[i] = mu.of_count(m - (hi - sorted.begin()));
      }
      prof.mu_all = mu.of_count(m);
    } else {
      // Walk values downward, accumulating the level set as a mask.
      Subset acc = 0;
      std::vector<Subset> geq_masks(r);
      for (std::size_t idx = r; idx-- > 0;) {
        double v = prof.values[idx];
        for (int i = 0; i < mu.space().m; ++i)
          if (f[static_cast<std::size_t>(i)] == v) acc |= Subset{1} << i;
        geq_masks[idx] = acc;
      }
      for (std::size_t i = 0; i < r; ++i) {
        prof.mu_geq[i] = mu(geq_masks[i]);
        prof.mu_gt[i] = (i + 1 < r) ? mu(geq_masks[i + 1]) : mu(Subset{0});
      }
      prof.mu_all = mu(mu.space().full_mask());
    }
    return prof;
  }

  // sup over t of t ∧ mu({f >= t}); the sup is attained at a value of f
  // because the level measure is constant between consecutive values and the
  // integrand is nondecreasing up to each of them.
  double sugeno_value(double* arg = nullptr) const {
    double best = 0.0, best_arg = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      double term = std::min(values[i], mu_geq[i]);
      if (term > best) {
        best = term;
        best_arg = values[i];
      }
    }
    if (arg) *arg = best_arg;
    return best;
  }

  // One upper step: max over {0} ∪ values(f) of (t o s_prev) ∧ mu({f >= t}).
  double upper_step(const CombineMap& ring, double s_prev,
                    double* arg = nullptr) const {
    double best = std::min(ring(0.0, s_prev), mu_all);
    double best_arg = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      double term = std::min(ring(values[i], s_prev), mu_geq[i]);
      if (term > best) {
        best = term;
        best_arg = values[i];
      }
    }
    if (arg) *arg = best_arg;
    return best;
  }

  // One lower step: max over {0} ∪ values(f) of t ∧ (mu({f >= t}) ★ s_prev),
  // plus the tail term y_bar ∧ (0 ★ s_prev) covering thresholds past max f.
  double lower_step(const CombineMap& link, double s_prev,
                    double* arg = nullptr) const {
    double best = 0.0, best_arg = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      double term = std::min(values[i], link(mu_geq[i], s_prev));
      if (term > best) {
        best = term;
        best_arg = values[i];
      }
    }
    double tail = std::min(ybar, link(0.0, s_prev));
    if (tail > best) {
      best = tail;
      best_arg = ybar;
    }
    if (arg) *arg = best_arg;
    return best;
  }
};

inline void note_level(EvalTrace* trace, double value, double arg) {
  if (!trace) return;
  trace->levels.push_back(value);
  trace->argmax.push_back(arg);
}

inline void guard_iterate(double value, const GroundSpace& space) {
  if (std::isnan(value))
    throw std::logic_error("integral iterate became NaN");
  if (std::isinf(value))
    throw capability_error(
        "iterate left the finite range under y_bar = inf; this instance is "
        "outside the supported envelope");
  if (space.finite_ybar() && value > space.y_bar * (1.0 + 1e-9) + 1e-9)
    throw std::logic_error("integral iterate escaped [0, y_bar]");
}

}  // namespace detail

inline double sugeno(const MonotoneMeasure& mu, const LevelFunction& f,
                     EvalTrace* trace = nullptr) {
  auto prof = detail::LevelProfile::build(mu, f);
  if (trace) {
    trace->candidates = prof.values;
    trace->candidates.insert(trace->candidates.begin(), 0.0);
  }
  double arg = 0.0;
  double value = prof.sugeno_value(&arg);
  detail::note_level(trace, value, arg);
  return value;
}

inline double upper_n(const MonotoneMeasure& mu, const LevelFunction& f,
                      const FusionMap& ring, int n,
                      EvalTrace* trace = nullptr) {
  if (n < 1) throw input_error("upper_n needs n >= 1");
  if (ring.kind() != MapKind::fusion)
    throw config_error("upper_n needs an admissible fusion map");
  auto prof = detail::LevelProfile::build(mu, f);
  if (trace) {
    trace->candidates = prof.values;
    trace->candidates.insert(trace->candidates.begin(), 0.0);
  }
  double arg = 0.0;
  double s = prof.sugeno_value(&arg);
  detail::note_level(trace, s, arg);
  for (int k = 2; k <= n; ++k) {
    s = prof.upper_step(ring, s, &arg);
    detail::guard_iterate(s, mu.space());
    detail::note_level(trace, s, arg);
  }
  return s;
}

inline double lower_n(const MonotoneMeasure& mu, const LevelFunction& f,
                      const LinkMap& link, int n, EvalTrace* trace = nullptr) {
  if (n < 1) throw input_error("lower_n needs n >= 1");
  if (link.kind() != MapKind::link)
    throw config_error("lower_n needs a link map");
  auto prof = detail::LevelProfile::build(mu, f);
  if (trace) {
    trace->candidates = prof.values;
    trace->candidates.insert(trace->candidates.begin(), 0.0);
  }
  double arg = 0.0;
  double s = prof.sugeno_value(&arg);
  detail::note_level(trace, s, arg);
  for (int k = 2; k <= n; ++k) {
    s = prof.lower_step(link, s, &arg);
    detail::guard_iterate(s, mu.space());
    detail::note_level(trace, s, arg);
  }
  return s;
}

namespace detail {

inline double min_over(const LevelFunction& f, Subset a, double empty_value) {
  if (a == 0) return empty_value;
  double lo = kInf;
  for (int i = 0; i < f.space().m; ++i)
    if (a & (Subset{1} << i))
      lo = std::min(lo, f[static_cast<std::size_t>(i)]);
  return lo;
}

inline void require_setform_feasible(const MonotoneMeasure& mu) {
  if (mu.space().m > 20)
    throw capability_error("set-form evaluation is limited to m <= 20");
}

}  // namespace detail

// max over subsets A of (min_A f o S_{n-1}) ∧ mu(A), with min over the empty
// set read as y_bar. Agrees with the recurrence for every admissible map.
inline double upper_n_setform(const MonotoneMeasure& mu, const LevelFunction& f,
                              const FusionMap& ring, int n) {
  if (n < 2) throw input_error("set-form evaluation starts at n = 2");
  detail::require_setform_feasible(mu);
  if (ring.kind() != MapKind::fusion)
    throw config_error("upper_n_setform needs an admissible fusion map");
  double s_prev = upper_n(mu, f, ring, n - 1);
  const Subset full = mu.space().full_mask();
  double best = 0.0;
  for (Subset a = 0;; ++a) {
    double lo = detail::min_over(f, a, mu.space().y_bar);
    best = std::max(best, std::min(ring(lo, s_prev), mu(a)));
    if (a == full) break;
  }
  return best;
}

// max over subsets A of (min_A f) ∧ (mu(A) ★ S_{n-1}); the empty subset
// contributes the tail term y_bar ∧ (0 ★ S_{n-1}).
inline double lower_n_setform(const MonotoneMeasure& mu, const LevelFunction& f,
                              const LinkMap& link, int n) {
  if (n < 2) throw input_error("set-form evaluation starts at n = 2");
  detail::require_setform_feasible(mu);
  if (link.kind() != MapKind::link)
    throw config_error("lower_n_setform needs a link map");
  double s_prev = lower_n(mu, f, link, n - 1);
  const Subset full = mu.space().full_mask();
  double best = 0.0;
  for (Subset a = 0;; ++a) {
    double lo = detail::min_over(f, a, mu.space().y_bar);
    best = std::max(best, std::min(lo, link(mu(a), s_prev)));
    if (a == full) break;
  }
  return best;
}

// inf over t of (t o S_{n-1}) ∨ mu({f > t}); valid when the map is continuous
// in its first argument. The inf is attained at a value of f (or 0) because
// strict level measures are constant on [v_i, v_{i+1}) and the first term is
// nondecreasing, so each interval's infimum sits at its left endpoint.
inline double upper_n_infform(const MonotoneMeasure& mu, const LevelFunction& f,
                              const FusionMap& ring, int n) {
  if (n < 2) throw input_error("inf-form evaluation starts at n = 2");
  if (ring.kind() != MapKind::fusion)
    throw config_error("upper_n_infform needs an admissible fusion map");
  if (!ring.has(kContinuousFirstArg))
    throw config_error(
        "inf-form evaluation needs a map continuous in its first argument");
  double s_prev = upper_n(mu, f, ring, n - 1);
  auto prof = detail::LevelProfile::build(mu, f);
  double best = std::max(ring(0.0, s_prev),
                         level_measure(mu, f, 0.0, /*strict=*/true));
  for (std::size_t i = 0; i < prof.values.size(); ++i)
    best = std::min(best,
                    std::max(ring(prof.values[i], s_prev), prof.mu_gt[i]));
  return best;
}

inline double lower_n_infform(const MonotoneMeasure& mu, const LevelFunction& f,
                              const LinkMap& link, int n) {
  if (n < 2) throw input_error("inf-form evaluation starts at n = 2");
  if (link.kind() != MapKind::link)
    throw config_error("lower_n_infform needs a link map");
  if (!link.has(kContinuousFirstArg))
    throw config_error(
        "inf-form evaluation needs a map continuous in its first argument");
  double s_prev = lower_n(mu, f, link, n - 1);
  auto prof = detail::LevelProfile::build(mu, f);
  double best = std::max(0.0, link(level_measure(mu, f, 0.0, /*strict=*/true),
                                   s_prev));
  for (std::size_t i = 0; i < prof.values.size(); ++i)
    best = std::min(best,
                    std::max(prof.values[i], link(prof.mu_gt[i], s_prev)));
  return best;
}

// Evaluates whichever integral the spec describes.
inline double evaluate_integral(const IntegralSpec& spec,
                                const MonotoneMeasure& mu,
                                const LevelFunction& f,
                                EvalTrace* trace = nullptr) {
  spec.validate();
  switch (spec.kind) {
    case IntegralSpec::Kind::sugeno: return sugeno(mu, f, trace);
    case IntegralSpec::Kind::upper: return upper_n(mu, f, *spec.map, spec.n, trace);
    default: return lower_n(mu, f, *spec.map, spec.n, trace);
  }
}

// Scalar indicator recurrence s_n(a, b): the n-th iterate of a * 1_A when
// b = mu(A). Upper: s_{k+1} = (a o s_k) ∧ b; lower: s_{k+1} = a ∧ (b ★ s_k);
// s_1 = a ∧ b either way.
inline double indicator_level(const CombineMap& map, IntegralSpec::Kind kind,
                              double a, double b, int n) {
  if (n < 1) throw input_error("indicator_level needs n >= 1");
  double s = std::min(a, b);
  for (int k = 2; k <= n; ++k) {
    if (kind == IntegralSpec::Kind::upper)
      s = std::min(map(a, s), b);
    else if (kind == IntegralSpec::Kind::lower)
      s = std::min(a, map(b, s));
    else
      throw config_error("indicator_level needs an upper or lower kind");
  }
  return s;
}

// Limit of the iterate sequence for a map carrying the geq_min flag (which
// forces S_1 <= S_2 <= ...). Stops at the first exact fixpoint or at n_cap.
struct LimitResult {
  double value = 0.0;
  int n_at_fixpoint = 0;  // first n attaining the returned value
  bool converged = false;
  std::vector<double> levels;
};

inline LimitResult limit_value(const MonotoneMeasure& mu,
                               const LevelFunction& f, const CombineMap& map,
                               IntegralSpec::Kind kind, int n_cap) {
  if (n_cap < 1) throw input_error("limit_value needs n_cap >= 1");
  if (kind == IntegralSpec::Kind::sugeno)
    throw config_error("limit_value needs an upper or lower kind");
  MapKind want =
      kind == IntegralSpec::Kind::upper ? MapKind::fusion : MapKind::link;
  if (map.kind() != want)
    throw config_error("limit_value map kind does not match the integral kind");
  if (!map.has(kGeqMin))
    throw config_error(
        "limit_value needs a map with the geq_min flag so the sequence is "
        "nondecreasing");
  auto prof = detail::LevelProfile::build(mu, f);
  LimitResult out;
  double s = prof.sugeno_value();
  out.levels.push_back(s);
  for (int k = 2; k <= n_cap; ++k) {
    double next = kind == IntegralSpec::Kind::upper
                      ? prof.upper_step(map, s)
                      : prof.lower_step(map, s);
    detail::guard_iterate(next, mu.space());
    if (next + kEvalTol < s)
      throw std::logic_error(
          "nondecreasing-sequence invariant violated for a geq_min map");
    out.levels.push_back(next);
    if (next == s) {
      out.value = s;
      out.n_at_fixpoint = k - 1;
      out.converged = true;
      return out;
    }
    s = next;
  }
  out.value = s;
  out.n_at_fixpoint = n_cap;
  out.converged = false;
  return out;
}

// Aggregation-function checks on [0, y_bar]^m: exact boundary values,
// monotonicity on sampled ordered pairs, and (for m <= 6) the weighted
// max-min representation against the recurrence.
inline VerificationReport check_aggregation(const IntegralSpec& spec,
                                            const MonotoneMeasure& mu,
                                            int sample_count,
                                            std::uint64_t seed = 0) {
  spec.validate();
  const GroundSpace& space = mu.space();
  if (!space.finite_ybar())
    throw config_error("aggregation checks need a finite y_bar");
  const double ybar = space.y_bar;
  if (spec.map && !near(spec.map->ybar(), ybar, 0.0))
    throw config_error("aggregation map was built for a different y_bar");
  if (spec.kind == IntegralSpec::Kind::upper) {
    if (!spec.map->has(kYbarAbsorbing))
      throw config_error(
          "upper aggregation needs ybar o ybar = ybar (ybar_absorbing flag)");
  } else if (spec.kind == IntegralSpec::Kind::lower) {
    if (!spec.map->has(kGeqMin))
      throw config_error("lower aggregation needs a link map with ★ >= ∧");
  }
  if (!(mu.whole_space() >= ybar))
    throw config_error("aggregation checks need mu(X) >= y_bar");

  VerificationReport rep;
  rep.suite = "check-aggregation";
  auto value_of = [&](const LevelFunction& x) {
    return evaluate_integral(spec, mu, x, nullptr);
  };
  auto vec_str = [](const LevelFunction& x) {
    std::ostringstream out;
    out.precision(17);
    out << "x=(";
    for (std::size_t i = 0; i < x.values().size(); ++i) {
      if (i) out << ',';
      out << x.values()[i];
    }
    out << ')';
    return out.str();
  };

  auto rep_value = [&](const LevelFunction& x) -> double {
    // Weighted max-min representation over nonempty index sets T, with the
    // empty set contributing the lower tail exactly as the set forms do.
    if (spec.kind == IntegralSpec::Kind::sugeno || spec.n == 1) {
      const Subset full = space.full_mask();
      double best = 0.0;
      for (Subset t = 1;; ++t) {
        best = std::max(best,
                        std::min(detail::min_over(x, t, ybar), mu(t)));
        if (t == full) break;
      }
      return best;
    }
    return spec.kind == IntegralSpec::Kind::upper
               ? upper_n_setform(mu, x, *spec.map, spec.n)
               : lower_n_setform(mu, x, *spec.map, spec.n);
  };

  auto check_representation = [&](const LevelFunction& x, long long trial) {
    if (space.m > 6) return;
    ++rep.trials;
    double lhs = value_of(x), rhs = rep_value(x);
    if (!near(lhs, rhs, 0.0))
      rep.fail(trial, vec_str(x),
               "recurrence == weighted max-min representation",
               std::to_string(lhs) + " vs " + std::to_string(rhs));
  };

  // Boundary conditions, exact.
  LevelFunction zeros = LevelFunction::constant(space, 0.0);
  LevelFunction tops = LevelFunction::constant(space, ybar);
  ++rep.trials;
  if (value_of(zeros) != 0.0)
    rep.fail(-1, "x = (0,...,0)", "A(0,...,0) == 0",
             std::to_string(value_of(zeros)));
  ++rep.trials;
  if (value_of(tops) != ybar)
    rep.fail(-1, "x = (ybar,...,ybar)", "A(ybar,...,ybar) == ybar",
             std::to_string(value_of(tops)));
  check_representation(zeros, -1);
  check_representation(tops, -1);

  // Monotonicity on random coordinatewise-ordered pairs from an 8-step
  // lattice; exact, since every ingredient is monotone under rounding.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> step(0, 8);
  for (int sample = 0; sample < sample_count; ++sample) {
    std::vector<double> lo(static_cast<std::size_t>(space.m));
    std::vector<double> hi(static_cast<std::size_t>(space.m));
    for (int i = 0; i < space.m; ++i) {
      int a = step(rng), b = step(rng);
      if (a > b) std::swap(a, b);
      lo[static_cast<std::size_t>(i)] = ybar * a / 8.0;
      hi[static_cast<std::size_t>(i)] = ybar * b / 8.0;
    }
    LevelFunction x(space, lo), y(space, hi);
    ++rep.trials;
    double vx = value_of(x), vy = value_of(y);
    if (!(vx <= vy))
      rep.fail(sample, vec_str(x) + " vs " + vec_str(y),
               "A(x) <= A(y) for x <= y",
               std::to_string(vx) + " > " + std::to_string(vy));
    check_representation(x, sample);
  }
  return rep;
}

}  // namespace nsugeno
