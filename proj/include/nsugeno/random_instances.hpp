#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "nsugeno/core.hpp"
#include "nsugeno/measure.hpp"
#include "nsugeno/scientometrics.hpp"

namespace nsugeno {

// Deterministic per-trial randomness: the stream depends only on (seed,
// stream, trial), never on how trials are sharded across threads.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

inline int rnd_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A dyadic value k/8 * top; keeping generated data on a coarse dyadic lattice
// makes additive identities exact in floating point.
inline double rnd_lattice(std::mt19937_64& rng, double top, int steps = 8) {
  return top * rnd_int(rng, 0, steps) / steps;
}

// Random monotone table via a sup-generating system: draw a nonnegative
// weight per subset and close under max over sub-subsets, which is monotone
// by construction. Weights are dyadic (integer when asked) so downstream
// additive checks stay exact.
inline MonotoneMeasure random_monotone_table(std::mt19937_64& rng,
                                             GroundSpace space,
                                             bool integer_valued,
                                             double cap) {
  const std::size_t size = std::size_t{1} << space.m;
  std::vector<double> gamma(size, 0.0);
  for (std::size_t s = 1; s < size; ++s) {
    if (integer_valued)
      gamma[s] = rnd_int(rng, 0, static_cast<int>(cap));
    else
      gamma[s] = rnd_lattice(rng, cap);
  }
  if (gamma[size - 1] == 0.0)
    gamma[size - 1] = integer_valued ? 1.0 : cap / 8.0;
  std::vector<double> mu(size, 0.0);
  for (std::size_t a = 1; a < size; ++a) {
    double best = gamma[a];
    for (int i = 0; i < space.m; ++i) {
      Subset bit = Subset{1} << i;
      if (a & bit) best = std::max(best, mu[a & ~bit]);
    }
    mu[a] = best;
  }
  return MonotoneMeasure::table(space, std::move(mu));
}

// Same, but with mu(X) forced to at least `floor_at_top` (used when checks
// need mu(X) >= y_bar).
inline MonotoneMeasure random_monotone_table_with_top(
    std::mt19937_64& rng, GroundSpace space, double cap, double floor_at_top) {
  MonotoneMeasure mu = random_monotone_table(rng, space, false, cap);
  std::vector<double> values = mu.raw_values();
  values.back() = std::max(values.back(), floor_at_top);
  return MonotoneMeasure::table(space, std::move(values));
}

// Subadditive families: capped additive min(c, sum of weights), maxitive
// max of weights, and concave cardinality profiles (nonincreasing positive
// increments). All scaled so mu(X) <= cap.
inline MonotoneMeasure random_subadditive(std::mt19937_64& rng,
                                          GroundSpace space, double cap) {
  int family = rnd_int(rng, 0, 2);
  if (family == 0) {
    std::vector<double> w(static_cast<std::size_t>(space.m));
    for (auto& v : w) v = rnd_lattice(rng, cap / 2) + cap / 8;
    double c = cap * rnd_int(rng, 4, 8) / 8.0;
    const std::size_t size = std::size_t{1} << space.m;
    std::vector<double> values(size, 0.0);
    for (std::size_t a = 1; a < size; ++a) {
      double sum = 0.0;
      for (int i = 0; i < space.m; ++i)
        if (a & (Subset{1} << i)) sum += w[static_cast<std::size_t>(i)];
      values[a] = std::min(sum, c);
    }
    return MonotoneMeasure::table(space, std::move(values));
  }
  if (family == 1) {
    std::vector<double> w(static_cast<std::size_t>(space.m));
    for (auto& v : w) v = rnd_lattice(rng, cap);
    if (*std::max_element(w.begin(), w.end()) == 0.0) w[0] = cap / 8;
    const std::size_t size = std::size_t{1} << space.m;
    std::vector<double> values(size, 0.0);
    for (std::size_t a = 1; a < size; ++a) {
      double hi = 0.0;
      for (int i = 0; i < space.m; ++i)
        if (a & (Subset{1} << i))
          hi = std::max(hi, w[static_cast<std::size_t>(i)]);
      values[a] = hi;
    }
    return MonotoneMeasure::table(space, std::move(values));
  }
  // Concave cardinality: increments drawn nonincreasing, then brought under
  // the cap with a power-of-two scale. Scaling by a power of two keeps the
  // dyadic values exact, so g(j) + g(k) >= g(j+k) holds without rounding
  // slack; a free-form normalization can miss by an ulp and break exact
  // subadditivity checks.
  std::vector<double> inc(static_cast<std::size_t>(space.m));
  for (auto& v : inc) v = (1.0 + rnd_int(rng, 0, 7)) / 8.0;
  std::sort(inc.begin(), inc.end(), std::greater<>());
  std::vector<double> g(static_cast<std::size_t>(space.m) + 1, 0.0);
  for (int k = 1; k <= space.m; ++k)
    g[static_cast<std::size_t>(k)] =
        g[static_cast<std::size_t>(k - 1)] + inc[static_cast<std::size_t>(k - 1)];
  double scale = std::exp2(std::floor(std::log2(cap / g.back())));
  for (auto& v : g) v *= scale;
  return MonotoneMeasure::cardinality(space, std::move(g));
}

// A measure violating subadditivity somewhere: either a convex cardinality
// profile or a spiky table that jumps at the full set.
inline MonotoneMeasure random_non_subadditive(std::mt19937_64& rng,
                                              GroundSpace space, double cap) {
  if (rnd_int(rng, 0, 1) == 0) {
    std::vector<double> g(static_cast<std::size_t>(space.m) + 1, 0.0);
    for (int k = 1; k <= space.m; ++k) {
      double frac = static_cast<double>(k) / space.m;
      g[static_cast<std::size_t>(k)] = cap * frac * frac;
    }
    return MonotoneMeasure::cardinality(space, std::move(g));
  }
  const std::size_t size = std::size_t{1} << space.m;
  std::vector<double> values(size, 0.0);
  double spike = cap;
  double small = cap / (4.0 * space.m);
  for (std::size_t a = 1; a < size - 1; ++a)
    values[a] = small * rnd_int(rng, 1, 2);
  values[size - 1] = spike;
  // Re-close under monotonicity (the spike dominates everything anyway).
  for (std::size_t a = 1; a < size; ++a)
    for (int i = 0; i < space.m; ++i) {
      Subset bit = Subset{1} << i;
      if (a & bit) values[a] = std::max(values[a], values[a & ~bit]);
    }
  return MonotoneMeasure::table(space, std::move(values));
}

// Function values uniform on the dyadic lattice {0, top/8, ..., top}; with
// y_bar = inf the lattice is the integers 0..8.
inline LevelFunction random_function(std::mt19937_64& rng, GroundSpace space) {
  double top = space.finite_ybar() ? space.y_bar : 8.0;
  std::vector<double> values(static_cast<std::size_t>(space.m));
  for (auto& v : values)
    v = space.finite_ybar() ? rnd_lattice(rng, top)
                            : static_cast<double>(rnd_int(rng, 0, 8));
  return LevelFunction(space, std::move(values));
}

// A comonotone pair: both functions nondecreasing along one shared ordering
// of the points, so ({f >= s}, {g >= t}) is always a nested family.
inline std::pair<LevelFunction, LevelFunction> random_comonotone_pair(
    std::mt19937_64& rng, GroundSpace space, double top) {
  std::vector<int> order(static_cast<std::size_t>(space.m));
  for (int i = 0; i < space.m; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<double> fs(static_cast<std::size_t>(space.m));
  std::vector<double> gs(static_cast<std::size_t>(space.m));
  for (auto& v : fs) v = rnd_lattice(rng, top);
  for (auto& v : gs) v = rnd_lattice(rng, top);
  std::sort(fs.begin(), fs.end());
  std::sort(gs.begin(), gs.end());
  std::vector<double> f(static_cast<std::size_t>(space.m));
  std::vector<double> g(static_cast<std::size_t>(space.m));
  for (int rank = 0; rank < space.m; ++rank) {
    f[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] =
        fs[static_cast<std::size_t>(rank)];
    g[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] =
        gs[static_cast<std::size_t>(rank)];
  }
  return {LevelFunction(space, std::move(f)), LevelFunction(space, std::move(g))};
}

// A pair whose pointwise sum stays within [0, y_bar]: g is drawn under the
// remaining headroom at each point, so no clipping ever occurs.
inline std::pair<LevelFunction, LevelFunction> random_summable_pair(
    std::mt19937_64& rng, GroundSpace space) {
  double top = space.finite_ybar() ? space.y_bar : 8.0;
  std::vector<double> f(static_cast<std::size_t>(space.m));
  std::vector<double> g(static_cast<std::size_t>(space.m));
  for (int i = 0; i < space.m; ++i) {
    double a = rnd_lattice(rng, top);
    int head = static_cast<int>((top - a) / top * 8.0 + 1e-9);
    double b = top * rnd_int(rng, 0, head) / 8.0;
    f[static_cast<std::size_t>(i)] = a;
    g[static_cast<std::size_t>(i)] = b;
  }
  return {LevelFunction(space, std::move(f)), LevelFunction(space, std::move(g))};
}

// Random citation record, sorted on construction.
inline ScientificRecord random_record(std::mt19937_64& rng, int max_len = 12,
                                      int max_citations = 40) {
  int len = rnd_int(rng, 0, max_len);
  std::vector<long long> counts(static_cast<std::size_t>(len));
  for (auto& c : counts) c = rnd_int(rng, 0, max_citations);
  return ScientificRecord(std::move(counts));
}

// Integer-valued function for the integer chain-grid checks.
inline LevelFunction random_integer_function(std::mt19937_64& rng,
                                             GroundSpace space, int top) {
  std::vector<double> values(static_cast<std::size_t>(space.m));
  for (auto& v : values) v = rnd_int(rng, 0, top);
  return LevelFunction(space, std::move(values));
}

}  // namespace nsugeno
