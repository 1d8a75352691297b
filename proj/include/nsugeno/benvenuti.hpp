#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nsugeno/core.hpp"
#include "nsugeno/integral.hpp"
#include "nsugeno/maps.hpp"
#include "nsugeno/measure.hpp"

namespace nsugeno {

// A nonincreasing level chain b_1 >= b_2 >= ... >= b_n >= b_{n+1} = 0 together
// with the value of its pseudo-decomposition objective
// sum_i (b_i - b_{i+1}) ∧ mu({f >= b_i}).
struct ChainDecomposition {
  std::vector<double> levels;  // b_1..b_n, nonincreasing
  double objective = 0.0;
};

inline double chain_objective(const MonotoneMeasure& mu, const LevelFunction& f,
                              std::span<const double> levels) {
  double total = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    double next = (i + 1 < levels.size()) ? levels[i + 1] : 0.0;
    if (!(levels[i] >= next))
      throw input_error("chain levels must be nonincreasing");
    total += std::min(levels[i] - next, level_measure(mu, f, levels[i]));
  }
  return total;
}

// The (+, ∧) pseudo-decomposition integral of order n via the lower
// recurrence with the plain sum as link map.
inline double benvenuti_plus_min(const MonotoneMeasure& mu,
                                 const LevelFunction& f, int n) {
  LinkMap plus = make_map(std::string("plus"), MapKind::link,
                          mu.space().y_bar);
  return lower_n(mu, f, plus, n);
}

struct BracketResult {
  double value = 0.0;
  ChainDecomposition chain;
  double grid_step = 0.0;
};

namespace detail {

// Candidate grid for the chain search: 0, every value of f, and a uniform
// refinement of [0, max f] into `resolution` intervals. Levels above max f
// never help either objective (their level measure is mu(empty) = 0 for the
// sup, and the dual term only grows), so the grid stops at max f.
struct ChainGrid {
  std::vector<double> points;
  std::vector<double> mu_geq;
  std::vector<double> mu_gt;
  double step = 0.0;
};

inline ChainGrid build_chain_grid(const MonotoneMeasure& mu,
                                  const LevelFunction& f, int n,
                                  int resolution) {
  if (resolution < 1) throw input_error("grid resolution must be >= 1");
  ChainGrid grid;
  double top = f.max_value();
  grid.points.push_back(0.0);
  for (double v : f.values()) grid.points.push_back(v);
  if (top > 0.0) {
    grid.step = top / resolution;
    for (int k = 1; k <= resolution; ++k)
      grid.points.push_back(top * k / resolution);
  }
  std::sort(grid.points.begin(), grid.points.end());
  grid.points.erase(std::unique(grid.points.begin(), grid.points.end()),
                    grid.points.end());
  const auto size = static_cast<long long>(grid.points.size());
  if (static_cast<long long>(n) * size * size > 2'000'000'000LL)
    throw capability_error("chain grid too fine for the requested order");
  grid.mu_geq.resize(grid.points.size());
  grid.mu_gt.resize(grid.points.size());
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    grid.mu_geq[i] = level_measure(mu, f, grid.points[i]);
    grid.mu_gt[i] = level_measure(mu, f, grid.points[i], /*strict=*/true);
  }
  return grid;
}

}  // namespace detail

// Independent check of the recurrence: maximize the chain objective over all
// nonincreasing chains drawn from the grid, by dynamic programming over
// (remaining levels, floor index). best[j] after round r holds the best value
// of an r-level chain whose lowest level sits at grid point j (with the next
// level below fixed at j as the floor).
inline BracketResult benvenuti_oracle(const MonotoneMeasure& mu,
                                      const LevelFunction& f, int n,
                                      int grid_resolution = 256) {
  if (n < 1) throw input_error("benvenuti_oracle needs n >= 1");
  auto grid = detail::build_chain_grid(mu, f, n, grid_resolution);
  const std::size_t size = grid.points.size();
  std::vector<double> best(size, 0.0);
  std::vector<std::vector<std::uint32_t>> pick(
      static_cast<std::size_t>(n), std::vector<std::uint32_t>(size, 0));
  for (int round = 0; round < n; ++round) {
    std::vector<double> next(size, 0.0);
    for (std::size_t j = 0; j < size; ++j) {
      double here = -1.0;
      std::uint32_t arg = static_cast<std::uint32_t>(j);
      for (std::size_t l = j; l < size; ++l) {
        double term =
            std::min(grid.points[l] - grid.points[j], grid.mu_geq[l]) +
            best[l];
        if (term > here) {
          here = term;
          arg = static_cast<std::uint32_t>(l);
        }
      }
      next[j] = here;
      pick[static_cast<std::size_t>(round)][j] = arg;
    }
    best = std::move(next);
  }
  BracketResult out;
  out.grid_step = grid.step;
  out.value = best[0];
  // Recover the argmax chain bottom-up: rounds were filled with the last
  // (lowest) level first, so unwind from the floor 0 upward.
  std::vector<double> chain(static_cast<std::size_t>(n));
  std::uint32_t at = 0;
  for (int round = n - 1; round >= 0; --round) {
    at = pick[static_cast<std::size_t>(round)][at];
    chain[static_cast<std::size_t>(round)] = grid.points[at];
  }
  out.chain.levels = std::move(chain);
  out.chain.objective = out.value;
  return out;
}

// Dual chain form: minimize sum_i (b_i - b_{i+1}) ∨ mu({f > b_i}) over the
// same chains. Brackets the recurrence from above within n * grid_step.
inline BracketResult lower_choquet_form(const MonotoneMeasure& mu,
                                        const LevelFunction& f, int n,
                                        int grid_resolution = 256) {
  if (n < 1) throw input_error("lower_choquet_form needs n >= 1");
  auto grid = detail::build_chain_grid(mu, f, n, grid_resolution);
  const std::size_t size = grid.points.size();
  std::vector<double> best(size, 0.0);
  std::vector<std::vector<std::uint32_t>> pick(
      static_cast<std::size_t>(n), std::vector<std::uint32_t>(size, 0));
  for (int round = 0; round < n; ++round) {
    std::vector<double> next(size, 0.0);
    for (std::size_t j = 0; j < size; ++j) {
      double here = kInf;
      std::uint32_t arg = static_cast<std::uint32_t>(j);
      for (std::size_t l = j; l < size; ++l) {
        double term =
            std::max(grid.points[l] - grid.points[j], grid.mu_gt[l]) + best[l];
        if (term < here) {
          here = term;
          arg = static_cast<std::uint32_t>(l);
        }
      }
      next[j] = here;
      pick[static_cast<std::size_t>(round)][j] = arg;
    }
    best = std::move(next);
  }
  BracketResult out;
  out.grid_step = grid.step;
  out.value = best[0];
  std::vector<double> chain(static_cast<std::size_t>(n));
  std::uint32_t at = 0;
  for (int round = n - 1; round >= 0; --round) {
    at = pick[static_cast<std::size_t>(round)][at];
    chain[static_cast<std::size_t>(round)] = grid.points[at];
  }
  out.chain.levels = std::move(chain);
  out.chain.objective = out.value;
  return out;
}

// Closed-form iterate sequences for the two reference instances on [0, 1]
// with f(x) = x: the square-root measure gives
// I_k = (2 I_{k-1} - 1 + sqrt(5 - 4 I_{k-1})) / 2 and the squared measure
// gives I_k = (3 - sqrt(5 - 4 I_{k-1})) / 2, both from I_0 = 0.
enum class AnalyticKind { sqrt_measure, square_measure };

inline std::vector<double> analytic_example_sequence(AnalyticKind kind, int n) {
  if (n < 1) throw input_error("analytic sequence needs n >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  long double i = 0.0L;
  for (int k = 1; k <= n; ++k) {
    long double root = std::sqrt(5.0L - 4.0L * i);
    i = (kind == AnalyticKind::sqrt_measure) ? (2.0L * i - 1.0L + root) / 2.0L
                                             : (3.0L - root) / 2.0L;
    out.push_back(static_cast<double>(i));
  }
  return out;
}

}  // namespace nsugeno
