#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nsugeno/core.hpp"
#include "nsugeno/maps.hpp"
#include "nsugeno/report.hpp"

namespace nsugeno {

// Subsets of the ground set {1..m} as bitmasks; bit i-1 stands for point i.
using Subset = std::uint32_t;

struct GroundSpace {
  int m;         // number of points
  double y_bar;  // top of the value scale Y = [0, y_bar], may be +inf

  GroundSpace(int m_, double y_bar_) : m(m_), y_bar(y_bar_) {
    if (m < 1) throw input_error("ground space needs m >= 1");
    if (!(y_bar > 0.0))  // also rejects NaN
      throw input_error("ground space needs y_bar > 0");
  }

  bool finite_ybar() const { return std::isfinite(y_bar); }

  Subset full_mask() const {
    if (m > 32)
      throw capability_error("subset enumeration is limited to m <= 32");
    return m == 32 ? ~Subset{0} : ((Subset{1} << m) - 1);
  }

  bool same_as(const GroundSpace& other) const {
    return m == other.m && (y_bar == other.y_bar);
  }
};

enum class MeasureBackend { table, cardinality, counting };

inline const char* backend_name(MeasureBackend b) {
  switch (b) {
    case MeasureBackend::table: return "table";
    case MeasureBackend::cardinality: return "cardinality";
    default: return "counting";
  }
}

// Monotone measure on 2^{1..m}. Values may be +inf. Construction enforces
// structure (sizes, mu(empty) = 0, no negatives/NaN); full monotonicity is a
// separate reported check so that violating tables remain constructible and
// detectable.
class MonotoneMeasure {
 public:
  static MonotoneMeasure table(GroundSpace space, std::vector<double> values) {
    if (space.m > 20)
      throw capability_error("table measures are limited to m <= 20");
    if (values.size() != (std::size_t{1} << space.m))
      throw input_error("table measure needs exactly 2^m values");
    check_values(values);
    if (values[0] != 0.0)
      throw input_error("table measure needs mu(empty) = 0");
    return MonotoneMeasure(space, MeasureBackend::table, std::move(values));
  }

  static MonotoneMeasure cardinality(GroundSpace space, std::vector<double> g) {
    if (g.size() != static_cast<std::size_t>(space.m) + 1)
      throw input_error("cardinality measure needs m + 1 values");
    check_values(g);
    if (g[0] != 0.0)
      throw input_error("cardinality measure needs g(0) = 0");
    return MonotoneMeasure(space, MeasureBackend::cardinality, std::move(g));
  }

  static MonotoneMeasure counting(GroundSpace space) {
    return MonotoneMeasure(space, MeasureBackend::counting, {});
  }

  double operator()(Subset a) const {
    switch (backend_) {
      case MeasureBackend::table:
        return values_[a & space_.full_mask()];
      case MeasureBackend::cardinality:
        return values_[std::popcount(a & space_.full_mask())];
      default:
        return static_cast<double>(std::popcount(a & space_.full_mask()));
    }
  }

  // Measure of a set given only by its size; what level evaluation needs for
  // the symmetric backends on large spaces.
  double of_count(long long count) const {
    switch (backend_) {
      case MeasureBackend::cardinality:
        return values_[static_cast<std::size_t>(count)];
      case MeasureBackend::counting:
        return static_cast<double>(count);
      default:
        throw capability_error(
            "count-based evaluation needs a symmetric backend");
    }
  }

  bool symmetric() const { return backend_ != MeasureBackend::table; }

  double whole_space() const {
    switch (backend_) {
      case MeasureBackend::table: return values_.back();
      case MeasureBackend::cardinality: return values_.back();
      default: return static_cast<double>(space_.m);
    }
  }

  const GroundSpace& space() const { return space_; }
  MeasureBackend backend() const { return backend_; }
  const std::vector<double>& raw_values() const { return values_; }

 private:
  MonotoneMeasure(GroundSpace space, MeasureBackend backend,
                  std::vector<double> values)
      : space_(space), backend_(backend), values_(std::move(values)) {}

  static void check_values(const std::vector<double>& values) {
    for (double v : values)
      if (std::isnan(v) || v < 0.0)
        throw input_error("measure values must be nonnegative (inf allowed)");
  }

  GroundSpace space_;
  MeasureBackend backend_;
  std::vector<double> values_;
};

inline double measure_of(const MonotoneMeasure& mu, Subset a) { return mu(a); }

// Function f: {1..m} -> [0, y_bar].
class LevelFunction {
 public:
  LevelFunction(GroundSpace space, std::vector<double> values)
      : space_(space), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(space_.m))
      throw input_error("function needs exactly m values");
    for (double v : values_)
      if (std::isnan(v) || v < 0.0 || v > space_.y_bar)
        throw input_error("function values must lie in [0, y_bar]");
  }

  static LevelFunction constant(GroundSpace space, double value) {
    return LevelFunction(space,
                         std::vector<double>(static_cast<std::size_t>(space.m),
                                             value));
  }

  static LevelFunction indicator(GroundSpace space, Subset a, double height) {
    std::vector<double> v(static_cast<std::size_t>(space.m), 0.0);
    for (int i = 0; i < space.m; ++i)
      if (a & (Subset{1} << i)) v[static_cast<std::size_t>(i)] = height;
    return LevelFunction(space, std::move(v));
  }

  double operator[](std::size_t i) const { return values_[i]; }  // 0-based
  const std::vector<double>& values() const { return values_; }
  const GroundSpace& space() const { return space_; }
  double max_value() const {
    return values_.empty() ? 0.0
                           : *std::max_element(values_.begin(), values_.end());
  }
  Subset support_mask() const {
    Subset a = 0;
    for (int i = 0; i < space_.m; ++i)
      if (values_[static_cast<std::size_t>(i)] > 0.0) a |= Subset{1} << i;
    return a;
  }

 private:
  GroundSpace space_;
  std::vector<double> values_;
};

namespace detail {

inline void require_same_space(const MonotoneMeasure& mu,
                               const LevelFunction& f) {
  if (!mu.space().same_as(f.space()))
    throw input_error("measure and function live on different ground spaces");
}

}  // namespace detail

// mu({f >= t}) or mu({f > t}). For symmetric backends this only counts, so it
// scales to large m; the table backend materializes the level set.
inline double level_measure(const MonotoneMeasure& mu, const LevelFunction& f,
                            double t, bool strict = false) {
  detail::require_same_space(mu, f);
  if (std::isnan(t) || t < 0.0 || t > mu.space().y_bar)
    throw input_error("level threshold must lie in [0, y_bar]");
  if (mu.symmetric()) {
    long long count = 0;
    for (double v : f.values())
      if (strict ? v > t : v >= t) ++count;
    return mu.of_count(count);
  }
  Subset a = 0;
  for (int i = 0; i < mu.space().m; ++i) {
    double v = f[static_cast<std::size_t>(i)];
    if (strict ? v > t : v >= t) a |= Subset{1} << i;
  }
  return mu(a);
}

namespace detail {

inline std::string mask_str(Subset a, int m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < m; ++i)
    if (a & (Subset{1} << i)) {
      if (!first) out << ',';
      out << (i + 1);
      first = false;
    }
  out << '}';
  return out.str();
}

}  // namespace detail

// Reports every monotonicity violation (and the mu(empty)=0, mu(X)>0 gates).
inline VerificationReport validate_monotone(const MonotoneMeasure& mu) {
  VerificationReport rep;
  rep.suite = "validate-monotone";
  const int m = mu.space().m;
  if (mu.backend() == MeasureBackend::counting) {
    rep.trials = 1;
    return rep;
  }
  if (mu.backend() == MeasureBackend::cardinality) {
    const auto& g = mu.raw_values();
    rep.trials = static_cast<long long>(g.size());
    for (std::size_t k = 1; k < g.size(); ++k)
      if (!(g[k] >= g[k - 1]))
        rep.fail(-1, "cardinality profile",
                 "g nondecreasing at k=" + std::to_string(k),
                 std::to_string(g[k - 1]) + " > " + std::to_string(g[k]));
    if (!(g.back() > 0.0))
      rep.fail(-1, "cardinality profile", "mu(X) > 0",
               std::to_string(g.back()));
    return rep;
  }
  const Subset full = mu.space().full_mask();
  for (Subset a = 0; a <= full; ++a) {
    for (int i = 0; i < m; ++i) {
      Subset bit = Subset{1} << i;
      if (a & bit) continue;
      ++rep.trials;
      if (!(mu(a) <= mu(a | bit)))
        rep.fail(-1, "table measure",
                 "mu" + detail::mask_str(a, m) + " <= mu" +
                     detail::mask_str(a | bit, m),
                 std::to_string(mu(a)) + " > " + std::to_string(mu(a | bit)));
    }
    if (a == full) break;
  }
  if (!(mu(full) > 0.0))
    rep.fail(-1, "table measure", "mu(X) > 0", std::to_string(mu(full)));
  return rep;
}

// First subadditivity violation, if any: mu(A ∪ B) > mu(A) + mu(B).
inline std::pair<bool, std::pair<Subset, Subset>> find_subadditivity_violation(
    const MonotoneMeasure& mu) {
  const int m = mu.space().m;
  if (mu.symmetric()) {
    if (m > 32)
      throw capability_error(
          "subadditivity witness construction is limited to m <= 32");
    // mu(A ∪ B) is largest, for fixed sizes, when A and B are disjoint, so it
    // suffices to test g(min(j+k, m)) <= g(j) + g(k).
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k) {
        double whole = mu.of_count(std::min(j + k, m));
        if (whole > mu.of_count(j) + mu.of_count(k)) {
          auto low_bits = [](int n) {
            return static_cast<Subset>((std::uint64_t{1} << n) - 1);
          };
          Subset a = low_bits(j);
          int extra = std::min(j + k, m) - j;
          Subset b = static_cast<Subset>(
              static_cast<std::uint64_t>(low_bits(extra)) << j);
          return {true, {a, b}};
        }
      }
    return {false, {0, 0}};
  }
  if (m > 12)
    throw capability_error(
        "pairwise subadditivity scan on tables is limited to m <= 12");
  const Subset full = mu.space().full_mask();
  for (Subset a = 1; a <= full; ++a)
    for (Subset b = 1; b <= full; ++b) {
      if (mu(a | b) > mu(a) + mu(b)) return {true, {a, b}};
      if (b == full) break;
    }
  return {false, {0, 0}};
}

inline VerificationReport is_subadditive(const MonotoneMeasure& mu) {
  VerificationReport rep;
  rep.suite = "is-subadditive";
  rep.trials = 1;
  auto [violated, pair] = find_subadditivity_violation(mu);
  if (violated) {
    const int m = mu.space().m;
    rep.fail(-1, "measure",
             "mu(A ∪ B) <= mu(A) + mu(B) at A=" +
                 detail::mask_str(pair.first, m) +
                 " B=" + detail::mask_str(pair.second, m),
             std::to_string(mu(pair.first | pair.second)) + " > " +
                 std::to_string(mu(pair.first)) + " + " +
                 std::to_string(mu(pair.second)));
  }
  return rep;
}

// n-fold link iterate of a measure value: mu*_1 = mu, mu*_{k+1}(A) = mu(A) ★ mu*_k(A).
inline double star_iterate(const MonotoneMeasure& mu, const LinkMap& link,
                           int n, Subset a) {
  if (n < 1) throw input_error("star_iterate needs n >= 1");
  if (link.kind() != MapKind::link)
    throw config_error("star_iterate needs a link map");
  double base = mu(a);
  double value = base;
  for (int k = 2; k <= n; ++k) value = link(base, value);
  return value;
}

// The iterated measure as a reusable object.
struct StarIterate {
  MonotoneMeasure base;
  LinkMap link;
  int n = 1;
  double operator()(Subset a) const { return star_iterate(base, link, n, a); }
};

// f <=_mu g: mu({f >= t}) <= mu({g >= t}) for every threshold; exact on the
// union of both value sets (level measures are step functions of t).
inline bool dominates(const MonotoneMeasure& mu, const LevelFunction& f,
                      const LevelFunction& g) {
  detail::require_same_space(mu, f);
  detail::require_same_space(mu, g);
  std::vector<double> thresholds = {0.0};
  thresholds.insert(thresholds.end(), f.values().begin(), f.values().end());
  thresholds.insert(thresholds.end(), g.values().begin(), g.values().end());
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  for (double t : thresholds)
    if (level_measure(mu, f, t) > level_measure(mu, g, t)) return false;
  return true;
}

}  // namespace nsugeno
