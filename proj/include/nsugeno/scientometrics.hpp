#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "nsugeno/core.hpp"
#include "nsugeno/integral.hpp"
#include "nsugeno/maps.hpp"
#include "nsugeno/measure.hpp"

namespace nsugeno {

// A citation record: nonnegative integer counts, kept sorted nonincreasing
// with the implicit all-zero tail trimmed.
class ScientificRecord {
 public:
  explicit ScientificRecord(std::vector<long long> citations)
      : x_(std::move(citations)) {
    for (long long v : x_)
      if (v < 0) throw input_error("citation counts must be nonnegative");
    was_sorted_ = std::is_sorted(x_.begin(), x_.end(), std::greater<>());
    if (!was_sorted_) std::sort(x_.begin(), x_.end(), std::greater<>());
    while (!x_.empty() && x_.back() == 0) x_.pop_back();
  }

  // 1-based access with the zero tail.
  long long at(long long k) const {
    if (k < 1) throw input_error("record positions are 1-based");
    return k <= static_cast<long long>(x_.size())
               ? x_[static_cast<std::size_t>(k - 1)]
               : 0;
  }

  long long size() const { return static_cast<long long>(x_.size()); }
  const std::vector<long long>& citations() const { return x_; }
  bool all_zero() const { return x_.empty(); }
  bool was_sorted_input() const { return was_sorted_; }

 private:
  std::vector<long long> x_;
  bool was_sorted_ = true;
};

// Conjugate sequence y_k = #{ i : x_i >= k }, k = 1..x_1.
inline ScientificRecord conjugate(const ScientificRecord& x) {
  if (x.all_zero()) return ScientificRecord({});
  long long top = x.at(1);
  if (top > 10'000'000LL)
    throw capability_error("conjugate of a record with x_1 > 1e7");
  std::vector<long long> y(static_cast<std::size_t>(top), 0);
  for (long long k = 1; k <= top; ++k) {
    long long count = 0;
    for (long long v : x.citations())
      if (v >= k) ++count;
      else break;  // sorted nonincreasing
    y[static_cast<std::size_t>(k - 1)] = count;
  }
  return ScientificRecord(std::move(y));
}

// h = max{ k : x_k >= k }.
inline long long h_index(const ScientificRecord& x) {
  long long h = 0;
  for (long long k = 1; k <= x.size(); ++k)
    if (x.at(k) >= k) h = k;
  return h;
}

// K_s = max{ k : x_k >= s(k) } for a nondecreasing s with s(0) = 0 and
// s(k) > 0 past zero, so the maximum is attained within the record.
inline long long kosmulski(const ScientificRecord& x, const UnaryFn& s) {
  if (!(s(1.0) > 0.0))
    throw config_error(
        "kosmulski needs s positive on k >= 1; otherwise the maximum is not "
        "attained within the record");
  long long best = 0;
  for (long long k = 1; k <= x.size(); ++k)
    if (static_cast<double>(x.at(k)) >= s(static_cast<double>(k))) best = k;
  return best;
}

// h_alpha = max_k floor( (x_k / alpha) ∧ k ).
inline long long h_alpha(const ScientificRecord& x, double alpha) {
  if (!(alpha > 0.0)) throw config_error("h_alpha needs alpha > 0");
  long long best = 0;
  for (long long k = 1; k <= x.size(); ++k) {
    double term = std::min(static_cast<double>(x.at(k)) / alpha,
                           static_cast<double>(k));
    best = std::max(best, static_cast<long long>(std::floor(term)));
  }
  return best;
}

// h^beta = ceil( max_k x_k ∧ (k / beta) ).
inline long long h_beta(const ScientificRecord& x, double beta) {
  if (!(beta > 0.0)) throw config_error("h_beta needs beta > 0");
  double best = 0.0;
  for (long long k = 1; k <= x.size(); ++k)
    best = std::max(best, std::min(static_cast<double>(x.at(k)),
                                   static_cast<double>(k) / beta));
  return static_cast<long long>(std::ceil(best));
}

// Two-step h-type indices:
//   upper: max_k (k + h) ∧ x_k     (h more citations demanded per work)
//   lower: max_k k ∧ (x_k + h)     (h bonus citations granted per work)
inline long long two_h_upper(const ScientificRecord& x) {
  long long h = h_index(x);
  long long best = 0;
  for (long long k = 1; k <= x.size(); ++k)
    best = std::max(best, std::min(k + h, x.at(k)));
  return best;
}

inline long long two_h_lower(const ScientificRecord& x) {
  long long h = h_index(x);
  long long best = 0;
  for (long long k = 1; k <= x.size() + h + 1; ++k)
    best = std::max(best, std::min(k, x.at(k) + h));
  return best;
}

// Iterated h: h of the record, then h of what remains past the Hirsch core,
// and so on. Entries are nonincreasing and iH_1 = h.
inline std::vector<long long> iterated_h(const ScientificRecord& x, int n) {
  if (n < 1) throw input_error("iterated_h needs n >= 1");
  std::vector<long long> out;
  long long offset = 0;
  for (int j = 0; j < n; ++j) {
    long long h = 0;
    for (long long k = 1; k + offset <= x.size(); ++k)
      if (x.at(offset + k) >= k) h = k;
    out.push_back(h);
    offset += h;
  }
  return out;
}

// p: number of works with at least one citation; c: the top citation count;
// s: total citations.
inline long long p_index(const ScientificRecord& x) { return x.size(); }

inline long long c_index(const ScientificRecord& x) {
  return x.all_zero() ? 0 : x.at(1);
}

inline long long s_index(const ScientificRecord& x) {
  return std::accumulate(x.citations().begin(), x.citations().end(),
                         static_cast<long long>(0));
}

// The record as an integral instance: counting measure on {1..len} with the
// citation counts as function values and an unbounded scale. Level measures
// at positive thresholds agree with the infinite-support reading, and the
// threshold-zero candidates are capped harmlessly (every iterate stays below
// the number of cited works).
inline GroundSpace record_space(const ScientificRecord& x) {
  return GroundSpace(static_cast<int>(std::max<long long>(x.size(), 1)), kInf);
}

inline MonotoneMeasure record_measure(const ScientificRecord& x) {
  return MonotoneMeasure::counting(record_space(x));
}

inline LevelFunction record_function(const ScientificRecord& x) {
  GroundSpace space = record_space(x);
  std::vector<double> values(static_cast<std::size_t>(space.m), 0.0);
  for (long long k = 1; k <= x.size(); ++k)
    values[static_cast<std::size_t>(k - 1)] = static_cast<double>(x.at(k));
  return LevelFunction(space, std::move(values));
}

// Upper/lower n-Sugeno value of the record with a given map.
inline double record_upper_n(const ScientificRecord& x, const FusionMap& ring,
                             int n) {
  return upper_n(record_measure(x), record_function(x), ring, n);
}

inline double record_lower_n(const ScientificRecord& x, const LinkMap& link,
                             int n) {
  return lower_n(record_measure(x), record_function(x), link, n);
}

}  // namespace nsugeno
