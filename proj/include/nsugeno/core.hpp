#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

// Shared scalar conventions. All quantities live on the extended nonnegative
// half-line; the only convention IEEE does not already give us is 0 * inf = 0.
namespace nsugeno {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Default tolerance for evaluator-equality checks on real-valued instances.
// Integer-valued paths (scientometrics, integer chain grids) compare exactly.
inline constexpr double kEvalTol = 1e-12;

// Bad user-supplied data (files, records, out-of-range function values).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structurally valid request that cannot be honored (wrong map kind,
// parameter out of range, precondition flag unmet).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A request outside the implemented envelope (set enumeration for large m,
// non-finite iterates under y_bar = inf).
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// inf ∧ a = a and inf ∨ a = inf hold natively through std::min/std::max,
// and a + inf = inf through IEEE addition; products need the 0 * inf guard.
inline double ext_mul(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

inline bool near(double a, double b, double tol = kEvalTol) {
  if (a == b) return true;  // covers matching infinities
  return std::fabs(a - b) <= tol;
}

}  // namespace nsugeno
