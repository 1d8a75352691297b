#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsugeno/core.hpp"
#include "nsugeno/report.hpp"

namespace nsugeno {

// A fusion map combines the threshold with the previous iterate inside the
// upper recurrence; a link map rescales the level measure inside the lower
// one. Both are nondecreasing in each argument with map(0, a) <= a; the
// difference is the range constraint: a fusion map must land back in [0, ybar].
enum class MapKind { fusion, link };

enum MapFlag : unsigned {
  kGeqMin = 1u << 0,             // a o b >= a ∧ b
  kIdempotent = 1u << 1,         // a o a == a
  kContinuousFirstArg = 1u << 2,  // declared, not grid-checkable
  kMinDistributive = 1u << 3,    // (a∧b) o (a∧c) == a ∧ (b o c)
  kMaxDistributive = 1u << 4,    // (a∨b) o (a∨c) == a ∨ (b o c)
  kYbarAbsorbing = 1u << 5,      // ybar o ybar == ybar
  kBoundedBetween = 1u << 6,     // a∧b <= a o b <= a∨b
  kScaleSuper = 1u << 7,         // (ax) o (ay) >= a (x o y) for a < 1
  kScaleSub = 1u << 8,           // (ax) o (ay) <= a (x o y) for a > 1
};
using MapFlags = unsigned;

// Nondecreasing unary transform s with s(0) = 0, optionally composed with
// floor/ceil. "divide" keeps ⌊a/alpha⌋ exact for integer inputs, which a
// reciprocal multiply would not.
struct UnaryFn {
  enum class Base { identity, linear, divide, power, sqrt_fn, square, cube, table };
  enum class Round { none, down, up };

  Base base = Base::identity;
  Round round = Round::none;
  double coeff = 1.0;               // linear slope / divisor / exponent
  std::vector<double> table_values;  // Base::table: s(k) = value at ⌊k⌋, clamped

  static UnaryFn identity() { return {}; }
  static UnaryFn linear(double slope) { return {Base::linear, Round::none, slope, {}}; }
  static UnaryFn divide(double divisor) { return {Base::divide, Round::none, divisor, {}}; }
  static UnaryFn power(double exponent) { return {Base::power, Round::none, exponent, {}}; }
  static UnaryFn sqrt_fn() { return {Base::sqrt_fn, Round::none, 1.0, {}}; }
  static UnaryFn square() { return {Base::square, Round::none, 1.0, {}}; }
  static UnaryFn cube() { return {Base::cube, Round::none, 1.0, {}}; }
  static UnaryFn floor_div(double divisor) { return {Base::divide, Round::down, divisor, {}}; }
  static UnaryFn ceil_div(double divisor) { return {Base::divide, Round::up, divisor, {}}; }

  static UnaryFn table(std::vector<double> values) {
    if (values.empty() || values.front() != 0.0)
      throw config_error("unary table must start at s(0) = 0");
    for (std::size_t i = 1; i < values.size(); ++i)
      if (!(values[i] >= values[i - 1]))
        throw config_error("unary table must be nondecreasing");
    UnaryFn s;
    s.base = Base::table;
    s.table_values = std::move(values);
    return s;
  }

  double operator()(double a) const {
    double v = 0.0;
    switch (base) {
      case Base::identity: v = a; break;
      case Base::linear: v = ext_mul(coeff, a); break;
      case Base::divide: v = (a == 0.0) ? 0.0 : a / coeff; break;
      case Base::power: v = std::pow(a, coeff); break;
      case Base::sqrt_fn: v = std::sqrt(a); break;
      case Base::square: v = ext_mul(a, a); break;
      case Base::cube: v = ext_mul(a, ext_mul(a, a)); break;
      case Base::table: {
        if (std::isinf(a)) return table_values.back();
        auto k = static_cast<std::size_t>(std::min(
            std::floor(a), static_cast<double>(table_values.size() - 1)));
        v = table_values[k];
        break;
      }
    }
    switch (round) {
      case Round::down: return std::floor(v);
      case Round::up: return std::ceil(v);
      default: return v;
    }
  }

  bool continuous() const { return round == Round::none && base != Base::table; }

  // Exact inverse where one exists; rounding and tables are not invertible.
  UnaryFn inverse() const {
    if (round != Round::none)
      throw config_error("rounded unary map has no inverse: " + name());
    switch (base) {
      case Base::identity: return identity();
      case Base::linear: return divide(coeff);
      case Base::divide: return linear(coeff);
      case Base::power: return power(1.0 / coeff);
      case Base::sqrt_fn: return square();
      case Base::square: return sqrt_fn();
      default:
        throw config_error("unary map has no exact inverse: " + name());
    }
  }

  std::string name() const {
    std::ostringstream out;
    if (round == Round::down) out << "floor_";
    if (round == Round::up) out << "ceil_";
    switch (base) {
      case Base::identity: out << "identity"; break;
      case Base::linear: out << "linear(" << coeff << ")"; break;
      case Base::divide: out << "div(" << coeff << ")"; break;
      case Base::power: out << "power(" << coeff << ")"; break;
      case Base::sqrt_fn: out << "sqrt"; break;
      case Base::square: out << "square"; break;
      case Base::cube: out << "cube"; break;
      case Base::table: out << "table[" << table_values.size() << "]"; break;
    }
    return out.str();
  }
};

// A catalog-built binary combiner together with its declared algebraic flags.
// The same concrete type serves both roles; the kind tag records which
// admissibility contract was validated at construction time.
class CombineMap {
 public:
  using Eval = std::function<double(double, double)>;

  CombineMap() = default;
  CombineMap(std::string name, MapKind kind, double ybar, MapFlags flags,
             Eval eval, std::vector<std::pair<std::string, double>> params = {})
      : name_(std::move(name)),
        kind_(kind),
        ybar_(ybar),
        flags_(flags),
        eval_(std::move(eval)),
        params_(std::move(params)) {}

  double operator()(double a, double b) const { return eval_(a, b); }

  const std::string& name() const { return name_; }
  MapKind kind() const { return kind_; }
  double ybar() const { return ybar_; }
  MapFlags flags() const { return flags_; }
  bool has(MapFlag flag) const { return (flags_ & flag) != 0; }
  const std::vector<std::pair<std::string, double>>& params() const {
    return params_;
  }

  std::string spec_string() const {
    if (params_.empty()) return name_;
    std::ostringstream out;
    out << name_ << '(';
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (i) out << ',';
      out << params_[i].first << '=' << params_[i].second;
    }
    out << ')';
    return out.str();
  }

 private:
  std::string name_;
  MapKind kind_ = MapKind::fusion;
  double ybar_ = 1.0;
  MapFlags flags_ = 0;
  Eval eval_;
  std::vector<std::pair<std::string, double>> params_;
};

using FusionMap = CombineMap;
using LinkMap = CombineMap;

struct MapSpec {
  std::string name;
  std::map<std::string, double> params;
};

// Grammar: name or name(k=v,k=v,...). Values parse as decimal doubles or "inf".
inline MapSpec parse_map_spec(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  MapSpec spec;
  auto open = text.find('(');
  if (open == std::string_view::npos) {
    spec.name = std::string(text);
    if (spec.name.empty()) throw config_error("empty map spec");
    return spec;
  }
  if (text.back() != ')')
    throw config_error("map spec missing closing parenthesis: " +
                       std::string(text));
  spec.name = std::string(strip(text.substr(0, open)));
  if (spec.name.empty()) throw config_error("empty map name in spec");
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = strip(body.substr(0, comma));
    body = (comma == std::string_view::npos) ? std::string_view{}
                                             : body.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw config_error("map parameter needs key=value: " + std::string(item));
    std::string key(strip(item.substr(0, eq)));
    std::string val(strip(item.substr(eq + 1)));
    double parsed = 0.0;
    if (val == "inf") {
      parsed = kInf;
    } else {
      std::size_t used = 0;
      try {
        parsed = std::stod(val, &used);
      } catch (const std::exception&) {
        throw config_error("bad numeric value in map spec: " + val);
      }
      if (used != val.size())
        throw config_error("bad numeric value in map spec: " + val);
    }
    if (!spec.params.emplace(key, parsed).second)
      throw config_error("duplicate map parameter: " + key);
  }
  return spec;
}

namespace detail {

inline double require_param(const MapSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw config_error("map " + spec.name + " needs parameter " + key);
  return it->second;
}

inline double param_or(const MapSpec& spec, const std::string& key,
                       double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

inline void reject_unknown_params(const MapSpec& spec,
                                  std::initializer_list<const char*> known) {
  for (const auto& [key, value] : spec.params) {
    (void)value;
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok)
      throw config_error("map " + spec.name + " does not take parameter " + key);
  }
}

inline void require_fusion_range(const std::string& name, bool into_y) {
  if (!into_y)
    throw config_error("map " + name +
                       " does not stay inside [0, ybar]; it cannot serve as a "
                       "fusion map at this ybar");
}

inline UnaryFn unary_from_spec(const MapSpec& spec) {
  auto s = spec.params.find("s");
  // The sub-kind is carried as a small integer code when built from strings:
  // 0 identity, 1 linear(lambda), 2 sqrt, 3 square, 4 cube,
  // 5 floor_div(alpha), 6 ceil_div(beta), 7 power(gamma), 8 div(alpha),
  // 9 floor_linear(lambda), 10 ceil_linear(lambda).
  long code = 1;
  if (s != spec.params.end()) code = static_cast<long>(s->second);
  switch (code) {
    case 0: return UnaryFn::identity();
    case 1: return UnaryFn::linear(require_param(spec, "lambda"));
    case 2: return UnaryFn::sqrt_fn();
    case 3: return UnaryFn::square();
    case 4: return UnaryFn::cube();
    case 5: return UnaryFn::floor_div(require_param(spec, "alpha"));
    case 6: return UnaryFn::ceil_div(require_param(spec, "beta"));
    case 7: return UnaryFn::power(require_param(spec, "gamma"));
    case 8: return UnaryFn::divide(require_param(spec, "alpha"));
    case 9: {
      UnaryFn f = UnaryFn::linear(require_param(spec, "lambda"));
      f.round = UnaryFn::Round::down;
      return f;
    }
    case 10: {
      UnaryFn f = UnaryFn::linear(require_param(spec, "lambda"));
      f.round = UnaryFn::Round::up;
      return f;
    }
    default:
      throw config_error("unknown unary sub-kind code in map spec");
  }
}

// Textual aliases for the unary sub-kind, accepted in spec strings as
// e.g. "unary(s=floor_div,alpha=2)".
inline long unary_code_from_name(const std::string& name) {
  if (name == "identity") return 0;
  if (name == "linear") return 1;
  if (name == "sqrt") return 2;
  if (name == "square") return 3;
  if (name == "cube") return 4;
  if (name == "floor_div") return 5;
  if (name == "ceil_div") return 6;
  if (name == "power") return 7;
  if (name == "div") return 8;
  if (name == "floor_linear") return 9;
  if (name == "ceil_linear") return 10;
  return -1;
}

}  // namespace detail

// Wraps a unary stage s as the combine map a o b = s(a), with flags derived
// the same way the catalog "unary" entry derives them.
inline CombineMap make_unary_map(
    const UnaryFn& s, MapKind kind, double ybar,
    std::vector<std::pair<std::string, double>> params = {}) {
  if (!(ybar > 0.0)) throw config_error("make_unary_map needs ybar > 0");
  if (kind == MapKind::fusion)
    detail::require_fusion_range("unary " + s.name(), s(ybar) <= ybar);
  MapFlags flags = 0;
  if (s.continuous()) flags |= kContinuousFirstArg;
  bool is_identity = s.base == UnaryFn::Base::identity ||
                     (s.base == UnaryFn::Base::linear && s.coeff == 1.0 &&
                      s.round == UnaryFn::Round::none) ||
                     (s.base == UnaryFn::Base::divide && s.coeff == 1.0 &&
                      s.round == UnaryFn::Round::none);
  if (is_identity)
    flags |= kGeqMin | kIdempotent | kBoundedBetween | kYbarAbsorbing |
             kScaleSuper | kScaleSub;
  if (s.round == UnaryFn::Round::none) {
    if (s.base == UnaryFn::Base::linear && s.coeff >= 1.0) flags |= kGeqMin;
    if (s.base == UnaryFn::Base::divide && s.coeff <= 1.0) flags |= kGeqMin;
    if ((s.base == UnaryFn::Base::sqrt_fn ||
         (s.base == UnaryFn::Base::power && s.coeff < 1.0)) &&
        ybar <= 1.0)
      flags |= kGeqMin;
    if (s.base == UnaryFn::Base::linear || s.base == UnaryFn::Base::divide)
      flags |= kScaleSuper | kScaleSub;
    if (s.base == UnaryFn::Base::sqrt_fn ||
        (s.base == UnaryFn::Base::power && s.coeff < 1.0))
      flags |= kScaleSuper | kScaleSub;  // a^g <=> a straddles 1 correctly
  }
  if (near(s(ybar), ybar, 0.0)) flags |= kYbarAbsorbing;
  return CombineMap("unary:" + s.name(), kind, ybar, flags,
                    [s](double a, double) { return s(a); }, std::move(params));
}

// Builds a catalog map validated for the requested role at the given ybar.
// Throws config_error on unknown names, out-of-range parameters, or when the
// entry cannot serve the requested kind at this ybar.
inline CombineMap make_map(const MapSpec& raw, MapKind kind, double ybar) {
  using detail::param_or;
  using detail::reject_unknown_params;
  using detail::require_fusion_range;
  using detail::require_param;

  if (!(ybar > 0.0)) throw config_error("make_map needs ybar > 0");
  MapSpec spec = raw;
  // Canonical names; accept the longer catalog identifiers as aliases.
  static const std::map<std::string, std::string> aliases = {
      {"owa_p", "owa"},       {"scale_lambda", "scale"},
      {"power_gamma", "power"}, {"mix_lambda", "mix"},
      {"pnorm_q", "pnorm"},   {"geo_p", "geo"},
      {"unary_s", "unary"},   {"prod", "times"}};
  if (auto it = aliases.find(spec.name); it != aliases.end())
    spec.name = it->second;

  const bool fusion = kind == MapKind::fusion;
  const bool inf_ybar = std::isinf(ybar);
  std::vector<std::pair<std::string, double>> shown;

  if (spec.name == "plus_capped") {
    reject_unknown_params(spec, {"ybar"});
    double cap = param_or(spec, "ybar", ybar);
    if (!(cap > 0.0)) throw config_error("plus_capped needs ybar > 0");
    if (fusion && cap > ybar)
      throw config_error("plus_capped cap exceeds ybar");
    MapFlags flags = kContinuousFirstArg | kScaleSuper | kScaleSub;
    if (cap >= ybar) flags |= kGeqMin;
    if (cap == ybar) flags |= kYbarAbsorbing;
    if (spec.params.count("ybar")) shown = {{"ybar", cap}};
    return CombineMap("plus_capped", kind, ybar, flags,
                      [cap](double a, double b) { return std::min(a + b, cap); },
                      shown);
  }

  if (spec.name == "plus") {
    reject_unknown_params(spec, {});
    if (fusion) require_fusion_range("plus", inf_ybar);
    MapFlags flags =
        kGeqMin | kContinuousFirstArg | kScaleSuper | kScaleSub;
    if (inf_ybar) flags |= kYbarAbsorbing;
    return CombineMap("plus", kind, ybar, flags,
                      [](double a, double b) { return a + b; });
  }

  if (spec.name == "times") {
    reject_unknown_params(spec, {});
    if (fusion) require_fusion_range("times", ybar <= 1.0 || inf_ybar);
    MapFlags flags = kContinuousFirstArg;
    if (ybar == 1.0 || inf_ybar) flags |= kYbarAbsorbing;
    return CombineMap("times", kind, ybar, flags, &ext_mul);
  }

  if (spec.name == "min" || spec.name == "max") {
    reject_unknown_params(spec, {});
    MapFlags flags = kGeqMin | kIdempotent | kContinuousFirstArg |
                     kMinDistributive | kMaxDistributive | kYbarAbsorbing |
                     kBoundedBetween | kScaleSuper | kScaleSub;
    if (spec.name == "min")
      return CombineMap("min", kind, ybar, flags,
                        [](double a, double b) { return std::min(a, b); });
    return CombineMap("max", kind, ybar, flags,
                      [](double a, double b) { return std::max(a, b); });
  }

  if (spec.name == "owa") {
    reject_unknown_params(spec, {"p"});
    double p = require_param(spec, "p");
    if (!(p >= 0.0 && p <= 1.0)) throw config_error("owa needs p in [0,1]");
    MapFlags flags = kGeqMin | kIdempotent | kContinuousFirstArg |
                     kYbarAbsorbing | kBoundedBetween | kScaleSuper | kScaleSub;
    if (p == 0.0 || p == 1.0) flags |= kMinDistributive | kMaxDistributive;
    return CombineMap("owa", kind, ybar, flags,
                      [p](double a, double b) {
                        double lo = std::min(a, b), hi = std::max(a, b);
                        return ext_mul(p, lo) + ext_mul(1.0 - p, hi);
                      },
                      {{"p", p}});
  }

  if (spec.name == "scale") {
    reject_unknown_params(spec, {"lambda"});
    double lambda = require_param(spec, "lambda");
    if (!(lambda > 0.0)) throw config_error("scale needs lambda > 0");
    if (fusion) require_fusion_range("scale", lambda <= 1.0 || inf_ybar);
    MapFlags flags = kContinuousFirstArg | kScaleSuper | kScaleSub;
    if (lambda >= 1.0) flags |= kGeqMin;
    if (lambda == 1.0) flags |= kIdempotent | kBoundedBetween;
    if (lambda == 1.0 || inf_ybar) flags |= kYbarAbsorbing;
    return CombineMap("scale", kind, ybar, flags,
                      [lambda](double a, double) { return ext_mul(lambda, a); },
                      {{"lambda", lambda}});
  }

  if (spec.name == "power") {
    reject_unknown_params(spec, {"gamma"});
    double gamma = require_param(spec, "gamma");
    if (!(gamma > 0.0 && gamma < 1.0))
      throw config_error("power needs gamma in (0,1)");
    if (fusion) require_fusion_range("power", ybar >= 1.0);
    MapFlags flags = kContinuousFirstArg | kScaleSuper | kScaleSub;
    if (ybar <= 1.0) flags |= kGeqMin;
    if (ybar == 1.0 || inf_ybar) flags |= kYbarAbsorbing;
    return CombineMap("power", kind, ybar, flags,
                      [gamma](double a, double) { return std::pow(a, gamma); },
                      {{"gamma", gamma}});
  }

  if (spec.name == "mix") {
    reject_unknown_params(spec, {"lambda"});
    double lambda = require_param(spec, "lambda");
    if (!(lambda >= 0.0 && lambda <= 1.0))
      throw config_error("mix needs lambda in [0,1]");
    if (fusion) require_fusion_range("mix", lambda == 0.0 || inf_ybar);
    MapFlags flags =
        kGeqMin | kContinuousFirstArg | kScaleSuper | kScaleSub;
    if (lambda == 0.0)
      flags |= kIdempotent | kBoundedBetween | kMinDistributive |
               kMaxDistributive | kYbarAbsorbing;
    else if (inf_ybar)
      flags |= kYbarAbsorbing;
    return CombineMap("mix", kind, ybar, flags,
                      [lambda](double a, double b) {
                        return ext_mul(lambda, a + b) +
                               ext_mul(1.0 - lambda, std::max(a, b));
                      },
                      {{"lambda", lambda}});
  }

  if (spec.name == "probsum") {
    reject_unknown_params(spec, {});
    if (!fusion)
      throw config_error(
          "probsum is only monotone on [0,1]^2; it cannot serve as a link map");
    if (ybar != 1.0) throw config_error("probsum needs ybar = 1");
    MapFlags flags = kGeqMin | kContinuousFirstArg | kYbarAbsorbing |
                     kScaleSuper | kScaleSub;
    return CombineMap("probsum", kind, ybar, flags,
                      [](double a, double b) { return a + b - a * b; });
  }

  if (spec.name == "pnorm") {
    reject_unknown_params(spec, {"q"});
    double q = require_param(spec, "q");
    if (!(q >= 1.0)) throw config_error("pnorm needs q >= 1");
    if (fusion) require_fusion_range("pnorm", inf_ybar);
    MapFlags flags =
        kGeqMin | kContinuousFirstArg | kScaleSuper | kScaleSub;
    if (inf_ybar) flags |= kYbarAbsorbing;
    return CombineMap("pnorm", kind, ybar, flags,
                      [q](double a, double b) {
                        if (std::isinf(a) || std::isinf(b)) return kInf;
                        if (a == 0.0) return b;
                        if (b == 0.0) return a;
                        return std::pow(std::pow(a, q) + std::pow(b, q),
                                        1.0 / q);
                      },
                      {{"q", q}});
  }

  if (spec.name == "geo") {
    reject_unknown_params(spec, {"p"});
    double p = require_param(spec, "p");
    if (!(p > 0.0 && p < 1.0)) throw config_error("geo needs p in (0,1)");
    MapFlags flags = kGeqMin | kIdempotent | kContinuousFirstArg |
                     kYbarAbsorbing | kBoundedBetween | kScaleSuper | kScaleSub;
    return CombineMap("geo", kind, ybar, flags,
                      [p](double a, double b) {
                        return ext_mul(std::pow(a, p), std::pow(b, 1.0 - p));
                      },
                      {{"p", p}});
  }

  if (spec.name == "unary") {
    UnaryFn s = detail::unary_from_spec(spec);
    std::vector<std::pair<std::string, double>> params(spec.params.begin(),
                                                       spec.params.end());
    return make_unary_map(s, kind, ybar, std::move(params));
  }

  throw config_error("unknown map name: " + spec.name);
}

// String form; a textual unary sub-kind such as "unary(s=floor_div,alpha=2)"
// is translated to its numeric code before the numeric parse sees it.
inline CombineMap make_map(const std::string& text, MapKind kind, double ybar) {
  std::string prepared = text;
  auto pos = prepared.find("s=");
  if (pos != std::string::npos) {
    auto end = prepared.find_first_of(",)", pos);
    std::string word = prepared.substr(
        pos + 2, (end == std::string::npos ? prepared.size() : end) - pos - 2);
    long code = detail::unary_code_from_name(word);
    if (code >= 0)
      prepared.replace(pos + 2, word.size(), std::to_string(code));
  }
  return make_map(parse_map_spec(prepared), kind, ybar);
}

// 17-point check grid: {0, ybar}, the map's own parameters, and a uniform
// interior fill. With ybar = inf the interior uses a fixed geometric spread.
inline std::vector<double> default_grid(double ybar, const CombineMap& map) {
  std::vector<double> grid = {0.0, ybar};
  for (const auto& [key, value] : map.params())
    if (std::isfinite(value) && value >= 0.0 && value <= ybar)
      grid.push_back(value);
  if (std::isinf(ybar)) {
    for (double v : {0.125, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0,
                     16.0, 24.0, 32.0, 48.0})
      grid.push_back(v);
  } else {
    for (int i = 1; grid.size() < 17u && i <= 64; ++i) {
      double v = ybar * static_cast<double>(i) / 16.0;
      if (v < ybar) grid.push_back(v);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  while (grid.size() > 17u) grid.erase(grid.end() - 2);  // keep 0 and ybar
  return grid;
}

namespace detail {

inline std::string pair_str(double a, double b) {
  std::ostringstream out;
  out.precision(17);
  out << "(a=" << a << ", b=" << b << ")";
  return out.str();
}

inline std::string triple_str(double a, double b, double c) {
  std::ostringstream out;
  out.precision(17);
  out << "(a=" << a << ", b=" << b << ", c=" << c << ")";
  return out.str();
}

}  // namespace detail

// Admissibility: nondecreasing in each argument and map(0, a) <= a, checked
// exhaustively on the grid. Failures carry the witness points.
inline VerificationReport check_map_axioms(const CombineMap& map, MapKind kind,
                                           const std::vector<double>& grid) {
  if (map.kind() != kind)
    throw config_error("map " + map.name() +
                       " was built for a different role than requested");
  VerificationReport rep;
  rep.suite = "map-axioms:" + map.spec_string();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    for (double b : grid) {
      ++rep.trials;
      double lo = map(grid[i], b), hi = map(grid[i + 1], b);
      if (!(lo <= hi))
        rep.fail(-1, map.spec_string(),
                 "nondecreasing in first argument at " +
                     detail::pair_str(grid[i], b),
                 "f(" + std::to_string(grid[i]) + ")=" + std::to_string(lo) +
                     " > f(" + std::to_string(grid[i + 1]) + ")=" +
                     std::to_string(hi));
    }
  for (double a : grid)
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
      ++rep.trials;
      double lo = map(a, grid[j]), hi = map(a, grid[j + 1]);
      if (!(lo <= hi))
        rep.fail(-1, map.spec_string(),
                 "nondecreasing in second argument at " +
                     detail::pair_str(a, grid[j]),
                 std::to_string(lo) + " > " + std::to_string(hi));
    }
  for (double a : grid) {
    ++rep.trials;
    double v = map(0.0, a);
    if (!(v <= a))
      rep.fail(-1, map.spec_string(), "map(0, a) <= a",
               "map(0, " + std::to_string(a) + ") = " + std::to_string(v));
  }
  return rep;
}

// Grid-exhaustive check of one declared algebraic property.
inline VerificationReport check_map_property(const CombineMap& map,
                                             MapFlag property,
                                             const std::vector<double>& grid) {
  VerificationReport rep;
  rep.suite = "map-property:" + map.spec_string();
  auto fail = [&](const std::string& what, const std::string& obs) {
    rep.fail(-1, map.spec_string(), what, obs);
  };
  switch (property) {
    case kGeqMin:
      for (double a : grid)
        for (double b : grid) {
          ++rep.trials;
          if (!(map(a, b) >= std::min(a, b) - kEvalTol))
            fail("a o b >= a ∧ b at " + detail::pair_str(a, b),
                 std::to_string(map(a, b)));
        }
      break;
    case kIdempotent:
      for (double a : grid) {
        ++rep.trials;
        if (!near(map(a, a), a))
          fail("a o a == a at a=" + std::to_string(a),
               std::to_string(map(a, a)));
      }
      break;
    case kMinDistributive:
    case kMaxDistributive:
      for (double a : grid)
        for (double b : grid)
          for (double c : grid) {
            ++rep.trials;
            double lhs, rhs;
            if (property == kMinDistributive) {
              lhs = map(std::min(a, b), std::min(a, c));
              rhs = std::min(a, map(b, c));
            } else {
              lhs = map(std::max(a, b), std::max(a, c));
              rhs = std::max(a, map(b, c));
            }
            if (!near(lhs, rhs))
              fail("lattice distributivity at " + detail::triple_str(a, b, c),
                   std::to_string(lhs) + " vs " + std::to_string(rhs));
          }
      break;
    case kYbarAbsorbing: {
      ++rep.trials;
      double v = map(map.ybar(), map.ybar());
      if (!near(v, map.ybar()))
        fail("ybar o ybar == ybar", std::to_string(v));
      break;
    }
    case kBoundedBetween:
      for (double a : grid)
        for (double b : grid) {
          ++rep.trials;
          double v = map(a, b);
          if (!(v >= std::min(a, b) - kEvalTol &&
                v <= std::max(a, b) + kEvalTol))
            fail("a∧b <= a o b <= a∨b at " + detail::pair_str(a, b),
                 std::to_string(v));
        }
      break;
    case kScaleSuper:
    case kScaleSub:
      for (double factor : grid) {
        if (!std::isfinite(factor) || factor <= 0.0) continue;
        bool super = property == kScaleSuper;
        if (super ? factor >= 1.0 : factor <= 1.0) continue;
        for (double x : grid)
          for (double y : grid) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (factor * x > map.ybar() || factor * y > map.ybar()) continue;
            ++rep.trials;
            double lhs = map(factor * x, factor * y);
            double rhs = ext_mul(factor, map(x, y));
            bool ok = super ? lhs >= rhs - kEvalTol : lhs <= rhs + kEvalTol;
            if (!ok)
              fail((super ? "scale-super" : "scale-sub") + std::string(" at ") +
                       detail::triple_str(factor, x, y),
                   std::to_string(lhs) + " vs " + std::to_string(rhs));
          }
      }
      break;
    case kContinuousFirstArg:
      throw config_error(
          "continuity in the first argument is declared, not grid-checkable");
  }
  return rep;
}

// Verifies that a unary-style map really ignores its second argument.
inline VerificationReport check_constant_in_second(
    const CombineMap& map, const std::vector<double>& grid) {
  VerificationReport rep;
  rep.suite = "map-unary-const:" + map.spec_string();
  for (double a : grid) {
    double ref = map(a, grid.front());
    for (double b : grid) {
      ++rep.trials;
      if (!near(map(a, b), ref, 0.0))
        rep.fail(-1, map.spec_string(),
                 "value constant in second argument at a=" + std::to_string(a),
                 std::to_string(map(a, b)) + " vs " + std::to_string(ref));
    }
  }
  return rep;
}

// A monotone binary combiner for measure arithmetic (capped sum, max).
struct BinaryCombiner {
  std::string name;
  std::function<double(double, double)> eval;
  double operator()(double a, double b) const { return eval(a, b); }
};

inline BinaryCombiner capped_sum_combiner(double cap) {
  return {"capped_sum",
          [cap](double a, double b) { return std::min(a + b, cap); }};
}

inline BinaryCombiner max_combiner() {
  return {"max", [](double a, double b) { return std::max(a, b); }};
}

}  // namespace nsugeno
