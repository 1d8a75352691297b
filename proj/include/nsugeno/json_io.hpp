#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "nsugeno/core.hpp"
#include "nsugeno/integral.hpp"
#include "nsugeno/maps.hpp"
#include "nsugeno/measure.hpp"
#include "nsugeno/report.hpp"
#include "nsugeno/scientometrics.hpp"

namespace nsugeno {

using nlohmann::json;

// JSON has no infinity; the interchange format spells it "inf".
inline json num_or_inf(double v) {
  if (std::isinf(v)) return json("inf");
  return json(v);
}

inline double num_from(const json& j, const std::string& what) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInf;
    throw input_error(what + ": only \"inf\" is accepted as a string value");
  }
  if (!j.is_number()) throw input_error(what + ": expected a number");
  return j.get<double>();
}

// Measure file: {"m": int, "yBar": number | "inf", "kind": "table" |
// "cardinality" | "counting", "values": ...}. Table values map decimal
// bitmask strings to numbers and must cover all 2^m subsets; cardinality
// values are an array of m + 1 numbers starting with 0.
inline MonotoneMeasure measure_from_json(const json& j) {
  if (!j.is_object()) throw input_error("measure: expected a JSON object");
  if (!j.contains("m") || !j.contains("yBar") || !j.contains("kind"))
    throw input_error("measure: needs fields m, yBar, kind");
  if (!j["m"].is_number_integer())
    throw input_error("measure: m must be an integer");
  int m = j["m"].get<int>();
  double ybar = num_from(j["yBar"], "measure yBar");
  GroundSpace space(m, ybar);
  std::string kind = j["kind"].get<std::string>();
  if (kind == "counting") {
    if (j.contains("values"))
      throw input_error("measure: counting takes no values");
    return MonotoneMeasure::counting(space);
  }
  if (!j.contains("values"))
    throw input_error("measure: kind " + kind + " needs values");
  if (kind == "cardinality") {
    if (!j["values"].is_array())
      throw input_error("measure: cardinality values must be an array");
    std::vector<double> g;
    for (const auto& item : j["values"])
      g.push_back(num_from(item, "measure value"));
    return MonotoneMeasure::cardinality(space, std::move(g));
  }
  if (kind == "table") {
    if (m > 20)
      throw capability_error("table measures are limited to m <= 20");
    if (!j["values"].is_object())
      throw input_error(
          "measure: table values must map decimal bitmask strings to numbers");
    std::vector<double> values(std::size_t{1} << m,
                               std::numeric_limits<double>::quiet_NaN());
    for (const auto& [key, val] : j["values"].items()) {
      std::size_t used = 0;
      unsigned long mask = 0;
      try {
        mask = std::stoul(key, &used);
      } catch (const std::exception&) {
        throw input_error("measure: bad bitmask key \"" + key + "\"");
      }
      if (used != key.size() || mask >= values.size())
        throw input_error("measure: bitmask key out of range: \"" + key +
                          "\"");
      values[mask] = num_from(val, "measure value at key " + key);
      if (std::isnan(values[mask]))
        throw input_error("measure: value at key " + key + " is NaN");
    }
    for (std::size_t a = 0; a < values.size(); ++a)
      if (std::isnan(values[a]))
        throw input_error("measure: table is missing subset key " +
                          std::to_string(a));
    if (values[0] != 0.0)
      throw input_error("measure: table key \"0\" must map to 0");
    return MonotoneMeasure::table(space, std::move(values));
  }
  throw input_error("measure: unknown kind \"" + kind + "\"");
}

inline json measure_to_json(const MonotoneMeasure& mu) {
  json j;
  j["m"] = mu.space().m;
  j["yBar"] = num_or_inf(mu.space().y_bar);
  j["kind"] = backend_name(mu.backend());
  if (mu.backend() == MeasureBackend::cardinality) {
    json values = json::array();
    for (double v : mu.raw_values()) values.push_back(num_or_inf(v));
    j["values"] = values;
  } else if (mu.backend() == MeasureBackend::table) {
    json values = json::object();
    for (std::size_t a = 0; a < mu.raw_values().size(); ++a)
      values[std::to_string(a)] = num_or_inf(mu.raw_values()[a]);
    j["values"] = values;
  }
  return j;
}

// Function file: {"values": [...]} on the measure's ground space.
inline LevelFunction function_from_json(const json& j,
                                        const GroundSpace& space) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    throw input_error("function: expected {\"values\": [...]}");
  std::vector<double> values;
  for (const auto& item : j["values"])
    values.push_back(num_from(item, "function value"));
  return LevelFunction(space, std::move(values));
}

inline json function_to_json(const LevelFunction& f) {
  json values = json::array();
  for (double v : f.values()) values.push_back(num_or_inf(v));
  return json{{"values", values}};
}

// Integral request: {"kind": "sugeno" | "upper" | "lower",
//                    "map": "<spec string>", "n": int}.
inline IntegralSpec integral_spec_from_json(const json& j, double ybar) {
  if (!j.is_object() || !j.contains("kind"))
    throw input_error("integral spec: needs a kind");
  IntegralSpec spec;
  std::string kind = j["kind"].get<std::string>();
  if (kind == "sugeno") spec.kind = IntegralSpec::Kind::sugeno;
  else if (kind == "upper") spec.kind = IntegralSpec::Kind::upper;
  else if (kind == "lower") spec.kind = IntegralSpec::Kind::lower;
  else throw input_error("integral spec: unknown kind \"" + kind + "\"");
  if (j.contains("n")) spec.n = j["n"].get<int>();
  if (j.contains("map"))
    spec.map = make_map(j["map"].get<std::string>(),
                        spec.kind == IntegralSpec::Kind::upper
                            ? MapKind::fusion
                            : MapKind::link,
                        ybar);
  spec.validate();
  return spec;
}

// One parsed record with its source identifier and any ingestion warnings.
struct RecordsParse {
  struct Entry {
    std::string id;
    ScientificRecord record;
  };
  std::vector<Entry> entries;
  std::vector<std::string> warnings;
};

namespace detail {

inline ScientificRecord record_from_counts(std::vector<long long> counts,
                                           const std::string& where,
                                           std::vector<std::string>& warnings) {
  ScientificRecord rec(std::move(counts));
  if (!rec.was_sorted_input())
    warnings.push_back(where + ": counts were not sorted nonincreasing; "
                               "sorted on ingestion");
  if (rec.all_zero()) warnings.push_back(where + ": all-zero record");
  return rec;
}

}  // namespace detail

// CSV: one record per line, comma-separated nonnegative integers. Blank
// lines are skipped. Errors name the line and token.
inline RecordsParse records_from_csv(std::istream& in) {
  RecordsParse out;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<long long> counts;
    std::stringstream row(line);
    std::string token;
    long long token_no = 0;
    while (std::getline(row, token, ',')) {
     ++token_no;
      auto start = token.find_first_not_of(" \t\r");
      auto stop = token.find_last_not_of(" \t\r");
      if (start == std::string::npos)
        throw input_error("records csv line " + std::to_string(line_no) +
                          ", token " + std::to_string(token_no) +
                          ": empty value");
      std::string body = token.substr(start, stop - start + 1);
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(body, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != body.size())
        throw input_error("records csv line " + std::to_string(line_no) +
                          ", token " + std::to_string(token_no) +
                          ": not an integer: \"" + body + "\"");
      if (value < 0)
        throw input_error("records csv line " + std::to_string(line_no) +
                          ", token " + std::to_string(token_no) +
                          ": negative citation count");
      counts.push_back(value);
    }
    out.entries.push_back(
        {std::to_string(line_no),
         detail::record_from_counts(std::move(counts),
                                    "line " + std::to_string(line_no),
                                    out.warnings)});
  }
  return out;
}

// JSON: {"records": [{"id": "...", "citations": [...]}, ...]}.
inline RecordsParse records_from_json(const json& j) {
  if (!j.is_object() || !j.contains("records") || !j["records"].is_array())
    throw input_error("records json: expected {\"records\": [...]}");
  RecordsParse out;
  long long index = 0;
  for (const auto& item : j["records"]) {
    ++index;
    if (!item.is_object() || !item.contains("citations") ||
        !item["citations"].is_array())
      throw input_error("records json: record " + std::to_string(index) +
                        " needs a citations array");
    std::string id = item.contains("id") ? item["id"].get<std::string>()
                                         : std::to_string(index);
    std::vector<long long> counts;
    for (const auto& c : item["citations"]) {
      if (!c.is_number_integer())
        throw input_error("records json: record " + id +
                          " has a non-integer citation count");
      counts.push_back(c.get<long long>());
      if (counts.back() < 0)
        throw input_error("records json: record " + id +
                          " has a negative citation count");
    }
    out.entries.push_back(
        {id, detail::record_from_counts(std::move(counts), "record " + id,
                                        out.warnings)});
  }
  return out;
}

inline json report_to_json(const VerificationReport& rep) {
  json j;
  j["suite"] = rep.suite;
  j["trials"] = rep.trials;
  j["passed"] = rep.passed();
  json failures = json::array();
  for (const auto& f : rep.failures) {
    failures.push_back(json{{"trial", f.trial},
                            {"instance", f.instance},
                            {"relation", f.relation},
                            {"observed", f.observed}});
  }
  j["failures"] = failures;
  return j;
}

}  // namespace nsugeno
