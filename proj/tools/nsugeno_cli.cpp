// Command-line front end: scientometric indices over record files, single
// integral evaluations, the additive-link chain integral with its oracle,
// and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsugeno/nsugeno.hpp"

namespace {

using nlohmann::json;
using namespace nsugeno;

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    throw input_error(path + ": " + e.what());
  }
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw input_error("cannot write " + out_path);
  out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct IndicesConfig {
  std::string in_path;
  std::string out_path;
  double alpha = 1.0;
  double beta = 1.0;
  double lambda = 1.0;
  std::string format = "json";
};

int run_indices(const IndicesConfig& cfg) {
  if (!(cfg.alpha > 0.0)) throw config_error("alpha must be positive");
  if (!(cfg.beta > 0.0)) throw config_error("beta must be positive");
  if (!(cfg.lambda > 0.0)) throw config_error("lambda must be positive");

  RecordsParse parsed;
  if (ends_with(cfg.in_path, ".json")) {
    parsed = records_from_json(parse_json_file(cfg.in_path));
  } else {
    std::ifstream in(cfg.in_path);
    if (!in) throw input_error("cannot open " + cfg.in_path);
    parsed = records_from_csv(in);
  }
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";

  json out;
  out["parameters"] = json{{"alpha", cfg.alpha},
                           {"beta", cfg.beta},
                           {"lambda", cfg.lambda}};
  json records = json::array();
  for (const auto& entry : parsed.entries) {
    const ScientificRecord& x = entry.record;
    json idx;
    idx["h"] = h_index(x);
    idx["K_square"] = kosmulski(x, UnaryFn::square());
    idx["h_lambda"] = kosmulski(x, UnaryFn::linear(cfg.lambda));
    idx["H_alpha"] = h_alpha(x, cfg.alpha);
    idx["H_beta"] = h_beta(x, cfg.beta);
    idx["H_upper_2"] = two_h_upper(x);
    idx["H_lower_2"] = two_h_lower(x);
    idx["iH"] = iterated_h(x, 5);
    idx["p"] = p_index(x);
    idx["c"] = c_index(x);
    idx["s"] = s_index(x);
    records.push_back(json{{"id", entry.id}, {"indices", idx}});
  }
  out["records"] = records;

  if (cfg.format == "table") {
    std::ostringstream table;
    table << "id\th\tK_square\th_lambda\tH_alpha\tH_beta\tH_upper_2\t"
             "H_lower_2\tp\tc\ts\tiH\n";
    for (const auto& rec : out["records"]) {
      const json& idx = rec["indices"];
      table << rec["id"].get<std::string>();
      for (const char* key : {"h", "K_square", "h_lambda", "H_alpha", "H_beta",
                              "H_upper_2", "H_lower_2", "p", "c", "s"})
        table << "\t" << idx[key];
      table << "\t";
      const auto& ih = idx["iH"];
      for (std::size_t i = 0; i < ih.size(); ++i) {
        if (i) table << ",";
        table << ih[i];
      }
      table << "\n";
    }
    write_output(cfg.out_path, table.str());
  } else {
    write_output(cfg.out_path, out.dump(2) + "\n");
  }
  return 0;
}

struct IntegrateConfig {
  std::string measure_path;
  std::string function_path;
  std::string kind = "upper";
  std::string map_spec;
  int n = 1;
  std::string out_path;
  std::string format = "json";
};

int run_integrate(const IntegrateConfig& cfg) {
  MonotoneMeasure mu = measure_from_json(parse_json_file(cfg.measure_path));
  LevelFunction f =
      function_from_json(parse_json_file(cfg.function_path), mu.space());
  json request;
  request["kind"] = cfg.kind;
  request["n"] = cfg.n;
  if (!cfg.map_spec.empty()) request["map"] = cfg.map_spec;
  IntegralSpec spec = integral_spec_from_json(request, mu.space().y_bar);

  EvalTrace trace;
  double value = evaluate_integral(spec, mu, f, &trace);

  json out;
  out["kind"] = cfg.kind;
  if (!cfg.map_spec.empty()) out["map"] = cfg.map_spec;
  out["n"] = spec.n;
  out["value"] = num_or_inf(value);
  json levels = json::array();
  for (double v : trace.levels) levels.push_back(num_or_inf(v));
  out["levels"] = levels;

  if (cfg.format == "table") {
    std::ostringstream table;
    table << "kind\t" << cfg.kind << "\n";
    if (!cfg.map_spec.empty()) table << "map\t" << cfg.map_spec << "\n";
    table << "n\t" << spec.n << "\n";
    table << "value\t" << out["value"] << "\n";
    write_output(cfg.out_path, table.str());
  } else {
    write_output(cfg.out_path, out.dump(2) + "\n");
  }
  return 0;
}

struct BenvenutiConfig {
  std::string measure_path;
  std::string function_path;
  int n = 1;
  int grid = 256;
  std::string out_path;
};

int run_benvenuti(const BenvenutiConfig& cfg) {
  MonotoneMeasure mu = measure_from_json(parse_json_file(cfg.measure_path));
  LevelFunction f =
      function_from_json(parse_json_file(cfg.function_path), mu.space());

  double recurrence = benvenuti_plus_min(mu, f, cfg.n);
  BracketResult oracle = benvenuti_oracle(mu, f, cfg.n, cfg.grid);
  BracketResult choquet = lower_choquet_form(mu, f, cfg.n, cfg.grid);

  json out;
  out["recurrence"] = num_or_inf(recurrence);
  out["oracle"] = num_or_inf(oracle.value);
  out["choquetForm"] = num_or_inf(choquet.value);
  out["n"] = cfg.n;
  out["gridStep"] = num_or_inf(oracle.grid_step);
  write_output(cfg.out_path, out.dump(2) + "\n");
  return 0;
}

struct VerifyConfig {
  std::string suite = "all";
  std::uint64_t seed = 0;
  long long trials = 1000;
  int threads = 0;
  bool inject_fault = false;
  std::string out_path;
};

int run_verify(const VerifyConfig& cfg) {
  SuiteOptions opt;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  opt.threads = cfg.threads;
  opt.inject_fault = cfg.inject_fault;

  std::vector<VerificationReport> reports;
  if (cfg.suite == "all") {
    reports = run_all_suites(opt);
  } else {
    reports.push_back(run_suite(cfg.suite, opt));
  }

  bool passed = true;
  json suites = json::array();
  for (const auto& rep : reports) {
    passed = passed && rep.passed();
    suites.push_back(report_to_json(rep));
  }
  json out;
  out["passed"] = passed;
  out["seed"] = cfg.seed;
  out["suites"] = suites;
  write_output(cfg.out_path, out.dump(2) + "\n");
  if (!passed) {
    for (const auto& rep : reports)
      if (!rep.passed())
        std::cerr << "suite " << rep.suite << ": " << rep.failures.size()
                  << " failure(s) in " << rep.trials << " checks\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated Sugeno-style integrals, chain integrals, and "
               "scientometric indices"};
  app.require_subcommand(1);

  IndicesConfig icfg;
  CLI::App* indices = app.add_subcommand(
      "indices", "Compute the index family for citation records");
  indices->add_option("--in", icfg.in_path, "records file (.csv or .json)")
      ->required();
  indices->add_option("--out", icfg.out_path, "output path (default stdout)");
  indices->add_option("--alpha", icfg.alpha, "slope for the rational h variant");
  indices->add_option("--beta", icfg.beta, "slope for the dual rational h variant");
  indices->add_option("--lambda", icfg.lambda, "slope for the linear threshold index");
  indices->add_option("--format", icfg.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  IntegrateConfig gcfg;
  CLI::App* integrate = app.add_subcommand(
      "integrate", "Evaluate one integral on a measure and function");
  integrate->add_option("--measure", gcfg.measure_path, "measure JSON file")
      ->required();
  integrate->add_option("--function", gcfg.function_path, "function JSON file")
      ->required();
  integrate->add_option("--kind", gcfg.kind, "sugeno, upper, or lower")
      ->required()
      ->check(CLI::IsMember({"sugeno", "upper", "lower"}));
  integrate->add_option("--map", gcfg.map_spec,
                        "map spec string, e.g. \"owa(p=0.3)\"");
  integrate->add_option("--n", gcfg.n, "integral order")->required();
  integrate->add_option("--out", gcfg.out_path, "output path (default stdout)");
  integrate->add_option("--format", gcfg.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  BenvenutiConfig bcfg;
  CLI::App* benvenuti = app.add_subcommand(
      "benvenuti", "Additive-link chain integral with oracle brackets");
  benvenuti->add_option("--measure", bcfg.measure_path, "measure JSON file")
      ->required();
  benvenuti->add_option("--function", bcfg.function_path, "function JSON file")
      ->required();
  benvenuti->add_option("--n", bcfg.n, "number of chain levels")->required();
  benvenuti->add_option("--grid", bcfg.grid, "oracle grid resolution");
  benvenuti->add_option("--out", bcfg.out_path, "output path (default stdout)");

  VerifyConfig vcfg;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the verification suites");
  verify->add_option("--suite", vcfg.suite,
                     "suite name or \"all\" (axioms, equivalent-forms, "
                     "monotone-sequence, subadditivity, benvenuti, "
                     "scientometrics, aggregation)");
  verify->add_option("--seed", vcfg.seed, "base seed for the trial generators");
  verify->add_option("--trials", vcfg.trials, "randomized trials per suite");
  verify->add_option("--threads", vcfg.threads,
                     "worker threads (0 = hardware default)");
  verify->add_option("--out", vcfg.out_path, "output path (default stdout)");
  verify
      ->add_flag("--inject-fault", vcfg.inject_fault,
                 "add a deliberately broken map to prove failures are caught")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(indices)) return run_indices(icfg);
    if (app.got_subcommand(integrate)) return run_integrate(gcfg);
    if (app.got_subcommand(benvenuti)) return run_benvenuti(bcfg);
    if (app.got_subcommand(verify)) return run_verify(vcfg);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const capability_error& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
