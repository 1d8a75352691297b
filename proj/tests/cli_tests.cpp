#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

class CliFixture {
 public:
  CliFixture() {
    dir_ = fs::temp_directory_path() /
           ("nsugeno_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

  void put(const std::string& name, const std::string& content) const {
    std::ofstream out(path(name));
    out << content;
  }

  std::string slurp(const fs::path& p) const {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  RunResult run(const std::string& args) const {
    fs::path out = path("stdout.txt");
    fs::path err = path("stderr.txt");
    std::string cmd = std::string(NSUGENO_CLI_PATH) + " " + args + " > " +
                      out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

 private:
  fs::path dir_;
};

const CliFixture& cli() {
  static CliFixture fixture;
  return fixture;
}

void write_two_point_inputs() {
  cli().put("m.json",
            R"({"m": 2, "yBar": 1.0, "kind": "table",
                "values": {"0": 0.0, "1": 0.25, "2": 0.5, "3": 1.0}})");
  cli().put("f.json", R"({"values": [0.25, 0.75]})");
}

}  // namespace

TEST_CASE("indices subcommand computes the family from csv") {
  cli().put("records.csv", "6,6,4,3,1,1,1\n5,4,3,2,1\n");
  RunResult r = cli().run("indices --in " + cli().path("records.csv").string() +
                          " --alpha 2 --beta 2 --lambda 2");
  REQUIRE(r.code == 0);
  json out = json::parse(r.out);
  CHECK(out["parameters"] == json({{"alpha", 2.0},
                                   {"beta", 2.0},
                                   {"lambda", 2.0}}));
  REQUIRE(out["records"].size() == 2);

  const json& first = out["records"][0];
  CHECK(first["id"] == "1");
  const json& a = first["indices"];
  CHECK(a["h"] == 3);
  CHECK(a["K_square"] == 2);
  CHECK(a["h_lambda"] == 2);
  CHECK(a["H_alpha"] == 2);
  CHECK(a["H_beta"] == 2);
  CHECK(a["H_upper_2"] == 5);
  CHECK(a["H_lower_2"] == 4);
  CHECK(a["iH"] == json({3, 1, 1, 1, 1}));
  CHECK(a["p"] == 7);
  CHECK(a["c"] == 6);
  CHECK(a["s"] == 22);

  const json& b = out["records"][1]["indices"];
  CHECK(b["h"] == 3);
  CHECK(b["H_upper_2"] == 4);
  CHECK(b["H_lower_2"] == 4);
  CHECK(b["iH"] == json({3, 1, 1, 0, 0}));
  CHECK(b["p"] == 5);
  CHECK(b["c"] == 5);
  CHECK(b["s"] == 15);
}

TEST_CASE("indices subcommand handles edge inputs") {
  cli().put("empty.csv", "\n\n");
  RunResult empty = cli().run("indices --in " +
                              cli().path("empty.csv").string());
  CHECK(empty.code == 0);
  CHECK(json::parse(empty.out)["records"].empty());

  cli().put("records.csv", "6,6,4,3,1,1,1\n");
  RunResult bad = cli().run("indices --in " +
                            cli().path("records.csv").string() + " --alpha 0");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("alpha") != std::string::npos);

  cli().put("unsorted.csv", "1,3,2\n");
  RunResult warn = cli().run("indices --in " +
                             cli().path("unsorted.csv").string());
  CHECK(warn.code == 0);
  CHECK(warn.err.find("warning") != std::string::npos);

  RunResult missing = cli().run("indices --in " +
                                cli().path("no_such_file.csv").string());
  CHECK(missing.code == 2);

  RunResult table = cli().run("indices --in " +
                              cli().path("records.csv").string() +
                              " --format table");
  CHECK(table.code == 0);
  CHECK(table.out.find("id\th\t") == 0);
  CHECK(table.out.find("\t22\t") != std::string::npos);
}

TEST_CASE("indices subcommand reads json records and writes files") {
  cli().put("records.json",
            R"({"records": [{"id": "ref", "citations": [6, 6, 4, 3, 1, 1, 1]}]})");
  fs::path out_path = cli().path("indices_out.json");
  RunResult r = cli().run("indices --in " + cli().path("records.json").string() +
                          " --out " + out_path.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  json out = json::parse(cli().slurp(out_path));
  CHECK(out["records"][0]["id"] == "ref");
  CHECK(out["records"][0]["indices"]["h"] == 3);
}

TEST_CASE("integrate subcommand evaluates the two-point instance") {
  write_two_point_inputs();
  std::string base = "integrate --measure " + cli().path("m.json").string() +
                     " --function " + cli().path("f.json").string();

  RunResult up = cli().run(base + " --kind upper --map plus_capped --n 2");
  REQUIRE(up.code == 0);
  json j = json::parse(up.out);
  CHECK(j["kind"] == "upper");
  CHECK(j["map"] == "plus_capped");
  CHECK(j["n"] == 2);
  CHECK(j["value"].get<double>() == Catch::Approx(0.75).margin(1e-12));
  REQUIRE(j["levels"].size() == 2);
  CHECK(j["levels"][0].get<double>() == 0.5);
  CHECK(j["levels"][1].get<double>() == Catch::Approx(0.75).margin(1e-12));

  RunResult sug = cli().run(base + " --kind sugeno --n 1");
  REQUIRE(sug.code == 0);
  CHECK(json::parse(sug.out)["value"].get<double>() == 0.5);

  RunResult unknown = cli().run(base + " --kind upper --map zorp --n 2");
  CHECK(unknown.code == 2);

  RunResult roleless = cli().run(base + " --kind upper --n 2");
  CHECK(roleless.code == 2);

  RunResult badkind = cli().run(base + " --kind median --n 1");
  CHECK(badkind.code == 2);
}

TEST_CASE("benvenuti subcommand reports the chain value with brackets") {
  write_two_point_inputs();
  RunResult r = cli().run("benvenuti --measure " + cli().path("m.json").string() +
                          " --function " + cli().path("f.json").string() +
                          " --n 2");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 5);
  REQUIRE(j.contains("recurrence"));
  REQUIRE(j.contains("oracle"));
  REQUIRE(j.contains("choquetForm"));
  REQUIRE(j.contains("n"));
  REQUIRE(j.contains("gridStep"));
  CHECK(j["n"] == 2);
  CHECK(j["recurrence"].get<double>() == Catch::Approx(0.75).margin(1e-12));
  CHECK(j["oracle"].get<double>() == Catch::Approx(0.75).margin(1e-9));
  CHECK(j["choquetForm"].get<double>() == Catch::Approx(0.75).margin(1e-9));
  CHECK(j["gridStep"].get<double>() > 0.0);

  RunResult badn = cli().run("benvenuti --measure " +
                             cli().path("m.json").string() + " --function " +
                             cli().path("f.json").string() + " --n 0");
  CHECK(badn.code == 2);
}

TEST_CASE("verify subcommand gates its exit code on the outcome") {
  RunResult ok = cli().run("verify --suite benvenuti --seed 5 --trials 25");
  REQUIRE(ok.code == 0);
  json j = json::parse(ok.out);
  CHECK(j["passed"] == true);
  CHECK(j["seed"] == 5);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["suite"] == "benvenuti");

  RunResult bad = cli().run("verify --suite nope --trials 5");
  CHECK(bad.code == 2);

  RunResult fault = cli().run(
      "verify --suite axioms --trials 25 --inject-fault");
  CHECK(fault.code == 1);
  CHECK(json::parse(fault.out)["passed"] == false);
  CHECK(fault.err.find("failure") != std::string::npos);
}

TEST_CASE("verify output is identical across reruns and thread counts") {
  std::string base = "verify --suite scientometrics --seed 11 --trials 40";
  RunResult a = cli().run(base + " --threads 1");
  RunResult b = cli().run(base + " --threads 6");
  RunResult c = cli().run(base + " --threads 1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("usage errors exit with the usage code") {
  RunResult none = cli().run("");
  CHECK(none.code == 2);
  RunResult badflag = cli().run("indices --frobnicate");
  CHECK(badflag.code == 2);
  RunResult help = cli().run("--help");
  CHECK(help.code == 0);
}
