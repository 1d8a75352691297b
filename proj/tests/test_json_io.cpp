#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "nsugeno/json_io.hpp"

using namespace nsugeno;

TEST_CASE("numbers serialize with an inf spelling") {
  CHECK(num_or_inf(0.5) == json(0.5));
  CHECK(num_or_inf(kInf) == json("inf"));
  CHECK(num_from(json("inf"), "x") == kInf);
  CHECK(num_from(json(2.0), "x") == 2.0);
  CHECK_THROWS_AS(num_from(json("huge"), "x"), input_error);
  CHECK_THROWS_AS(num_from(json::array(), "x"), input_error);
}

TEST_CASE("measure files round trip") {
  SECTION("counting") {
    json j = {{"m", 3}, {"yBar", "inf"}, {"kind", "counting"}};
    MonotoneMeasure mu = measure_from_json(j);
    CHECK(mu.space().m == 3);
    CHECK(mu.space().y_bar == kInf);
    CHECK(mu.backend() == MeasureBackend::counting);
    json back = measure_to_json(mu);
    CHECK(back["kind"] == "counting");
    CHECK(back["yBar"] == "inf");
    CHECK_FALSE(back.contains("values"));
    CHECK(measure_from_json(back)(5) == mu(5));
  }

  SECTION("cardinality") {
    json j = {{"m", 2},
              {"yBar", 1.0},
              {"kind", "cardinality"},
              {"values", {0.0, 0.5, 1.0}}};
    MonotoneMeasure mu = measure_from_json(j);
    CHECK(mu(0b01) == 0.5);
    CHECK(mu(0b11) == 1.0);
    json back = measure_to_json(mu);
    CHECK(back["values"] == json({0.0, 0.5, 1.0}));
    CHECK(measure_from_json(back)(0b10) == 0.5);
  }

  SECTION("table") {
    json j = {{"m", 2},
              {"yBar", 1.0},
              {"kind", "table"},
              {"values", {{"0", 0.0}, {"1", 0.25}, {"2", 0.5}, {"3", 1.0}}}};
    MonotoneMeasure mu = measure_from_json(j);
    CHECK(mu(0b01) == 0.25);
    CHECK(mu(0b10) == 0.5);
    json back = measure_to_json(mu);
    CHECK(back["values"]["3"] == 1.0);
    CHECK(measure_from_json(back)(0b11) == 1.0);
  }
}

TEST_CASE("measure files reject malformed input") {
  CHECK_THROWS_AS(measure_from_json(json::array()), input_error);
  CHECK_THROWS_AS(measure_from_json(json{{"m", 2}, {"yBar", 1.0}}),
                  input_error);
  CHECK_THROWS_AS(measure_from_json(json{{"m", 2.5},
                                         {"yBar", 1.0},
                                         {"kind", "counting"}}),
                  input_error);
  CHECK_THROWS_AS(measure_from_json(json{{"m", 2},
                                         {"yBar", 1.0},
                                         {"kind", "tables"}}),
                  input_error);
  CHECK_THROWS_AS(measure_from_json(json{{"m", 2},
                                         {"yBar", 1.0},
                                         {"kind", "counting"},
                                         {"values", {0.0}}}),
                  input_error);
  CHECK_THROWS_AS(measure_from_json(json{{"m", 2},
                                         {"yBar", "Inf"},
                                         {"kind", "counting"}}),
                  input_error);

  json table = {{"m", 2},
                {"yBar", 1.0},
                {"kind", "table"},
                {"values", {{"0", 0.0}, {"1", 0.25}, {"2", 0.5}, {"3", 1.0}}}};
  json bad = table;
  bad["values"].erase("2");
  CHECK_THROWS_AS(measure_from_json(bad), input_error);
  bad = table;
  bad["values"]["7"] = 0.5;
  CHECK_THROWS_AS(measure_from_json(bad), input_error);
  bad = table;
  bad["values"]["two"] = 0.5;
  CHECK_THROWS_AS(measure_from_json(bad), input_error);
  bad = table;
  bad["values"]["0"] = 0.1;
  CHECK_THROWS_AS(measure_from_json(bad), input_error);
  bad = table;
  bad["values"] = json::array({0.0, 0.25, 0.5, 1.0});
  CHECK_THROWS_AS(measure_from_json(bad), input_error);
  bad = table;
  bad["m"] = 21;
  CHECK_THROWS_AS(measure_from_json(bad), capability_error);
}

TEST_CASE("function files round trip") {
  GroundSpace space(3, 1.0);
  json j = {{"values", {0.25, 1.0, 0.0}}};
  LevelFunction f = function_from_json(j, space);
  CHECK(f.values() == std::vector<double>({0.25, 1.0, 0.0}));
  CHECK(function_to_json(f) == j);

  CHECK_THROWS_AS(function_from_json(json{{"values", {0.25, 1.0}}}, space),
                  input_error);
  CHECK_THROWS_AS(function_from_json(json{{"values", {0.25, 1.0, 2.0}}}, space),
                  input_error);
  CHECK_THROWS_AS(function_from_json(json{{"vals", {0.0, 0.0, 0.0}}}, space),
                  input_error);
}

TEST_CASE("integral requests parse and validate") {
  json j = {{"kind", "upper"}, {"map", "plus_capped"}, {"n", 2}};
  IntegralSpec spec = integral_spec_from_json(j, 1.0);
  CHECK(spec.kind == IntegralSpec::Kind::upper);
  CHECK(spec.n == 2);
  REQUIRE(spec.map.has_value());
  CHECK(spec.map->kind() == MapKind::fusion);

  IntegralSpec lower =
      integral_spec_from_json(json{{"kind", "lower"}, {"map", "max"}, {"n", 3}},
                              1.0);
  CHECK(lower.map->kind() == MapKind::link);

  IntegralSpec sug = integral_spec_from_json(json{{"kind", "sugeno"}}, 1.0);
  CHECK(sug.n == 1);
  CHECK_FALSE(sug.map.has_value());

  CHECK_THROWS_AS(integral_spec_from_json(json{{"kind", "median"}}, 1.0),
                  input_error);
  CHECK_THROWS_AS(integral_spec_from_json(json::array(), 1.0), input_error);
  CHECK_THROWS_AS(
      integral_spec_from_json(json{{"kind", "sugeno"}, {"map", "max"}}, 1.0),
      config_error);
  CHECK_THROWS_AS(integral_spec_from_json(json{{"kind", "upper"}, {"n", 2}},
                                          1.0),
                  config_error);
}

TEST_CASE("csv records parse with line-number ids and warnings") {
  std::istringstream in("6,6,4,3,1,1,1\n\n1,3,2\n0,0\n");
  RecordsParse parsed = records_from_csv(in);
  REQUIRE(parsed.entries.size() == 3);
  CHECK(parsed.entries[0].id == "1");
  CHECK(parsed.entries[1].id == "3");
  CHECK(parsed.entries[2].id == "4");
  CHECK(parsed.entries[0].record.citations() ==
        std::vector<long long>({6, 6, 4, 3, 1, 1, 1}));
  CHECK(parsed.entries[1].record.citations() ==
        std::vector<long long>({3, 2, 1}));
  CHECK(parsed.entries[2].record.all_zero());
  REQUIRE(parsed.warnings.size() == 2);
  CHECK(parsed.warnings[0].find("line 3") != std::string::npos);
  CHECK(parsed.warnings[0].find("sorted") != std::string::npos);
  CHECK(parsed.warnings[1].find("line 4") != std::string::npos);
  CHECK(parsed.warnings[1].find("all-zero") != std::string::npos);

  std::istringstream empty("\n  \n");
  CHECK(records_from_csv(empty).entries.empty());

  std::istringstream gap("3,,4\n");
  CHECK_THROWS_AS(records_from_csv(gap), input_error);
  std::istringstream junk("3,x\n");
  CHECK_THROWS_AS(records_from_csv(junk), input_error);
  std::istringstream neg("3,-1\n");
  CHECK_THROWS_AS(records_from_csv(neg), input_error);
  std::istringstream frac("3,1.5\n");
  CHECK_THROWS_AS(records_from_csv(frac), input_error);
}

TEST_CASE("json records parse with default ids") {
  json j = {{"records",
             {{{"id", "alice"}, {"citations", {6, 6, 4}}},
              {{"citations", {2, 1}}}}}};
  RecordsParse parsed = records_from_json(j);
  REQUIRE(parsed.entries.size() == 2);
  CHECK(parsed.entries[0].id == "alice");
  CHECK(parsed.entries[1].id == "2");
  CHECK(parsed.warnings.empty());

  CHECK_THROWS_AS(records_from_json(json{{"rows", json::array()}}),
                  input_error);
  CHECK_THROWS_AS(
      records_from_json(json{{"records", {{{"id", "x"}}}}}),
      input_error);
  CHECK_THROWS_AS(
      records_from_json(json{{"records", {{{"citations", {1.5}}}}}}),
      input_error);
  CHECK_THROWS_AS(
      records_from_json(json{{"records", {{{"citations", {-3}}}}}}),
      input_error);
}

TEST_CASE("verification reports serialize their failures") {
  VerificationReport rep;
  rep.suite = "demo";
  rep.trials = 12;
  rep.fail(7, "x=(1,2)", "a == b", "0.5 vs 0.75");
  json j = report_to_json(rep);
  CHECK(j["suite"] == "demo");
  CHECK(j["trials"] == 12);
  CHECK(j["passed"] == false);
  REQUIRE(j["failures"].size() == 1);
  CHECK(j["failures"][0]["trial"] == 7);
  CHECK(j["failures"][0]["instance"] == "x=(1,2)");
  CHECK(j["failures"][0]["relation"] == "a == b");
  CHECK(j["failures"][0]["observed"] == "0.5 vs 0.75");

  VerificationReport clean;
  clean.suite = "demo";
  CHECK(report_to_json(clean)["passed"] == true);
  CHECK(report_to_json(clean)["failures"].empty());
}
