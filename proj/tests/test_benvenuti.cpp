#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "nsugeno/benvenuti.hpp"
#include "nsugeno/scientometrics.hpp"

using namespace nsugeno;

TEST_CASE("chain integral on the reference citation record") {
  ScientificRecord x({6, 6, 4, 3, 1, 1, 1});
  MonotoneMeasure mu = record_measure(x);
  LevelFunction f = record_function(x);

  CHECK(benvenuti_plus_min(mu, f, 1) == 3.0);
  CHECK(benvenuti_plus_min(mu, f, 2) == 5.0);
  CHECK(benvenuti_plus_min(mu, f, 1) == sugeno(mu, f));

  BracketResult oracle = benvenuti_oracle(mu, f, 2, 6);
  CHECK(oracle.value == 5.0);
  CHECK(chain_objective(mu, f, oracle.chain.levels) == 5.0);

  BracketResult dual = lower_choquet_form(mu, f, 2, 6);
  CHECK(dual.value == 5.0);
}

TEST_CASE("chain integral on the two-point real instance") {
  GroundSpace s(2, 1.0);
  MonotoneMeasure mu = MonotoneMeasure::table(s, {0.0, 0.25, 0.5, 1.0});
  LevelFunction f(s, {0.25, 0.75});
  double rec = benvenuti_plus_min(mu, f, 2);
  CHECK(rec == Catch::Approx(0.75).margin(1e-12));

  BracketResult oracle = benvenuti_oracle(mu, f, 2, 256);
  CHECK(oracle.value <= rec + 1e-12);
  CHECK(oracle.value >= rec - 2 * oracle.grid_step - 1e-12);
  CHECK(oracle.value == Catch::Approx(0.75).margin(1e-12));

  BracketResult dual = lower_choquet_form(mu, f, 2, 256);
  CHECK(dual.value >= rec - 1e-12);
  CHECK(dual.value <= rec + 2 * dual.grid_step + 1e-12);
}

TEST_CASE("chain objectives validate their level sequences") {
  GroundSpace s(2, 1.0);
  MonotoneMeasure mu = MonotoneMeasure::table(s, {0.0, 0.25, 0.5, 1.0});
  LevelFunction f(s, {0.25, 0.75});
  std::vector<double> increasing = {0.25, 0.75};
  CHECK_THROWS_AS(chain_objective(mu, f, increasing), input_error);
  std::vector<double> chain = {0.75, 0.25};
  CHECK(chain_objective(mu, f, chain) ==
        Catch::Approx(0.75).margin(1e-12));
}

TEST_CASE("closed-form iterate sequences match their fixpoint equations") {
  auto sq = analytic_example_sequence(AnalyticKind::sqrt_measure, 4);
  auto qd = analytic_example_sequence(AnalyticKind::square_measure, 4);
  REQUIRE(sq.size() == 4);
  REQUIRE(qd.size() == 4);
  CHECK(sq[0] == Catch::Approx((std::sqrt(5.0) - 1.0) / 2.0).margin(1e-15));
  CHECK(qd[0] == Catch::Approx((3.0 - std::sqrt(5.0)) / 2.0).margin(1e-15));
  CHECK(sq[1] == Catch::Approx(0.9129969195).margin(1e-7));
  for (std::size_t k = 0; k + 1 < 4; ++k) {
    CHECK(sq[k + 1] >= sq[k]);
    CHECK(qd[k + 1] >= qd[k]);
  }
  // each step height equals the profile of the mass above the new level
  CHECK(std::sqrt(1.0 - sq[1]) == Catch::Approx(sq[1] - sq[0]).margin(1e-9));
  CHECK((1.0 - qd[1]) * (1.0 - qd[1]) ==
        Catch::Approx(qd[1] - qd[0]).margin(1e-9));
}

TEST_CASE("integer instances agree with the oracle exactly") {
  GroundSpace s(3, kInf);
  MonotoneMeasure mu = MonotoneMeasure::table(
      s, {0.0, 1.0, 2.0, 3.0, 2.0, 4.0, 5.0, 7.0});
  LevelFunction f(s, {5.0, 3.0, 2.0});
  for (int n = 1; n <= 4; ++n) {
    double rec = benvenuti_plus_min(mu, f, n);
    BracketResult oracle = benvenuti_oracle(mu, f, n, 5);
    CHECK(oracle.value == rec);
    BracketResult dual = lower_choquet_form(mu, f, n, 5);
    CHECK(dual.value >= rec - 1e-12);
    CHECK(dual.value <= rec + n * dual.grid_step + 1e-12);
  }
}
