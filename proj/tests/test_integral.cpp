#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "nsugeno/integral.hpp"
#include "nsugeno/maps.hpp"
#include "nsugeno/measure.hpp"

using namespace nsugeno;

namespace {

MonotoneMeasure two_point_measure() {
  GroundSpace s(2, 1.0);
  return MonotoneMeasure::table(s, {0.0, 0.25, 0.5, 1.0});
}

}  // namespace

TEST_CASE("Sugeno integral on the two-point instance") {
  MonotoneMeasure mu = two_point_measure();
  LevelFunction f(mu.space(), {0.25, 0.75});
  CHECK(sugeno(mu, f) == 0.5);
  CHECK(sugeno(mu, LevelFunction::constant(mu.space(), 0.0)) == 0.0);
  CHECK(sugeno(mu, LevelFunction::constant(mu.space(), 1.0)) == 1.0);
}

TEST_CASE("upper iterates grow the two-point value to three quarters") {
  MonotoneMeasure mu = two_point_measure();
  LevelFunction f(mu.space(), {0.25, 0.75});
  CombineMap pc = make_map("plus_capped", MapKind::fusion, 1.0);
  EvalTrace tr;
  CHECK(upper_n(mu, f, pc, 2, &tr) == Catch::Approx(0.75).margin(1e-12));
  REQUIRE(tr.levels.size() == 2);
  CHECK(tr.levels[0] == 0.5);
  CHECK(tr.levels[1] == Catch::Approx(0.75).margin(1e-12));
  CHECK(tr.candidates.front() == 0.0);
}

TEST_CASE("lower iterates on the documented witnesses") {
  GroundSpace s(2, 1.0);
  MonotoneMeasure mu = MonotoneMeasure::table(s, {0.0, 0.25, 0.25, 1.0});
  LevelFunction f(s, {0.25, 0.75});
  CombineMap plus = make_map("plus", MapKind::link, 1.0);
  CHECK(lower_n(mu, f, plus, 2) == Catch::Approx(0.5).margin(1e-12));

  MonotoneMeasure mu2 = MonotoneMeasure::table(s, {0.0, 0.5, 0.5, 1.0});
  LevelFunction g(s, {0.5, 0.0});
  CombineMap times = make_map("times", MapKind::link, 1.0);
  CHECK(lower_n(mu2, g, times, 2) == Catch::Approx(0.25).margin(1e-12));
}

TEST_CASE("all evaluation forms agree on the two-point instance") {
  MonotoneMeasure mu = two_point_measure();
  LevelFunction f(mu.space(), {0.25, 0.75});
  CombineMap pc = make_map("plus_capped", MapKind::fusion, 1.0);
  double rec = upper_n(mu, f, pc, 3);
  CHECK(upper_n_setform(mu, f, pc, 3) == Catch::Approx(rec).margin(1e-12));
  CHECK(upper_n_infform(mu, f, pc, 3) == Catch::Approx(rec).margin(1e-12));

  CombineMap mx = make_map("max", MapKind::link, 1.0);
  double lrec = lower_n(mu, f, mx, 3);
  CHECK(lower_n_setform(mu, f, mx, 3) == Catch::Approx(lrec).margin(1e-12));
  CHECK(lower_n_infform(mu, f, mx, 3) == Catch::Approx(lrec).margin(1e-12));
}

TEST_CASE("indicators reduce to the scalar level recursion") {
  MonotoneMeasure mu = two_point_measure();
  CombineMap pc = make_map("plus_capped", MapKind::fusion, 1.0);
  CombineMap plus = make_map("plus", MapKind::link, 1.0);
  for (double a : {0.25, 0.5, 1.0}) {
    LevelFunction ind = LevelFunction::indicator(mu.space(), 0b01u, a);
    CHECK(upper_n(mu, ind, pc, 3) ==
          indicator_level(pc, IntegralSpec::Kind::upper, a, mu(0b01u), 3));
    CHECK(lower_n(mu, ind, plus, 3) ==
          indicator_level(plus, IntegralSpec::Kind::lower, a, mu(0b01u), 3));
  }
}

TEST_CASE("integral specs validate their role and order") {
  IntegralSpec spec;
  spec.kind = IntegralSpec::Kind::upper;
  spec.n = 2;
  CHECK_THROWS_AS(spec.validate(), config_error);  // needs a fusion map
  spec.map = make_map("plus_capped", MapKind::fusion, 1.0);
  CHECK_NOTHROW(spec.validate());
  spec.n = 0;
  CHECK_THROWS_AS(spec.validate(), input_error);
  spec.n = 2;
  spec.kind = IntegralSpec::Kind::lower;
  CHECK_THROWS_AS(spec.validate(), config_error);  // fusion map in a link slot

  IntegralSpec su;
  su.kind = IntegralSpec::Kind::sugeno;
  su.n = 1;
  CHECK_NOTHROW(su.validate());
}

TEST_CASE("evaluate_integral dispatches on the spec") {
  MonotoneMeasure mu = two_point_measure();
  LevelFunction f(mu.space(), {0.25, 0.75});
  IntegralSpec spec;
  spec.kind = IntegralSpec::Kind::upper;
  spec.map = make_map("plus_capped", MapKind::fusion, 1.0);
  spec.n = 2;
  EvalTrace tr;
  CHECK(evaluate_integral(spec, mu, f, &tr) ==
        Catch::Approx(0.75).margin(1e-12));
  IntegralSpec su;
  su.kind = IntegralSpec::Kind::sugeno;
  CHECK(evaluate_integral(su, mu, f, nullptr) == 0.5);
}

TEST_CASE("infimum forms require continuity in the first argument") {
  MonotoneMeasure mu = two_point_measure();
  LevelFunction f(mu.space(), {0.25, 0.75});
  CombineMap fd = make_map("unary(s=floor_div,alpha=2)", MapKind::fusion, 1.0);
  CHECK_THROWS_AS(upper_n_infform(mu, f, fd, 2), config_error);
  CHECK_NOTHROW(upper_n_setform(mu, f, fd, 2));
}

TEST_CASE("subset enumeration forms refuse oversized spaces") {
  MonotoneMeasure mu = MonotoneMeasure::counting(GroundSpace(22, kInf));
  LevelFunction f(mu.space(), std::vector<double>(22, 1.0));
  CombineMap plus = make_map("plus", MapKind::fusion, kInf);
  CHECK_THROWS_AS(upper_n_setform(mu, f, plus, 2), capability_error);
  CHECK_NOTHROW(upper_n(mu, f, plus, 2));
}

TEST_CASE("limit values converge to fixpoints for integer instances") {
  GroundSpace s(3, kInf);
  MonotoneMeasure mu = MonotoneMeasure::counting(s);
  LevelFunction f(s, {3.0, 2.0, 1.0});
  CombineMap plus = make_map("plus", MapKind::fusion, kInf);
  LimitResult lr = limit_value(mu, f, plus, IntegralSpec::Kind::upper, 64);
  REQUIRE(lr.converged);
  CHECK(lr.value == upper_n(mu, f, plus, lr.n_at_fixpoint));
  CHECK(lr.value == upper_n(mu, f, plus, lr.n_at_fixpoint + 3));
  CHECK_THROWS_AS(limit_value(mu, f, plus, IntegralSpec::Kind::sugeno, 64),
                  config_error);
  CombineMap times = make_map("times", MapKind::fusion, kInf);
  CHECK_THROWS_AS(limit_value(mu, f, times, IntegralSpec::Kind::upper, 64),
                  config_error);  // needs the nondecreasing-iterates flag
}

TEST_CASE("aggregation checks accept covering specs and reject others") {
  GroundSpace s(3, 1.0);
  MonotoneMeasure card = MonotoneMeasure::cardinality(s, {0.0, 0.5, 1.0, 1.0});
  IntegralSpec spec;
  spec.kind = IntegralSpec::Kind::upper;
  spec.map = make_map("plus_capped", MapKind::fusion, 1.0);
  spec.n = 2;
  CHECK(check_aggregation(spec, card, 100, 11).passed());

  MonotoneMeasure low = MonotoneMeasure::cardinality(s, {0.0, 0.2, 0.4, 0.6});
  CHECK_THROWS_AS(check_aggregation(spec, low, 10, 11), config_error);

  IntegralSpec bad = spec;
  bad.map = make_map("scale(lambda=0.7)", MapKind::fusion, 1.0);
  CHECK_THROWS_AS(check_aggregation(bad, card, 10, 11), config_error);
}
