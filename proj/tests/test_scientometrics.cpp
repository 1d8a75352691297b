#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "nsugeno/scientometrics.hpp"

using namespace nsugeno;

TEST_CASE("index family on the reference record") {
  ScientificRecord x({6, 6, 4, 3, 1, 1, 1});
  CHECK(h_index(x) == 3);
  CHECK(two_h_lower(x) == 4);
  CHECK(two_h_upper(x) == 5);
  CHECK(p_index(x) == 7);
  CHECK(c_index(x) == 6);
  CHECK(s_index(x) == 22);
  CHECK(iterated_h(x, 6) == std::vector<long long>({3, 1, 1, 1, 1, 0}));
  CHECK(kosmulski(x, UnaryFn::square()) == 2);
  CHECK(kosmulski(x, UnaryFn::linear(2.0)) == 2);
  CHECK(kosmulski(x, UnaryFn::identity()) == 3);
  CHECK(h_alpha(x, 2.0) == 2);
  CHECK(h_beta(x, 2.0) == 2);
  CHECK(h_alpha(x, 1.0) == 3);
  CHECK(h_beta(x, 1.0) == 3);
}

TEST_CASE("conjugation transposes the citation diagram") {
  ScientificRecord x({6, 6, 4, 3, 1, 1, 1});
  ScientificRecord cj = conjugate(x);
  CHECK(cj.citations() == std::vector<long long>({7, 4, 4, 3, 2, 2}));
  CHECK(conjugate(cj).citations() == x.citations());
  CHECK(h_index(cj) == h_index(x));
  CHECK(two_h_lower(cj) == two_h_upper(x));
  CHECK(two_h_upper(cj) == two_h_lower(x));

  ScientificRecord single({3});
  CHECK(conjugate(single).citations() == std::vector<long long>({1, 1, 1}));
}

TEST_CASE("the two second-order indices are incomparable in general") {
  ScientificRecord ones({1, 1, 1});
  CHECK(two_h_lower(ones) == 2);
  CHECK(two_h_upper(ones) == 1);
  ScientificRecord x({6, 6, 4, 3, 1, 1, 1});
  CHECK(two_h_lower(x) < two_h_upper(x));
}

TEST_CASE("records normalize their input") {
  ScientificRecord unsorted({1, 3, 2});
  CHECK_FALSE(unsorted.was_sorted_input());
  CHECK(unsorted.citations() == std::vector<long long>({3, 2, 1}));

  ScientificRecord padded({4, 2, 0, 0});
  CHECK(padded.size() == 2);
  CHECK(padded.at(1) == 4);
  CHECK(padded.at(2) == 2);
  CHECK(padded.at(5) == 0);  // zero tail beyond the stored length

  CHECK_THROWS_AS(ScientificRecord({3, -1}), input_error);

  ScientificRecord zero({0, 0});
  CHECK(zero.all_zero());
  CHECK(zero.size() == 0);
  CHECK(h_index(zero) == 0);
  CHECK(two_h_upper(zero) == 0);
  CHECK(two_h_lower(zero) == 0);
  CHECK(c_index(zero) == 0);
}

TEST_CASE("integral representations reproduce the indices") {
  ScientificRecord x({6, 6, 4, 3, 1, 1, 1});
  CombineMap plusF = make_map("plus", MapKind::fusion, kInf);
  CombineMap plusL = make_map("plus", MapKind::link, kInf);
  CHECK(record_upper_n(x, plusF, 1) == 3.0);
  CHECK(record_lower_n(x, plusL, 1) == 3.0);
  CHECK(record_upper_n(x, plusF, 2) == 4.0);
  CHECK(record_lower_n(x, plusL, 2) == 5.0);

  // prefix sums of the iterated h-vector are the upper additive values
  std::vector<long long> ih = iterated_h(x, 6);
  long long acc = 0;
  for (int k = 1; k <= 6; ++k) {
    acc += ih[static_cast<std::size_t>(k - 1)];
    CHECK(record_upper_n(x, plusF, k) == static_cast<double>(acc));
  }

  MonotoneMeasure mu = record_measure(x);
  LevelFunction f = record_function(x);
  LimitResult up = limit_value(mu, f, plusF, IntegralSpec::Kind::upper, 64);
  LimitResult lo = limit_value(mu, f, plusL, IntegralSpec::Kind::lower, 64);
  REQUIRE(up.converged);
  REQUIRE(lo.converged);
  CHECK(up.value == 7.0);
  CHECK(lo.value == 6.0);
}

TEST_CASE("threshold indices through floored inverse stages") {
  ScientificRecord x({6, 6, 4, 3, 1, 1, 1});
  CombineMap floorSqrtF =
      make_unary_map(UnaryFn{UnaryFn::Base::sqrt_fn, UnaryFn::Round::down,
                             1.0, {}},
                     MapKind::fusion, kInf);
  CHECK(record_upper_n(x, floorSqrtF, 2) ==
        static_cast<double>(kosmulski(x, UnaryFn::square())));
  CombineMap sqL = make_unary_map(UnaryFn::square(), MapKind::link, kInf);
  double viaLower = record_lower_n(x, sqL, 2);
  CHECK(static_cast<long long>(std::floor(std::sqrt(viaLower))) ==
        kosmulski(x, UnaryFn::square()));
}
