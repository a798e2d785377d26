#include <cmath>

#include "doctest.h"

#include "core/domain.hpp"
#include "core/grid.hpp"

using namespace fraclab;

TEST_SUITE("grid") {

TEST_CASE("nodes are symmetric around zero") {
  GridFunction u(2.0, 0.25);
  CHECK(u.size() == 17);
  CHECK(u.center_index() == 8);
  CHECK(u.node(0) == doctest::Approx(-2.0));
  CHECK(u.node(16) == doctest::Approx(2.0));
  CHECK(u.node(8) == 0.0);
  CHECK(u.spacing() == doctest::Approx(0.25));
}

TEST_CASE("sampling and piecewise-linear evaluation") {
  auto f = [](double x) { return x * x; };
  GridFunction u = GridFunction::sample(1.0, 0.01, f);
  CHECK(u.eval(0.5) == doctest::Approx(0.25).epsilon(1e-4));
  CHECK(u.eval(-0.305) == doctest::Approx(0.305 * 0.305).epsilon(1e-3));
  // outside the box the (zero) tail takes over
  CHECK(u.eval(1.5) == 0.0);
  CHECK(u.eval(-9.0) == 0.0);
}

TEST_CASE("closed-form tail evaluation outside the box") {
  GridFunction u = GridFunction::sample(
      1.0, 0.5, [](double x) { return x; },
      Tail::closed_form([](double x) { return 3.0 * x; }));
  CHECK(u.eval(0.25) == doctest::Approx(0.25));
  CHECK(u.eval(2.0) == doctest::Approx(6.0));
  CHECK(u.eval(-4.0) == doctest::Approx(-12.0));
}

TEST_CASE("oddness defect and antisymmetric flag") {
  GridFunction odd = GridFunction::sample(1.0, 0.1,
                                          [](double x) { return x * x * x; });
  CHECK(odd.oddness_defect() == doctest::Approx(0.0));
  odd.set_antisymmetric();
  CHECK(odd.antisymmetric());

  GridFunction even = GridFunction::sample(1.0, 0.1,
                                           [](double x) { return x * x; });
  CHECK(even.oddness_defect() > 0.5);
  CHECK_THROWS(even.set_antisymmetric());
}

TEST_CASE("index lookup") {
  GridFunction u(3.0, 0.5);
  CHECK(u.index_of(0.0) == u.center_index());
  CHECK(u.node(u.index_of(1.26)) == doctest::Approx(1.5));
  CHECK(u.node(u.index_of(-2.9)) == doctest::Approx(-3.0));
}

TEST_CASE("csv serialization carries full precision") {
  GridFunction u = GridFunction::sample(0.5, 0.5,
                                        [](double x) { return x / 3.0; });
  const std::string csv = u.to_csv();
  CHECK(csv.find("x,u") == 0);
  CHECK(csv.find("0.16666666666666666") != std::string::npos);
}

TEST_CASE("half-space view reflects through the origin") {
  GridFunction odd = GridFunction::sample(2.0, 0.125,
                                          [](double x) { return x; });
  odd.set_antisymmetric();
  HalfSpaceFunction v(odd);
  CHECK(v.eval(0.7) == doctest::Approx(0.7));
  CHECK(v.reflected(0.7) == doctest::Approx(0.7));
  CHECK(v.eval(-0.7) == doctest::Approx(-0.7));
}

}  // TEST_SUITE

TEST_SUITE("domain") {

TEST_CASE("components must be disjoint, ordered after construction") {
  Domain1D d({{3.0, 7.0}, {0.0, 2.0}});
  REQUIRE(d.components().size() == 2);
  CHECK(d.components()[0].first == 0.0);
  CHECK(d.inf() == 0.0);
  CHECK(d.sup() == 7.0);
  CHECK(d.measure() == doctest::Approx(6.0));
  CHECK(d.endpoints() == std::vector<double>{0.0, 2.0, 3.0, 7.0});
  CHECK_THROWS(Domain1D({{0.0, 2.0}, {1.0, 3.0}}));
  CHECK_THROWS(Domain1D(2.0, 1.0));
}

TEST_CASE("containment is open") {
  Domain1D d(-1.0, 1.0);
  CHECK(d.contains(0.0));
  CHECK(d.contains(0.999));
  CHECK_FALSE(d.contains(1.0));
  CHECK_FALSE(d.contains(-1.0));
  CHECK_FALSE(d.contains(5.0));
}

TEST_CASE("minkowski sum enlarges and merges") {
  Domain1D g({{0.0, 1.0}, {1.5, 2.0}});
  Domain1D grown = Domain1D::minkowski(g, 0.5);
  // gap of 0.5 between components closes exactly at radius 0.25
  REQUIRE(grown.components().size() == 1);
  CHECK(grown.inf() == doctest::Approx(-0.5));
  CHECK(grown.sup() == doctest::Approx(2.5));

  Domain1D apart = Domain1D::minkowski(Domain1D({{0.0, 1.0}, {4.0, 5.0}}), 1.0);
  REQUIRE(apart.components().size() == 2);
  CHECK(apart.measure() == doctest::Approx(6.0));
}

}  // TEST_SUITE
