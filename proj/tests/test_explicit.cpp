#include <cmath>

#include "doctest.h"

#include "core/explicit_solutions.hpp"

using namespace fraclab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("explicit") {

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
  CHECK((Rational(1, 2) - Rational(1, 2)).num == 0);
  CHECK(Rational(5, 10).value() == doctest::Approx(0.5));
}

TEST_CASE("poisson constant") {
  CHECK(poisson_constant(0.5) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(poisson_constant(0.25) ==
        doctest::Approx(std::sin(kPi / 4.0) / kPi).epsilon(1e-14));
}

TEST_CASE("limit slope at s = 1/2") {
  CHECK(c0(FracOrder(0.5)) == doctest::Approx(2.0 / kPi).epsilon(1e-12));
}

TEST_CASE("profile is odd, bounded by one, equals the datum outside") {
  const FracOrder order(0.5);
  for (double x : {0.1, 0.35, 0.8, 0.99}) {
    CHECK(zeta1(x, order) == doctest::Approx(-zeta1(-x, order)).epsilon(1e-12));
    CHECK(zeta1(x, order) > 0.0);
    CHECK(zeta1(x, order) < 1.0);
  }
  CHECK(zeta1(1.0, order) == 1.0);
  CHECK(zeta1(2.5, order) == 1.0);
  CHECK(zeta1(-1.7, order) == -1.0);
  CHECK(zeta1(0.0, order) == 0.0);
}

TEST_CASE("profile is increasing in x") {
  for (double s : {0.3, 0.5, 0.8}) {
    const FracOrder order(s);
    double prev = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double v = zeta1(k / 20.0, order);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("quadrature evaluation matches the independent oracle") {
  for (double s : {0.25, 0.5, 0.75}) {
    const FracOrder order(s);
    for (double x : {0.05, 0.3, 0.6, 0.9, 0.96, 0.999}) {
      CHECK(zeta1(x, order) ==
            doctest::Approx(zeta1_adaptive_oracle(x, order)).epsilon(1e-8));
    }
  }
}

TEST_CASE("scaled profile obeys the exact dilation identity") {
  const FracOrder order(0.5);
  for (double x : {0.5, 2.0, 3.9}) {
    CHECK(zeta_R(x, 4.0, order) ==
          doctest::Approx(4.0 * zeta1(x / 4.0, order)).epsilon(1e-12));
  }
  CHECK(zeta_R(5.0, 4.0, order) == 4.0);  // datum region
}

TEST_CASE("slope of the scaled profile approaches the limit slope") {
  const FracOrder order(0.5);
  const double limit = c0(order);
  double prev_gap = 1e9;
  for (double radius : {4.0, 16.0, 64.0}) {
    const double gap = std::abs(zeta_R(1.0, radius, order) / 1.0 - limit);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-3);
}

TEST_CASE("odd degree-7 family hits its anchor values exactly") {
  for (double eps : {0.2, 0.4, 0.6, 0.8}) {
    HarnackPoly f(eps);
    CHECK(f.eval(1.0) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(f.eval(2.0) == doctest::Approx(2.0 * eps).epsilon(1e-12));
    CHECK(f.eval(-1.0) == doctest::Approx(-4.0).epsilon(1e-13));
    CHECK(f.eval(0.0) == 0.0);
    // anchor quotient that blows up as eps -> 0
    CHECK(f.eval(1.0) / f.eval(2.0) == doctest::Approx(2.0 / eps).epsilon(1e-12));
  }
}

TEST_CASE("degree-7 coefficients are affine in eps with exact parts") {
  CHECK(HarnackPoly::coefficient_part(0, 0) == Rational(160, 27));
  CHECK(HarnackPoly::coefficient_part(0, 1) == Rational(25, 54));
  CHECK(HarnackPoly::coefficient_part(1, 0) == Rational(-16, 9));
  CHECK(HarnackPoly::coefficient_part(1, 1) == Rational(-73, 72));
  CHECK(HarnackPoly::coefficient_part(2, 0) == Rational(-2, 9));
  CHECK(HarnackPoly::coefficient_part(2, 1) == Rational(23, 36));
  CHECK(HarnackPoly::coefficient_part(3, 0) == Rational(2, 27));
  CHECK(HarnackPoly::coefficient_part(3, 1) == Rational(-19, 216));
  const double eps = 0.37;
  HarnackPoly f(eps);
  CHECK(f.a() == doctest::Approx((320.0 + 25.0 * eps) / 54.0).epsilon(1e-15));
  CHECK(f.d() == doctest::Approx((16.0 - 19.0 * eps) / 216.0).epsilon(1e-15));
}

TEST_CASE("exact extremization agrees with dense sampling") {
  for (double eps : {0.2, 0.55, 0.8}) {
    HarnackPoly f(eps);
    const auto ext = f.extremize(0.0, 3.0);
    double smin = 1e300, smax = -1e300;
    for (int k = 0; k <= 300000; ++k) {
      const double v = f.eval(3.0 * k / 300000.0);
      smin = std::min(smin, v);
      smax = std::max(smax, v);
    }
    CHECK(ext.min == doctest::Approx(smin).epsilon(1e-7));
    CHECK(ext.max == doctest::Approx(smax).epsilon(1e-7));
    // interior extrema are stationary points
    if (ext.argmin > 1e-9 && ext.argmin < 3.0 - 1e-9) {
      CHECK(f.deriv(ext.argmin) == doctest::Approx(0.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("degree-9 polynomial has the fixed rational coefficients") {
  TouchingPoly p;
  CHECK(p.coefficients()[0] == Rational(-371, 43200));
  CHECK(p.coefficients()[1] == Rational(167, 1440));
  CHECK(p.coefficients()[2] == Rational(-2681, 14400));
  CHECK(p.coefficients()[3] == Rational(-4193, 2160));
  CHECK(p.coefficients()[4] == Rational(301, 50));
  for (long long x : {0LL, 1LL, 2LL, 3LL}) {
    CHECK(p.eval(double(x)) ==
          doctest::Approx(p.eval_exact(x).value()).epsilon(1e-12));
  }
  CHECK(p.eval(1.3) == doctest::Approx(-p.eval(-1.3)).epsilon(1e-12));
}

TEST_CASE("figure tables are well formed") {
  const FigureData f1 = figure_data(1);
  REQUIRE(f1.headers.size() == 5);
  CHECK(f1.headers[0] == "x");
  REQUIRE(f1.columns.size() == 5);
  for (const auto& col : f1.columns) CHECK(col.size() == 1001);
  CHECK(f1.columns[0].front() == doctest::Approx(-3.0));
  CHECK(f1.columns[0].back() == doctest::Approx(3.0));
  // each curve is odd in x
  for (std::size_t c = 1; c < f1.columns.size(); ++c) {
    for (std::size_t k = 0; k < 1001; ++k) {
      CHECK(f1.columns[c][k] ==
            doctest::Approx(-f1.columns[c][1000 - k]).epsilon(1e-9));
    }
  }
  const FigureData f2 = figure_data(2);
  REQUIRE(f2.headers.size() == 2);
  CHECK(f2.columns[0].front() == doctest::Approx(-3.5));
  const std::string csv = f2.to_csv();
  CHECK(csv.substr(0, 3) == "x,f");
}

}  // TEST_SUITE
