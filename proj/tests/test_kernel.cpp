#include <cmath>

#include "doctest.h"

#include "core/kernel.hpp"
#include "core/moments.hpp"
#include "core/quadrature.hpp"

using namespace fraclab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("kernel") {

TEST_CASE("normalizing constant at s = 1/2") {
  CHECK(kernel_constant(FracOrder(0.5, 1)) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(kernel_constant(FracOrder(0.5, 2)) ==
        doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("normalizing constant limits: s c(1,s) stays bounded") {
  // c_{1,s} ~ (1-s) * 4/2 ... near s=1 and ~ s * 2 near s=0; just check
  // positivity and continuity on a grid.
  double prev = kernel_constant(FracOrder(0.05, 1));
  for (int k = 1; k <= 18; ++k) {
    const double s = 0.05 + 0.05 * k;
    const double c = kernel_constant(FracOrder(s, 1));
    CHECK(c > 0.0);
    CHECK(std::abs(c - prev) < 0.5);
    prev = c;
  }
}

TEST_CASE("unit ball volumes") {
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(unit_ball_volume(2) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(unit_ball_volume(3) ==
        doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
}

TEST_CASE("tail integral of the kernel beyond radius r") {
  for (double s : {0.3, 0.5, 0.8}) {
    const FracOrder order(s, 1);
    for (double r : {0.5, 1.0, 3.0}) {
      const double oracle = 2.0 * integrate_tail(
                                [&](double z) {
                                  return std::pow(z, -1.0 - 2.0 * s);
                                },
                                r, 1.0 + 2.0 * s, 1e-13);
      CHECK(tail_integral(r, order) == doctest::Approx(oracle).epsilon(1e-10));
    }
  }
}

TEST_CASE("kernel moments match adaptive quadrature") {
  for (double s : {0.2, 0.5, 0.85}) {
    for (auto [a, b] : {std::pair{0.1, 0.25}, {1.0, 1.5}, {0.01, 0.02}}) {
      const double m0 = integrate(
          [&](double z) { return std::pow(z, -1.0 - 2.0 * s); }, a, b, 1e-14);
      const double m1 = integrate(
          [&](double z) { return z * std::pow(z, -1.0 - 2.0 * s); }, a, b,
          1e-14);
      CHECK(kernel_mass(a, b, s) == doctest::Approx(m0).epsilon(1e-10));
      CHECK(kernel_first(a, b, s) == doctest::Approx(m1).epsilon(1e-10));
    }
  }
}

TEST_CASE("kernel first moment survives s = 1/2 cancellation") {
  // At s = 1/2 the first moment is log(b/a); the generic power form is 0/0.
  CHECK(kernel_first(0.25, 0.75, 0.5) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-13));
  // Nearby s must vary continuously.
  const double f1 = kernel_first(0.25, 0.75, 0.5 - 1e-9);
  const double f2 = kernel_first(0.25, 0.75, 0.5 + 1e-9);
  CHECK(std::abs(f1 - f2) < 1e-7);
}

TEST_CASE("tail mass closed form") {
  for (double s : {0.3, 0.5, 0.7}) {
    for (double r : {0.5, 2.0}) {
      CHECK(kernel_mass_tail(r, s) ==
            doctest::Approx(std::pow(r, -2.0 * s) / (2.0 * s)).epsilon(1e-14));
    }
  }
}

TEST_CASE("first cell weight scales like h^{-2s}") {
  for (double s : {0.25, 0.5, 0.75}) {
    const double w1 = first_cell_weight(0.01, s);
    const double w2 = first_cell_weight(0.005, s);
    CHECK(w2 / w1 == doctest::Approx(std::pow(2.0, 2.0 * s)).epsilon(1e-12));
    CHECK(w1 > 0.0);
  }
}

TEST_CASE("bump is smooth, even, compactly supported") {
  CHECK(bump(0.0, 1.0) > 0.0);
  CHECK(bump(1.0, 1.0) == 0.0);
  CHECK(bump(1.5, 1.0) == 0.0);
  CHECK(bump(0.3, 1.0) == doctest::Approx(bump(-0.3, 1.0)).epsilon(1e-15));
  CHECK(bump(0.6, 2.0) == doctest::Approx(bump(0.3, 1.0)).epsilon(1e-15));
}

}  // TEST_SUITE
