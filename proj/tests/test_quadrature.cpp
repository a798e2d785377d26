#include <cmath>

#include "doctest.h"

#include "core/quadrature.hpp"
#include "core/special.hpp"

using namespace fraclab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("quadrature") {

TEST_CASE("gamma function reproduces factorials and half-integers") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-14));
  CHECK(std::exp(log_gamma(7.25)) ==
        doctest::Approx(gamma_fn(7.25)).epsilon(1e-12));
}

TEST_CASE("smooth step is monotone with flat ends") {
  CHECK(smooth_step(-1.0) == 0.0);
  CHECK(smooth_step(0.0) == 0.0);
  CHECK(smooth_step(1.0) == 1.0);
  CHECK(smooth_step(2.0) == 1.0);
  double prev = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double v = smooth_step(k / 100.0);
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
  CHECK(smooth_step(0.5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("adaptive rule hits closed-form integrals") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-11));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0,
                  1e-12) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-11));
  CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0,
                  1e-13) == doctest::Approx(kPi / 4.0).epsilon(1e-12));
}

TEST_CASE("tail rule integrates power laws exactly") {
  for (double p : {1.5, 2.0, 3.0}) {
    const double got = integrate_tail(
        [p](double x) { return std::pow(x, -p); }, 2.0, p, 1e-12);
    const double want = std::pow(2.0, 1.0 - p) / (p - 1.0);
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
  }
  // Perturbed tail: (x^-2 + x^-4) from 1.
  const double got = integrate_tail(
      [](double x) { return std::pow(x, -2.0) + std::pow(x, -4.0); }, 1.0,
      2.0, 1e-12);
  CHECK(got == doctest::Approx(1.0 + 1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("gauss-jacobi rules reproduce exact moments") {
  // int_{-1}^1 (1-x)^a (1+x)^b x^k dx by adaptive quadrature after the
  // substitutions 1 -+ x = t^2 that absorb the endpoint singularities.
  auto moment = [](double a, double b, int k) {
    const double pl = std::max(2.0 / (b + 1.0), 1.0);
    const double left = integrate(
        [=](double v) {
          const double w = std::pow(v, pl);  // w = 1 + x
          const double x = w - 1.0;
          return std::pow(1.0 - x, a) * std::pow(v, pl * b) * std::pow(x, k) *
                 pl * std::pow(v, pl - 1.0);
        },
        0.0, 1.0, 1e-12);
    const double pr = std::max(2.0 / (a + 1.0), 1.0);
    const double right = integrate(
        [=](double u) {
          const double w = std::pow(u, pr);  // w = 1 - x
          const double x = 1.0 - w;
          return std::pow(u, pr * a) * std::pow(1.0 + x, b) * std::pow(x, k) *
                 pr * std::pow(u, pr - 1.0);
        },
        0.0, 1.0, 1e-12);
    return left + right;
  };
  for (auto [a, b] : {std::pair{-0.5, 0.0}, {-0.5, 1.0}, {0.3, -0.7},
                      {0.0, 0.0}, {-0.25, 0.5}}) {
    const QuadRule rule = gauss_jacobi(8, a, b);
    REQUIRE(rule.nodes.size() == 8);
    for (int k = 0; k <= 15; ++k) {  // exact through degree 2n-1
      double got = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        got += rule.weights[i] * std::pow(rule.nodes[i], k);
      }
      CHECK(got == doctest::Approx(moment(a, b, k)).epsilon(1e-9));
    }
  }
}

TEST_CASE("gauss-jacobi nodes live strictly inside (-1,1)") {
  const QuadRule rule = gauss_jacobi(32, -0.6, 1.2);
  for (double x : rule.nodes) {
    CHECK(x > -1.0);
    CHECK(x < 1.0);
  }
  for (double w : rule.weights) CHECK(w > 0.0);
}

TEST_CASE("mapped [0,1] rule handles the singular endpoint") {
  // int_0^1 (1-t)^{-s} dt = 1/(1-s), integrand f = 1.
  for (double s : {0.25, 0.5, 0.75}) {
    const double got = integrate_jacobi01([](double) { return 1.0; }, s, 16);
    CHECK(got == doctest::Approx(1.0 / (1.0 - s)).epsilon(1e-12));
  }
  // int_0^1 (1-t)^{-1/2} t (1+t)^{-1/2} dt = 1 (it is t (1-t^2)^{-1/2}).
  const double got = integrate_jacobi01_ab(
      [](double t) { return std::pow(1.0 + t, -0.5); }, -0.5, 1.0, 24);
  CHECK(got == doctest::Approx(1.0).epsilon(1e-12));
}

}  // TEST_SUITE
