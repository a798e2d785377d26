#include <cmath>

#include "doctest.h"

#include "core/kernel.hpp"
#include "core/pointwise.hpp"

using namespace fraclab;

namespace {

const Profile kLorentzian{[](double x) { return 1.0 / (1.0 + x * x); }};

const Profile kSqrtProfile{
    [](double x) {
      const double r = 1.0 - x * x;
      return r > 0.0 ? std::sqrt(r) : 0.0;
    },
    1.0};

const Profile kOddPoisson{[](double x) { return x / (1.0 + x * x); }};

}  // namespace

TEST_SUITE("pointwise") {

TEST_CASE("half-laplacian of the lorentzian") {
  // Harmonic extension (1+y)/(x^2 + (1+y)^2) gives (1-x^2)/(1+x^2)^2.
  const FracOrder half(0.5);
  for (double x : {0.0, 0.3, 0.5, 1.0, 1.7, -2.4}) {
    const double want = (1.0 - x * x) / ((1.0 + x * x) * (1.0 + x * x));
    CHECK(frac_laplacian_pointwise(kLorentzian, half, x) ==
          doctest::Approx(want).epsilon(5e-6));
  }
}

TEST_CASE("half-laplacian of the odd poisson profile") {
  // x/(1+x^2) extends to x/(x^2+(1+y)^2); the trace derivative is
  // 2x/(1+x^2)^2.
  const FracOrder half(0.5);
  for (double x : {0.0, 0.4, 1.0, -1.5, 3.0}) {
    const double want = 2.0 * x / std::pow(1.0 + x * x, 2.0);
    CHECK(frac_laplacian_pointwise(kOddPoisson, half, x) ==
          doctest::Approx(want).epsilon(5e-6));
  }
}

TEST_CASE("half-laplacian of the sqrt profile is one inside") {
  const FracOrder half(0.5);
  for (double x : {0.0, 0.25, 0.5, -0.8}) {
    CHECK(frac_laplacian_pointwise(kSqrtProfile, half, x) ==
          doctest::Approx(1.0).epsilon(2e-4));
  }
}

TEST_CASE("scaling covariance across orders") {
  const Profile gauss{[](double x) { return std::exp(-x * x); }};
  for (double s : {0.3, 0.5, 0.7}) {
    const FracOrder order(s);
    const double lam = 2.0;
    const Profile dilated{[lam](double x) { return std::exp(-(x / lam) * (x / lam)); }};
    for (double x : {0.0, 0.8}) {
      const double lhs = frac_laplacian_pointwise(dilated, order, x);
      const double rhs = std::pow(lam, -2.0 * s) *
                         frac_laplacian_pointwise(gauss, order, x / lam);
      CHECK(lhs == doctest::Approx(rhs).epsilon(2e-5));
    }
  }
}

TEST_CASE("translation invariance") {
  const double a = 0.4;
  const Profile base{[](double x) { return bump(x, 1.0); }, 1.0};
  const Profile shifted{[a](double x) { return bump(x - a, 1.0); }, 1.0 + a};
  const FracOrder order(0.6);
  for (double x : {0.1, 0.7, 1.3}) {
    CHECK(frac_laplacian_pointwise(shifted, order, x) ==
          doctest::Approx(frac_laplacian_pointwise(base, order, x - a))
              .epsilon(2e-5));
  }
}

TEST_CASE("even bump has positive value at its max, negative far out") {
  const Profile b{[](double x) { return bump(x, 1.0); }, 1.0};
  for (double s : {0.3, 0.5, 0.8}) {
    const FracOrder order(s);
    CHECK(frac_laplacian_pointwise(b, order, 0.0) > 0.0);
    CHECK(frac_laplacian_pointwise(b, order, 2.0) < 0.0);
  }
}

TEST_CASE("half-space reduction agrees with the full-line form") {
  const FracOrder order(0.5);
  // analytic odd function, polynomial decay
  auto half_fn = [](double x) { return x / (1.0 + x * x); };
  for (double x : {0.3, 1.0, 2.5}) {
    const double want = 2.0 * x / std::pow(1.0 + x * x, 2.0);
    CHECK(antisym_frac_laplacian(half_fn, order, x) ==
          doctest::Approx(want).epsilon(1e-4));
  }
  // compactly supported odd function, several orders
  auto odd_bump = [](double x) { return x * bump(x, 2.0); };
  const Profile odd_profile{odd_bump, 2.0};
  for (double s : {0.35, 0.5, 0.75}) {
    const FracOrder ord(s);
    for (double x : {0.4, 1.1, 2.6}) {
      CHECK(antisym_frac_laplacian(odd_bump, ord, x, {}, 2.0) ==
            doctest::Approx(frac_laplacian_pointwise(odd_profile, ord, x))
                .epsilon(5e-5));
    }
  }
}

TEST_CASE("planar evaluation of a one-variable profile matches 1d") {
  // (-Delta)^s in the plane applied to v(x1) equals the 1d operator.
  const Profile b{[](double x) { return bump(x, 1.0); }, 1.0};
  for (double s : {0.4, 0.5}) {
    for (double x1 : {0.0, 0.5, 1.4}) {
      const double got = frac_laplacian_2d_line(b, s, x1, {1e-7, 1e-9});
      const double want = frac_laplacian_pointwise(b, FracOrder(s, 1), x1);
      CHECK(got == doctest::Approx(want).epsilon(5e-4));
    }
  }
}

TEST_CASE("collocation row reproduces pointwise values on a smooth profile") {
  const FracOrder order(0.5);
  const double h = 1.0 / 256;
  GridFunction u = GridFunction::sample(4.0, h,
                                        [](double x) { return bump(x, 1.0); });
  const Profile b{[](double x) { return bump(x, 1.0); }, 1.0};
  for (double x : {0.0, 0.5, 1.5}) {
    const int i = u.index_of(x);
    const double got = frac_laplacian_at_node(u, order, i);
    const double want = frac_laplacian_pointwise(b, order, u.node(i));
    CHECK(got == doctest::Approx(want).epsilon(5e-3));
  }
}

TEST_CASE("collocation row has the monotone sign pattern") {
  GridFunction g(2.0, 0.125);
  for (double s : {0.25, 0.5, 0.75}) {
    const OperatorRow row = operator_row(g, FracOrder(s), g.center_index());
    CHECK(row.coeff[g.center_index()] > 0.0);
    double offdiag_sum = 0.0;
    for (int j = 0; j < g.size(); ++j) {
      if (j == g.center_index()) continue;
      CHECK(row.coeff[j] <= 1e-14);
      offdiag_sum += row.coeff[j];
    }
    // constants are in the kernel of the operator up to the exterior mass
    CHECK(row.coeff[g.center_index()] + offdiag_sum > 0.0);
  }
}

TEST_CASE("row applied to restricted smooth data is consistent in h") {
  // halving h must shrink the defect against the exact value
  const FracOrder order(0.5);
  const Profile b{[](double x) { return bump(x, 1.0); }, 1.0};
  const double exact = frac_laplacian_pointwise(b, order, 0.0, {1e-9, 1e-11});
  double prev = 1e9;
  for (double h : {1.0 / 32, 1.0 / 64, 1.0 / 128}) {
    GridFunction u = GridFunction::sample(4.0, h,
                                          [](double x) { return bump(x, 1.0); });
    const double err =
        std::abs(frac_laplacian_at_node(u, order, u.center_index()) - exact);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-3);
}

}  // TEST_SUITE
