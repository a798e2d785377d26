#include <cmath>

#include "doctest.h"

#include "core/energy.hpp"
#include "core/pointwise.hpp"

using namespace fraclab;

namespace {

GridFunction bump_grid(double center, double radius, double L, double h) {
  return GridFunction::sample(
      L, h, [=](double x) { return bump(x - center, radius); });
}

}  // namespace

TEST_SUITE("energy") {

TEST_CASE("form is symmetric and positive") {
  const FracOrder order(0.5);
  const GridFunction u = bump_grid(0.0, 1.0, 3.0, 1.0 / 32);
  const GridFunction v = bump_grid(0.4, 0.7, 3.0, 1.0 / 32);
  const double euv = gagliardo_energy(u, v, order);
  const double evu = gagliardo_energy(v, u, order);
  CHECK(euv == doctest::Approx(evu).epsilon(1e-12));
  CHECK(gagliardo_energy(u, u, order) > 0.0);
  CHECK(gagliardo_energy(v, v, order) > 0.0);
}

TEST_CASE("form is bilinear") {
  const FracOrder order(0.6);
  const double L = 3.0, h = 1.0 / 16;
  const GridFunction u = bump_grid(0.0, 1.0, L, h);
  const GridFunction v = bump_grid(0.5, 0.8, L, h);
  const GridFunction w = bump_grid(-0.3, 1.2, L, h);
  GridFunction combo(L, h);
  for (int i = 0; i < combo.size(); ++i) combo[i] = 2.0 * v[i] - 0.5 * w[i];
  const double lhs = gagliardo_energy(u, combo, order);
  const double rhs = 2.0 * gagliardo_energy(u, v, order) -
                     0.5 * gagliardo_energy(u, w, order);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("form matches the operator pairing") {
  // E(u, v) = int v (-Delta)^s u for compactly supported smooth u, v.
  const FracOrder order(0.5);
  const double h = 1.0 / 64;
  const GridFunction u = bump_grid(0.0, 1.0, 3.0, h);
  const GridFunction v = bump_grid(0.25, 0.6, 3.0, h);
  const Profile up{[](double x) { return bump(x, 1.0); }, 1.0};
  double pairing = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) continue;
    pairing += h * v[i] * frac_laplacian_pointwise(up, order, v.node(i));
  }
  const double form = gagliardo_energy(u, v, order);
  CHECK(form == doctest::Approx(pairing).epsilon(5e-3));
}

TEST_CASE("scaling law of the energy") {
  // u_lam(x) = u(x/lam) gives E(u_lam) = lam^{1-2s} E(u).
  for (double s : {0.3, 0.5, 0.7}) {
    const FracOrder order(s);
    const double h = 1.0 / 32, lam = 2.0;
    const GridFunction u = bump_grid(0.0, 1.0, 3.0, h);
    const GridFunction ul = GridFunction::sample(
        6.0, lam * h, [=](double x) { return bump(x / lam, 1.0); });
    const double e = gagliardo_energy(u, u, order);
    const double el = gagliardo_energy(ul, ul, order);
    CHECK(el / e == doctest::Approx(std::pow(lam, 1.0 - 2.0 * s)).epsilon(5e-3));
  }
}

TEST_CASE("potential term adds the weighted mass product") {
  const FracOrder order(0.5);
  const double h = 1.0 / 16;
  const GridFunction u = bump_grid(0.0, 1.0, 2.0, h);
  const GridFunction v = bump_grid(0.2, 0.9, 2.0, h);
  std::vector<double> c(u.size());
  for (int i = 0; i < u.size(); ++i) c[i] = 1.0 + 0.1 * i;
  double mass = 0.0;
  for (int i = 0; i < u.size(); ++i) mass += h * c[i] * u[i] * v[i];
  const double got = bilinear_form_with_potential(u, v, c, order);
  const double want = gagliardo_energy(u, v, order) + mass;
  CHECK(got == doctest::Approx(want).epsilon(1e-12));
}

}  // TEST_SUITE
