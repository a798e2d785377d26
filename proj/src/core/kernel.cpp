#include "core/kernel.hpp"

#include <cmath>

#include "core/quadrature.hpp"
#include "core/special.hpp"

namespace fraclab {

namespace {
constexpr double kPi = 3.14159265358979323846;

double bump_unnormalized(double x) {
  const double r2 = x * x;
  if (r2 >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - r2));
}

double bump_norm_1d() {
  static const double value = [] {
    return 1.0 / integrate([](double x) { return bump_unnormalized(x); },
                           -1.0, 1.0, 1e-14);
  }();
  return value;
}

} // namespace

double kernel_constant(const FracOrder& order) {
  const double s = order.s;
  const double n = order.n;
  return s * std::pow(4.0, s) * gamma_fn(0.5 * (n + 2.0 * s)) /
         (std::pow(kPi, 0.5 * n) * gamma_fn(1.0 - s));
}

double unit_ball_volume(int n) {
  return std::pow(kPi, 0.5 * n) / gamma_fn(0.5 * n + 1.0);
}

double tail_integral(double r, const FracOrder& order) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("tail_integral: r must be positive");
  }
  return order.n * unit_ball_volume(order.n) * std::pow(r, -2.0 * order.s) /
         (2.0 * order.s);
}

double bump(double x, double radius) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("bump: radius must be positive");
  }
  return bump_norm_1d() * bump_unnormalized(x / radius);
}

} // namespace fraclab
