#pragma once

#include <stdexcept>

namespace fraclab {

// Fractional order s in (0,1) together with the spatial dimension.
struct FracOrder {
  double s;
  int n;

  FracOrder(double s_, int n_ = 1) : s(s_), n(n_) {
    if (!(s > 0.0 && s < 1.0)) {
      throw std::invalid_argument("FracOrder: s must lie in (0,1)");
    }
    if (n < 1) {
      throw std::invalid_argument("FracOrder: n must be >= 1");
    }
  }
};

// Normalization constant of the fractional Laplacian,
//   c_{n,s} = s 4^s Gamma((n+2s)/2) / (pi^{n/2} Gamma(1-s)).
double kernel_constant(const FracOrder& order);

// Volume of the unit ball in n dimensions.
double unit_ball_volume(int n);

// Integral of |y|^{-n-2s} over the complement of the ball of radius r,
//   n |B_1| r^{-2s} / (2s).
double tail_integral(double r, const FracOrder& order);

// The standard mollifier scaled to the given radius (1D):
//   C exp(-1/((x/r)^2 - 1)) for |x| < r, 0 otherwise,
// with C fixed so that the radius-1 bump integrates to one.
double bump(double x, double radius);

} // namespace fraclab
