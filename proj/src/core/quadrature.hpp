#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace fraclab {

using RealFn = std::function<double(double)>;

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b].  Throws QuadratureError when the
// error estimate cannot be brought below the tolerance.
double integrate(const RealFn& f, double a, double b, double abs_tol,
                 int max_depth = 48);

// Semi-infinite integral over [a, inf) of a decaying integrand, computed by
// the substitution z = a / tau on (0, 1].  Requires a > 0 and z^p-integrable
// decay; `power` is the known algebraic decay exponent used to regularize
// the endpoint (integrand ~ z^{-power} as z -> inf, power > 1).
double integrate_tail(const RealFn& f, double a, double power, double abs_tol);

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^alpha (1+x)^beta,
// alpha, beta > -1, computed by Golub-Welsch.
QuadRule gauss_jacobi(int n, double alpha, double beta);

// Integral over [0, 1] of f(t) * (1-t)^{-s}, using a mapped Gauss-Jacobi
// rule of size n.
double integrate_jacobi01(const RealFn& f, double s, int n = 64);

// Integral over [0, 1] of f(t) * (1-t)^a * t^b, a, b > -1, via a mapped
// Gauss-Jacobi rule of size n.  f should be smooth on [0, 1].
double integrate_jacobi01_ab(const RealFn& f, double a, double b, int n = 64);

} // namespace fraclab
