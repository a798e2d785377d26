#pragma once

#include <limits>
#include <vector>

#include "core/grid.hpp"
#include "core/kernel.hpp"
#include "core/quadrature.hpp"

namespace fraclab {

// Quadrature configuration for pointwise evaluation; all tolerances are
// caller-visible knobs.
struct QuadSettings {
  double abs_tol = 1e-6;
  double tail_tol = 1e-8;
};

// Closed-form profile defined on all of R.  A finite support radius lets the
// far field be integrated analytically.
struct Profile {
  RealFn f;
  double support_radius = std::numeric_limits<double>::infinity();

  double operator()(double x) const { return f(x); }
};

// Pointwise principal-value evaluation of (-Delta)^s u(x) in 1D via the
// symmetrized second-difference form
//   c_{1,s} int_0^inf (2u(x) - u(x+z) - u(x-z)) z^{-1-2s} dz.
double frac_laplacian_pointwise(const Profile& u, const FracOrder& order,
                                double x, const QuadSettings& q = {});

// Same operator applied to a grid function at node i, using exact kernel
// moments against the piecewise-linear interpolant (identical to the row the
// solver assembles).
double frac_laplacian_at_node(const GridFunction& u, const FracOrder& order,
                              int i, const QuadSettings& q = {});

// One collocation row: (-Delta)^s u(x_i) ~= coeff . values + exterior.
struct OperatorRow {
  std::vector<double> coeff;
  double exterior = 0.0;
};
OperatorRow operator_row(const GridFunction& geometry, const FracOrder& order,
                         int i, const QuadSettings& q = {});

// Half-space reduction for odd functions: u_half is the restriction of an
// odd function to (0, inf); x > 0.  Integrates only over the half-line.
double antisym_frac_laplacian(const RealFn& u_half, const FracOrder& order,
                              double x, const QuadSettings& q = {},
                              double support_radius =
                                  std::numeric_limits<double>::infinity());

// 2D evaluation of (-Delta)^s applied to u(x1,x2) = v(x1) at a point on the
// line x2 = 0, by radial-angular quadrature.  v must be compactly supported.
double frac_laplacian_2d_line(const Profile& v, double s, double x1,
                              const QuadSettings& q = {});

} // namespace fraclab
