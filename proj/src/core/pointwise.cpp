#include "core/pointwise.hpp"

#include <cmath>
#include <stdexcept>

#include "core/moments.hpp"

namespace fraclab {

namespace {

// int_0^zmax d2(z) z^{-1-2s} dz where d2(z) = O(z^2) near 0.  The first
// stretch uses the substitution z = t^{1/(1-s)} which removes the endpoint
// singularity of the integrand.
double integrate_second_difference(const RealFn& d2, double s, double zmax,
                                   double tol) {
  const double qexp = 1.0 / (1.0 - s);
  const double z_split = std::min(1.0, zmax);
  // Below delta the second difference drowns in rounding noise while the
  // kernel blows up; there d2 is replaced by its quadratic model
  // (z/delta)^2 d2(delta), whose kernel integral is explicit.  The model
  // error is O(delta^{4-2s}) for profiles smooth at x.
  const double delta = 1e-4 * z_split;
  double result =
      d2(delta) * std::pow(delta, -2.0 * s) / (2.0 - 2.0 * s);
  auto near = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double z = std::pow(t, qexp);
    return d2(z) * std::pow(z, -1.0 - 2.0 * s) * qexp * std::pow(t, qexp - 1.0);
  };
  result += integrate(near, std::pow(delta, 1.0 - s),
                      std::pow(z_split, 1.0 - s), 0.5 * tol);
  if (zmax > z_split) {
    auto mid = [&](double z) { return d2(z) * std::pow(z, -1.0 - 2.0 * s); };
    result += integrate(mid, z_split, zmax, 0.5 * tol);
  }
  return result;
}

} // namespace

double frac_laplacian_pointwise(const Profile& u, const FracOrder& order,
                                double x, const QuadSettings& q) {
  if (order.n != 1) {
    throw std::invalid_argument("frac_laplacian_pointwise: 1D only");
  }
  const double s = order.s;
  const double ux = u(x);
  auto d2 = [&](double z) { return 2.0 * ux - u(x + z) - u(x - z); };

  double zcap;
  bool analytic_tail = false;
  if (std::isfinite(u.support_radius)) {
    zcap = std::abs(x) + u.support_radius;
    analytic_tail = true;
  } else {
    zcap = std::max(10.0, 2.0 * std::abs(x) + 10.0);
  }

  double integral = integrate_second_difference(d2, s, zcap, 0.5 * q.abs_tol);
  if (analytic_tail) {
    integral += 2.0 * ux * kernel_mass_tail(zcap, s);
  } else {
    integral += integrate_tail(
        [&](double z) { return d2(z) * std::pow(z, -1.0 - 2.0 * s); }, zcap,
        1.0 + 2.0 * s, 0.5 * q.abs_tol);
  }
  return kernel_constant(order) * integral;
}

OperatorRow operator_row(const GridFunction& g, const FracOrder& order, int i,
                         const QuadSettings& q) {
  const int n = g.size();
  if (i < 1 || i > n - 2) {
    throw std::out_of_range("operator_row: node not interior to the box");
  }
  const double s = order.s;
  const double h = g.spacing();
  const double L = g.half_width();
  const double x = g.node(i);

  OperatorRow row;
  row.coeff.assign(n, 0.0);

  // Symmetric rule on the two cells adjacent to x_i; the second difference
  // is interpolated quadratically on (0, h), which keeps the scheme both
  // convergent for s >= 1/2 and monotone.
  const double w0 = first_cell_weight(h, s);
  row.coeff[i] += 2.0 * w0;
  row.coeff[i - 1] -= w0;
  row.coeff[i + 1] -= w0;

  // Exact moments of the kernel against the piecewise-linear interpolant on
  // every other cell.
  for (int j = 0; j + 1 < n; ++j) {
    if (j == i - 1 || j == i) continue;
    const double y0 = g.node(j);
    const double y1 = g.node(j + 1);
    double a, b, m1;
    const double m0 = (y0 >= x) ? kernel_mass(y0 - x, y1 - x, s)
                                : kernel_mass(x - y1, x - y0, s);
    if (y0 >= x) {
      a = y0 - x;
      b = y1 - x;
      m1 = kernel_first(a, b, s) - a * m0;
    } else {
      a = x - y1;
      b = x - y0;
      m1 = b * m0 - kernel_first(a, b, s);
    }
    row.coeff[i] += m0;
    row.coeff[j] -= m0 - m1 / h;
    row.coeff[j + 1] -= m1 / h;
  }

  // Far field beyond the box.
  const double dr = L - x;
  const double dl = L + x;
  row.coeff[i] += kernel_mass_tail(dr, s) + kernel_mass_tail(dl, s);
  if (g.tail().kind == TailKind::ClosedForm) {
    const auto& tail = g.tail().fn;
    const double p = 1.0 + 2.0 * s;
    const double right = integrate_tail(
        [&](double y) { return tail(y) * std::pow(y - x, -p); }, L, p,
        q.tail_tol);
    const double left = integrate_tail(
        [&](double w) { return tail(-w) * std::pow(w + x, -p); }, L, p,
        q.tail_tol);
    row.exterior = -(right + left);
  }

  const double c = kernel_constant(order);
  for (double& v : row.coeff) v *= c;
  row.exterior *= c;
  return row;
}

double frac_laplacian_at_node(const GridFunction& u, const FracOrder& order,
                              int i, const QuadSettings& q) {
  const OperatorRow row = operator_row(u, order, i, q);
  double value = row.exterior;
  for (int j = 0; j < u.size(); ++j) value += row.coeff[j] * u[j];
  return value;
}

double antisym_frac_laplacian(const RealFn& u_half, const FracOrder& order,
                              double x, const QuadSettings& q,
                              double support_radius) {
  if (order.n != 1) {
    throw std::invalid_argument("antisym_frac_laplacian: 1D only");
  }
  if (!(x > 0.0)) {
    throw std::invalid_argument("antisym_frac_laplacian: x must be positive");
  }
  const double s = order.s;
  const double p = 1.0 + 2.0 * s;
  const double ux = u_half(x);
  const double tol = q.abs_tol / 4.0;

  // PV stretch around y = x, written as a second difference on (0, x).
  auto d2 = [&](double z) { return 2.0 * ux - u_half(x + z) - u_half(x - z); };
  double total = integrate_second_difference(d2, s, x, tol);

  // Remaining part of the singular kernel, y in (2x, inf).
  const double rho = support_radius;
  if (std::isfinite(rho)) {
    const double zcap = std::max(x, rho - x);
    if (zcap > x) {
      total += integrate(
          [&](double z) { return (ux - u_half(x + z)) * std::pow(z, -p); }, x,
          zcap, tol);
    }
    total += ux * kernel_mass_tail(std::max(x, zcap), s);
  } else {
    total += integrate_tail(
        [&](double z) { return (ux - u_half(x + z)) * std::pow(z, -p); }, x, p,
        tol);
  }

  // Reflected-kernel terms, regular on the half-line:
  //   u(x) / (2s x^{2s}) + int_0^inf u(y) (x+y)^{-1-2s} dy.
  total += ux * kernel_mass_tail(x, s);
  if (std::isfinite(rho)) {
    total += integrate([&](double y) { return u_half(y) * std::pow(x + y, -p); },
                       0.0, rho, tol);
  } else {
    const double ycap = std::max(1.0, 4.0 * x);
    total += integrate([&](double y) { return u_half(y) * std::pow(x + y, -p); },
                       0.0, ycap, tol);
    total += integrate_tail(
        [&](double y) { return u_half(y) * std::pow(x + y, -p); }, ycap, p,
        tol);
  }

  return kernel_constant(order) * total;
}

double frac_laplacian_2d_line(const Profile& v, double s, double x1,
                              const QuadSettings& q) {
  if (!std::isfinite(v.support_radius)) {
    throw std::invalid_argument("frac_laplacian_2d_line: compact support required");
  }
  const FracOrder order2(s, 2);
  const double vx = v(x1);
  const double r0 = 2.0 * (std::abs(x1) + v.support_radius);
  const double tol = q.abs_tol;

  // Quarter-period Gauss-Legendre in the angle (the integrand depends on
  // |cos theta| only), adaptive quadrature in the radius.
  const QuadRule gl = gauss_jacobi(32, 0.0, 0.0);
  const double pi = 3.14159265358979323846;
  double angular = 0.0;
  for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
    const double theta = 0.25 * pi * (gl.nodes[k] + 1.0);
    const double c = std::cos(theta);
    auto d2 = [&](double r) {
      return 2.0 * vx - v(x1 + r * c) - v(x1 - r * c);
    };
    double radial = integrate_second_difference(d2, s, r0, tol);
    radial += integrate_tail(
        [&](double r) { return d2(r) * std::pow(r, -1.0 - 2.0 * s); }, r0,
        1.0 + 2.0 * s, tol);
    angular += 0.25 * pi * gl.weights[k] * radial;
  }
  return 0.5 * kernel_constant(order2) * 4.0 * angular;
}

} // namespace fraclab
