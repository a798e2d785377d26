#include "core/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "core/moments.hpp"
#include "core/quadrature.hpp"

namespace fraclab {

namespace {

struct PairMoments {
  double diag;  // iint_{I x I} |x-y|^{1-2s} dx dy
  double a2;    // iint xi^2 (xi+eta)^{-1-2s}, xi,eta in (0,h)
  double c11;   // iint xi eta (xi+eta)^{-1-2s}
};

PairMoments pair_moments(double h, double s) {
  PairMoments m{};
  m.diag = 2.0 * std::pow(h, 3.0 - 2.0 * s) *
           (1.0 / (2.0 - 2.0 * s) - 1.0 / (3.0 - 2.0 * s));
  m.a2 = integrate(
      [&](double xi) { return xi * xi * kernel_mass(xi, xi + h, s); }, 0.0, h,
      1e-13 * std::pow(h, 3.0 - 2.0 * s) + 1e-300);
  m.c11 = integrate(
      [&](double xi) {
        return xi * (kernel_first(xi, xi + h, s) -
                     xi * kernel_mass(xi, xi + h, s));
      },
      0.0, h, 1e-13 * std::pow(h, 3.0 - 2.0 * s) + 1e-300);
  return m;
}

// 4-point Gauss-Legendre on (0,1).
constexpr double kGx[4] = {0.069431844202973712, 0.33000947820757187,
                           0.66999052179242813, 0.93056815579702628};
constexpr double kGw[4] = {0.17392742256872693, 0.32607257743127307,
                           0.32607257743127307, 0.17392742256872693};

} // namespace

double gagliardo_energy(const GridFunction& u, const GridFunction& v,
                        const FracOrder& order) {
  if (u.size() != v.size() || u.spacing() != v.spacing() ||
      u.half_width() != v.half_width()) {
    throw std::invalid_argument("gagliardo_energy: mismatched grids");
  }
  if (u.tail().kind != TailKind::Zero || v.tail().kind != TailKind::Zero) {
    throw std::invalid_argument("gagliardo_energy: compact support required");
  }
  const double s = order.s;
  const double h = u.spacing();
  const double L = u.half_width();
  const int ncells = u.size() - 1;
  const PairMoments pm = pair_moments(h, s);

  auto slope = [&](const GridFunction& g, int j) {
    return (g[j + 1] - g[j]) / h;
  };

  double total = 0.0;
  // Diagonal cells.
  for (int j = 0; j < ncells; ++j) {
    total += slope(u, j) * slope(v, j) * pm.diag;
  }
  // Node-sharing cell pairs (counted twice in the ordered double integral).
  for (int j = 0; j + 1 < ncells; ++j) {
    const double sl = slope(u, j), sr = slope(u, j + 1);
    const double tl = slope(v, j), tr = slope(v, j + 1);
    total += 2.0 * (sl * tl * pm.a2 + sr * tr * pm.a2 +
                    (sl * tr + sr * tl) * pm.c11);
  }
  // Separated pairs by tensor Gauss quadrature.
  for (int j = 0; j < ncells; ++j) {
    const double xj = u.node(j);
    for (int k = j + 2; k < ncells; ++k) {
      const double yk = u.node(k);
      double cell = 0.0;
      for (int a = 0; a < 4; ++a) {
        const double x = xj + h * kGx[a];
        const double ux = u[j] + (u[j + 1] - u[j]) * kGx[a];
        const double vx = v[j] + (v[j + 1] - v[j]) * kGx[a];
        for (int b = 0; b < 4; ++b) {
          const double y = yk + h * kGx[b];
          const double uy = u[k] + (u[k + 1] - u[k]) * kGx[b];
          const double vy = v[k] + (v[k + 1] - v[k]) * kGx[b];
          cell += kGw[a] * kGw[b] * (ux - uy) * (vx - vy) *
                  std::pow(y - x, -1.0 - 2.0 * s);
        }
      }
      total += 2.0 * cell * h * h;
    }
  }
  // Cross terms with the (zero) exterior.
  double cross = 0.0;
  for (int j = 0; j < ncells; ++j) {
    const double xj = u.node(j);
    for (int a = 0; a < 4; ++a) {
      const double x = xj + h * kGx[a];
      const double ux = u[j] + (u[j + 1] - u[j]) * kGx[a];
      const double vx = v[j] + (v[j + 1] - v[j]) * kGx[a];
      const double mass =
          kernel_mass_tail(L - x, s) + kernel_mass_tail(L + x, s);
      cross += kGw[a] * ux * vx * mass;
    }
  }
  cross *= h;
  total += 2.0 * cross;

  return 0.5 * kernel_constant(order) * total;
}

double bilinear_form_with_potential(const GridFunction& u,
                                    const GridFunction& v,
                                    const std::vector<double>& c,
                                    const FracOrder& order) {
  if (static_cast<int>(c.size()) != u.size()) {
    throw std::invalid_argument("bilinear form: potential samples mismatch");
  }
  double zero_order = 0.0;
  for (int i = 0; i < u.size(); ++i) {
    zero_order += c[i] * u[i] * v[i];
  }
  return gagliardo_energy(u, v, order) + zero_order * u.spacing();
}

} // namespace fraclab
