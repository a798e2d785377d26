#include "core/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "core/special.hpp"

namespace fraclab {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct GkResult {
  double value;
  double error;
  double resabs; // Kronrod estimate of the integral of |f|
};

GkResult gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - half * kXgk[i]);
    fv[14 - i] = f(c + half * kXgk[i]);
  }
  fv[7] = f(c);
  double resk = 0.0;
  double resg = 0.0;
  double resabs = 0.0;
  for (int i = 0; i < 7; ++i) {
    resk += kWgk[i] * (fv[i] + fv[14 - i]);
    resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    if (i % 2 == 1) resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  resk += kWgk[7] * fv[7];
  resabs += kWgk[7] * std::abs(fv[7]);
  resg += kWg[3] * fv[7];
  resk *= half;
  resg *= half;
  resabs *= half;
  return {resk, std::abs(resk - resg), resabs};
}

double adapt(const RealFn& f, double a, double b, double tol, int depth) {
  const GkResult r = gk15(f, a, b);
  // Error estimates at the rounding plateau of the panel (relative to the
  // integral of |f| over it) cannot be reduced by further subdivision.
  const double floor = 1e-13 * r.resabs;
  if (r.error <= std::max(tol, floor) ||
      b - a < 1e-15 * (1.0 + std::abs(a))) {
    return r.value;
  }
  if (depth == 0) {
    throw QuadratureError("quadrature error estimate exceeds tolerance");
  }
  const double c = 0.5 * (a + b);
  return adapt(f, a, c, 0.5 * tol, depth - 1) +
         adapt(f, c, b, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const RealFn& f, double a, double b, double abs_tol,
                 int max_depth) {
  if (a == b) return 0.0;
  return adapt(f, a, b, abs_tol, max_depth);
}

double integrate_tail(const RealFn& f, double a, double power, double abs_tol) {
  // z = a / sigma^q maps [a, inf) to (0, 1]; q chosen so the transformed
  // integrand vanishes at least linearly at sigma = 0.
  const double q = power >= 3.0 ? 1.0 : 2.0 / (power - 1.0);
  auto g = [&](double sigma) {
    if (sigma <= 0.0) return 0.0;
    const double tau = std::pow(sigma, q);
    const double z = a / tau;
    return f(z) * (a / (tau * tau)) * q * std::pow(sigma, q - 1.0);
  };
  return integrate(g, 0.0, 1.0, abs_tol);
}

QuadRule gauss_jacobi(int n, double alpha, double beta) {
  const double ab = alpha + beta;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double ak;
    if (k == 0) {
      ak = (beta - alpha) / (ab + 2.0);
    } else {
      const double d = 2.0 * k + ab;
      ak = (beta * beta - alpha * alpha) / (d * (d + 2.0));
    }
    J(k, k) = ak;
    if (k + 1 < n) {
      double bk;
      if (k == 0) {
        bk = 4.0 * (alpha + 1.0) * (beta + 1.0) /
             ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
      } else {
        const double kk = k + 1;
        const double d = 2.0 * kk + ab;
        bk = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab) /
             (d * d * (d + 1.0) * (d - 1.0));
      }
      J(k, k + 1) = J(k + 1, k) = std::sqrt(bk);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  const double mu0 = std::pow(2.0, ab + 1.0) * gamma_fn(alpha + 1.0) *
                     gamma_fn(beta + 1.0) / gamma_fn(ab + 2.0);
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

double integrate_jacobi01(const RealFn& f, double s, int n) {
  return integrate_jacobi01_ab(f, -s, 0.0, n);
}

double integrate_jacobi01_ab(const RealFn& f, double a, double b, int n) {
  const QuadRule rule = gauss_jacobi(n, a, b);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    sum += rule.weights[i] * f(0.5 * (rule.nodes[i] + 1.0));
  }
  return std::pow(2.0, -a - b - 1.0) * sum;
}

} // namespace fraclab
