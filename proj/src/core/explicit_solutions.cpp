#include "core/explicit_solutions.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "core/quadrature.hpp"

namespace fraclab {

namespace {

long long checked_ll(__int128 v) {
  if (v > static_cast<__int128>(9000000000000000000LL) ||
      v < -static_cast<__int128>(9000000000000000000LL)) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<long long>(v);
}

} // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  const __int128 n = static_cast<__int128>(num) * o.den +
                     static_cast<__int128>(o.num) * den;
  const __int128 d = static_cast<__int128>(den) * o.den;
  return Rational(checked_ll(n), checked_ll(d));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
  const __int128 n = static_cast<__int128>(num) * o.num;
  const __int128 d = static_cast<__int128>(den) * o.den;
  return Rational(checked_ll(n), checked_ll(d));
}

double poisson_constant(double s) {
  return std::sin(M_PI * s) / M_PI;
}

namespace {

// int_0^1 tau^{2s} (1-tau^2)^{-s} (1-x^2 tau^2)^{-1} dtau by Gauss-Jacobi
// with the weight (1-tau)^{-s} tau^{2s}; the remaining factor is smooth on
// [0, 1] as long as the pole at tau = 1/|x| stays clear of the interval.
double zeta1_core_jacobi(double x, double s, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, double>, QuadRule> cache;
  QuadRule rule;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, s});
    if (it == cache.end()) {
      it = cache.emplace(std::make_pair(n, s), gauss_jacobi(n, -s, 2.0 * s))
               .first;
    }
    rule = it->second;
  }
  const double x2 = x * x;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double tau = 0.5 * (rule.nodes[i] + 1.0);
    sum += rule.weights[i] *
           (std::pow(1.0 + tau, -s) / (1.0 - x2 * tau * tau));
  }
  return std::pow(2.0, -s - 1.0) * sum;
}

// Same integral by adaptive quadrature after absorbing the (1-tau)^{-s}
// endpoint weight with 1 - tau = sigma^{1/(1-s)}.
double zeta1_core_adaptive(double x, double s, double abs_tol) {
  const double p = 1.0 / (1.0 - s);
  const double ax = std::abs(x);
  const double gap = 1.0 - ax;
  auto g = [&](double sigma) {
    if (sigma <= 0.0) return 0.0;
    const double sp = std::pow(sigma, p);
    const double tau = 1.0 - sp;
    if (tau <= 0.0) return 0.0;
    // 1 - x^2 tau^2 = (1 - |x| tau)(1 + |x| tau) with
    // 1 - |x| tau = (1 - |x|) + |x| sigma^p, avoiding the cancellation
    // that otherwise swamps the quadrature near tau = 1, |x| = 1.
    const double denom = (gap + ax * sp) * (1.0 + ax * tau);
    return std::pow(tau, 2.0 * s) * std::pow(1.0 + tau, -s) / denom;
  };
  // The core integral is O(1) near the endpoint, so absolute tolerances
  // below the rounding plateau of the integrand are unattainable; floor
  // the request at what double precision can deliver.
  return integrate(g, 0.0, 1.0, std::max(abs_tol, 1e-13)) * p;
}

} // namespace

double zeta1(double x, const FracOrder& order, double tol) {
  if (order.n != 1) throw std::invalid_argument("zeta1 is one-dimensional");
  if (std::abs(x) >= 1.0) return x > 0.0 ? 1.0 : -1.0;
  if (x == 0.0) return 0.0;
  const double s = order.s;
  const double pre =
      2.0 * poisson_constant(s) * x * std::pow(1.0 - x * x, s);
  const double gap = 1.0 - std::abs(x);
  double core;
  if (gap > 0.05) {
    core = zeta1_core_jacobi(x, s, 64);
  } else {
    core = zeta1_core_adaptive(x, s, tol / std::max(std::abs(pre), 1e-300));
  }
  return pre * core;
}

double zeta_R(double x, double radius, const FracOrder& order, double tol) {
  if (radius <= 0.0) throw std::invalid_argument("radius must be positive");
  return radius * zeta1(x / radius, order, tol / radius);
}

double c0(const FracOrder& order, double tol) {
  (void)tol;
  const double s = order.s;
  auto g = [&](double tau) { return std::pow(1.0 + tau, -s); };
  return 2.0 * poisson_constant(s) * integrate_jacobi01_ab(g, -s, 2.0 * s, 80);
}

double zeta1_adaptive_oracle(double x, const FracOrder& order, double tol) {
  if (std::abs(x) >= 1.0) return x > 0.0 ? 1.0 : -1.0;
  if (x == 0.0) return 0.0;
  const double s = order.s;
  const double pre =
      2.0 * poisson_constant(s) * x * std::pow(1.0 - x * x, s);
  return pre *
         zeta1_core_adaptive(x, s, tol / std::max(std::abs(pre), 1e-300));
}

HarnackPoly::HarnackPoly(double eps) : eps_(eps) {
  for (int j = 0; j < 4; ++j) {
    coeff_[j] =
        coefficient_part(j, 0).value() + eps * coefficient_part(j, 1).value();
  }
}

Rational HarnackPoly::coefficient_part(int j, int k) {
  static const Rational table[4][2] = {
      {Rational(320, 54), Rational(25, 54)},
      {Rational(-128, 72), Rational(-73, 72)},
      {Rational(-8, 36), Rational(23, 36)},
      {Rational(16, 216), Rational(-19, 216)},
  };
  if (j < 0 || j > 3 || k < 0 || k > 1) {
    throw std::out_of_range("coefficient index");
  }
  return table[j][k];
}

double HarnackPoly::eval(double x) const {
  const double w = x * x;
  return x * (coeff_[0] + w * (coeff_[1] + w * (coeff_[2] + w * coeff_[3])));
}

double HarnackPoly::deriv(double x) const {
  const double w = x * x;
  return coeff_[0] +
         w * (3.0 * coeff_[1] + w * (5.0 * coeff_[2] + w * 7.0 * coeff_[3]));
}

HarnackPoly::Extrema HarnackPoly::extremize(double lo, double hi) const {
  std::vector<double> candidates = {lo, hi};
  // Stationary points: cubic in w = x^2, roots via the companion matrix.
  const double c3 = 7.0 * coeff_[3];
  const double c2 = 5.0 * coeff_[2];
  const double c1 = 3.0 * coeff_[1];
  const double c0v = coeff_[0];
  if (std::abs(c3) > 1e-300) {
    Eigen::Matrix3d comp = Eigen::Matrix3d::Zero();
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    comp(0, 2) = -c0v / c3;
    comp(1, 2) = -c1 / c3;
    comp(2, 2) = -c2 / c3;
    Eigen::EigenSolver<Eigen::Matrix3d> es(comp);
    for (int i = 0; i < 3; ++i) {
      const auto w = es.eigenvalues()(i);
      if (std::abs(w.imag()) > 1e-9 * (1.0 + std::abs(w.real()))) continue;
      if (w.real() <= 0.0) continue;
      const double r = std::sqrt(w.real());
      for (double x : {r, -r}) {
        if (x >= lo && x <= hi) candidates.push_back(x);
      }
    }
  }
  Extrema out{eval(lo), eval(lo), lo, lo};
  for (double x : candidates) {
    const double v = eval(x);
    if (v < out.min) {
      out.min = v;
      out.argmin = x;
    }
    if (v > out.max) {
      out.max = v;
      out.argmax = x;
    }
  }
  return out;
}

TouchingPoly::TouchingPoly()
    : coeff_{Rational(-371, 43200), Rational(167, 1440),
             Rational(-2681, 14400), Rational(-4193, 2160),
             Rational(301, 50)} {}

double TouchingPoly::eval(double x) const {
  const double w = x * x;
  double acc = coeff_[0].value();
  for (int i = 1; i < 5; ++i) acc = acc * w + coeff_[i].value();
  return acc * x;
}

Rational TouchingPoly::eval_exact(long long x) const {
  const Rational w(x * x, 1);
  Rational acc = coeff_[0];
  for (int i = 1; i < 5; ++i) acc = acc * w + coeff_[i];
  return acc * Rational(x, 1);
}

std::string FigureData::to_csv() const {
  std::string out;
  for (size_t j = 0; j < headers.size(); ++j) {
    if (j) out += ',';
    out += headers[j];
  }
  out += '\n';
  const size_t rows = columns.empty() ? 0 : columns[0].size();
  char buf[40];
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < columns.size(); ++j) {
      if (j) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", columns[j][i]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

FigureData figure_data(int which) {
  const int n = 1001;
  FigureData fig;
  if (which == 1) {
    fig.headers = {"x", "eps=0.2", "eps=0.4", "eps=0.6", "eps=0.8"};
    fig.columns.resize(5);
    std::vector<HarnackPoly> polys;
    for (double eps : {0.2, 0.4, 0.6, 0.8}) polys.emplace_back(eps);
    for (int i = 0; i < n; ++i) {
      const double x = -3.0 + 6.0 * i / (n - 1);
      fig.columns[0].push_back(x);
      for (size_t k = 0; k < polys.size(); ++k) {
        fig.columns[k + 1].push_back(polys[k].eval(x));
      }
    }
  } else if (which == 2) {
    fig.headers = {"x", "f"};
    fig.columns.resize(2);
    const TouchingPoly poly;
    for (int i = 0; i < n; ++i) {
      const double x = -3.5 + 7.0 * i / (n - 1);
      fig.columns[0].push_back(x);
      fig.columns[1].push_back(poly.eval(x));
    }
  } else {
    throw std::invalid_argument("unknown figure index");
  }
  return fig;
}

} // namespace fraclab
