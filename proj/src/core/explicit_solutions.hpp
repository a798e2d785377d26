#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "core/kernel.hpp"

namespace fraclab {

// Exact rational arithmetic for the counter-example polynomials.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);
  double value() const { return static_cast<double>(num) / den; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
};

// Poisson normalization constant a_s = sin(pi s)/pi.
double poisson_constant(double s);

// Solution of the half-line Poisson problem on (-1, 1) with exterior datum
// sign(x), evaluated from the Poisson-kernel formula by Gauss-Jacobi
// quadrature (the endpoint singularity carries weight (1-t)^{-s}).
double zeta1(double x, const FracOrder& order, double tol = 1e-10);

// Scaled solution: zeta_R(x) = R zeta1(x/R).
double zeta_R(double x, double radius, const FracOrder& order,
              double tol = 1e-10);

// Limit slope c0(s) = 2 a_s int_1^inf dt / (t^2 (t^2-1)^s).
double c0(const FracOrder& order, double tol = 1e-12);

// Independent oracle for the zeta1 integral: adaptive quadrature after a
// singularity-absorbing substitution (no Gauss-Jacobi machinery).
double zeta1_adaptive_oracle(double x, const FracOrder& order,
                             double tol = 1e-10);

// Odd degree-7 polynomial family of the Harnack counter-example,
//   f_eps(x) = a x + b x^3 + c x^5 + d x^7,
// with coefficients affine in eps and exactly rational.
class HarnackPoly {
 public:
  explicit HarnackPoly(double eps);

  double eps() const { return eps_; }
  double a() const { return coeff_[0]; }
  double b() const { return coeff_[1]; }
  double c() const { return coeff_[2]; }
  double d() const { return coeff_[3]; }

  double eval(double x) const;
  double deriv(double x) const;

  struct Extrema {
    double min, max;
    double argmin, argmax;
  };
  // Exact extremization over [lo, hi]: stationary points from the cubic in
  // x^2 (companion-matrix roots) plus endpoints.
  Extrema extremize(double lo, double hi) const;

  // Coefficient of eps^k (k = 0,1) in the coefficient of x^{2j+1}.
  static Rational coefficient_part(int j, int k);

 private:
  double eps_;
  std::array<double, 4> coeff_;
};

// The fixed odd degree-9 polynomial of the strong-maximum-principle
// counter-example, with exact rational coefficients for degrees 9,7,5,3,1.
class TouchingPoly {
 public:
  TouchingPoly();

  double eval(double x) const;
  // Exact evaluation at an integer point.
  Rational eval_exact(long long x) const;
  const std::array<Rational, 5>& coefficients() const { return coeff_; }

 private:
  std::array<Rational, 5> coeff_;
};

// Sampled curve table for the figure exports.
struct FigureData {
  std::vector<std::string> headers;        // first is "x"
  std::vector<std::vector<double>> columns;
  std::string to_csv() const;
};

// which = 1: f_eps on [-3,3] for eps in {0.2,0.4,0.6,0.8};
// which = 2: the degree-9 polynomial on [-3.5,3.5].  1001 nodes each.
FigureData figure_data(int which);

} // namespace fraclab
