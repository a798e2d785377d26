#include "core/special.hpp"

#include <cmath>

namespace fraclab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_core(double x) {
  // x >= 0.5 assumed; returns Gamma(x).
  x -= 1.0;
  double a = kLanczos[0];
  double t = x + 7.5;
  for (int i = 1; i < 9; ++i) {
    a += kLanczos[i] / (x + i);
  }
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

} // namespace

double gamma_fn(double x) {
  if (x < 0.5) {
    // Reflection formula.
    return kPi / (std::sin(kPi * x) * lanczos_core(1.0 - x));
  }
  return lanczos_core(x);
}

double log_gamma(double x) { return std::log(gamma_fn(x)); }

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

} // namespace fraclab
