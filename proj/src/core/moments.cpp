#include "core/moments.hpp"

#include <cmath>

namespace fraclab {

double kernel_mass(double a, double b, double s) {
  const double p = 2.0 * s;
  return (std::pow(a, -p) - std::pow(b, -p)) / p;
}

double kernel_first(double a, double b, double s) {
  // int_a^b t^{-2s} dt = a^{1-2s} (exp(w) - 1) / (1 - 2s) with
  // w = (1-2s) log(b/a); the expm1 form is exact in the limit s -> 1/2.
  const double q = 1.0 - 2.0 * s;
  const double lr = std::log(b / a);
  const double w = q * lr;
  double factor;
  if (std::abs(w) < 1e-8) {
    factor = lr * (1.0 + 0.5 * w);
  } else {
    factor = std::expm1(w) / q;
  }
  return std::pow(a, q) * factor;
}

double kernel_mass_tail(double r, double s) {
  return std::pow(r, -2.0 * s) / (2.0 * s);
}

double first_cell_weight(double h, double s) {
  return std::pow(h, -2.0 * s) / (2.0 - 2.0 * s);
}

} // namespace fraclab
