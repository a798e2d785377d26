#pragma once

namespace fraclab {

// Exact moments of the kernel t^{-1-2s} over [a, b], 0 < a < b:
//   kernel_mass  = int_a^b t^{-1-2s} dt
//   kernel_first = int_a^b t^{-2s} dt   (log form at s = 1/2, evaluated
//                                        stably near s = 1/2 via expm1)
double kernel_mass(double a, double b, double s);
double kernel_first(double a, double b, double s);

// int_r^inf t^{-1-2s} dt.
double kernel_mass_tail(double r, double s);

// Weight of the symmetric first-cell rule:
//   int_0^h (z/h)^2 z^{-1-2s} dz = h^{-2s} / (2 - 2s).
double first_cell_weight(double h, double s);

} // namespace fraclab
