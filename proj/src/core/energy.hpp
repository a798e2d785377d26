#pragma once

#include "core/grid.hpp"
#include "core/kernel.hpp"

namespace fraclab {

// Discrete Gagliardo energy
//   E(u,v) = (c_{n,s}/2) iint (u(x)-u(y))(v(x)-v(y)) |x-y|^{-1-2s} dx dy
// for compactly supported grid functions sharing a grid (both tails zero).
// Diagonal and node-sharing cell pairs use exact/semi-analytic kernel
// moments; separated pairs use tensor Gauss rules.
double gagliardo_energy(const GridFunction& u, const GridFunction& v,
                        const FracOrder& order);

// E(u,v) + sum_i c_i u_i v_i h  (the weak form with a zero-th order term).
double bilinear_form_with_potential(const GridFunction& u,
                                    const GridFunction& v,
                                    const std::vector<double>& c,
                                    const FracOrder& order);

} // namespace fraclab
