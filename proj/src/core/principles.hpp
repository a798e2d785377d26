#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "core/domain.hpp"
#include "core/grid.hpp"
#include "core/kernel.hpp"
#include "core/pointwise.hpp"
#include "core/solver.hpp"

namespace fraclab {

// Every check distinguishes a violated hypothesis from a violated
// conclusion.
enum class Verdict { Holds, Fails, PreconditionViolated };

const char* verdict_name(Verdict v);

struct CheckTols {
  double residual = 1e-8;  // absolute, on operator residuals
  double sign = 1e-6;      // on sign / comparison checks
};

enum class MpSide { Subsolution, Supersolution };

struct MpReport {
  Verdict verdict = Verdict::PreconditionViolated;
  double worst_residual = 0.0;  // signed, worst direction for the side
  double margin = 0.0;          // slack in the concluded comparison
  double worst_node = 0.0;      // x realizing the extremum inside
  double interior_min = 0.0;    // strong check: min of u over domain nodes
  std::string detail;
};

// Comparison of a discrete odd sub/supersolution on a half-line domain with
// its exterior values.  For a subsolution: sup over nodes x >= 0 of u must
// not exceed the sup of u+ over the nodes x >= 0 outside the domain; the
// supersolution side is the mirrored infimum statement.
MpReport weak_mp_check(const GridFunction& u, const FracOrder& order,
                       const Domain1D& domain, const RealFn& c, MpSide side,
                       const CheckTols& tols = {}, const QuadSettings& q = {});

// Dichotomy for nonnegative odd supersolutions: strictly positive at every
// domain node, or identically zero on the half-line grid.
MpReport strong_mp_check(const GridFunction& u, const FracOrder& order,
                         const Domain1D& domain, const RealFn& c,
                         const CheckTols& tols = {},
                         const QuadSettings& q = {});

struct HopfConfig {
  // Produces the solved odd grid function for a requested spacing.
  std::function<GridFunction(double h)> solution;
  double base_h = 0.02;
  int levels = 3;
  double floor = 1e-6;      // required lower bound for the limit
  double stability = 0.10;  // max relative spread across refinements
};

struct HopfReport {
  struct Sample {
    double h;         // offset from the origin (a node position)
    double quotient;  // u(h)/h
  };
  std::vector<Sample> samples;      // nodes {1,2,4} per refinement level
  std::vector<double> level_first;  // u(h)/h at the first node, per level
  double limit = 0.0;
  bool stable = false;
  Verdict verdict = Verdict::PreconditionViolated;
  std::string detail;
};

// Linear-growth probe at the origin: quotients u(h)/h across shrinking
// grids, extrapolated; positive verdict iff the limit clears the floor and
// the per-level quotients agree within the stability gate.
HopfReport hopf_growth(const HopfConfig& cfg);

struct BarrierConfig {
  int check_nodes = 40;  // total over both check subintervals
  double alpha_cap = 1e6;
  QuadSettings quad{1e-8, 1e-10};
};

struct BarrierSpec {
  double rho = 0.0;
  double c_bound = 0.0;
  double alpha = 0.0;
  bool success = false;
  double margin = 0.0;          // max over check nodes at alpha
  double margin_at_half = 0.0;  // same at alpha/2 (minimality certificate)
  double dphi0 = 0.0;           // forward difference slope at 0
  std::vector<double> check_xs;
  std::vector<double> margins;  // margin per check node at alpha
  RealFn zeta_cutoff;           // odd linear cutoff, support (-2 rho, 2 rho)
  RealFn plateau;               // odd bump pair at +-rho
  RealFn phi;                   // zeta_cutoff + alpha * plateau
};

// Builds the odd barrier phi = zeta + alpha * eta on (0, 2 rho): doubles
// then bisects alpha until (-Delta)^s phi + c_bound |phi| <= 0 at every
// check node of (0, 2 rho) \ (rho/2, 3 rho/2).
BarrierSpec barrier_build(double rho, double c_bound, const FracOrder& order,
                          const BarrierConfig& cfg = {});

struct HarnackConfig {
  double h = 1.0 / 128;
  double L = 6.0;  // computational box half-width
  // Knot values of the odd exterior datum at x = 2.5, 3, 3.5, 4 (zero at
  // 4.5 and beyond).
  std::vector<std::array<double, 4>> presets;
  double argmin_lo = 1.05;  // required window for the quotient dip
  double argmin_hi = 1.95;
  int max_backoff = 48;
  CheckTols tols;
  QuadSettings quad;
};

struct HarnackReport {
  bool found = false;
  std::array<double, 4> params{};
  double R = 0.0;         // scale of the subtracted comparison function
  double t = 0.0;         // subtraction amount
  double quotient = 0.0;  // sup/inf over (1, 2)
  double min_on_omega = 0.0;
  double argmin = 0.0;  // location of the near-touching dip
  std::vector<std::string> skipped;
  GridFunction u;  // the witness
};

// Searches an odd exterior-data family for an s-harmonic function on
// (-5/2, 5/2), positive on (1/2, 5/2), whose sup/inf ratio over (1, 2)
// exceeds target_c.
HarnackReport harnack_violation_search(double target_c,
                                       const FracOrder& order,
                                       HarnackConfig cfg = {});

struct CounterexampleConfig {
  double h = 1.0 / 64;
  double L = 10.0;
  // Knot values of the odd exterior datum at x = 4, 5, 6, 7 (zero at 8).
  std::vector<std::array<double, 4>> presets;
  int t_samples = 41;
  double bisect_tol = 1e-10;
  CheckTols tols;
  QuadSettings quad;
};

struct CounterexampleRun {
  bool found = false;
  std::array<double, 4> params{};
  double R = 0.0;
  std::vector<double> t_grid;
  std::vector<double> m_samples;         // m(t) = min over [1,3] of v - t w
  double t_star = 0.0;
  double x_star = 0.0;                   // node where u touches zero
  double m_at_t_star = 0.0;
  double min_u_03 = 0.0;                 // min over (0,3) nodes
  double min_u_13 = 0.0;                 // min over [1,3] nodes
  double max_abs_u = 0.0;
  double lipschitz_bound = 0.0;          // max of w over [1,3]
  Verdict verdict = Verdict::PreconditionViolated;
  std::string detail;
  GridFunction u;
};

// Pipeline for a nonnegative nontrivial odd s-harmonic function on (-4, 4)
// that touches zero inside [1, 3]: solve v from an exterior-data family,
// subtract t times a positive s-harmonic comparison function, bisect t so
// that the minimum over [1, 3] vanishes.
CounterexampleRun strong_mp_counterexample_search(
    const FracOrder& order, CounterexampleConfig cfg = {});

// Lower bound (n / 2s) |B1|^{1 + 2s/n} c_{n,s} |Omega|^{-2s/n} for the first
// Dirichlet eigenvalue on a domain of the given measure.
double eigen_bound(const FracOrder& order, double measure);

// Smallest power-of-two scale R >= 4 such that the normalized profile
// zeta_R(x) / c0 stays within [3x/4, 5x/4] on (0, x_max); used by both
// counter-example pipelines.
double comparison_scale(const FracOrder& order, double x_max);

} // namespace fraclab
