#include "core/principles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "core/explicit_solutions.hpp"
#include "core/special.hpp"

namespace fraclab {

namespace {

double node_max(const GridFunction& u,
                const std::function<bool(double)>& where, double* arg) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < u.size(); ++i) {
    const double x = u.node(i);
    if (!where(x)) continue;
    if (u[i] > best) {
      best = u[i];
      if (arg) *arg = x;
    }
  }
  return best;
}

double node_min(const GridFunction& u,
                const std::function<bool(double)>& where, double* arg) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < u.size(); ++i) {
    const double x = u.node(i);
    if (!where(x)) continue;
    if (u[i] < best) {
      best = u[i];
      if (arg) *arg = x;
    }
  }
  return best;
}

double abs_scale(const GridFunction& u) {
  double m = 0.0;
  for (double v : u.values()) m = std::max(m, std::abs(v));
  return m;
}

// Piecewise-linear odd profile through (knots[j], vals[j]), zero beyond the
// last knot; zero inside the first knot.
RealFn odd_piecewise(std::vector<double> knots, std::vector<double> vals) {
  return [knots = std::move(knots), vals = std::move(vals)](double x) {
    const double ax = std::abs(x);
    if (ax < knots.front() || ax >= knots.back()) return 0.0;
    size_t j = 1;
    while (knots[j] < ax) ++j;
    const double t = (ax - knots[j - 1]) / (knots[j] - knots[j - 1]);
    const double v = (1.0 - t) * vals[j - 1] + t * vals[j];
    return x < 0 ? -v : v;
  };
}

} // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    default:
      return "precondition-violated";
  }
}

MpReport weak_mp_check(const GridFunction& u, const FracOrder& order,
                       const Domain1D& domain, const RealFn& c, MpSide side,
                       const CheckTols& tols, const QuadSettings& q) {
  if (domain.inf() < 0.0) {
    throw std::invalid_argument("domain must lie in the half-line x > 0");
  }
  MpReport rep;
  const double scale = abs_scale(u) + 1.0;
  if (u.oddness_defect() > tols.sign * scale) {
    rep.detail = "input is not odd";
    return rep;
  }
  const double sgn = side == MpSide::Subsolution ? 1.0 : -1.0;
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < u.size(); ++i) {
    const double x = u.node(i);
    if (!domain.contains(x)) continue;
    const double cx = c(x);
    if (cx < 0.0) {
      rep.detail = "potential is negative inside the domain";
      return rep;
    }
    const double r = frac_laplacian_at_node(u, order, i, q) + cx * u[i];
    worst = std::max(worst, sgn * r);
  }
  rep.worst_residual = worst;
  if (worst > tols.residual * scale) {
    rep.detail = side == MpSide::Subsolution
                     ? "not a discrete subsolution"
                     : "not a discrete supersolution";
    return rep;
  }
  auto half = [](double x) { return x >= 0.0; };
  auto exterior = [&](double x) { return x >= 0.0 && !domain.contains(x); };
  if (side == MpSide::Subsolution) {
    const double sup_all = node_max(u, half, &rep.worst_node);
    double sup_ext = std::max(0.0, node_max(u, exterior, nullptr));
    rep.margin = sup_ext - sup_all;
  } else {
    const double inf_all = node_min(u, half, &rep.worst_node);
    double inf_ext = std::min(0.0, node_min(u, exterior, nullptr));
    rep.margin = inf_all - inf_ext;
  }
  rep.verdict = rep.margin >= -tols.sign * scale ? Verdict::Holds
                                                 : Verdict::Fails;
  return rep;
}

MpReport strong_mp_check(const GridFunction& u, const FracOrder& order,
                         const Domain1D& domain, const RealFn& c,
                         const CheckTols& tols, const QuadSettings& q) {
  if (domain.inf() < 0.0) {
    throw std::invalid_argument("domain must lie in the half-line x > 0");
  }
  MpReport rep;
  const double scale = abs_scale(u) + 1.0;
  if (u.oddness_defect() > tols.sign * scale) {
    rep.detail = "input is not odd";
    return rep;
  }
  for (int i = 0; i < u.size(); ++i) {
    if (u.node(i) >= 0.0 && u[i] < -tols.sign * scale) {
      rep.detail = "input is not nonnegative on the half-line";
      return rep;
    }
  }
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < u.size(); ++i) {
    const double x = u.node(i);
    if (!domain.contains(x)) continue;
    const double cx = c(x);
    if (cx < 0.0) {
      rep.detail = "potential is negative inside the domain";
      return rep;
    }
    worst = std::min(worst, frac_laplacian_at_node(u, order, i, q) + cx * u[i]);
  }
  rep.worst_residual = worst;
  if (worst < -tols.residual * scale) {
    rep.detail = "not a discrete supersolution";
    return rep;
  }
  auto inside = [&](double x) { return domain.contains(x); };
  rep.interior_min = node_min(u, inside, &rep.worst_node);
  const double half_max =
      node_max(u, [](double x) { return x >= 0.0; }, nullptr);
  if (rep.interior_min > tols.sign * scale) {
    rep.verdict = Verdict::Holds;
    rep.margin = rep.interior_min;
    rep.detail = "strictly positive inside the domain";
  } else if (half_max <= tols.sign * scale) {
    rep.verdict = Verdict::Holds;
    rep.margin = half_max;
    rep.detail = "identically zero on the half-line grid";
  } else {
    rep.verdict = Verdict::Fails;
    rep.margin = rep.interior_min;
    rep.detail = "nonnegative, not identically zero, but touching zero inside";
  }
  return rep;
}

HopfReport hopf_growth(const HopfConfig& cfg) {
  if (!cfg.solution) throw std::invalid_argument("missing solution generator");
  HopfReport rep;
  for (int level = 0; level < cfg.levels; ++level) {
    const double h = cfg.base_h / (1 << level);
    const GridFunction u = cfg.solution(h);
    const int m = u.center_index();
    if (u.size() <= m + 4) {
      rep.detail = "grid too small for the quotient probes";
      return rep;
    }
    bool first = true;
    for (int k : {1, 2, 4}) {
      const double x = u.node(m + k);
      const double val = u[m + k];
      if (!(val > 0.0) || !std::isfinite(val)) {
        rep.detail = "solution not positive near the origin";
        return rep;
      }
      rep.samples.push_back({x, val / x});
      if (first) {
        rep.level_first.push_back(val / x);
        first = false;
      }
    }
  }
  const auto& q = rep.level_first;
  rep.limit = q.back();
  if (q.size() >= 3) {
    const double d1 = q[q.size() - 3] - q[q.size() - 2];
    const double d2 = q[q.size() - 2] - q[q.size() - 1];
    if (d2 != 0.0 && d1 / d2 > 1.1 && d1 / d2 < 16.0) {
      rep.limit = q.back() - d2 / (d1 / d2 - 1.0);
    }
  }
  const double ref = std::max(std::abs(rep.limit), cfg.floor);
  double spread = 0.0;
  for (double v : q) spread = std::max(spread, std::abs(v - rep.limit));
  rep.stable = spread <= cfg.stability * ref;
  rep.verdict = (rep.limit > cfg.floor && rep.stable) ? Verdict::Holds
                                                      : Verdict::Fails;
  if (rep.verdict == Verdict::Fails) {
    rep.detail = rep.limit <= cfg.floor ? "limit below floor"
                                        : "quotients unstable under refinement";
  } else {
    rep.detail = "linear growth confirmed";
  }
  return rep;
}

BarrierSpec barrier_build(double rho, double c_bound, const FracOrder& order,
                          const BarrierConfig& cfg) {
  if (rho <= 0.0 || c_bound < 0.0) {
    throw std::invalid_argument("rho must be positive, c_bound nonnegative");
  }
  BarrierSpec spec;
  spec.rho = rho;
  spec.c_bound = c_bound;
  const double b0 = bump(0.0, 2.0 * rho);
  spec.zeta_cutoff = [rho, b0](double x) {
    return x * bump(x, 2.0 * rho) / b0;
  };
  spec.plateau = [rho](double x) {
    auto step = [rho](double r) {
      return smooth_step((3.0 * rho / 8.0 - r) / (rho / 8.0));
    };
    return step(std::abs(x - rho)) - step(std::abs(x + rho));
  };

  const int n_half = std::max(4, cfg.check_nodes / 2);
  for (int j = 0; j < n_half; ++j) {
    spec.check_xs.push_back((j + 0.5) / n_half * (rho / 2.0));
  }
  for (int j = 0; j < n_half; ++j) {
    spec.check_xs.push_back(1.5 * rho + (j + 0.5) / n_half * (rho / 2.0));
  }

  const Profile pz{spec.zeta_cutoff, 2.0 * rho};
  const Profile pe{spec.plateau, 2.0 * rho};
  std::vector<double> az, ae, zv;
  for (double x : spec.check_xs) {
    az.push_back(frac_laplacian_pointwise(pz, order, x, cfg.quad));
    ae.push_back(frac_laplacian_pointwise(pe, order, x, cfg.quad));
    zv.push_back(spec.zeta_cutoff(x));
  }
  auto margins_at = [&](double alpha) {
    std::vector<double> m(spec.check_xs.size());
    for (size_t j = 0; j < m.size(); ++j) {
      m[j] = az[j] + alpha * ae[j] + c_bound * std::abs(zv[j]);
    }
    return m;
  };
  auto ok = [&](double alpha) {
    for (double m : margins_at(alpha)) {
      if (m > 0.0) return false;
    }
    return true;
  };

  double hi = 1.0;
  double lo = 0.0;
  if (!ok(hi)) {
    while (!ok(hi) && hi < cfg.alpha_cap) {
      lo = hi;
      hi *= 2.0;
    }
    if (!ok(hi)) {
      spec.alpha = cfg.alpha_cap;
      spec.margins = margins_at(spec.alpha);
      spec.margin = *std::max_element(spec.margins.begin(), spec.margins.end());
      spec.success = false;
      return spec;
    }
  }
  for (int it = 0; it < 60 && hi - lo > 1e-3 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  spec.alpha = hi;
  spec.success = true;
  spec.margins = margins_at(spec.alpha);
  spec.margin = *std::max_element(spec.margins.begin(), spec.margins.end());
  {
    const auto mh = margins_at(0.5 * spec.alpha);
    spec.margin_at_half = *std::max_element(mh.begin(), mh.end());
  }
  spec.phi =[z = spec.zeta_cutoff, e = spec.plateau,
              a = spec.alpha](double x) { return z(x) + a * e(x); };
  const double dx = 1e-4 * rho;
  spec.dphi0 = spec.phi(dx) / dx;
  return spec;
}

double eigen_bound(const FracOrder& order, double measure) {
  if (measure <= 0.0) throw std::invalid_argument("measure must be positive");
  const double n = order.n;
  const double s = order.s;
  const double b1 = unit_ball_volume(order.n);
  return (n / (2.0 * s)) * std::pow(b1, 1.0 + 2.0 * s / n) *
         kernel_constant(order) * std::pow(measure, -2.0 * s / n);
}

double comparison_scale(const FracOrder& order, double x_max) {
  const double c0v = c0(order);
  for (double radius = 4.0; radius <= 4096.0; radius *= 2.0) {
    bool ok = true;
    for (int k = 1; k <= 400 && ok; ++k) {
      const double x = x_max * k / 400.0;
      const double z = zeta_R(x, radius, order) / c0v;
      if (z < 0.75 * x || z > 1.25 * x) ok = false;
    }
    if (ok) return radius;
  }
  throw SolverError("no power-of-two scale satisfies the slope bounds");
}

namespace {

// Solves the four hat-profile exterior-data problems once; any knot-value
// combination is then a linear combination of the results.
struct HatBasis {
  GridFunction w;                    // comparison function solve
  std::vector<GridFunction> basis;   // one per knot
  RealFn zfn;                        // normalized comparison profile
};

HatBasis solve_hat_basis(const DiscreteOperator& op,
                         const std::vector<double>& knots, double scale_R,
                         const FracOrder& order) {
  HatBasis out;
  const double c0v = c0(order);
  out.zfn = [scale_R, order, c0v](double x) {
    return zeta_R(x, scale_R, order) / c0v;
  };
  const double L = op.geometry().half_width();
  const double h = op.geometry().spacing();
  const GridFunction gz =
      GridFunction::sample(L, h, out.zfn, Tail::closed_form(out.zfn));
  out.w = solve_linear(op, {0.0}, gz).u;
  const size_t nk = knots.size() - 1;  // last knot pinned to zero
  for (size_t j = 0; j < nk; ++j) {
    std::vector<double> vals(knots.size(), 0.0);
    vals[j] = 1.0;
    const RealFn g = odd_piecewise(knots, vals);
    const GridFunction gg = GridFunction::sample(L, h, g, Tail::zero());
    out.basis.push_back(solve_linear(op, {0.0}, gg).u);
  }
  return out;
}

GridFunction combine(const HatBasis& hb, const std::array<double, 4>& p) {
  GridFunction v = hb.basis[0];
  for (int i = 0; i < v.size(); ++i) {
    v[i] = p[0] * hb.basis[0][i] + p[1] * hb.basis[1][i] +
           p[2] * hb.basis[2][i] + p[3] * hb.basis[3][i];
  }
  return v;
}

std::vector<std::array<double, 4>> default_sweep() {
  // Structured sweep, nonnegative shapes first, then sign-changing ones.
  const double levels[] = {0.0, 1.0, 2.0, 4.0};
  std::vector<std::array<double, 4>> out;
  for (double a : levels)
    for (double b : levels)
      for (double c : levels)
        for (double d : levels) {
          if (a == 0.0 && b == 0.0 && c == 0.0 && d == 0.0) continue;
          out.push_back({a, b, c, d});
        }
  const double signed_levels[] = {-4.0, -1.0, 0.0, 1.0, 4.0};
  for (double a : signed_levels)
    for (double b : signed_levels)
      for (double c : signed_levels)
        for (double d : signed_levels) {
          if (a == 0.0 && b == 0.0 && c == 0.0 && d == 0.0) continue;
          if (a >= 0.0 && b >= 0.0 && c >= 0.0 && d >= 0.0) continue;
          out.push_back({a, b, c, d});
        }
  return out;
}

std::string preset_name(const std::array<double, 4>& p) {
  std::ostringstream os;
  os << "(" << p[0] << "," << p[1] << "," << p[2] << "," << p[3] << ")";
  return os.str();
}

} // namespace

HarnackReport harnack_violation_search(double target_c,
                                       const FracOrder& order,
                                       HarnackConfig cfg) {
  if (target_c <= 1.0) throw std::invalid_argument("target must exceed 1");
  HarnackReport rep;
  SolveConfig sc;
  sc.h = cfg.h;
  sc.L = cfg.L;
  sc.quad = cfg.quad;
  const Domain1D domain(-2.5, 2.5);
  const DiscreteOperator op = assemble(domain, order, {}, sc);
  rep.R = comparison_scale(order, 4.0);
  const std::vector<double> knots = {2.5, 3.0, 3.5, 4.0, 4.5};
  const HatBasis hb = solve_hat_basis(op, knots, rep.R, order);
  const GridFunction& w = hb.w;

  std::vector<std::array<double, 4>> presets =
      cfg.presets.empty() ? default_sweep() : cfg.presets;
  int skipped_count = 0;
  auto log_skip = [&](const std::array<double, 4>& p, const char* why) {
    if (rep.skipped.size() < 20) {
      rep.skipped.push_back(preset_name(p) + ": " + why);
    }
    ++skipped_count;
  };

  double best_quotient = 0.0;
  // Evaluates the candidate u over the open positivity region and either
  // fills the report (quotient target met, u positive) or returns false.
  auto try_candidate = [&](const std::array<double, 4>& p, const GridFunction& v,
                           const GridFunction& w, double t,
                           double touch_x) -> bool {
    double umin = std::numeric_limits<double>::infinity();
    double qmax = -std::numeric_limits<double>::infinity();
    double qmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < v.size(); ++i) {
      const double x = v.node(i);
      if (x <= 0.5 + 1e-12 || x >= 2.5 - 1e-12) continue;
      const double ui = v[i] - t * w[i];
      umin = std::min(umin, ui);
      if (x >= 1.0 - 1e-12 && x <= 2.0 + 1e-12) {
        qmax = std::max(qmax, ui);
        qmin = std::min(qmin, ui);
      }
    }
    if (!(umin > 0.0)) return false;
    const double quotient = qmax / qmin;
    if (quotient > best_quotient) best_quotient = quotient;
    if (quotient < target_c) return false;
    rep.found = true;
    rep.params = p;
    rep.t = t;
    rep.quotient = quotient;
    rep.min_on_omega = umin;
    rep.argmin = touch_x;
    GridFunction u = v;
    for (int i = 0; i < u.size(); ++i) u[i] = v[i] - t * w[i];
    rep.u = u;
    return true;
  };

  for (const auto& p : presets) {
    const GridFunction v = combine(hb, p);
    // Extremal ratios of v against the comparison function over the open
    // positivity region (the endpoints carry exterior data and may vanish).
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = -std::numeric_limits<double>::infinity();
    double rmin_arg = 0.0;
    double rmax_arg = 0.0;
    bool wpos = true;
    for (int i = 0; i < v.size(); ++i) {
      const double x = v.node(i);
      if (x <= 0.5 + 1e-12 || x >= 2.5 - 1e-12) continue;
      if (w[i] <= 0.0) {
        wpos = false;
        break;
      }
      const double r = v[i] / w[i];
      if (r < rmin) {
        rmin = r;
        rmin_arg = x;
      }
      if (r > rmax) {
        rmax = r;
        rmax_arg = x;
      }
    }
    if (!wpos) {
      log_skip(p, "comparison function not positive");
      continue;
    }
    // Orientation 1: u = v - t w, driving v toward zero at the dip of v/w.
    // Requires v positive on the region and the dip inside the quotient
    // window so the near-zero value is seen by the quotient.
    if (rmin > 0.0 && rmin_arg >= cfg.argmin_lo && rmin_arg <= cfg.argmin_hi) {
      bool done = false;
      for (int k = 1; k <= cfg.max_backoff && !done; ++k) {
        done = try_candidate(p, v, w, rmin * (1.0 - std::ldexp(1.0, -k)),
                             rmin_arg);
      }
      if (done) return rep;
    }
    // Orientation 2: u = w - tau v, driving the comparison function toward
    // zero at the peak of v/w; u stays positive on the whole region for any
    // tau below 1/rmax, so no window restriction is needed.
    if (rmax > 0.0) {
      bool done = false;
      for (int k = 1; k <= cfg.max_backoff && !done; ++k) {
        const double tau = (1.0 - std::ldexp(1.0, -k)) / rmax;
        done = try_candidate(p, w, v, tau, rmax_arg);
      }
      if (done) return rep;
    }
    log_skip(p, "quotient target not reached");
  }
  rep.quotient = best_quotient;
  if (skipped_count > static_cast<int>(rep.skipped.size())) {
    rep.skipped.push_back("(+" +
                          std::to_string(skipped_count -
                                         static_cast<int>(rep.skipped.size())) +
                          " more)");
  }
  return rep;
}

CounterexampleRun strong_mp_counterexample_search(const FracOrder& order,
                                                  CounterexampleConfig cfg) {
  CounterexampleRun run;
  SolveConfig sc;
  sc.h = cfg.h;
  sc.L = cfg.L;
  sc.quad = cfg.quad;
  const Domain1D domain(-4.0, 4.0);
  const DiscreteOperator op = assemble(domain, order, {}, sc);
  run.R = comparison_scale(order, 4.0);
  const std::vector<double> knots = {4.0, 5.0, 6.0, 7.0, 8.0};
  const HatBasis hb = solve_hat_basis(op, knots, run.R, order);
  const GridFunction& w = hb.w;

  std::vector<std::array<double, 4>> presets =
      cfg.presets.empty() ? default_sweep() : cfg.presets;
  std::ostringstream diag;

  for (const auto& p : presets) {
    const GridFunction v = combine(hb, p);
    // The subtraction amount is limited by the quotient over [1,3]; the
    // touching point must also be the global dip over (0,3).
    double rmin13 = std::numeric_limits<double>::infinity();
    double rmin03 = std::numeric_limits<double>::infinity();
    double arg13 = 0.0, arg03 = 0.0;
    bool positive = true;
    for (int i = 0; i < v.size(); ++i) {
      const double x = v.node(i);
      if (x <= 1e-12 || x > 3.0 + 1e-12) continue;
      if (!(v[i] > 0.0) || !(w[i] > 0.0)) {
        positive = false;
        break;
      }
      const double r = v[i] / w[i];
      if (r < rmin03) {
        rmin03 = r;
        arg03 = x;
      }
      if (x >= 1.0 - 1e-12 && r < rmin13) {
        rmin13 = r;
        arg13 = x;
      }
    }
    if (!positive) {
      diag << preset_name(p) << ": not positive on (0,3)\n";
      continue;
    }
    if (std::abs(arg03 - arg13) > 1e-12 || arg13 < 1.0 + cfg.h ||
        arg13 > 3.0 - cfg.h) {
      diag << preset_name(p) << ": dip not interior to [1,3]\n";
      continue;
    }

    auto m_of = [&](double t) {
      double m = std::numeric_limits<double>::infinity();
      for (int i = 0; i < v.size(); ++i) {
        const double x = v.node(i);
        if (x < 1.0 - 1e-12 || x > 3.0 + 1e-12) continue;
        m = std::min(m, v[i] - t * w[i]);
      }
      return m;
    };

    const double t_max = 1.5 * rmin13;
    if (!(m_of(0.0) > 0.0) || !(m_of(t_max) < 0.0)) {
      diag << preset_name(p) << ": root not bracketed\n";
      continue;
    }
    run.params = p;
    run.t_grid.clear();
    run.m_samples.clear();
    for (int k = 0; k < cfg.t_samples; ++k) {
      const double t = t_max * k / (cfg.t_samples - 1);
      run.t_grid.push_back(t);
      run.m_samples.push_back(m_of(t));
    }
    double lo = 0.0, hi = t_max;
    while (hi - lo > cfg.bisect_tol * std::max(1.0, hi)) {
      const double mid = 0.5 * (lo + hi);
      (m_of(mid) > 0.0 ? lo : hi) = mid;
    }
    run.t_star = 0.5 * (lo + hi);
    run.m_at_t_star = m_of(run.t_star);

    GridFunction u = v;
    Tail utail = Tail::closed_form(
        [g = odd_piecewise(knots,
                           {p[0], p[1], p[2], p[3], 0.0}),
         z = hb.zfn, t = run.t_star](double x) { return g(x) - t * z(x); });
    GridFunction uo(u.half_width(), u.spacing(), utail);
    for (int i = 0; i < u.size(); ++i) uo[i] = v[i] - run.t_star * w[i];
    run.u = uo;

    run.min_u_03 = std::numeric_limits<double>::infinity();
    run.min_u_13 = std::numeric_limits<double>::infinity();
    run.max_abs_u = 0.0;
    run.lipschitz_bound = 0.0;
    for (int i = 0; i < uo.size(); ++i) {
      const double x = uo.node(i);
      run.max_abs_u = std::max(run.max_abs_u, std::abs(uo[i]));
      if (x > 1e-12 && x < 3.0 - 1e-12) {
        run.min_u_03 = std::min(run.min_u_03, uo[i]);
      }
      if (x >= 1.0 - 1e-12 && x <= 3.0 + 1e-12) {
        if (uo[i] < run.min_u_13) {
          run.min_u_13 = uo[i];
          run.x_star = x;
        }
        run.lipschitz_bound = std::max(run.lipschitz_bound, w[i]);
      }
    }
    run.found = true;
    const bool ok = run.min_u_03 >= -cfg.tols.residual &&
                    std::abs(run.min_u_13) <= cfg.tols.sign &&
                    run.max_abs_u > cfg.tols.sign;
    run.verdict = ok ? Verdict::Holds : Verdict::Fails;
    run.detail = ok ? "nonnegative, nontrivial, touching zero inside [1,3]"
                    : "postcondition checks failed";
    return run;
  }
  run.detail = "search failure:\n" + diag.str();
  return run;
}

} // namespace fraclab
