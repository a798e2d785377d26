#include "core/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <random>
#include <sstream>

#include "core/explicit_solutions.hpp"
#include "core/moving_planes.hpp"
#include "core/output.hpp"
#include "core/principles.hpp"
#include "core/solver.hpp"

namespace fraclab {

namespace {

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// s-harmonic solve on (-1,1) with exterior datum sign(x), compared with the
// closed-form profile.
double poisson_sup_error(double h, const FracOrder& order) {
  SolveConfig sc;
  sc.h = h;
  sc.L = 2.0;
  const Domain1D domain(-1.0, 1.0);
  const DiscreteOperator op = assemble(domain, order, {}, sc);
  const GridFunction g = GridFunction::sample(
      sc.L, h, [](double x) { return sgn(x); },
      Tail::closed_form([](double x) { return sgn(x); }));
  const GridFunction u = solve_linear(op, {0.0}, g).u;
  // sup over a fixed probe grid so refinements are compared at the same
  // points (the nodes of the coarsest run)
  double err = 0.0;
  for (int k = -999; k <= 999; ++k) {
    if (k == 0) continue;
    const double x = k / 1000.0;
    err = std::max(err, std::abs(u.eval(x) - zeta1(x, order)));
  }
  return err;
}

Criterion criterion1(const std::string& out_dir) {
  Criterion c{1, "counterexample polynomials and figure exports", true, ""};
  std::ostringstream d;
  for (double eps : {0.2, 0.4, 0.6, 0.8}) {
    const HarnackPoly p(eps);
    const auto inner = p.extremize(1.0, 2.0);
    const auto outer = p.extremize(0.5, 2.5);
    if (std::abs(inner.max - 4.0) > 1e-9 ||
        std::abs(outer.min - 2.0 * eps) > 1e-9) {
      c.passed = false;
      d << "eps=" << eps << " extrema off (max " << inner.max << ", min "
        << outer.min << "); ";
    }
  }
  const TouchingPoly tp;
  if (!(tp.eval_exact(2) == Rational(1)) || !(tp.eval_exact(3) == Rational(5))) {
    c.passed = false;
    d << "degree-9 anchor values wrong; ";
  }
  for (int k = 0; k <= 10000; ++k) {
    const double x13 = 1.0 + 2.0 * k / 10000.0;
    if (tp.eval(x13) < 1.0 - 1e-12) {
      c.passed = false;
      d << "f < 1 at x=" << x13 << "; ";
      break;
    }
  }
  for (int k = 0; k <= 10000; ++k) {
    const double x01 = k / 10000.0;
    if (tp.eval(x01) < 3.0 * x01 - 1e-12) {
      c.passed = false;
      d << "f < 3x at x=" << x01 << "; ";
      break;
    }
  }
  std::filesystem::create_directories(out_dir);
  for (int which : {1, 2}) {
    const FigureData fig = figure_data(which);
    const std::string base = out_dir + "/fig" + std::to_string(which);
    write_text_file(base + ".csv", fig.to_csv());
    std::vector<SvgSeries> series;
    for (size_t j = 1; j < fig.columns.size(); ++j) {
      series.push_back({fig.headers[j], fig.columns[0], fig.columns[j]});
    }
    write_text_file(base + ".svg",
                    render_svg(series, "figure " + std::to_string(which)));
    // Oddness of every emitted curve about the center sample.
    const auto& xs = fig.columns[0];
    for (size_t j = 1; j < fig.columns.size(); ++j) {
      const auto& ys = fig.columns[j];
      for (size_t i = 0; i < xs.size(); ++i) {
        if (std::abs(ys[i] + ys[xs.size() - 1 - i]) > 1e-9) {
          c.passed = false;
          d << "curve " << fig.headers[j] << " not odd; ";
          break;
        }
      }
    }
  }
  c.detail = c.passed ? "exact extrema, anchors, grid bounds, figures written"
                      : d.str();
  return c;
}

Criterion criterion2() {
  Criterion c{2, "pointwise evaluator against closed-form profiles", true, ""};
  const FracOrder half(0.5);
  const QuadSettings q{1e-6, 1e-8};
  double worst = 0.0;
  const Profile lorentzian{[](double x) { return 1.0 / (1.0 + x * x); },
                           std::numeric_limits<double>::infinity()};
  for (int k = -40; k <= 40; ++k) {
    const double x = k / 20.0;
    const double got = frac_laplacian_pointwise(lorentzian, half, x, q);
    const double want = (1.0 - x * x) / ((1.0 + x * x) * (1.0 + x * x));
    worst = std::max(worst, std::abs(got - want));
  }
  if (worst > 1e-4) {
    c.passed = false;
    c.detail = "lorentzian error " + fmt(worst);
  }
  const Profile root{[](double x) {
                       const double w = 1.0 - x * x;
                       return w > 0.0 ? std::sqrt(w) : 0.0;
                     },
                     1.0};
  double worst_root = 0.0;
  for (int k = -9; k <= 9; ++k) {
    const double x = k / 10.0;
    const double got = frac_laplacian_pointwise(root, half, x, q);
    worst_root = std::max(worst_root, std::abs(got - 1.0));
  }
  if (worst_root > 0.01) {
    c.passed = false;
    c.detail += " root-profile error " + fmt(worst_root);
  }
  if (c.passed) {
    c.detail = "lorentzian sup error " + fmt(worst) + ", root profile " +
               fmt(worst_root);
  }
  return c;
}

Criterion criterion3() {
  Criterion c{3, "half-interval Poisson profile cross-validation", true, ""};
  const FracOrder half(0.5);
  std::ostringstream d;
  const double c0_err = std::abs(c0(half) - 2.0 / M_PI);
  if (c0_err > 1e-6) {
    c.passed = false;
    d << "c0 error " << c0_err << "; ";
  }
  double prev = 0.0;
  for (double radius : {10.0, 20.0, 40.0, 80.0}) {
    double e = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double x = 2.0 * k / 50.0;
      e = std::max(e, std::abs(zeta_R(x, radius, half) / x - c0(half)));
      e = std::max(e, std::abs(zeta_R(-x, radius, half) / -x - c0(half)));
    }
    if (prev > 0.0) {
      const double ratio = prev / e;
      if (ratio < 3.5 || ratio > 4.5) {
        c.passed = false;
        d << "R-ratio " << ratio << " at R=" << radius << "; ";
      }
    }
    prev = e;
  }
  const double e1 = poisson_sup_error(1e-3, half);
  const double e2 = poisson_sup_error(5e-4, half);
  if (e1 > 1e-2) {
    c.passed = false;
    d << "sup error " << e1 << " at h=1e-3; ";
  }
  if (e1 / e2 < 1.5) {
    c.passed = false;
    d << "error ratio " << e1 / e2 << " < 1.5; ";
  }
  c.detail = c.passed ? "c0 err " + fmt(c0_err) + ", solve errs " + fmt(e1) +
                            " -> " + fmt(e2)
                      : d.str();
  return c;
}

Criterion criterion4() {
  Criterion c{4, "eigenvalue lower bound and stability", true, ""};
  std::ostringstream d;
  const double bound_half = eigen_bound(FracOrder(0.5), 2.0);
  if (std::abs(bound_half - 2.0 / M_PI) > 1e-10) {
    c.passed = false;
    d << "s=1/2 bound " << bound_half << "; ";
  }
  const Domain1D domain(-1.0, 1.0);
  for (double s : {0.3, 0.5, 0.7}) {
    const FracOrder order(s);
    SolveConfig sc;
    sc.h = 1.0 / 128;
    sc.L = 2.0;
    const DiscreteOperator op = assemble(domain, order, {}, sc);
    const double lambda = smallest_eigenvalue(op).lambda;
    const double bound = eigen_bound(order, 2.0);
    if (!(lambda > bound * 1.1)) {
      c.passed = false;
      d << "s=" << s << ": lambda " << lambda << " vs bound " << bound
        << "; ";
    }
  }
  std::vector<double> lams;
  for (double h : {1.0 / 256, 1.0 / 512, 1.0 / 1024}) {
    SolveConfig sc;
    sc.h = h;
    sc.L = 2.0;
    const DiscreteOperator op = assemble(domain, FracOrder(0.5), {}, sc);
    lams.push_back(smallest_eigenvalue(op).lambda);
  }
  // stability to three significant digits across h, h/2, h/4
  auto sig3 = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return std::string(buf);
  };
  if (sig3(lams[0]) != sig3(lams[1]) || sig3(lams[1]) != sig3(lams[2])) {
    c.passed = false;
    d << "lambda not stable to 3 digits: " << sig3(lams[0]) << " "
      << sig3(lams[1]) << " " << sig3(lams[2]) << "; ";
  }
  c.detail = c.passed ? "lambda1(-1,1) ~ " + sig3(lams.back()) +
                            " stable across refinements"
                      : d.str();
  return c;
}

Criterion criterion5() {
  Criterion c{5, "maximum principles on randomized solves", true, ""};
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::ostringstream d;
  int positivity_checked = 0;
  for (int trial = 0; trial < 100 && c.passed; ++trial) {
    const double s = 0.25 + 0.5 * uni(rng);
    const FracOrder order(s);
    const double a = 0.75 + 0.75 * uni(rng);
    const bool super = trial % 2 == 0;
    const double flip = super ? 1.0 : -1.0;
    const double c_pot = trial % 3 == 0 ? 0.0 : uni(rng);
    const double r0 = uni(rng), r1 = uni(rng), r2 = uni(rng);
    const double gd = trial % 4 == 0 ? 0.0 : uni(rng);

    SolveConfig sc;
    sc.h = 1.0 / 32;
    sc.L = 2.5;
    const Domain1D domain(-a, a);
    const GridFunction geom(sc.L, sc.h);
    int ni = 0;
    for (int i = 1; i + 1 < geom.size(); ++i) {
      if (domain.contains(geom.node(i))) ++ni;
    }
    const DiscreteOperator op2 =
        assemble(domain, order, std::vector<double>(ni, c_pot), sc);
    std::vector<double> f;
    for (int idx : op2.interior()) {
      const double x = op2.geometry().node(idx);
      f.push_back(flip * sgn(x) * (r0 + r1 * std::abs(x) + r2 * x * x));
    }
    auto gfn = [gd, flip](double x) {
      return flip * gd * sgn(x) * std::exp(-std::abs(x));
    };
    const GridFunction g =
        GridFunction::sample(sc.L, sc.h, gfn, Tail::closed_form(gfn));
    const GridFunction u = solve_linear(op2, f, g).u;

    const Domain1D half_domain(0.0, a);
    auto pot = [c_pot](double) { return c_pot; };
    const MpSide side = super ? MpSide::Supersolution : MpSide::Subsolution;
    const MpReport weak = weak_mp_check(u, order, half_domain, pot, side);
    if (weak.verdict != Verdict::Holds) {
      c.passed = false;
      d << "trial " << trial << " weak " << verdict_name(weak.verdict) << " ("
        << weak.detail << "); ";
      break;
    }
    if (super) {
      const MpReport strong = strong_mp_check(u, order, half_domain, pot);
      if (strong.verdict != Verdict::Holds) {
        c.passed = false;
        d << "trial " << trial << " strong " << verdict_name(strong.verdict)
          << " (" << strong.detail << "); ";
        break;
      }
      // Discrete positivity for nontrivial nonnegative data.
      double interior_min = std::numeric_limits<double>::infinity();
      for (int idx : op2.interior()) {
        const double x = op2.geometry().node(idx);
        if (x > 0.0) interior_min = std::min(interior_min, u[idx]);
      }
      if (!(interior_min > 0.0)) {
        c.passed = false;
        d << "trial " << trial << " positivity min " << interior_min << "; ";
        break;
      }
      ++positivity_checked;
    }
  }
  c.detail = c.passed ? "100 trials, " + std::to_string(positivity_checked) +
                            " positivity checks, no violations"
                      : d.str();
  return c;
}

Criterion criterion6() {
  Criterion c{6, "linear growth at the reflection point", true, ""};
  const FracOrder half(0.5);
  std::ostringstream d;

  auto check = [&](const char* label, const HopfConfig& cfg, bool expect) {
    const HopfReport rep = hopf_growth(cfg);
    const bool positive = rep.verdict == Verdict::Holds;
    if (positive != expect) {
      c.passed = false;
      d << label << ": " << verdict_name(rep.verdict) << " limit "
        << rep.limit << " (" << rep.detail << "); ";
    } else if (expect) {
      d << label << " limit " << fmt(rep.limit) << "; ";
    }
  };

  HopfConfig sample_cfg;
  sample_cfg.base_h = 0.02;
  sample_cfg.solution = [&](double h) {
    auto z = [&](double x) { return zeta_R(x, 8.0, half); };
    return GridFunction::sample(2.0, h, z, Tail::closed_form(z));
  };
  check("poisson-profile sample", sample_cfg, true);

  // the solve-based configurations probe the reflection difference
  // w(t) = u(lambda - t) - u(lambda + t), which is antisymmetric about the
  // plane at lambda and positive on the cap side
  auto reflect_about = [](const GridFunction& u, double lambda, double hw,
                          double h) {
    return GridFunction::sample(hw, h, [&](double t) {
      return u.eval(lambda - t) - u.eval(lambda + t);
    });
  };

  HopfConfig torsion_cfg;
  torsion_cfg.base_h = 0.02;
  torsion_cfg.solution = [&](double h) {
    SolveConfig sc;
    sc.h = h;
    sc.L = 2.5;
    const Domain1D domain(-2.0, 2.0);
    const DiscreteOperator op = assemble(domain, half, {}, sc);
    const GridFunction u = solve_linear(op, {1.0}, GridFunction(sc.L, h)).u;
    return reflect_about(u, 0.5, 1.0, h);
  };
  check("torsion reflection difference", torsion_cfg, true);

  HopfConfig semi_cfg;
  semi_cfg.base_h = 0.02;
  semi_cfg.solution = [&](double h) {
    SolveConfig sc;
    sc.h = h;
    sc.L = 2.0;
    const Domain1D domain(-1.5, 1.5);
    auto f = [](double, double u) { return 1.0 + 0.5 * u; };
    const GridFunction u = solve_semilinear(domain, half, f, sc).u;
    return reflect_about(u, 0.4, 0.8, h);
  };
  check("semilinear reflection difference", semi_cfg, true);

  HopfConfig control_cfg;
  control_cfg.base_h = 0.02;
  control_cfg.solution = [&](double h) {
    auto z = [](double x) {
      return sgn(x) * std::pow(std::abs(x), 1.5) *
             std::max(0.0, 2.0 - std::abs(x));
    };
    return GridFunction::sample(2.0, h, z);
  };
  check("sublinear negative control", control_cfg, false);

  c.detail = c.passed ? d.str() : d.str();
  return c;
}

Criterion criterion7() {
  Criterion c{7, "barrier construction across potential bounds", true, ""};
  const FracOrder half(0.5);
  std::ostringstream d;
  double prev_alpha = 0.0;
  for (double cb : {0.0, 1.0, 5.0}) {
    const BarrierSpec spec = barrier_build(1.0, cb, half);
    if (!spec.success || spec.margin > 0.0 || !(spec.dphi0 > 0.0) ||
        spec.alpha < prev_alpha) {
      c.passed = false;
      d << "c=" << cb << ": alpha " << spec.alpha << " margin " << spec.margin
        << " slope " << spec.dphi0 << "; ";
    } else {
      d << "c=" << cb << " alpha " << fmt(spec.alpha) << "; ";
    }
    prev_alpha = spec.alpha;
  }
  c.detail = d.str();
  return c;
}

Criterion criterion8() {
  Criterion c{8, "quotient blow-up for odd s-harmonic functions", true, ""};
  const HarnackReport rep = harnack_violation_search(100.0, FracOrder(0.5));
  if (!rep.found || rep.quotient < 100.0 || !(rep.min_on_omega > 0.0)) {
    c.passed = false;
    std::ostringstream d;
    d << "found=" << rep.found << " quotient=" << rep.quotient
      << " min=" << rep.min_on_omega;
    for (const auto& s : rep.skipped) d << " | " << s;
    c.detail = d.str();
  } else {
    c.detail = "quotient " + fmt(rep.quotient) + " with min " +
               fmt(rep.min_on_omega) + " at params (" + fmt(rep.params[0]) +
               "," + fmt(rep.params[1]) + "," + fmt(rep.params[2]) + "," +
               fmt(rep.params[3]) + ")";
  }
  return c;
}

Criterion criterion9() {
  Criterion c{9, "nonnegative nontrivial function touching zero inside", true,
              ""};
  const CounterexampleRun run =
      strong_mp_counterexample_search(FracOrder(0.5));
  std::ostringstream d;
  if (run.verdict != Verdict::Holds) {
    c.passed = false;
    d << "verdict " << verdict_name(run.verdict) << ": " << run.detail;
  } else {
    // Lipschitz continuity of the sampled scan m(t).
    for (size_t i = 0; i + 1 < run.t_grid.size(); ++i) {
      const double dm = std::abs(run.m_samples[i + 1] - run.m_samples[i]);
      const double dt = run.t_grid[i + 1] - run.t_grid[i];
      if (dm > run.lipschitz_bound * dt * (1.0 + 1e-9) + 1e-14) {
        c.passed = false;
        d << "Lipschitz violation at t=" << run.t_grid[i] << "; ";
      }
      if (run.m_samples[i + 1] > run.m_samples[i] + 1e-14) {
        c.passed = false;
        d << "m(t) not nonincreasing at t=" << run.t_grid[i] << "; ";
      }
    }
    if (c.passed) {
      d << "t*=" << fmt(run.t_star) << " x*=" << fmt(run.x_star)
        << " min(0,3)=" << fmt(run.min_u_03)
        << " |min[1,3]|=" << fmt(std::abs(run.min_u_13));
    }
  }
  c.detail = d.str();
  return c;
}

Criterion criterion10() {
  Criterion c{10, "parallel-surface symmetry experiments", true, ""};
  const FracOrder half(0.5);
  std::ostringstream d;
  MovingPlaneConfig cfg;
  cfg.solve.h = 0.01;
  cfg.solve.L = 2.5;

  {
    const MovingPlaneReport rep = parallel_surface_experiment(
        Domain1D(-1.0, 1.0), 1.0, [](double, double) { return 1.0; }, half,
        cfg);
    double vmin = 0.0;
    for (const auto& [lambda, m] : rep.lambda_minima_right) {
      vmin = std::min(vmin, m);
    }
    for (const auto& [lambda, m] : rep.lambda_minima_left) {
      vmin = std::min(vmin, m);
    }
    if (rep.even_verdict != Verdict::Holds ||
        rep.positive_verdict != Verdict::Holds ||
        std::abs(rep.center) > cfg.solve.h || vmin < -cfg.tol ||
        rep.overdetermined_gap > 10.0 * cfg.tol) {
      c.passed = false;
      d << "symmetric case: center " << rep.center << " residual "
        << rep.center_residual << " vmin " << vmin << " gap "
        << rep.overdetermined_gap << "; ";
    } else {
      d << "symmetric ok (residual " << fmt(rep.center_residual) << "); ";
    }
  }
  {
    MovingPlaneConfig cfg2 = cfg;
    cfg2.solve.L = 6.5;
    const MovingPlaneReport rep = parallel_surface_experiment(
        Domain1D({{-1.0, 1.0}, {2.0, 5.0}}), 0.5,
        [](double, double) { return 1.0; }, half, cfg2);
    if (rep.overdetermined_gap <= 10.0 * cfg.tol) {
      c.passed = false;
      d << "asymmetric case gap " << rep.overdetermined_gap
        << " unexpectedly small; ";
    } else {
      d << "asymmetric gap " << fmt(rep.overdetermined_gap) << "; ";
    }
  }
  {
    const MovingPlaneReport rep = parallel_surface_experiment(
        Domain1D(-1.0, 1.0), 1.0,
        [](double, double u) { return 1.0 + 0.5 * u; }, half, cfg);
    if (rep.even_verdict != Verdict::Holds ||
        rep.positive_verdict != Verdict::Holds ||
        rep.monotone_verdict != Verdict::Holds) {
      c.passed = false;
      d << "nonlinear case verdicts " << verdict_name(rep.even_verdict) << "/"
        << verdict_name(rep.positive_verdict) << "/"
        << verdict_name(rep.monotone_verdict) << "; ";
    } else {
      d << "nonlinear ok";
    }
  }
  c.detail = d.str();
  return c;
}

} // namespace

std::vector<Criterion> acceptance_suite(
    const std::function<void(const Criterion&)>& on_done,
    const std::string& out_dir) {
  std::vector<Criterion> out;
  auto push = [&](Criterion c) {
    if (on_done) on_done(c);
    out.push_back(std::move(c));
  };
  push(criterion1(out_dir));
  push(criterion2());
  push(criterion3());
  push(criterion4());
  push(criterion5());
  push(criterion6());
  push(criterion7());
  push(criterion8());
  push(criterion9());
  push(criterion10());
  return out;
}

} // namespace fraclab
