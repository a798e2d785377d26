#include "core/moving_planes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fraclab {

namespace {

// Rounds 2 lambda / h to the integer reflection offset; throws when lambda
// is not a half-grid position.
int reflection_offset(const GridFunction& u, double lambda) {
  const double k = 2.0 * lambda / u.spacing();
  const double rk = std::round(k);
  if (std::abs(k - rk) > 1e-9) {
    throw std::invalid_argument("lambda must sit on a half-grid position");
  }
  return static_cast<int>(rk);
}

double reflected_value(const GridFunction& u, int k, int i) {
  const int j = k + 2 * u.center_index() - i;
  if (j >= 0 && j < u.size()) return u[j];
  return u.eval(2.0 * (k * 0.5 * u.spacing()) - u.node(i));
}

Domain1D mirrored(const Domain1D& d) {
  std::vector<Domain1D::Interval> comps;
  for (auto it = d.components().rbegin(); it != d.components().rend(); ++it) {
    comps.push_back({-it->second, -it->first});
  }
  return Domain1D(comps);
}

// Reflected cap of the domain across lambda (rightward sweep) stays inside
// the closed domain.
bool cap_contained(const Domain1D& d, double lambda) {
  constexpr double eps = 1e-12;
  for (const auto& [a, b] : d.components()) {
    if (b <= lambda) continue;
    const double lo = std::max(a, lambda);
    // Reflection of (lo, b) is (2 lambda - b, 2 lambda - lo).
    const double ra = 2.0 * lambda - b;
    const double rb = 2.0 * lambda - lo;
    if (rb - ra < eps) continue;
    bool inside = false;
    for (const auto& [ca, cb] : d.components()) {
      if (ra >= ca - eps && rb <= cb + eps) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

} // namespace

GridFunction reflect_diff(const GridFunction& u, double lambda) {
  const int k = reflection_offset(u, lambda);
  GridFunction v(u.half_width(), u.spacing());
  for (int i = 0; i < u.size(); ++i) {
    v[i] = u[i] - reflected_value(u, k, i);
  }
  return v;
}

CLambda c_lambda(const GridFunction& u, const RealFn& f, double lambda,
                 double lipschitz) {
  const int k = reflection_offset(u, lambda);
  double umax = 0.0;
  for (double v : u.values()) umax = std::max(umax, std::abs(v));
  const double theta = 1e-12 * umax;
  CLambda out;
  out.values.resize(u.size(), 0.0);
  for (int i = 0; i < u.size(); ++i) {
    const double a = u[i];
    const double b = reflected_value(u, k, i);
    if (std::abs(a - b) <= theta) continue;
    const double q = (f(a) - f(b)) / (a - b);
    out.values[i] = q;
    out.max_abs = std::max(out.max_abs, std::abs(q));
  }
  if (out.max_abs > lipschitz * (1.0 + 1e-9)) {
    throw std::invalid_argument(
        "difference quotient exceeds the supplied Lipschitz constant");
  }
  return out;
}

double critical_plane(const Domain1D& domain, int direction) {
  if (direction == -1) return -critical_plane(mirrored(domain), 1);
  if (direction != 1) throw std::invalid_argument("direction must be +-1");
  const double big_m = domain.sup();
  // Containment can only change where a reflected endpoint meets an
  // endpoint, i.e. at midpoints of endpoint pairs.
  const std::vector<double> ends = domain.endpoints();
  std::set<double> events;
  for (double a : ends) {
    for (double b : ends) {
      const double lambda = 0.5 * (a + b);
      if (lambda < big_m) events.insert(lambda);
    }
  }
  std::vector<double> cand(events.begin(), events.end());
  std::sort(cand.begin(), cand.end(), std::greater<double>());
  double m = big_m;
  for (size_t k = 0; k < cand.size(); ++k) {
    // Sample strictly between this event and the previous bound.
    const double probe = 0.5 * (cand[k] + m);
    if (!cap_contained(domain, probe)) break;
    if (!cap_contained(domain, cand[k])) {
      m = cand[k];
      break;
    }
    m = cand[k];
  }
  return m;
}

MovingPlaneReport parallel_surface_experiment(
    const Domain1D& g, double radius,
    const std::function<double(double, double)>& f, const FracOrder& order,
    const MovingPlaneConfig& cfg) {
  MovingPlaneReport rep;
  const Domain1D omega = Domain1D::minkowski(g, radius);
  const SemilinearSolution sol = solve_semilinear(omega, order, f, cfg.solve);
  rep.u = sol.u;
  const GridFunction& u = rep.u;
  const double h = u.spacing();
  const double scale =
      1.0 + *std::max_element(u.values().begin(), u.values().end());

  for (double e : g.endpoints()) {
    rep.level_values.push_back(u.eval(e));
  }
  const auto [lo_it, hi_it] =
      std::minmax_element(rep.level_values.begin(), rep.level_values.end());
  rep.overdetermined_gap = *hi_it - *lo_it;

  rep.big_m_right = omega.sup();
  rep.m_right = critical_plane(omega, 1);
  rep.big_m_left = omega.inf();
  rep.m_left = critical_plane(omega, -1);

  auto sweep = [&](int direction) {
    std::vector<std::pair<double, double>> minima;
    const double m = direction == 1 ? rep.m_right : rep.m_left;
    const double big_m = direction == 1 ? rep.big_m_right : rep.big_m_left;
    const double lo = std::min(m, big_m), hi = std::max(m, big_m);
    const int k_lo = static_cast<int>(std::ceil(2.0 * lo / h)) + 1;
    const int k_hi = static_cast<int>(std::floor(2.0 * hi / h)) - 1;
    for (int k = k_lo; k <= k_hi; ++k) {
      const double lambda = 0.5 * k * h;
      const GridFunction v = reflect_diff(u, lambda);
      double vmin = std::numeric_limits<double>::infinity();
      for (int i = 0; i < v.size(); ++i) {
        const double x = v.node(i);
        const double rx = 2.0 * lambda - x;
        const bool in_cap = direction == 1 ? (x < lambda && omega.contains(rx))
                                           : (x > lambda && omega.contains(rx));
        if (in_cap) vmin = std::min(vmin, v[i]);
      }
      if (std::isfinite(vmin)) minima.push_back({lambda, vmin});
    }
    return minima;
  };
  rep.lambda_minima_right = sweep(1);
  rep.lambda_minima_left = sweep(-1);

  // Symmetry center: half-grid position with the smallest evenness residual.
  {
    double best = std::numeric_limits<double>::infinity();
    const int c_lo = static_cast<int>(std::ceil(2.0 * omega.inf() / h));
    const int c_hi = static_cast<int>(std::floor(2.0 * omega.sup() / h));
    const int min_pairs =
        std::max(2, static_cast<int>(omega.measure() / h / 4.0));
    for (int k = c_lo; k <= c_hi; ++k) {
      const double lambda = 0.5 * k * h;
      double res = 0.0;
      int pairs = 0;
      for (int i = 0; i < u.size(); ++i) {
        const double x = u.node(i);
        const double rx = 2.0 * lambda - x;
        if (!omega.contains(x) || !omega.contains(rx)) continue;
        res = std::max(res, std::abs(u[i] - reflected_value(u, k, i)));
        ++pairs;
      }
      if (pairs < min_pairs) continue;
      if (res < best) {
        best = res;
        rep.center = lambda;
      }
    }
    rep.center_residual = best;
  }

  rep.positivity_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < u.size(); ++i) {
    if (omega.contains(u.node(i))) {
      rep.positivity_min = std::min(rep.positivity_min, u[i]);
    }
  }

  rep.monotonicity_violations = 0;
  for (int i = 0; i + 1 < u.size(); ++i) {
    const double x = u.node(i);
    if (x <= rep.center || !omega.contains(x) || !omega.contains(u.node(i + 1)))
      continue;
    if (u[i + 1] > u[i] + cfg.tol * scale) ++rep.monotonicity_violations;
  }

  const bool overdetermined_ok = rep.overdetermined_gap <= 10.0 * cfg.tol;
  rep.single_component_conclusion =
      overdetermined_ok && g.components().size() == 1;
  rep.positive_verdict =
      rep.positivity_min > 0.0 ? Verdict::Holds : Verdict::Fails;
  if (overdetermined_ok) {
    rep.even_verdict = rep.center_residual <= 10.0 * cfg.tol * scale
                           ? Verdict::Holds
                           : Verdict::Fails;
    rep.monotone_verdict = rep.monotonicity_violations == 0 ? Verdict::Holds
                                                            : Verdict::Fails;
    rep.detail = "overdetermined condition met; symmetry verdicts apply";
  } else {
    rep.even_verdict = Verdict::PreconditionViolated;
    rep.monotone_verdict = Verdict::PreconditionViolated;
    rep.detail =
        "boundary values of the level set differ; symmetry not expected";
  }
  return rep;
}

} // namespace fraclab
