#include "core/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "core/moments.hpp"

namespace fraclab {

namespace {

int thread_budget() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("FRACLAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

void parallel_for(int count, const std::function<void(int)>& body) {
  const int threads = std::min(thread_budget(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Affine contribution of a closed-form tail to one collocation row.
double tail_term(const GridFunction& geom, const FracOrder& order, double x,
                 const Tail& tail, double tol) {
  if (tail.kind == TailKind::Zero) return 0.0;
  const double L = geom.half_width();
  const double p = 1.0 + 2.0 * order.s;
  const double right = integrate_tail(
      [&](double y) { return tail.fn(y) * std::pow(y - x, -p); }, L, p, tol);
  const double left = integrate_tail(
      [&](double w) { return tail.fn(-w) * std::pow(w + x, -p); }, L, p, tol);
  return -kernel_constant(order) * (right + left);
}

} // namespace

DiscreteOperator::DiscreteOperator(const Domain1D& domain,
                                   const FracOrder& order,
                                   const std::vector<double>& c_interior,
                                   const SolveConfig& cfg)
    : domain_(domain), order_(order), cfg_(cfg), geometry_(cfg.L, cfg.h) {
  const double radius =
      std::max(std::abs(domain.inf()), std::abs(domain.sup()));
  if (!(cfg.L > radius)) {
    throw SolverError("truncation half-width must exceed the domain radius");
  }
  const int n = geometry_.size();
  is_interior_.assign(n, 0);
  for (int i = 1; i + 1 < n; ++i) {
    if (domain.contains(geometry_.node(i))) {
      is_interior_[i] = 1;
      interior_.push_back(i);
    }
  }
  for (const auto& [a, b] : domain.components()) {
    int count = 0;
    for (int i : interior_) {
      const double x = geometry_.node(i);
      if (x > a && x < b) ++count;
    }
    if (count < 8) {
      throw SolverError("grid does not resolve every component with >= 8 nodes");
    }
  }
  const int ni = static_cast<int>(interior_.size());
  if (c_interior.empty()) {
    c_.assign(ni, 0.0);
  } else if (static_cast<int>(c_interior.size()) == ni) {
    c_ = c_interior;
  } else {
    throw SolverError("potential sample count does not match interior nodes");
  }

  rows_.resize(ni, n);
  parallel_for(ni, [&](int k) {
    OperatorRow row = operator_row(geometry_, order_, interior_[k], cfg_.quad);
    for (int j = 0; j < n; ++j) rows_(k, j) = row.coeff[j];
    rows_(k, interior_[k]) += c_[k];
  });
}

DiscreteOperator assemble(const Domain1D& domain, const FracOrder& order,
                          const std::vector<double>& c_interior,
                          const SolveConfig& cfg) {
  return DiscreteOperator(domain, order, c_interior, cfg);
}

Eigen::MatrixXd DiscreteOperator::system_matrix() const {
  const int ni = static_cast<int>(interior_.size());
  Eigen::MatrixXd a(ni, ni);
  for (int j = 0; j < ni; ++j) a.col(j) = rows_.col(interior_[j]);
  return a;
}

Eigen::VectorXd DiscreteOperator::apply(const GridFunction& u) const {
  if (u.size() != geometry_.size() || u.spacing() != geometry_.spacing()) {
    throw SolverError("apply: grid mismatch");
  }
  Eigen::Map<const Eigen::VectorXd> uv(u.values().data(), u.size());
  Eigen::VectorXd out = rows_ * uv;
  if (u.tail().kind == TailKind::ClosedForm) {
    for (std::size_t k = 0; k < interior_.size(); ++k) {
      out(k) += tail_term(geometry_, order_, geometry_.node(interior_[k]),
                          u.tail(), cfg_.quad.tail_tol);
    }
  }
  return out;
}

Eigen::VectorXd DiscreteOperator::exterior_contribution(
    const GridFunction& g) const {
  const int ni = static_cast<int>(interior_.size());
  const int n = geometry_.size();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(ni);
  for (int k = 0; k < ni; ++k) {
    for (int j = 0; j < n; ++j) {
      if (!is_interior_[j]) b(k) += rows_(k, j) * g[j];
    }
  }
  if (g.tail().kind == TailKind::ClosedForm) {
    for (int k = 0; k < ni; ++k) {
      b(k) += tail_term(geometry_, order_, geometry_.node(interior_[k]),
                        g.tail(), cfg_.quad.tail_tol);
    }
  }
  return b;
}

LinearSolution solve_linear(const DiscreteOperator& op,
                            const std::vector<double>& f_interior,
                            const GridFunction& g) {
  const auto& interior = op.interior();
  const int ni = static_cast<int>(interior.size());
  Eigen::VectorXd f(ni);
  if (f_interior.size() == 1) {
    f.setConstant(f_interior[0]);
  } else if (static_cast<int>(f_interior.size()) == ni) {
    for (int k = 0; k < ni; ++k) f(k) = f_interior[k];
  } else {
    throw SolverError("solve_linear: rhs sample count mismatch");
  }

  const Eigen::VectorXd rhs = f - op.exterior_contribution(g);
  const Eigen::MatrixXd a = op.system_matrix();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const double rc = lu.rcond();
  if (!(rc > 1e-14)) {
    throw SolverError("solve_linear: system is singular or ill-conditioned, rcond = " +
                      std::to_string(rc));
  }
  const Eigen::VectorXd x = lu.solve(rhs);
  const double residual = (a * x - rhs).lpNorm<Eigen::Infinity>();

  LinearSolution sol;
  sol.u = GridFunction(op.config().L, op.config().h, g.tail());
  for (int j = 0; j < sol.u.size(); ++j) sol.u[j] = g[j];
  for (int k = 0; k < ni; ++k) sol.u[interior[k]] = x(k);
  sol.residual = residual;
  sol.rcond = rc;
  return sol;
}

SemilinearSolution solve_semilinear(
    const Domain1D& domain, const FracOrder& order,
    const std::function<double(double, double)>& f, const SolveConfig& cfg) {
  DiscreteOperator op(domain, order, {}, cfg);
  const auto& interior = op.interior();
  const int ni = static_cast<int>(interior.size());
  const Eigen::MatrixXd a = op.system_matrix();

  std::vector<double> xs(ni);
  for (int k = 0; k < ni; ++k) xs[k] = op.geometry().node(interior[k]);

  auto rhs_of = [&](const Eigen::VectorXd& u) {
    Eigen::VectorXd r(ni);
    for (int k = 0; k < ni; ++k) r(k) = f(xs[k], u(k));
    return r;
  };

  Eigen::VectorXd u = Eigen::VectorXd::Zero(ni);
  Eigen::VectorXd res = a * u - rhs_of(u);
  double rnorm = res.lpNorm<Eigen::Infinity>();

  SemilinearSolution out;
  out.residual_history.push_back(rnorm);

  int iter = 0;
  for (; iter < cfg.max_iterations && rnorm > cfg.newton_tol; ++iter) {
    // Jacobian with a numerically differentiated nonlinearity.
    Eigen::MatrixXd jac = a;
    for (int k = 0; k < ni; ++k) {
      const double du = 1e-7 * (1.0 + std::abs(u(k)));
      jac(k, k) -= (f(xs[k], u(k) + du) - f(xs[k], u(k) - du)) / (2.0 * du);
    }
    const Eigen::VectorXd step = jac.partialPivLu().solve(res);
    double alpha = 1.0;
    Eigen::VectorXd u_next;
    double rnext = rnorm;
    for (int halvings = 0; halvings < 40; ++halvings) {
      u_next = u - alpha * step;
      rnext = (a * u_next - rhs_of(u_next)).lpNorm<Eigen::Infinity>();
      if (rnext < rnorm) break;
      alpha *= 0.5;
    }
    if (!(rnext < rnorm)) {
      // Picard fallback.
      u_next = a.partialPivLu().solve(rhs_of(u));
      rnext = (a * u_next - rhs_of(u_next)).lpNorm<Eigen::Infinity>();
    }
    u = u_next;
    rnorm = rnext;
    out.residual_history.push_back(rnorm);
  }
  if (rnorm > cfg.newton_tol) {
    std::string msg = "solve_semilinear: no convergence; residuals:";
    for (double r : out.residual_history) msg += " " + std::to_string(r);
    throw SolverError(msg);
  }

  out.u = GridFunction(cfg.L, cfg.h);
  for (int k = 0; k < ni; ++k) out.u[interior[k]] = u(k);
  out.residual = rnorm;
  out.iterations = iter;
  return out;
}

EigenResult smallest_eigenvalue(const DiscreteOperator& op, double rel_tol) {
  for (double c : op.potential()) {
    if (c != 0.0) {
      throw SolverError("smallest_eigenvalue requires zero potential");
    }
  }
  const Eigen::MatrixXd a = op.system_matrix();
  const Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(sym);

  const int ni = static_cast<int>(a.rows());
  Eigen::VectorXd v = Eigen::VectorXd::Ones(ni);
  v.normalize();
  double lambda = v.dot(sym * v);
  int iter = 0;
  for (; iter < 100000; ++iter) {
    Eigen::VectorXd w = lu.solve(v);
    w.normalize();
    const double next = w.dot(sym * w);
    v = w;
    if (std::abs(next - lambda) <= rel_tol * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  if (iter >= 100000) {
    throw SolverError("smallest_eigenvalue: inverse power iteration stagnated");
  }

  // Unit discrete L2 norm, positive orientation.
  const double h = op.config().h;
  double norm2 = v.squaredNorm() * h;
  double scale = 1.0 / std::sqrt(norm2);
  if (v.sum() < 0.0) scale = -scale;

  EigenResult res;
  res.lambda = lambda;
  res.eigenvector = GridFunction(op.config().L, op.config().h);
  for (std::size_t k = 0; k < op.interior().size(); ++k) {
    res.eigenvector[op.interior()[k]] = scale * v(static_cast<int>(k));
  }
  res.iterations = iter;
  return res;
}

} // namespace fraclab
