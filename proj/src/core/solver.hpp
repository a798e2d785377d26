#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

#include "core/domain.hpp"
#include "core/grid.hpp"
#include "core/kernel.hpp"
#include "core/pointwise.hpp"

namespace fraclab {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveConfig {
  double h = 0.01;
  double L = 0.0;  // truncation half-width; must exceed the domain radius
  double linear_tol = 1e-10;
  double newton_tol = 1e-10;
  int max_iterations = 60;
  QuadSettings quad;
};

// Dense collocation discretization of (-Delta)^s + c on the interior nodes
// of a 1D domain, with the exterior columns kept for nonlocal Dirichlet data.
class DiscreteOperator {
 public:
  DiscreteOperator(const Domain1D& domain, const FracOrder& order,
                   const std::vector<double>& c_interior,
                   const SolveConfig& cfg);

  const Domain1D& domain() const { return domain_; }
  const FracOrder& order() const { return order_; }
  const SolveConfig& config() const { return cfg_; }
  const GridFunction& geometry() const { return geometry_; }
  const std::vector<int>& interior() const { return interior_; }
  const std::vector<double>& potential() const { return c_; }

  // Full collocation rows over all box nodes; the diagonal carries c.
  const Eigen::MatrixXd& rows() const { return rows_; }
  // Square system matrix (interior columns of rows()).
  Eigen::MatrixXd system_matrix() const;

  // Applies (-Delta)^s + c to an arbitrary grid function on the same grid;
  // returns values at the interior nodes.
  Eigen::VectorXd apply(const GridFunction& u) const;

  // Affine contribution of exterior data g (values on exterior nodes of the
  // box plus g's tail descriptor).
  Eigen::VectorXd exterior_contribution(const GridFunction& g) const;

 private:
  Domain1D domain_;
  FracOrder order_;
  SolveConfig cfg_;
  GridFunction geometry_;
  std::vector<int> interior_;
  std::vector<char> is_interior_;
  std::vector<double> c_;
  Eigen::MatrixXd rows_;
};

// Assembles the operator; c may be empty (treated as zero).
DiscreteOperator assemble(const Domain1D& domain, const FracOrder& order,
                          const std::vector<double>& c_interior,
                          const SolveConfig& cfg);

struct LinearSolution {
  GridFunction u;
  double residual = 0.0;
  double rcond = 0.0;
};

// Solves op u = f with nonlocal Dirichlet data g; f is sampled on interior
// nodes (or one value broadcast), g on the exterior (grid values + tail).
LinearSolution solve_linear(const DiscreteOperator& op,
                            const std::vector<double>& f_interior,
                            const GridFunction& g);

struct SemilinearSolution {
  GridFunction u;
  double residual = 0.0;
  int iterations = 0;
  std::vector<double> residual_history;
};

// Solves (-Delta)^s u = f(x, u) in the domain, u = 0 outside, by damped
// Newton from the zero initial guess (Picard fallback on stagnation).
SemilinearSolution solve_semilinear(
    const Domain1D& domain, const FracOrder& order,
    const std::function<double(double, double)>& f, const SolveConfig& cfg);

struct EigenResult {
  double lambda = 0.0;
  GridFunction eigenvector;
  int iterations = 0;
};

// Smallest eigenvalue of the symmetrized operator (zero potential, zero
// exterior) by inverse power iteration; eigenvector has unit discrete L2
// norm on the domain.
EigenResult smallest_eigenvalue(const DiscreteOperator& op,
                                double rel_tol = 1e-10);

} // namespace fraclab
