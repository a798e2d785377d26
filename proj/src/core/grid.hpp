#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core/quadrature.hpp"

namespace fraclab {

enum class TailKind { Zero, ClosedForm };

// Exterior descriptor of a grid function: values for |x| > L are either
// identically zero or given by a closed form.
struct Tail {
  TailKind kind = TailKind::Zero;
  RealFn fn;

  static Tail zero() { return {}; }
  static Tail closed_form(RealFn f) { return {TailKind::ClosedForm, std::move(f)}; }
};

// Uniform-grid sample of a function on [-L, L] with an exterior tail.
// Nodes are x_i = (i - m) h for i = 0..2m, so 0 is always a node and the
// box half-width is snapped to a multiple of h.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(double half_width, double spacing, Tail tail = Tail::zero());

  // Samples a callable at every node.
  static GridFunction sample(double half_width, double spacing, const RealFn& f,
                             Tail tail = Tail::zero());

  int size() const { return static_cast<int>(values_.size()); }
  int center_index() const { return m_; }
  double spacing() const { return h_; }
  double half_width() const { return L_; }
  double node(int i) const { return (i - m_) * h_; }
  // Index of the node nearest to x (x must lie in the box).
  int index_of(double x) const;

  double& operator[](int i) { return values_[i]; }
  double operator[](int i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  const Tail& tail() const { return tail_; }

  bool antisymmetric() const { return antisymmetric_; }
  // Marks the function antisymmetric after validating u(-x) = -u(x) at all
  // node pairs (throws on violation).
  void set_antisymmetric(double tol = 0.0);

  // Piecewise-linear evaluation inside the box, tail outside.
  double eval(double x) const;

  // Largest |u(-x_i) + u(x_i)| over node pairs.
  double oddness_defect() const;

  // CSV serialization, header "x,u", 17 significant digits.
  std::string to_csv() const;
  void write_csv(const std::string& path) const;

 private:
  double L_ = 0.0;
  double h_ = 0.0;
  int m_ = 0;
  std::vector<double> values_;
  Tail tail_;
  bool antisymmetric_ = false;
};

// View of a grid function restricted to the half-line x > 0 whose total
// function is the odd extension.
class HalfSpaceFunction {
 public:
  explicit HalfSpaceFunction(GridFunction odd_total);

  const GridFunction& total() const { return total_; }
  // Evaluation of the odd total function at any point.
  double eval(double x) const { return total_.eval(x); }
  double reflected(double x) const { return -total_.eval(-x); }

 private:
  GridFunction total_;
};

} // namespace fraclab
