#pragma once

#include <utility>
#include <vector>

namespace fraclab {

// Finite union of disjoint open intervals.
class Domain1D {
 public:
  using Interval = std::pair<double, double>;

  Domain1D() = default;
  explicit Domain1D(std::vector<Interval> components);
  Domain1D(double a, double b) : Domain1D(std::vector<Interval>{{a, b}}) {}

  // Minkowski sum G + (-R, R); overlapping enlarged components merge.
  static Domain1D minkowski(const Domain1D& g, double radius);

  const std::vector<Interval>& components() const { return components_; }
  double measure() const;
  bool contains(double x) const;
  double inf() const { return components_.front().first; }
  double sup() const { return components_.back().second; }
  // All component endpoints, in increasing order.
  std::vector<double> endpoints() const;

 private:
  std::vector<Interval> components_;
};

} // namespace fraclab
