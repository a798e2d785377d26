#include "core/domain.hpp"

#include <algorithm>
#include <stdexcept>

namespace fraclab {

Domain1D::Domain1D(std::vector<Interval> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("Domain1D: empty component list");
  }
  std::sort(components_.begin(), components_.end());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (!(components_[k].first < components_[k].second)) {
      throw std::invalid_argument("Domain1D: degenerate interval");
    }
    if (k > 0 && components_[k].first < components_[k - 1].second) {
      throw std::invalid_argument("Domain1D: overlapping intervals");
    }
  }
}

Domain1D Domain1D::minkowski(const Domain1D& g, double radius) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("Domain1D::minkowski: radius must be positive");
  }
  std::vector<Interval> enlarged;
  for (const auto& [a, b] : g.components_) {
    enlarged.emplace_back(a - radius, b + radius);
  }
  std::sort(enlarged.begin(), enlarged.end());
  std::vector<Interval> merged;
  for (const auto& iv : enlarged) {
    if (!merged.empty() && iv.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, iv.second);
    } else {
      merged.push_back(iv);
    }
  }
  return Domain1D(std::move(merged));
}

double Domain1D::measure() const {
  double total = 0.0;
  for (const auto& [a, b] : components_) total += b - a;
  return total;
}

bool Domain1D::contains(double x) const {
  for (const auto& [a, b] : components_) {
    if (x > a && x < b) return true;
  }
  return false;
}

std::vector<double> Domain1D::endpoints() const {
  std::vector<double> pts;
  for (const auto& [a, b] : components_) {
    pts.push_back(a);
    pts.push_back(b);
  }
  return pts;
}

} // namespace fraclab
