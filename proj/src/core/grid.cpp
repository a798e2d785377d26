#include "core/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fraclab {

GridFunction::GridFunction(double half_width, double spacing, Tail tail)
    : h_(spacing), tail_(std::move(tail)) {
  if (!(spacing > 0.0) || !(half_width > 0.0)) {
    throw std::invalid_argument("GridFunction: h and L must be positive");
  }
  m_ = static_cast<int>(std::lround(half_width / spacing));
  if (m_ < 1) throw std::invalid_argument("GridFunction: box under-resolved");
  L_ = m_ * h_;
  values_.assign(2 * m_ + 1, 0.0);
}

GridFunction GridFunction::sample(double half_width, double spacing,
                                  const RealFn& f, Tail tail) {
  GridFunction g(half_width, spacing, std::move(tail));
  for (int i = 0; i < g.size(); ++i) {
    g[i] = f(g.node(i));
    if (!std::isfinite(g[i])) {
      throw std::invalid_argument("GridFunction: non-finite sample");
    }
  }
  return g;
}

int GridFunction::index_of(double x) const {
  const int i = static_cast<int>(std::lround(x / h_)) + m_;
  if (i < 0 || i >= size()) {
    throw std::out_of_range("GridFunction: point outside box");
  }
  return i;
}

void GridFunction::set_antisymmetric(double tol) {
  if (std::abs(values_[m_]) > tol) {
    throw std::invalid_argument("antisymmetric grid function must vanish at 0");
  }
  if (oddness_defect() > tol) {
    throw std::invalid_argument("grid function is not antisymmetric");
  }
  values_[m_] = 0.0;
  antisymmetric_ = true;
}

double GridFunction::eval(double x) const {
  if (x < -L_ || x > L_) {
    return tail_.kind == TailKind::Zero ? 0.0 : tail_.fn(x);
  }
  const double t = (x + L_) / h_;
  int j = static_cast<int>(std::floor(t));
  if (j >= size() - 1) j = size() - 2;
  const double w = t - j;
  return values_[j] * (1.0 - w) + values_[j + 1] * w;
}

double GridFunction::oddness_defect() const {
  double worst = std::abs(values_[m_]);
  for (int k = 1; k <= m_; ++k) {
    worst = std::max(worst, std::abs(values_[m_ + k] + values_[m_ - k]));
  }
  return worst;
}

std::string GridFunction::to_csv() const {
  std::string out = "x,u\n";
  char buf[80];
  for (int i = 0; i < size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", node(i), values_[i]);
    out += buf;
  }
  return out;
}

void GridFunction::write_csv(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << to_csv();
}

HalfSpaceFunction::HalfSpaceFunction(GridFunction odd_total)
    : total_(std::move(odd_total)) {
  if (!total_.antisymmetric()) {
    GridFunction& g = total_;
    g.set_antisymmetric(1e-12 * (1.0 + std::abs(g[0])));
  }
}

} // namespace fraclab
