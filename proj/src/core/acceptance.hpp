#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fraclab {

struct Criterion {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the ten release gates in order.  `on_done` (optional) is invoked
// after each criterion, e.g. to print a progress line.  `out_dir` receives
// the figure artifacts produced along the way.
std::vector<Criterion> acceptance_suite(
    const std::function<void(const Criterion&)>& on_done = {},
    const std::string& out_dir = "acceptance_out");

} // namespace fraclab
