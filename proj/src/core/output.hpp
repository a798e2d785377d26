#pragma once

#include <string>
#include <vector>

namespace fraclab {

// 17-significant-digit decimal rendering used by every CSV artifact.
std::string format_g17(double v);

// RFC-4180 table: header row then one row per index across the columns.
std::string csv_table(const std::vector<std::string>& headers,
                      const std::vector<std::vector<double>>& columns);

void write_text_file(const std::string& path, const std::string& content);

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Minimal polyline plot: axes, ticks, legend, fixed palette.  Deterministic
// output for identical input.
std::string render_svg(const std::vector<SvgSeries>& series,
                       const std::string& title, int width = 800,
                       int height = 500);

} // namespace fraclab
