#include "core/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fraclab {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_table(const std::vector<std::string>& headers,
                      const std::vector<std::vector<double>>& columns) {
  if (headers.size() != columns.size()) {
    throw std::invalid_argument("header/column count mismatch");
  }
  std::string out;
  for (size_t j = 0; j < headers.size(); ++j) {
    if (j) out += ',';
    out += headers[j];
  }
  out += "\r\n";
  const size_t rows = columns.empty() ? 0 : columns[0].size();
  for (const auto& col : columns) {
    if (col.size() != rows) {
      throw std::invalid_argument("ragged columns");
    }
  }
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < columns.size(); ++j) {
      if (j) out += ',';
      out += format_g17(columns[j][i]);
    }
    out += "\r\n";
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw std::runtime_error("write failed for " + path);
}

namespace {

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const char* kPalette[] = {"#1b6ca8", "#c23b22", "#2e8540",
                          "#7d3c98", "#b7860b", "#444444"};

} // namespace

std::string render_svg(const std::vector<SvgSeries>& series,
                       const std::string& title, int width, int height) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (double v : s.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : s.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  const double pad_y = 0.05 * (ymax - ymin);
  ymin -= pad_y;
  ymax += pad_y;

  const int ml = 60, mr = 20, mt = 40, mb = 45;
  const double pw = width - ml - mr, ph = height - mt - mb;
  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << title
      << "</text>\n";
  // Frame.
  svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << fmt6(pw)
      << "\" height=\"" << fmt6(ph)
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  // Ticks: 5 per axis.
  for (int k = 0; k <= 4; ++k) {
    const double xv = xmin + (xmax - xmin) * k / 4.0;
    const double yv = ymin + (ymax - ymin) * k / 4.0;
    svg << "<line x1=\"" << fmt6(px(xv)) << "\" y1=\"" << mt + ph
        << "\" x2=\"" << fmt6(px(xv)) << "\" y2=\"" << fmt6(mt + ph + 5)
        << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << fmt6(px(xv)) << "\" y=\"" << fmt6(mt + ph + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt6(xv) << "</text>\n";
    svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt6(py(yv)) << "\" x2=\""
        << ml << "\" y2=\"" << fmt6(py(yv)) << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << ml - 8 << "\" y=\"" << fmt6(py(yv) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt6(yv) << "</text>\n";
  }
  // Zero axes if inside the range.
  if (ymin < 0 && ymax > 0) {
    svg << "<line x1=\"" << ml << "\" y1=\"" << fmt6(py(0)) << "\" x2=\""
        << fmt6(ml + pw) << "\" y2=\"" << fmt6(py(0))
        << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  }
  if (xmin < 0 && xmax > 0) {
    svg << "<line x1=\"" << fmt6(px(0)) << "\" y1=\"" << mt << "\" x2=\""
        << fmt6(px(0)) << "\" y2=\"" << fmt6(mt + ph)
        << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % 6];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (i) svg << ' ';
      svg << fmt6(px(s.x[i])) << ',' << fmt6(py(s.y[i]));
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << ml + 10 << "\" y=\"" << mt + 16 + 15 * (int)si
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color
        << "\">" << s.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace fraclab
