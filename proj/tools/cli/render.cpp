#include "cli/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

namespace cannonball::cli {

namespace {

constexpr double kUnit = 40.0;  // pixels per sphere diameter
constexpr double kMargin = 30.0;
constexpr double kTitle = 24.0;

struct Point {
  double x;
  double y;
};

// Scaled coordinates are three times the lattice coordinates.
Point planar(const ScaledPosition& p) {
  const double x = (static_cast<double>(p.x) + static_cast<double>(p.y) / 2.0) / 3.0;
  const double y = static_cast<double>(p.y) * std::sqrt(3.0) / 6.0;
  return {x * kUnit, y * kUnit};
}

}  // namespace

std::string render_svg(const InstanceFile& instance, const ColoringFile& coloring) {
  const auto region = instance_region(instance);
  const auto& s = instance.stacking;
  std::map<GridVertex, int> demand;
  for (const auto& v : instance.vertices) demand[{v.layer, v.u, v.v}] = v.d;

  const auto vertices = region.vertices();
  std::ostringstream body;
  body << std::fixed << std::setprecision(2);

  double width = 2 * kMargin;
  double top = 0.0;
  if (!vertices.empty()) {
    // Horizontal extent is shared so the layers line up above each other.
    double x_min = std::numeric_limits<double>::max(), x_max = std::numeric_limits<double>::lowest();
    double y_min = x_min, y_max = x_max;
    for (const auto& v : vertices) {
      auto p = planar(scaled_position(v, s));
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
      y_min = std::min(y_min, p.y);
      y_max = std::max(y_max, p.y);
    }
    width = x_max - x_min + kUnit + 2 * kMargin;
    const double band = y_max - y_min + kUnit + 2 * kMargin + kTitle;

    for (int layer = 0; layer < region.layers(); ++layer) {
      body << "  <g class=\"layer\" data-layer=\"" << layer << "\">\n";
      body << "    <rect class=\"band\" x=\"0\" y=\"" << top << "\" width=\"" << width
           << "\" height=\"" << band << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
      body << "    <text class=\"title\" x=\"" << kMargin << "\" y=\"" << top + kTitle - 6
           << "\" font-size=\"14\">layer " << layer << " (" << s.letter(layer) << ")</text>\n";
      for (const auto& v : vertices) {
        if (v.layer != layer) continue;
        auto p = planar(scaled_position(v, s));
        // SVG y grows downward; flip so v increases upward.
        const double cx = p.x - x_min + kMargin + kUnit / 2;
        const double cy = top + kTitle + kMargin + kUnit / 2 + (y_max - p.y);
        const int bc = base_color(v, s);
        auto it = demand.find(v);
        const int d = it == demand.end() ? 0 : it->second;
        body << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kUnit / 2
             << "\" fill=\"" << kBaseFills[static_cast<std::size_t>(bc)]
             << "\" stroke=\"#333333\" data-vertex=\"" << to_string(v) << "\" data-bc=\"" << bc
             << "\"/>\n";
        body << "    <text class=\"label\" x=\"" << cx << "\" y=\"" << cy + 4
             << "\" font-size=\"11\" text-anchor=\"middle\">" << d << '/'
             << coloring.assignment.count(v) << "</text>\n";
      }
      body << "  </g>\n";
      top += band;
    }
  }

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  const double height = std::max(top, 2 * kMargin);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << body.str() << "</svg>\n";
  return out.str();
}

}  // namespace cannonball::cli
