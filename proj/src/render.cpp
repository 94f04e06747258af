#include "parity/render.hpp"

#include <algorithm>
#include <sstream>

namespace parity {
namespace {

struct Frame {
  double min_x = 0, min_y = 0, width = 1, height = 1, unit = 1;
};

Frame fit(const std::vector<Point>& pts) {
  Frame f;
  if (pts.empty()) return f;
  double lo_x = static_cast<double>(pts[0].x), hi_x = lo_x;
  double lo_y = static_cast<double>(pts[0].y), hi_y = lo_y;
  for (const Point& p : pts) {
    lo_x = std::min(lo_x, static_cast<double>(p.x));
    hi_x = std::max(hi_x, static_cast<double>(p.x));
    lo_y = std::min(lo_y, static_cast<double>(p.y));
    hi_y = std::max(hi_y, static_cast<double>(p.y));
  }
  const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  const double margin = 0.05 * extent;
  f.min_x = lo_x - margin;
  f.min_y = -hi_y - margin;  // y grows upward in the input
  f.width = hi_x - lo_x + 2 * margin;
  f.height = hi_y - lo_y + 2 * margin;
  f.unit = extent / 100.0;
  return f;
}

void line(std::ostringstream& out, const char* cls, const Point& a, const Point& b,
          const std::string& style) {
  out << "<line class=\"" << cls << "\" x1=\"" << a.x << "\" y1=\"" << -static_cast<double>(a.y)
      << "\" x2=\"" << b.x << "\" y2=\"" << -static_cast<double>(b.y) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const EdgeSet* happy, const RenderOptions& options) {
  const PlaneGraph& g = inst.graph;
  const Frame f = fit(g.points);
  std::ostringstream out;
  out.precision(17);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << f.min_x << ' '
      << f.min_y << ' ' << f.width << ' ' << f.height << "\">\n";

  if (happy) {
    const VerificationReport report = verify_happy_set(inst, *happy);
    if (!report.passed()) {
      out << "<text class=\"warning\" x=\"" << f.min_x + f.unit << "\" y=\"" << f.min_y + 4 * f.unit
          << "\" font-size=\"" << 3 * f.unit << "\" fill=\"red\">happy set failed verification: "
          << report.failures.front().message << "</text>\n";
    }
  }

  const std::string thin = "stroke=\"#c8c8c8\" stroke-width=\"" + std::to_string(0.2 * f.unit) + "\"";
  const std::string solid = "stroke=\"black\" stroke-width=\"" + std::to_string(0.5 * f.unit) + "\"";
  const std::string dashed = "stroke=\"#1f5fbf\" stroke-width=\"" + std::to_string(0.5 * f.unit) +
                             "\" stroke-dasharray=\"" + std::to_string(2 * f.unit) + "," +
                             std::to_string(1.5 * f.unit) + "\"";

  if (options.show_vis) {
    for (const Edge& e : visibility_graph(g)) line(out, "vis", g.points[e.u], g.points[e.v], thin);
  }
  for (const Edge& e : g.edges) line(out, "g", g.points[e.u], g.points[e.v], solid);
  if (happy) {
    for (const Edge& e : *happy) {
      if (e.v < g.vertex_count()) line(out, "h", g.points[e.u], g.points[e.v], dashed);
    }
  }

  const std::vector<std::uint8_t> mask = inst.unhappy_mask();
  const double r = 1.2 * f.unit;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const double x = static_cast<double>(g.points[v].x);
    const double y = -static_cast<double>(g.points[v].y);
    if (mask[v]) {
      out << "<rect class=\"unhappy\" x=\"" << x - r << "\" y=\"" << y - r << "\" width=\"" << 2 * r
          << "\" height=\"" << 2 * r << "\" fill=\"#d62728\"/>\n";
    } else {
      out << "<circle class=\"vertex\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
          << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << 0.3 * f.unit << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace parity
