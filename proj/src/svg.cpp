#include <algorithm>
#include <cstdio>
#include <sstream>

#include "winding/io.hpp"

namespace winding {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

}  // namespace

std::string render_svg(const Drawing& d, const SvgOptions& options) {
  double xmin = d.position(1).x.to_double();
  double xmax = xmin;
  double ymin = d.position(1).y.to_double();
  double ymax = ymin;
  auto widen = [&](const Pt& p) {
    const double x = p.x.to_double();
    const double y = p.y.to_double();
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const Pt& p : d.positions()) widen(p);
  for (const auto& [e, l] : d.edge_lines()) {
    for (const Pt& p : l.points()) widen(p);
  }
  double span = std::max(xmax - xmin, ymax - ymin);
  if (span <= 0.0) span = 1.0;
  const double margin = 0.05 * span;
  const double stroke = 0.004 * span;
  const double radius = 0.012 * span;

  // SVG's y axis points down; flip so the picture matches the plane.
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
     << num(xmin - margin) << ' ' << num(-ymax - margin) << ' '
     << num(xmax - xmin + 2 * margin) << ' ' << num(ymax - ymin + 2 * margin) << "\">\n";
  for (const auto& [e, l] : d.edge_lines()) {
    const auto c = options.edge_colors.find(e);
    const std::string& color = c == options.edge_colors.end() ? options.default_color : c->second;
    os << "<path id=\"edge-" << e.str() << "\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"" << num(stroke) << "\" stroke-linejoin=\"round\" d=\"";
    for (std::size_t i = 0; i < l.size(); ++i) {
      os << (i == 0 ? "M" : " L") << num(l[i].x.to_double()) << ' ' << num(-l[i].y.to_double());
    }
    os << "\"/>\n";
  }
  for (int v = 1; v <= d.graph().vertex_count(); ++v) {
    const double x = d.position(v).x.to_double();
    const double y = -d.position(v).y.to_double();
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(radius)
       << "\" fill=\"black\"/>\n";
    if (options.labels) {
      os << "<text x=\"" << num(x + 1.5 * radius) << "\" y=\"" << num(y - 1.5 * radius)
         << "\" font-size=\"" << num(4 * radius) << "\">" << v << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace winding
