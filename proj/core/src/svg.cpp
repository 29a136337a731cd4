#include "rigidline/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rigidline {

namespace {

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

const char* stroke_attrs(const std::optional<Stress>& stress, int edge_index) {
  if (!stress) return " stroke=\"#333\" stroke-width=\"1.5\"";
  const Rational& w = stress->values[edge_index];
  if (w > 0) return " stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"";
  if (w < 0) return " stroke=\"#2c3e50\" stroke-width=\"2\"";
  return " stroke=\"#999\" stroke-width=\"0.8\"";
}

}  // namespace

std::string render_svg(const Framework& f, const std::optional<Stress>& stress,
                       const std::optional<FlexPath>& path, const SvgStyle& style) {
  int d = f.config.dim;
  if (d != 1 && d != 2)
    throw Error(Errc::WrongDimension, "SVG rendering supports dimensions 1 and 2");
  if (stress && stress->graph != f.graph)
    throw Error(Errc::IndexMismatch, "stress indexed by another graph");

  int n = f.config.count();
  std::vector<std::pair<double, double>> pts(n);
  for (int i = 0; i < n; ++i) {
    pts[i].first = to_double(f.config.points[i][0]);
    pts[i].second = d == 2 ? to_double(f.config.points[i][1]) : 0.0;
  }

  double xmin = pts[0].first, xmax = pts[0].first;
  double ymin = pts[0].second, ymax = pts[0].second;
  for (const auto& [x, y] : pts) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (path) {
    for (const PlanarConfig& pose : path->poses)
      for (const PlanarPoint& p : pose) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
      }
  }
  if (d == 1) {
    // room for the arcs
    double arc = (xmax - xmin) / 3.0 + 1.0;
    ymin -= arc;
    ymax += arc;
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  double sx = (style.width - 2 * style.margin) / (xmax - xmin);
  double sy = (style.height - 2 * style.margin) / (ymax - ymin);
  double s = std::min(sx, sy);
  auto map_x = [&](double x) { return style.margin + (x - xmin) * s; };
  auto map_y = [&](double y) { return style.height - style.margin - (y - ymin) * s; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(style.width)
      << "\" height=\"" << num(style.height) << "\" viewBox=\"0 0 " << num(style.width)
      << " " << num(style.height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (path) {
    int frames = static_cast<int>(path->poses.size());
    for (int k = 0; k < frames; ++k) {
      double opacity = 0.12 + 0.5 * (k + 1) / frames;
      svg << "<g stroke=\"#7fb3d5\" fill=\"none\" opacity=\"" << num(opacity) << "\">\n";
      for (const Edge& e : f.graph.edges()) {
        const PlanarPoint& a = path->poses[k][e.u - 1];
        const PlanarPoint& b = path->poses[k][e.v - 1];
        svg << "<line x1=\"" << num(map_x(a.x)) << "\" y1=\"" << num(map_y(a.y))
            << "\" x2=\"" << num(map_x(b.x)) << "\" y2=\"" << num(map_y(b.y)) << "\"/>\n";
      }
      svg << "</g>\n";
    }
  }

  if (d == 1) {
    svg << "<line x1=\"" << num(map_x(xmin)) << "\" y1=\"" << num(map_y(0))
        << "\" x2=\"" << num(map_x(xmax)) << "\" y2=\"" << num(map_y(0))
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
  }

  for (int k = 0; k < f.graph.edge_count(); ++k) {
    const Edge& e = f.graph.edge(k);
    double x1 = map_x(pts[e.u - 1].first), y1 = map_y(pts[e.u - 1].second);
    double x2 = map_x(pts[e.v - 1].first), y2 = map_y(pts[e.v - 1].second);
    if (d == 2) {
      svg << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
          << "\" y2=\"" << num(y2) << "\" fill=\"none\"" << stroke_attrs(stress, k)
          << "/>\n";
    } else {
      // semicircular arc, alternating side per edge index
      double r = std::abs(x2 - x1) / 2.0;
      int sweep = (k % 2 == 0) ? 1 : 0;
      svg << "<path d=\"M " << num(x1) << " " << num(y1) << " A " << num(r) << " "
          << num(r) << " 0 0 " << sweep << " " << num(x2) << " " << num(y2)
          << "\" fill=\"none\"" << stroke_attrs(stress, k) << "/>\n";
    }
  }

  for (int i = 0; i < n; ++i) {
    double x = map_x(pts[i].first), y = map_y(pts[i].second);
    svg << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
        << "\" r=\"3.5\" fill=\"#111\"/>\n";
    svg << "<text x=\"" << num(x + 5) << "\" y=\"" << num(y - 5)
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << (i + 1) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace rigidline
