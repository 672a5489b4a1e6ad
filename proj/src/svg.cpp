#include "hedgehog/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hedgehog {

namespace {

const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                           "#9467bd", "#ff7f0e", "#17becf"};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.8g", v);
  return buf;
}

}  // namespace

std::string svg_document(const std::vector<SvgCurve>& curves,
                         const std::vector<Point>& cusp_markers) {
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  bool have = false;
  auto grow = [&](Point p) {
    if (!have) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      have = true;
      return;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (const SvgCurve& c : curves)
    for (Point p : c.points) grow(p);
  for (Point p : cusp_markers) grow(p);
  if (!have) throw std::invalid_argument("svg_document: nothing to draw");

  double w = std::max(max_x - min_x, 1e-9);
  double h = std::max(max_y - min_y, 1e-9);
  double margin = 0.05 * std::max(w, h);
  min_x -= margin;
  min_y -= margin;
  w += 2.0 * margin;
  h += 2.0 * margin;
  double stroke = 0.004 * std::max(w, h);
  double marker_r = 0.010 * std::max(w, h);

  // Flip y: emit (x, -y) and shift the viewBox accordingly.
  double view_y = -(min_y + h);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"640\" height=\"" << num(640.0 * h / w) << "\" viewBox=\""
      << num(min_x) << " " << num(view_y) << " " << num(w) << " " << num(h)
      << "\">\n";

  size_t color_idx = 0;
  for (const SvgCurve& c : curves) {
    if (c.points.size() < 2) continue;
    std::string color =
        c.color.empty() ? kPalette[color_idx++ % 6] : c.color;
    out << "  <path fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << num(stroke) << "\" d=\"";
    for (size_t i = 0; i < c.points.size(); ++i)
      out << (i == 0 ? "M " : " L ") << num(c.points[i].x) << " "
          << num(-c.points[i].y);
    if (c.closed) out << " Z";
    out << "\"/>\n";
  }
  for (Point p : cusp_markers)
    out << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y)
        << "\" r=\"" << num(marker_r)
        << "\" fill=\"#000000\" stroke=\"none\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace hedgehog
