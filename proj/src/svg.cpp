#include "segstab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace segstab {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const char* stroke_of(int family) {
  static const char* palette[] = {"#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e"};
  return palette[(family > 0 ? family - 1 : 0) % 5];
}

}  // namespace

std::string render_svg(const StabInstance& inst, std::span<const Segment> segments, std::span<const int> families) {
  if (!families.empty() && families.size() != segments.size()) throw Error("one family label per segment expected");

  // bounding box in plane coordinates
  bool any = false;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  auto grow = [&](double ax, double bx, double ay, double by) {
    if (!any) {
      x0 = ax, x1 = bx, y0 = ay, y1 = by;
      any = true;
      return;
    }
    x0 = std::min(x0, ax), x1 = std::max(x1, bx), y0 = std::min(y0, ay), y1 = std::max(y1, by);
  };
  for (const auto& r : inst.rects) grow(to_double(r.x_left), to_double(r.x_right), to_double(r.y_bottom), to_double(r.y_top));
  for (const auto& s : segments) {
    double a = to_double(s.x_left), b = to_double(s.x_right), c = to_double(s.y);
    if (s.orientation == Orientation::horizontal) {
      grow(a, b, c, c);
    } else {
      grow(c, c, a, b);
    }
  }
  double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
  double mx = 0.05 * w, my = 0.05 * h;
  double stroke = std::max(w, h) / 400;
  auto fy = [&](double y) { return y1 + y0 - y; };  // flip so y grows upward

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0 - mx) << ' ' << num(y0 - my) << ' '
      << num(w + 2 * mx) << ' ' << num(h + 2 * my) << "\">\n";
  out << "<g class=\"rects\" fill=\"#d5d8dc\" fill-opacity=\"0.5\" stroke=\"#34495e\" stroke-width=\"" << num(stroke)
      << "\">\n";
  for (const auto& r : inst.rects) {
    double rx = to_double(r.x_left), ry = fy(to_double(r.y_top));
    out << "<rect class=\"rect\" data-id=\"" << r.id << "\" x=\"" << num(rx) << "\" y=\"" << num(ry) << "\" width=\""
        << num(to_double(r.width())) << "\" height=\"" << num(to_double(r.height())) << "\"/>\n";
  }
  out << "</g>\n<g class=\"segments\" stroke-width=\"" << num(3 * stroke) << "\" stroke-linecap=\"round\">\n";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    double a = to_double(s.x_left), b = to_double(s.x_right), c = to_double(s.y);
    double lx1 = a, lx2 = b, ly1 = fy(c), ly2 = fy(c);
    if (s.orientation == Orientation::vertical) lx1 = lx2 = c, ly1 = fy(a), ly2 = fy(b);
    out << "<line class=\"seg";
    if (!families.empty()) out << " f" << families[i];
    out << "\" data-id=\"" << s.id << "\" x1=\"" << num(lx1) << "\" y1=\"" << num(ly1) << "\" x2=\"" << num(lx2)
        << "\" y2=\"" << num(ly2) << "\" stroke=\"" << (families.empty() ? "#c0392b" : stroke_of(families[i]))
        << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace segstab
