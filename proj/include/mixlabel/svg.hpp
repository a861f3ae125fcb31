#pragma once

// Plain SVG drawing of an instance and, optionally, a routed labeling.
// Output depends only on the inputs: fixed-precision numbers, fixed order.

#include "routing.hpp"

#include <cstdio>
#include <string>

namespace mixlabel {

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace detail

struct SvgScene {
  const Instance* inst = nullptr;
  MapPolygon map;
  const Labeling* labeling = nullptr;  // optional
  const Routing* routing = nullptr;    // optional
  std::optional<Direction> direction;
};

inline std::string render_svg(const SvgScene& sc, double unit = 40.0) {
  const Instance& inst = *sc.inst;
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  auto grow = [&](const Point& p) {
    x0 = std::min(x0, p.x.get_d());
    x1 = std::max(x1, p.x.get_d());
    y0 = std::min(y0, p.y.get_d());
    y1 = std::max(y1, p.y.get_d());
  };
  for (const auto& v : sc.map.vertices) grow(v);
  if (sc.routing)
    for (const auto& r : sc.routing->externals)
      for (const auto& c : r.label_rect.corners()) grow(c);
  x0 -= 1;
  y0 -= 1;
  x1 += 1;
  y1 += 1;
  auto X = [&](const Scalar& v) { return detail::num((v.get_d() - x0) * unit); };
  auto Y = [&](const Scalar& v) { return detail::num((y1 - v.get_d()) * unit); };
  auto pts = [&](const std::vector<Point>& poly) {
    std::string s;
    for (const auto& v : poly) s += (s.empty() ? "" : " ") + X(v.x) + "," + Y(v.y);
    return s;
  };
  auto rect = [&](const Rect& r, const char* cls) {
    return "  <rect class=\"" + std::string(cls) + "\" x=\"" + X(r.x0()) + "\" y=\"" + Y(r.y1()) + "\" width=\"" +
           detail::num(r.w.get_d() * unit) + "\" height=\"" + detail::num(r.h.get_d() * unit) + "\"/>\n";
  };
  auto line = [&](const Point& a, const Point& b, const char* cls) {
    return "  <line class=\"" + std::string(cls) + "\" x1=\"" + X(a.x) + "\" y1=\"" + Y(a.y) + "\" x2=\"" + X(b.x) +
           "\" y2=\"" + Y(b.y) + "\"/>\n";
  };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::num((x1 - x0) * unit) + "\" height=\"" +
       detail::num((y1 - y0) * unit) + "\">\n";
  s += "  <style>.map{fill:#f7f7f2;stroke:#555}.obst{fill:#bbb;stroke:#777}.int{fill:#cfe3ff;stroke:#2b5fad}"
       ".ext{fill:#ffe2c4;stroke:#b5651d}.ldr{stroke:#b5651d;stroke-width:1.5}.pt{fill:#111}</style>\n";
  s += "  <polygon class=\"map\" points=\"" + pts(sc.map.vertices) + "\"/>\n";
  for (const auto& o : inst.obstacles) s += "  <polygon class=\"obst\" points=\"" + pts(o.polygon) + "\"/>\n";
  if (sc.labeling) {
    for (auto i : sc.labeling->internal) s += rect(inst.label(i), "int");
    if (sc.routing) {
      for (const auto& r : sc.routing->externals) {
        s += line(inst.points[r.index], r.boundary_exit, "ldr");
        for (std::size_t k = 0; k + 1 < r.outer_path.size(); ++k) s += line(r.outer_path[k], r.outer_path[k + 1], "ldr");
        s += rect(r.label_rect, "ext");
      }
    } else if (sc.direction) {
      for (auto i : sc.labeling->external)
        s += line(inst.points[i], clip_leader_to_map(inst.points[i], *sc.direction, sc.map), "ldr");
    }
  }
  for (const auto& p : inst.points)
    s += "  <circle class=\"pt\" cx=\"" + X(p.x) + "\" cy=\"" + Y(p.y) + "\" r=\"" + detail::num(unit / 12) + "\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace mixlabel
