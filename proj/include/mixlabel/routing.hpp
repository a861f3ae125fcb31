#pragma once

// Outer routing: each external leader runs to the map boundary, bends to the
// horizontal and ends at its label. Labels are placed from the topmost exit
// downward, sliding outward past labels already placed.

#include "frame.hpp"
#include "instance.hpp"

#include <algorithm>

namespace mixlabel {

/// Convex polygon, counterclockwise.
struct MapPolygon {
  Polygon vertices;

  MapPolygon() = default;
  explicit MapPolygon(Polygon v) : vertices(std::move(v)) {
    if (vertices.size() < 3) throw DomainError("map polygon needs at least three vertices");
    if (signed_area2(vertices) < 0) std::reverse(vertices.begin(), vertices.end());
    if (!is_convex(vertices)) throw DomainError("map polygon must be convex");
  }

  /// Bounding box of all labels inflated by n + 2 on every side.
  static MapPolygon around(const Instance& inst) {
    Scalar x0 = inst.points[0].x, x1 = x0 + inst.label_w, y0 = inst.points[0].y, y1 = y0 + inst.label_h;
    for (const auto& p : inst.points) {
      x0 = std::min(x0, p.x);
      y0 = std::min(y0, p.y);
      x1 = std::max(x1, Scalar(p.x + inst.label_w));
      y1 = std::max(y1, Scalar(p.y + inst.label_h));
    }
    const Scalar m = static_cast<long>(inst.size()) + 2;
    return MapPolygon({{x0 - m, y0 - m}, {x1 + m, y0 - m}, {x1 + m, y1 + m}, {x0 - m, y1 + m}});
  }

  static MapPolygon of(const Instance& inst) { return inst.map ? MapPolygon(*inst.map) : around(inst); }
};

struct RoutedExternal {
  std::size_t index = 0;
  Point boundary_exit;
  std::vector<Point> outer_path;  // boundary_exit, then the label attachment point
  Rect label_rect;
};

struct Routing {
  std::vector<RoutedExternal> externals;
  /// (later, earlier): the later outer path runs through the earlier label.
  std::vector<std::pair<std::size_t, std::size_t>> path_contacts;
};

/// Where the leader of `p` leaves the map.
inline Point clip_leader_to_map(const Point& p, const Direction& d, const MapPolygon& map) {
  const auto& v = map.vertices;
  if (!point_in_polygon_open(v, p)) throw DomainError("point is not strictly inside the map");
  const Point dv = d.as_point();
  std::optional<Scalar> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point e = v[(i + 1) % v.size()] - a;
    const Scalar den = cross(dv, e);
    if (den == 0) continue;
    // p + t dv = a + s e
    const Scalar t = cross(a - p, e) / den;
    const Scalar s = cross(a - p, dv) / den;
    if (t > 0 && s >= 0 && s <= 1 && (!best || t < *best)) best = t;
  }
  if (!best) throw ContractViolation("leader does not leave the map");
  return {p.x + *best * dv.x, p.y + *best * dv.y};
}

/// Leaders pointing left (d_x <= 0) get labels to the left of the map,
/// anchored at their lower-right corner; the other class is mirrored.
inline bool left_class(const Direction& d) { return d.dx() <= 0; }

inline Routing route_outer(const Instance& inst, const Labeling& lab, const Direction& d, const MapPolygon& map) {
  const bool left = left_class(d);
  struct Exit {
    std::size_t index;
    Point at;
  };
  std::vector<Exit> exits;
  for (auto i : lab.external) exits.push_back({i, clip_leader_to_map(inst.points[i], d, map)});
  // Topmost exit first: every earlier label then starts at or above the
  // current path, so paths never run through placed labels.
  std::stable_sort(exits.begin(), exits.end(), [](const Exit& a, const Exit& b) { return a.at.y > b.at.y; });

  Routing out;
  const Scalar w = inst.label_w, h = inst.label_h;
  for (const auto& ex : exits) {
    // x of the attachment corner; the label spans [c-w,c] (left) or [c,c+w].
    Scalar c = ex.at.x;
    auto rect_at = [&](const Scalar& cx) { return left ? Rect({cx - w, ex.at.y}, w, h) : Rect({cx, ex.at.y}, w, h); };
    for (bool moved = true; moved;) {
      moved = false;
      for (const auto& r : out.externals) {
        if (!rects_overlap(rect_at(c), r.label_rect)) continue;
        c = left ? r.label_rect.x0() : r.label_rect.x1();
        moved = true;
      }
    }
    RoutedExternal re{ex.index, ex.at, {ex.at, {c, ex.at.y}}, rect_at(c)};
    for (std::size_t k = 0; k < out.externals.size(); ++k) {
      const Rect& r = out.externals[k].label_rect;
      const Scalar lo = std::min(ex.at.x, c), hi = std::max(ex.at.x, c);
      if (r.y0() < ex.at.y && ex.at.y < r.y1() && lo < r.x1() && r.x0() < hi)
        out.path_contacts.push_back({ex.index, out.externals[k].index});
    }
    out.externals.push_back(std::move(re));
  }
  return out;
}

/// First pair of routed labels with overlapping interiors.
inline std::optional<std::pair<std::size_t, std::size_t>> routed_overlap(const Routing& r) {
  for (std::size_t i = 0; i < r.externals.size(); ++i)
    for (std::size_t j = i + 1; j < r.externals.size(); ++j)
      if (rects_overlap(r.externals[i].label_rect, r.externals[j].label_rect))
        return std::pair{r.externals[i].index, r.externals[j].index};
  return std::nullopt;
}

}  // namespace mixlabel
