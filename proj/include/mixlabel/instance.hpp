#pragma once

// Problem instance, labelings, and the pairwise conflict tables shared by
// the checker, the oracle and the general solver.

#include "geometry.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mixlabel {

struct Obstacle {
  Polygon polygon;
  std::vector<Triangle> triangles;

  Obstacle() = default;
  explicit Obstacle(Polygon poly) : polygon(std::move(poly)) {
    if (polygon.size() < 3) throw DomainError("obstacle needs at least three vertices");
    triangles = triangulate(polygon);
  }
};

struct Instance {
  std::vector<Point> points;
  Scalar label_w{1};
  Scalar label_h{1};
  std::optional<Direction> direction;
  std::optional<Polygon> map;
  std::vector<Obstacle> obstacles;

  std::size_t size() const { return points.size(); }

  Rect label(std::size_t i) const { return Rect(points[i], label_w, label_h); }
  LeaderRay leader(std::size_t i, const Direction& d) const { return {points[i], d}; }

  bool unit_labels() const { return label_w == 1 && label_h == 1; }

  /// Throws DomainError unless the instance is well formed.
  void validate() const {
    if (points.empty()) throw DomainError("instance has no points");
    if (label_w <= 0 || label_h <= 0) throw DomainError("label size must be positive");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& p : points) {
      if (!seen.insert({p.x.get_str(), p.y.get_str()}).second) throw DomainError("duplicate point");
    }
    if (map && map->size() < 3) throw DomainError("map polygon needs at least three vertices");
  }
};

/// Partition of the point indices into internal (I) and external (E).
struct Labeling {
  std::vector<std::size_t> internal;
  std::vector<std::size_t> external;

  static Labeling from_mask(const std::vector<char>& is_internal) {
    Labeling l;
    for (std::size_t i = 0; i < is_internal.size(); ++i) (is_internal[i] ? l.internal : l.external).push_back(i);
    return l;
  }

  /// Mask of internal points; nullopt when this is not a partition of 0..n-1.
  std::optional<std::vector<char>> mask(std::size_t n) const {
    std::vector<char> seen(n, 0), m(n, 0);
    for (auto i : internal) {
      if (i >= n || seen[i]) return std::nullopt;
      seen[i] = 1;
      m[i] = 1;
    }
    for (auto i : external) {
      if (i >= n || seen[i]) return std::nullopt;
      seen[i] = 1;
    }
    for (auto s : seen)
      if (!s) return std::nullopt;
    return m;
  }
};

/// Pairwise conflicts for one leader direction.
///   ll(p,q): both internal would overlap.
///   rh(p,q): p external, q internal: p's leader hits q's label.
///   rc(p,q): both external would put their leaders on one line.
struct Conflicts {
  std::size_t n = 0;
  std::vector<char> ll_, rh_, rc_;
  std::vector<char> label_blocked;   // label meets an obstacle
  std::vector<char> leader_blocked;  // leader meets an obstacle
  std::vector<char> buried;          // point inside an obstacle

  bool ll(std::size_t p, std::size_t q) const { return ll_[p * n + q] != 0; }
  bool rh(std::size_t p, std::size_t q) const { return rh_[p * n + q] != 0; }
  bool rc(std::size_t p, std::size_t q) const { return rc_[p * n + q] != 0; }

  /// Conflict between p with status sp and q with status sq (true = internal).
  bool clash(std::size_t p, bool sp, std::size_t q, bool sq) const {
    if (sp && sq) return ll(p, q);
    if (!sp && !sq) return rc(p, q);
    return sp ? rh(q, p) : rh(p, q);
  }

  static Conflicts build(const Instance& inst, const Direction& d) {
    Conflicts c;
    const std::size_t n = inst.size();
    c.n = n;
    c.ll_.assign(n * n, 0);
    c.rh_.assign(n * n, 0);
    c.rc_.assign(n * n, 0);
    std::vector<Rect> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(inst.label(i));
    for (std::size_t p = 0; p < n; ++p) {
      LeaderRay rp = inst.leader(p, d);
      for (std::size_t q = 0; q < n; ++q) {
        if (p == q) continue;
        if (q > p) {
          char o = rects_overlap(labels[p], labels[q]) ? 1 : 0;
          c.ll_[p * n + q] = c.ll_[q * n + p] = o;
          char k = rays_conflict(rp, inst.leader(q, d)) ? 1 : 0;
          c.rc_[p * n + q] = c.rc_[q * n + p] = k;
        }
        c.rh_[p * n + q] = ray_hits_rect(rp, labels[q]) ? 1 : 0;
      }
    }
    c.label_blocked.assign(n, 0);
    c.leader_blocked.assign(n, 0);
    c.buried.assign(n, 0);
    for (const auto& ob : inst.obstacles) {
      for (std::size_t p = 0; p < n; ++p) {
        if (rect_hits_polygon(labels[p], ob.triangles)) c.label_blocked[p] = 1;
        if (ray_hits_polygon(inst.leader(p, d), ob.polygon)) c.leader_blocked[p] = 1;
        if (point_in_polygon_open(ob.polygon, inst.points[p])) c.buried[p] = 1;
      }
    }
    return c;
  }
};

}  // namespace mixlabel
