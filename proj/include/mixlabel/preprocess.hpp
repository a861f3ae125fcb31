#pragma once

// Forced-label analysis, the obstacle fixpoint, density and label scaling.

#include "frame.hpp"
#include "instance.hpp"

#include <cmath>
#include <string>

namespace mixlabel {

struct PreprocessReport {
  std::vector<std::size_t> forced_external;  // P_X, or obstacle-forced
  std::vector<std::size_t> forced_internal;
  std::vector<char> leader_hits_PX;  // label hit by the leader of some P_X point
  long delta = 1;
  double dmin = 0;  // 0 when n = 1
  int rounds = 0;   // fixpoint rounds that forced something
  bool scaled = false;
};

/// Squared minimum pairwise distance; nullopt for a single point.
inline std::optional<Scalar> min_sq_distance(const Instance& inst) {
  std::optional<Scalar> best;
  for (std::size_t i = 0; i < inst.size(); ++i)
    for (std::size_t j = i + 1; j < inst.size(); ++j) {
      Point v = inst.points[j] - inst.points[i];
      Scalar d2 = dot(v, v);
      if (!best || d2 < *best) best = d2;
    }
  return best;
}

/// min(n, ceil(1/d_min)), computed exactly: the least k with k^2 d_min^2 >= 1.
inline long density(const Instance& inst) {
  const long n = static_cast<long>(inst.size());
  auto d2 = min_sq_distance(inst);
  if (!d2) return 1;
  long k = 1;
  while (k < n && Scalar(k) * k * *d2 < 1) ++k;
  return k;
}

inline PreprocessReport compute_forced(const Instance& inst, const Frame& frame) {
  const std::size_t n = inst.size();
  const Direction& d = frame.dir();
  PreprocessReport rep;
  std::vector<char> px(n, 0), fi(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const Rect lab = inst.label(p);
    const LeaderRay ray = inst.leader(p, d);
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      if (rect_contains_closed(lab, inst.points[q])) px[p] = 1;
      if (ray_through_point(ray, inst.points[q])) fi[p] = 1;
    }
  }
  rep.leader_hits_PX.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (px[p] && fi[p])
      throw Infeasible("point " + std::to_string(p) + " must be labeled both internally and externally");
    if (px[p]) rep.forced_external.push_back(p);
    if (fi[p]) rep.forced_internal.push_back(p);
    if (!px[p]) continue;
    const LeaderRay ray = inst.leader(p, d);
    for (std::size_t q = 0; q < n; ++q)
      if (q != p && ray_hits_rect(ray, inst.label(q))) rep.leader_hits_PX[q] = 1;
  }
  rep.delta = density(inst);
  if (auto d2 = min_sq_distance(inst)) rep.dmin = std::sqrt(d2->get_d());
  return rep;
}

/// Obstacles force statuses: a blocked leader makes a point internal, a
/// blocked label makes it external. Forced labels and leaders then act as
/// obstacles for the remaining points, round after round.
inline PreprocessReport obstacle_fixpoint(const Instance& inst, const Direction& d) {
  const std::size_t n = inst.size();
  const auto c = Conflicts::build(inst, d);
  PreprocessReport rep;
  rep.delta = density(inst);
  std::vector<char> fin(n, 0), fex(n, 0);
  for (std::size_t p = 0; p < n; ++p)
    if (c.buried[p]) throw Infeasible("point " + std::to_string(p) + " lies inside an obstacle");

  std::vector<std::size_t> new_in, new_ex;
  for (std::size_t p = 0; p < n; ++p) {
    if (c.leader_blocked[p]) new_in.push_back(p);
    if (c.label_blocked[p]) new_ex.push_back(p);
  }
  while (!new_in.empty() || !new_ex.empty()) {
    ++rep.rounds;
    for (auto p : new_in) fin[p] = 1;
    for (auto p : new_ex) fex[p] = 1;
    for (std::size_t p = 0; p < n; ++p)
      if (fin[p] && fex[p]) throw Infeasible("point " + std::to_string(p) + " is forced both ways by obstacles");
    std::vector<char> add_in(n, 0), add_ex(n, 0);
    for (auto p : new_in)
      for (std::size_t q = 0; q < n; ++q) {
        if (q == p) continue;
        if (c.ll(p, q)) add_ex[q] = 1;
        if (c.rh(q, p)) add_in[q] = 1;
      }
    for (auto p : new_ex)
      for (std::size_t q = 0; q < n; ++q) {
        if (q == p) continue;
        if (c.rh(p, q)) add_ex[q] = 1;
        if (c.rc(p, q)) add_in[q] = 1;
      }
    new_in.clear();
    new_ex.clear();
    for (std::size_t q = 0; q < n; ++q) {
      if (add_in[q] && !fin[q]) new_in.push_back(q);
      if (add_ex[q] && !fex[q]) new_ex.push_back(q);
    }
    if (rep.rounds > static_cast<int>(2 * n + 1)) throw ContractViolation("obstacle fixpoint did not terminate");
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (fin[p]) rep.forced_internal.push_back(p);
    if (fex[p]) rep.forced_external.push_back(p);
  }
  rep.leader_hits_PX.assign(n, 0);
  return rep;
}

/// Map the plane by x -> x/w, y -> y/h so w x h labels become unit squares.
/// Leader directions, the map and obstacles are mapped along. Validity is
/// preserved since the map is an axis-aligned linear bijection.
inline Instance scale_instance(const Instance& inst, const Scalar& w, const Scalar& h = Scalar(1)) {
  if (w <= 0 || h <= 0) throw DomainError("scale factors must be positive");
  if (inst.label_w != w || inst.label_h != h)
    throw DomainError("labels are not all " + w.get_str() + "x" + h.get_str() + "; non-uniform sizes are unsupported");
  auto sp = [&](const Point& p) { return Point(p.x / w, p.y / h); };
  Instance out;
  for (const auto& p : inst.points) out.points.push_back(sp(p));
  out.label_w = 1;
  out.label_h = 1;
  if (inst.direction)
    out.direction = Direction(Scalar(inst.direction->dx()) / w, Scalar(inst.direction->dy()) / h);
  if (inst.map) {
    Polygon m;
    for (const auto& v : *inst.map) m.push_back(sp(v));
    out.map = m;
  }
  for (const auto& ob : inst.obstacles) {
    Polygon poly;
    for (const auto& v : ob.polygon) poly.push_back(sp(v));
    out.obstacles.emplace_back(poly);
  }
  return out;
}

/// Scale a direction the same way scale_instance does.
inline Direction scale_direction(const Direction& d, const Scalar& w, const Scalar& h = Scalar(1)) {
  return Direction(Scalar(d.dx()) / w, Scalar(d.dy()) / h);
}

}  // namespace mixlabel
