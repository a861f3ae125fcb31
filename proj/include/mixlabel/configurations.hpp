#pragma once

// Configurations of the influence regions around an anchor: which region
// points are labeled internally, or which single leader-only region point is
// external. Used for reporting, for the cost model and in tests; the general
// solver does not depend on them.

#include "instance.hpp"
#include "regions.hpp"

#include <algorithm>
#include <optional>

namespace mixlabel {

enum class Side { Bottom, Top };

struct Configuration {
  std::vector<std::size_t> internal;
  std::optional<std::size_t> external_e2;

  bool empty() const { return internal.empty() && !external_e2; }
  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) {
    if (auto c = a.internal <=> b.internal; c != 0) return c;
    return a.external_e2 <=> b.external_e2;
  }
};

/// Instance points (other than `anchor`) in the given region of `anchor`.
inline std::vector<std::size_t> region_points(const Instance& inst, std::size_t anchor, RegionKind kind,
                                              const Frame& frame) {
  std::vector<std::size_t> out;
  const LabelSize size{inst.label_w, inst.label_h};
  for (std::size_t q = 0; q < inst.size(); ++q) {
    if (q != anchor && in_influence_region(inst.points[q], inst.points[anchor], kind, frame, size)) out.push_back(q);
  }
  return out;
}

namespace detail {

inline RegionKind label_kind(Side s) { return s == Side::Bottom ? RegionKind::BottomLabel : RegionKind::TopLabel; }
inline RegionKind leader_only_kind(Side s) {
  return s == Side::Bottom ? RegionKind::BottomLeaderOnly : RegionKind::TopLeaderOnly;
}

}  // namespace detail

/// The universe of configurations of one side of `anchor`: the empty one,
/// every set of region points with pairwise disjoint labels up to the size
/// bound, and one external configuration per leader-only region point.
/// With `prune`, internal sets have at most two points and the region points
/// left out (external) may not hit the labels of the chosen ones.
inline std::vector<Configuration> enumerate_configurations(const Instance& inst, std::size_t anchor, Side side,
                                                           const Frame& frame, bool prune = false) {
  const auto ex = exponents_for(frame);
  std::size_t cap = static_cast<std::size_t>(side == Side::Bottom ? ex.e : ex.f);
  if (prune) cap = std::min<std::size_t>(cap, 2);
  const auto region = region_points(inst, anchor, detail::label_kind(side), frame);
  const auto conf = Conflicts::build(inst, frame.dir());

  std::vector<Configuration> out{Configuration{}};
  std::vector<std::size_t> cur;
  auto consistent = [&]() {
    for (auto q : region) {
      if (std::find(cur.begin(), cur.end(), q) != cur.end()) continue;
      for (auto a : cur)
        if (conf.rh(q, a)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!cur.empty() && (!prune || consistent())) out.push_back({cur, std::nullopt});
    if (cur.size() == cap) return;
    for (std::size_t i = from; i < region.size(); ++i) {
      bool ok = true;
      for (auto a : cur) ok = ok && !conf.ll(a, region[i]);
      if (!ok) continue;
      cur.push_back(region[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  for (auto q : region_points(inst, anchor, detail::leader_only_kind(side), frame)) out.push_back({{}, q});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline std::vector<Configuration> compatible(const Instance& inst, const Frame& frame, std::size_t p, std::size_t ell,
                                             std::size_t u, const Configuration& c, Side side, bool prune) {
  const std::size_t anchor = side == Side::Bottom ? ell : u;
  const auto region = region_points(inst, p, label_kind(side), frame);
  const auto e2 = region_points(inst, p, leader_only_kind(side), frame);
  auto in = [](const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); };

  // Region points of p already known to be internal.
  const Scalar yl = frame.fy(inst.points[ell]), yu = frame.fy(inst.points[u]), xp = frame.fx(inst.points[p]);
  std::vector<std::size_t> forced;
  for (auto q : region) {
    const Point& pt = inst.points[q];
    bool slab_right = yl < frame.fy(pt) && frame.fy(pt) < yu && frame.fx(pt) > xp;
    if (slab_right || in(c.internal, q)) forced.push_back(q);
  }
  std::optional<std::size_t> ext;
  if (in(e2, anchor)) {
    ext = anchor;
  } else if (c.external_e2 && in(e2, *c.external_e2)) {
    ext = c.external_e2;
  }

  std::vector<Configuration> out;
  for (auto& cand : enumerate_configurations(inst, p, side, frame, prune)) {
    if (cand.external_e2 != ext) continue;
    bool ok = true;
    for (auto q : forced) ok = ok && in(cand.internal, q);
    if (ok) out.push_back(cand);
  }
  return out;
}

}  // namespace detail

/// Configurations of p's bottom side that agree with what the slab (l,u)
/// and the bottom configuration of l already fix.
inline std::vector<Configuration> compatible_bottom(const Instance& inst, const Frame& frame, std::size_t p,
                                                    std::size_t ell, std::size_t u, const Configuration& c_bottom,
                                                    bool prune = false) {
  return detail::compatible(inst, frame, p, ell, u, c_bottom, Side::Bottom, prune);
}

inline std::vector<Configuration> compatible_top(const Instance& inst, const Frame& frame, std::size_t p,
                                                 std::size_t ell, std::size_t u, const Configuration& c_top,
                                                 bool prune = false) {
  return detail::compatible(inst, frame, p, ell, u, c_top, Side::Top, prune);
}

/// Frame-rightmost slab point whose label meets a label of c's internal
/// points or is hit by the leader of c's external point or of a region point
/// of the anchor left out of c.
inline std::optional<std::size_t> rightmost_conflict(const Instance& inst, const Frame& frame, std::size_t ell,
                                                     std::size_t u, const Configuration& c, Side side) {
  const std::size_t anchor = side == Side::Bottom ? ell : u;
  const auto conf = Conflicts::build(inst, frame.dir());
  std::vector<std::size_t> leaders;
  if (c.external_e2) leaders.push_back(*c.external_e2);
  for (auto q : region_points(inst, anchor, detail::label_kind(side), frame))
    if (std::find(c.internal.begin(), c.internal.end(), q) == c.internal.end()) leaders.push_back(q);

  const Scalar yl = frame.fy(inst.points[ell]), yu = frame.fy(inst.points[u]);
  std::optional<std::size_t> best;
  for (std::size_t q = 0; q < inst.size(); ++q) {
    const Scalar y = frame.fy(inst.points[q]);
    if (!(yl < y && y < yu)) continue;
    bool hit = false;
    for (auto a : c.internal) hit = hit || (a != q && conf.ll(a, q));
    for (auto a : leaders) hit = hit || (a != q && conf.rh(a, q));
    if (!hit) continue;
    if (!best || frame.fx(inst.points[q]) > frame.fx(inst.points[*best])) best = q;
  }
  return best;
}

/// The cost-model polynomial: nine terms in n and delta with the
/// orientation's starred exponents.
inline Integer iota_estimate(long n, long delta, const Frame& frame) {
  if (n < 1 || delta < 1) throw DomainError("iota needs n >= 1 and delta >= 1");
  const auto x = exponents_for(frame);
  auto pw = [](long b, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  const int e1 = x.e_prime, f1 = x.f_prime, es = x.e_star, fs = x.f_star;
  return pw(n, 2 * e1 + 2 * f1) + pw(n, 2 * e1 + f1) * pw(delta, fs) + pw(n, e1 + 2 * f1) * pw(delta, es) +
         pw(n, e1 + f1) * pw(delta, es + fs) + pw(n, 2 * e1) * pw(delta, 2 * fs) + pw(n, 2 * f1) * pw(delta, 2 * es) +
         pw(n, e1) * pw(delta, es + 2 * fs) + pw(n, f1) * pw(delta, 2 * es + fs) + pw(delta, 2 * es + 2 * fs);
}

}  // namespace mixlabel
