#pragma once

// Validity checker for a labeling and the feasibility counter psi.

#include "instance.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <string>

namespace mixlabel {

enum class ViolationKind {
  NotPartition,
  LabelLabel,
  LeaderLabel,
  LeaderLeader,
  PointInObstacle,
  LabelObstacle,
  LeaderObstacle,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotPartition: return "not-a-partition";
    case ViolationKind::LabelLabel: return "label-label";
    case ViolationKind::LeaderLabel: return "leader-label";
    case ViolationKind::LeaderLeader: return "leader-leader";
    case ViolationKind::PointInObstacle: return "point-in-obstacle";
    case ViolationKind::LabelObstacle: return "label-obstacle";
    case ViolationKind::LeaderObstacle: return "leader-obstacle";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::size_t a = 0;  // for LeaderLabel: the external point
  std::size_t b = 0;  // the other point or the obstacle index

  std::string describe() const {
    std::string s = to_string(kind);
    if (kind == ViolationKind::NotPartition) return s;
    return s + " " + std::to_string(a) + " " + std::to_string(b);
  }
};

struct ValidityResult {
  std::optional<Violation> violation;
  explicit operator bool() const { return !violation; }
};

/// Checks the labeling against d. Obstacles of the instance take part.
inline ValidityResult is_valid(const Instance& inst, const Labeling& lab, const Direction& d) {
  const std::size_t n = inst.size();
  auto m = lab.mask(n);
  if (!m) return {Violation{ViolationKind::NotPartition}};
  const auto& in = *m;
  const auto c = Conflicts::build(inst, d);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (in[p] && in[q] && c.ll(p, q)) return {Violation{ViolationKind::LabelLabel, p, q}};
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (!in[p] && in[q] && c.rh(p, q)) return {Violation{ViolationKind::LeaderLabel, p, q}};
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (!in[p] && !in[q] && c.rc(p, q)) return {Violation{ViolationKind::LeaderLeader, p, q}};
  for (std::size_t k = 0; k < inst.obstacles.size(); ++k)
    for (std::size_t p = 0; p < n; ++p)
      if (point_in_polygon_open(inst.obstacles[k].polygon, inst.points[p]))
        return {Violation{ViolationKind::PointInObstacle, p, k}};
  for (std::size_t k = 0; k < inst.obstacles.size(); ++k) {
    const auto& ob = inst.obstacles[k];
    for (std::size_t p = 0; p < n; ++p) {
      if (in[p] && rect_hits_polygon(inst.label(p), ob.triangles))
        return {Violation{ViolationKind::LabelObstacle, p, k}};
      if (!in[p] && ray_hits_polygon(inst.leader(p, d), ob.polygon))
        return {Violation{ViolationKind::LeaderObstacle, p, k}};
    }
  }
  return {};
}

/// Exact count with an absorbing minus-infinity.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Count neg_inf() {
    Count c;
    c.v_ = LLONG_MIN;
    return c;
  }

  constexpr bool is_neg_inf() const { return v_ == LLONG_MIN; }
  constexpr long long value() const { return v_; }

  friend constexpr Count operator+(Count a, Count b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Count(a.v_ + b.v_);
  }
  friend constexpr auto operator<=>(Count a, Count b) = default;

  std::string to_string() const { return is_neg_inf() ? "-inf" : std::to_string(v_); }

 private:
  long long v_ = 0;
};

inline constexpr Count NEG_INFINITY = Count::neg_inf();

/// Labels that must be respected (already internal) and leaders that must
/// be avoided (already external) around a set whose labels are all internal.
struct PsiContext {
  std::vector<Rect> labels;
  std::vector<LeaderRay> leaders;

  static PsiContext from_indices(const Instance& inst, const Direction& d, const std::vector<std::size_t>& internal,
                                 const std::vector<std::size_t>& external) {
    PsiContext ctx;
    for (auto i : internal) ctx.labels.push_back(inst.label(i));
    for (auto i : external) ctx.leaders.push_back(inst.leader(i, d));
    return ctx;
  }
};

/// |P| if every label of P can be placed: pairwise disjoint, disjoint from
/// the context labels and missed by every context leader. NEG_INFINITY
/// otherwise.
inline Count psi(const Instance& inst, const std::vector<std::size_t>& P, const PsiContext& ctx) {
  std::vector<Rect> mine;
  mine.reserve(P.size());
  for (auto i : P) mine.push_back(inst.label(i));
  for (std::size_t a = 0; a < mine.size(); ++a) {
    for (std::size_t b = a + 1; b < mine.size(); ++b)
      if (rects_overlap(mine[a], mine[b])) return NEG_INFINITY;
    for (const auto& r : ctx.labels)
      if (rects_overlap(mine[a], r)) return NEG_INFINITY;
    for (const auto& ray : ctx.leaders)
      if (ray_hits_rect(ray, mine[a])) return NEG_INFINITY;
  }
  return Count(static_cast<long long>(P.size()));
}

}  // namespace mixlabel
