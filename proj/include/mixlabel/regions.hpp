#pragma once

// Influence regions of an anchor point, decided exactly as the feasibility
// of a handful of linear constraints on the anchor of a witness label.

#include "frame.hpp"

#include <vector>

namespace mixlabel {

enum class RegionKind {
  BottomLabel,       // E
  BottomLeader,      // E′
  BottomLeaderOnly,  // E″ = E′ \ E
  TopLabel,          // F
  TopLeader,         // F′
  TopLeaderOnly,     // F″ = F′ \ F
};

namespace lin {

/// a·X + b·Y + c < 0 (strict) or ≤ 0.
struct Constraint {
  Scalar a;
  Scalar b;
  Scalar c;
  bool strict = true;

  Constraint negated() const { return {-a, -b, -c, !strict}; }
};

/// Exact Fourier–Motzkin feasibility for two variables with mixed
/// strict and non-strict inequalities.
inline bool feasible(const std::vector<Constraint>& cs) {
  std::vector<Constraint> pos, neg, rest;
  for (const auto& k : cs) {
    if (k.a > 0) pos.push_back(k);
    else if (k.a < 0) neg.push_back(k);
    else rest.push_back(k);
  }
  for (const auto& p : pos) {
    for (const auto& n : neg) {
      Scalar mp = -n.a, mn = p.a;
      rest.push_back({0, mp * p.b + mn * n.b, mp * p.c + mn * n.c, p.strict || n.strict});
    }
  }
  // One variable left.
  std::vector<Constraint> ypos, yneg;
  for (const auto& k : rest) {
    if (k.b > 0) ypos.push_back(k);
    else if (k.b < 0) yneg.push_back(k);
    else if (k.strict ? !(k.c < 0) : !(k.c <= 0)) return false;
  }
  for (const auto& p : ypos) {
    for (const auto& n : yneg) {
      Scalar c = -n.b * p.c + p.b * n.c;
      bool strict = p.strict || n.strict;
      if (strict ? !(c < 0) : !(c <= 0)) return false;
    }
  }
  return true;
}

/// Affine function of the witness anchor (X, Y).
struct Affine {
  Scalar a;
  Scalar b;
  Scalar c;
  friend Affine operator-(const Affine& u, const Affine& v) { return {u.a - v.a, u.b - v.b, u.c - v.c}; }
};

inline Constraint less_than_zero(const Affine& f, bool strict = true) { return {f.a, f.b, f.c, strict}; }

/// Constraints (all strict) expressing "ray hits the open label whose
/// anchor is (X, Y) + offset". With fixed_label set, the label is fixed
/// and the ray origin is (X, Y) + offset instead.
inline std::vector<Constraint> ray_hits_label(const Point& ray_origin, const Direction& d, const Point& label_anchor,
                                              const Scalar& w, const Scalar& h, bool witness_is_label) {
  // Parameter along the ray where it crosses coordinate value v on an axis:
  //   t = (v − o) / d_axis; both v and o may depend on the witness.
  std::vector<Affine> lower, upper;
  std::vector<Constraint> out;
  auto axis = [&](int ax) {
    const Integer& dd = ax == 0 ? d.dx() : d.dy();
    Scalar o = ax == 0 ? ray_origin.x : ray_origin.y;
    Scalar lo = ax == 0 ? label_anchor.x : label_anchor.y;
    Scalar size = ax == 0 ? w : h;
    // The witness coordinate moves the label (witness_is_label) or the origin.
    Affine wit{ax == 0 ? Scalar(1) : Scalar(0), ax == 0 ? Scalar(0) : Scalar(1), 0};
    Affine v0{0, 0, lo}, v1{0, 0, lo + size}, org{0, 0, o};
    if (witness_is_label) {
      v0 = {wit.a, wit.b, lo};
      v1 = {wit.a, wit.b, lo + size};
    } else {
      org = {wit.a, wit.b, o};
    }
    if (dd == 0) {
      out.push_back(less_than_zero(v0 - org));
      out.push_back(less_than_zero(org - v1));
      return;
    }
    Scalar inv = Scalar(1) / Scalar(dd);
    auto scaled = [&](const Affine& f) { return Affine{f.a * inv, f.b * inv, f.c * inv}; };
    Affine t0 = scaled(v0 - org), t1 = scaled(v1 - org);
    if (dd > 0) {
      lower.push_back(t0);
      upper.push_back(t1);
    } else {
      lower.push_back(t1);
      upper.push_back(t0);
    }
  };
  axis(0);
  axis(1);
  for (const auto& lo : lower)
    for (const auto& hi : upper) out.push_back(less_than_zero(lo - hi));
  for (const auto& hi : upper) out.push_back(less_than_zero(Affine{-hi.a, -hi.b, -hi.c}));
  return out;
}

}  // namespace lin

/// Label dimensions used by the region tests (unit squares after scaling).
struct LabelSize {
  Scalar w{1};
  Scalar h{1};
};

/// Membership of q in the influence region of `anchor`. A bottom region
/// holds points below the anchor's leader whose label (E) or leader (E′)
/// can meet the label of some location x strictly above that leader and
/// frame-left of the anchor, where x's label avoids the anchor's leader.
/// Top regions mirror this above the anchor.
inline bool in_influence_region(const Point& q, const Point& anchor, RegionKind kind, const Frame& frame,
                                const LabelSize& size = {}) {
  if (kind == RegionKind::BottomLeaderOnly) {
    return in_influence_region(q, anchor, RegionKind::BottomLeader, frame, size) &&
           !in_influence_region(q, anchor, RegionKind::BottomLabel, frame, size);
  }
  if (kind == RegionKind::TopLeaderOnly) {
    return in_influence_region(q, anchor, RegionKind::TopLeader, frame, size) &&
           !in_influence_region(q, anchor, RegionKind::TopLabel, frame, size);
  }
  const bool bottom = kind == RegionKind::BottomLabel || kind == RegionKind::BottomLeader;
  const bool leader = kind == RegionKind::BottomLeader || kind == RegionKind::TopLeader;
  const Direction& d = frame.dir();
  const LeaderRay anchor_ray{anchor, d};

  // The query must lie strictly on the proper side of the anchor's leader line.
  Scalar yq = frame.fy(q), ya = frame.fy(anchor);
  if (bottom ? !(yq < ya) : !(yq > ya)) return false;
  if (!leader && ray_hits_rect(anchor_ray, Rect(q, size.w, size.h))) return false;

  std::vector<lin::Constraint> base;
  // Frame-side of the witness: ỹ(x) − ỹ(anchor) > 0 (bottom) / < 0 (top).
  Scalar dy(d.dy()), dx(d.dx());
  lin::Affine fy{dy, -dx, -ya};
  base.push_back(lin::less_than_zero(bottom ? lin::Affine{-fy.a, -fy.b, -fy.c} : fy));
  // Frame-left: x̃(x) < x̃(anchor).
  base.push_back(lin::less_than_zero(lin::Affine{-dx, -dy, -frame.fx(anchor)}));

  if (leader) {
    auto hit = lin::ray_hits_label(q, d, Point{0, 0}, size.w, size.h, true);
    base.insert(base.end(), hit.begin(), hit.end());
  } else {
    // Open overlap of the witness label with q's label.
    base.push_back({1, 0, -(q.x + size.w), true});
    base.push_back({-1, 0, q.x - size.w, true});
    base.push_back({0, 1, -(q.y + size.h), true});
    base.push_back({0, -1, q.y - size.h, true});
  }

  // Witness label must miss the anchor's leader: one hit constraint fails.
  auto anchor_hit = lin::ray_hits_label(anchor, d, Point{0, 0}, size.w, size.h, true);
  for (const auto& k : anchor_hit) {
    auto sys = base;
    sys.push_back(k.negated());
    if (lin::feasible(sys)) return true;
  }
  return false;
}

}  // namespace mixlabel
