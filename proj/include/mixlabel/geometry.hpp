#pragma once

// Exact planar primitives: rational scalars, points, leader directions,
// axis-aligned label rectangles, leader rays and the open-interior
// intersection predicates used by every other layer.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixlabel {

using Scalar = mpq_class;
using Integer = mpz_class;

/// Thrown when an input lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// No valid labeling exists (e.g. a point buried in an obstacle).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int sign(const Scalar& v) { return sgn(v); }
inline int sign(const Integer& v) { return sgn(v); }

struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {
    x.canonicalize();
    y.canonicalize();
  }

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
};

inline Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

/// A nonzero direction stored as a primitive integer vector, so two
/// directions compare equal iff they point the same way.
class Direction {
 public:
  Direction(const Scalar& dx, const Scalar& dy) {
    if (dx == 0 && dy == 0) throw DomainError("zero direction vector");
    Integer den = lcm(dx.get_den(), dy.get_den());
    Integer ix = dx.get_num() * (den / dx.get_den());
    Integer iy = dy.get_num() * (den / dy.get_den());
    Integer g = gcd(ix, iy);
    dx_ = ix / g;
    dy_ = iy / g;
  }

  const Integer& dx() const { return dx_; }
  const Integer& dy() const { return dy_; }
  Point as_point() const { return {Scalar(dx_), Scalar(dy_)}; }

  Direction reversed() const { return Direction(Scalar(-dx_), Scalar(-dy_)); }

  /// Approximate angle of the vector in the usual counterclockwise sense.
  double atan2() const { return std::atan2(dy_.get_d(), dx_.get_d()); }

  /// Leader slope in the clockwise-from-negative-x convention, in [0, 2π).
  double theta() const {
    double t = std::atan2(dy_.get_d(), -dx_.get_d());
    if (t < 0) t += 2 * std::numbers::pi;
    if (t >= 2 * std::numbers::pi) t -= 2 * std::numbers::pi;
    return t;
  }

  friend bool operator==(const Direction& a, const Direction& b) {
    return a.dx_ == b.dx_ && a.dy_ == b.dy_;
  }

  std::string to_string() const { return dx_.get_str() + "," + dy_.get_str(); }

 private:
  Integer dx_;
  Integer dy_;
};

/// Half of the direction circle a vector falls in, for exact angular sorting.
inline int half_plane(const Integer& x, const Integer& y) {
  return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
}

/// Strict counterclockwise angular order starting at the positive x axis.
inline bool angle_less(const Direction& a, const Direction& b) {
  int ha = half_plane(a.dx(), a.dy());
  int hb = half_plane(b.dx(), b.dy());
  if (ha != hb) return ha < hb;
  return a.dx() * b.dy() - a.dy() * b.dx() > 0;
}

/// Exact rational value of a double (every finite double is dyadic).
inline Scalar exact_from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite coordinate");
  Scalar s(v);
  s.canonicalize();
  return s;
}

/// Leader travel direction for slope theta, d(θ) = (−cos θ, sin θ).
/// Multiples of π/4 within 1e-12 snap to the exact axis and diagonal
/// vectors; other angles use the binary values of cos/sin, whose relative
/// error is far below 1e-12.
inline Direction direction_from_theta(double theta) {
  constexpr double two_pi = 2 * std::numbers::pi;
  if (!(theta >= 0.0) || !(theta < two_pi)) throw DomainError("theta outside [0, 2pi)");
  const double eighth = std::numbers::pi / 4;
  double k = std::round(theta / eighth);
  if (std::abs(theta - k * eighth) < 1e-12) {
    static constexpr int vx[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
    static constexpr int vy[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    const int i = static_cast<int>(k) % 8;
    return Direction(vx[i], vy[i]);
  }
  return Direction(exact_from_double(-std::cos(theta)), exact_from_double(std::sin(theta)));
}

/// Axis-aligned rectangle anchored at its lower-left corner.
struct Rect {
  Point anchor;
  Scalar w{1};
  Scalar h{1};

  Rect() = default;
  Rect(Point a, Scalar width, Scalar height) : anchor(std::move(a)), w(std::move(width)), h(std::move(height)) {
    if (w <= 0 || h <= 0) throw DomainError("rectangle needs positive width and height");
  }

  Scalar x0() const { return anchor.x; }
  Scalar y0() const { return anchor.y; }
  Scalar x1() const { return anchor.x + w; }
  Scalar y1() const { return anchor.y + h; }

  std::vector<Point> corners() const {
    return {anchor, {x1(), y0()}, {x1(), y1()}, {x0(), y1()}};
  }

  friend bool operator==(const Rect& a, const Rect& b) {
    return a.anchor == b.anchor && a.w == b.w && a.h == b.h;
  }
};

struct LeaderRay {
  Point origin;
  Direction dir;
};

/// Positive-area overlap; shared edges and corners do not count.
inline bool rects_overlap(const Rect& a, const Rect& b) {
  return a.x0() < b.x1() && b.x0() < a.x1() && a.y0() < b.y1() && b.y0() < a.y1();
}

/// Closed containment of a point in a rectangle.
inline bool rect_contains_closed(const Rect& r, const Point& p) {
  return r.x0() <= p.x && p.x <= r.x1() && r.y0() <= p.y && p.y <= r.y1();
}

inline bool rect_contains_open(const Rect& r, const Point& p) {
  return r.x0() < p.x && p.x < r.x1() && r.y0() < p.y && p.y < r.y1();
}

namespace detail {

/// Parameter window {t : lo < t < hi} of a ray against one open slab
/// (a < coord < b). Empty when the ray runs parallel outside the slab.
struct TWindow {
  bool empty = false;
  std::optional<Scalar> lo;  // nullopt = -inf
  std::optional<Scalar> hi;  // nullopt = +inf
};

inline TWindow slab_window(const Scalar& origin, const Integer& d, const Scalar& a, const Scalar& b) {
  TWindow w;
  if (d == 0) {
    w.empty = !(a < origin && origin < b);
    return w;
  }
  Scalar dd(d);
  Scalar ta = (a - origin) / dd;
  Scalar tb = (b - origin) / dd;
  if (d > 0) {
    w.lo = ta;
    w.hi = tb;
  } else {
    w.lo = tb;
    w.hi = ta;
  }
  return w;
}

}  // namespace detail

/// True iff the ray meets the open interior of t. An origin strictly
/// inside t is a hit; grazing an edge or a corner is not.
inline bool ray_hits_rect(const LeaderRay& r, const Rect& t) {
  auto wx = detail::slab_window(r.origin.x, r.dir.dx(), t.x0(), t.x1());
  auto wy = detail::slab_window(r.origin.y, r.dir.dy(), t.y0(), t.y1());
  if (wx.empty || wy.empty) return false;
  std::optional<Scalar> lo = wx.lo;
  if (wy.lo && (!lo || *wy.lo > *lo)) lo = wy.lo;
  std::optional<Scalar> hi = wx.hi;
  if (wy.hi && (!hi || *wy.hi < *hi)) hi = wy.hi;
  if (hi && *hi <= 0) return false;
  if (lo && hi && !(*lo < *hi)) return false;
  return true;
}

/// Two parallel leaders conflict iff they lie on a common line.
inline bool rays_conflict(const LeaderRay& a, const LeaderRay& b) {
  if (!(a.dir == b.dir)) throw ContractViolation("rays_conflict needs parallel leaders");
  return cross(b.origin - a.origin, a.dir.as_point()) == 0;
}

/// True iff the ray passes through point q (q != origin).
inline bool ray_through_point(const LeaderRay& r, const Point& q) {
  Point v = q - r.origin;
  if (v.x == 0 && v.y == 0) return false;
  return cross(v, r.dir.as_point()) == 0 && dot(v, r.dir.as_point()) > 0;
}

// ---------------------------------------------------------------------------
// Polygons (map outline and obstacles).

using Polygon = std::vector<Point>;

inline Scalar signed_area2(const Polygon& poly) {
  Scalar a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    a += cross(poly[i], poly[(i + 1) % poly.size()]);
  }
  return a;
}

inline int orient(const Point& a, const Point& b, const Point& c) { return sign(cross(b - a, c - a)); }

/// Convex polygon test (collinear vertices tolerated, nonzero area required).
inline bool is_convex(const Polygon& poly) {
  if (poly.size() < 3) return false;
  int s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    int o = orient(poly[i], poly[(i + 1) % poly.size()], poly[(i + 2) % poly.size()]);
    if (o == 0) continue;
    if (s == 0) s = o;
    else if (o != s) return false;
  }
  return s != 0;
}

/// Strict interior test for a simple polygon (crossing number, exact).
inline bool point_in_polygon_open(const Polygon& poly, const Point& p) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if (orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y)) {
      return false;  // on the boundary
    }
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      Scalar xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

using Triangle = std::array<Point, 3>;

/// Ear-clipping triangulation of a simple polygon (either orientation).
inline std::vector<Triangle> triangulate(Polygon poly) {
  if (poly.size() < 3) throw DomainError("polygon needs at least 3 vertices");
  if (signed_area2(poly) < 0) std::reverse(poly.begin(), poly.end());
  if (signed_area2(poly) == 0) throw DomainError("degenerate polygon");
  std::vector<Triangle> out;
  std::vector<std::size_t> idx(poly.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::size_t guard = 0;
  while (idx.size() > 3 && guard < 10 * poly.size() * poly.size()) {
    ++guard;
    bool clipped = false;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Point& a = poly[idx[(k + idx.size() - 1) % idx.size()]];
      const Point& b = poly[idx[k]];
      const Point& c = poly[idx[(k + 1) % idx.size()]];
      if (orient(a, b, c) <= 0) continue;
      bool blocked = false;
      for (std::size_t m = 0; m < idx.size() && !blocked; ++m) {
        const Point& q = poly[idx[m]];
        if (q == a || q == b || q == c) continue;
        blocked = orient(a, b, q) >= 0 && orient(b, c, q) >= 0 && orient(c, a, q) >= 0;
      }
      if (blocked) continue;
      out.push_back({a, b, c});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
      break;
    }
    if (!clipped) {
      // Only collinear remnants left; drop a flat vertex.
      bool dropped = false;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const Point& a = poly[idx[(k + idx.size() - 1) % idx.size()]];
        const Point& b = poly[idx[k]];
        const Point& c = poly[idx[(k + 1) % idx.size()]];
        if (orient(a, b, c) == 0) {
          idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
          dropped = true;
          break;
        }
      }
      if (!dropped) throw DomainError("polygon is not simple");
    }
  }
  if (idx.size() == 3 && orient(poly[idx[0]], poly[idx[1]], poly[idx[2]]) > 0) {
    out.push_back({poly[idx[0]], poly[idx[1]], poly[idx[2]]});
  }
  return out;
}

namespace detail {

/// Separating-axis test for open interiors of two convex point sets.
inline bool convex_interiors_meet(const std::vector<Point>& a, const std::vector<Point>& b) {
  auto separated_by = [](const std::vector<Point>& s, const std::vector<Point>& t) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Point e = s[(i + 1) % s.size()] - s[i];
      Point nrm{-e.y, e.x};
      Scalar smin = dot(nrm, s[0]), smax = smin;
      for (const auto& p : s) {
        Scalar v = dot(nrm, p);
        if (v < smin) smin = v;
        if (v > smax) smax = v;
      }
      Scalar tmin = dot(nrm, t[0]), tmax = tmin;
      for (const auto& p : t) {
        Scalar v = dot(nrm, p);
        if (v < tmin) tmin = v;
        if (v > tmax) tmax = v;
      }
      if (smax <= tmin || tmax <= smin) return true;
    }
    return false;
  };
  return !separated_by(a, b) && !separated_by(b, a);
}

}  // namespace detail

/// Open-interior intersection of a rectangle and a simple polygon.
inline bool rect_hits_polygon(const Rect& r, const std::vector<Triangle>& tris) {
  auto rc = r.corners();
  for (const auto& t : tris) {
    if (detail::convex_interiors_meet(rc, {t[0], t[1], t[2]})) return true;
  }
  return false;
}

/// Open-interior intersection of a leader ray and a simple polygon. The
/// ray is cut at every crossing with the boundary and one sample point per
/// piece is tested, so a ray running along a diagonal is still seen.
inline bool ray_hits_polygon(const LeaderRay& r, const Polygon& poly) {
  const Point d = r.dir.as_point();
  std::vector<Scalar> ts{Scalar(0)};
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    Point e = b - a;
    Scalar den = cross(d, e);
    if (den == 0) {
      // Parallel edge: only its endpoints can be breakpoints.
      for (const Point* v : {&a, &b}) {
        Point w = *v - r.origin;
        if (cross(w, d) == 0) {
          Scalar t = dot(w, d) / dot(d, d);
          if (t > 0) ts.push_back(t);
        }
      }
      continue;
    }
    Point w = a - r.origin;
    Scalar t = cross(w, e) / den;
    Scalar s = cross(w, d) / den;
    if (t > 0 && s >= 0 && s <= 1) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  auto at = [&](const Scalar& t) { return Point{r.origin.x + t * d.x, r.origin.y + t * d.y}; };
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (point_in_polygon_open(poly, at((ts[i] + ts[i + 1]) / 2))) return true;
  }
  return point_in_polygon_open(poly, at(ts.back() + 1));
}

}  // namespace mixlabel
