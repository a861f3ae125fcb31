#pragma once

// The rotated frame in which the leader direction is the negative x axis,
// slab membership, and the per-orientation size bounds of the influence
// regions.

#include "geometry.hpp"

#include <algorithm>
#include <array>

namespace mixlabel {

/// Frame coordinates up to a common positive scale |d|:
///   x̃(p) = −⟨p, d⟩,  ỹ(p) = ⟨p, (d_y, −d_x)⟩.
/// At d = (−1, 0) this is the identity; x̃ decreases along the leaders.
class Frame {
 public:
  explicit Frame(Direction d) : dir_(std::move(d)) {}

  const Direction& dir() const { return dir_; }

  Scalar fx(const Point& p) const { return -(p.x * dir_.dx() + p.y * dir_.dy()); }
  Scalar fy(const Point& p) const { return p.x * dir_.dy() - p.y * dir_.dx(); }

  /// The frame mirrored in the line y = x (swap coordinates of everything).
  Frame mirrored() const { return Frame(Direction(Scalar(dir_.dy()), Scalar(dir_.dx()))); }

  /// Orientation cell: 2k for θ = kπ/4 exactly, 2k+1 for θ in (kπ/4, (k+1)π/4).
  int cell() const {
    // (−d_x, d_y) has counterclockwise angle θ.
    const Integer wx = -dir_.dx();
    const Integer wy = dir_.dy();
    static const std::array<std::array<int, 2>, 8> compass{
        {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
    for (int k = 0; k < 8; ++k) {
      const auto& b = compass[static_cast<std::size_t>(k)];
      const auto& c = compass[static_cast<std::size_t>((k + 1) % 8)];
      Integer cb = b[0] * wy - b[1] * wx;
      Integer db = b[0] * wx + b[1] * wy;
      if (cb == 0 && db > 0) return 2 * k;
      Integer cc = wx * c[1] - wy * c[0];
      if (cb > 0 && cc > 0) return 2 * k + 1;
    }
    throw ContractViolation("unreachable orientation cell");
  }

 private:
  Direction dir_;
};

/// Slab membership of a point with respect to two anchors ℓ, u.
enum class SlabClass { InS, InClosedSlabRightOfBoth, Outside };

struct SlabQuery {
  Point ell;
  Point u;
  const Frame* frame;
};

/// InS: strictly between the anchors' ỹ and frame-left of both. Points in
/// the slab that are not left of both anchors report InClosedSlabRightOfBoth.
inline SlabClass in_slab(const Point& p, const SlabQuery& q) {
  const Frame& f = *q.frame;
  Scalar yl = f.fy(q.ell), yu = f.fy(q.u), yp = f.fy(p);
  if (!(yl < yu)) throw ContractViolation("slab anchors must satisfy ỹ(ℓ) < ỹ(u)");
  if (yp < yl || yp > yu) return SlabClass::Outside;
  if (yp > yl && yp < yu && f.fx(p) < f.fx(q.ell) && f.fx(p) < f.fx(q.u)) return SlabClass::InS;
  return SlabClass::InClosedSlabRightOfBoth;
}

/// Upper bounds on influence-region sizes for one orientation.
struct OrientationExponents {
  int e = 0;
  int f = 0;
  int e_prime = 0;
  int f_prime = 0;
  int e_star = 0;
  int f_star = 0;

  friend bool operator==(const OrientationExponents&, const OrientationExponents&) = default;
};

inline OrientationExponents exponents_for(const Frame& frame) {
  //                              cell: 0  1  2  3  4  5  6  7  8  9 10 11 12 13 14 15
  static constexpr std::array<int, 16> e{1, 2, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 3, 2, 2};
  static constexpr std::array<int, 16> f{0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 2, 1, 2, 2, 3};
  static constexpr std::array<int, 16> ep{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1};
  static constexpr std::array<int, 16> fp{0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  const auto c = static_cast<std::size_t>(frame.cell());
  OrientationExponents x;
  x.e = e[c];
  x.f = f[c];
  x.e_prime = ep[c];
  x.f_prime = fp[c];
  x.e_star = std::min(1, x.e);
  x.f_star = std::min(1, x.f);
  return x;
}

}  // namespace mixlabel
