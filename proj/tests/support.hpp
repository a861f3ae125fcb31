#pragma once

// Shared helpers for the unit tests and the acceptance runner.

#include "mixlabel/mixlabel.hpp"

#include <numbers>
#include <random>

namespace mixlabel::testing {

inline Point pt(long x, long y) { return {Scalar(x), Scalar(y)}; }
inline Point ptq(long xn, long xd, long yn, long yd) { return {Scalar(xn, xd), Scalar(yn, yd)}; }

inline Instance make(std::vector<Point> pts) {
  Instance inst;
  inst.points = std::move(pts);
  return inst;
}

/// Random instance with coordinates on a 1/1000 grid in [0, box]^2 and
/// pairwise distance at least dmin.
inline Instance random_instance(std::mt19937_64& rng, std::size_t n, const Scalar& dmin, long box = 4) {
  GenOptions g;
  g.n = n;
  g.seed = rng();
  g.dmin = dmin;
  g.box = box;
  return generate(g);
}

/// The ten directions of the equivalence corpus, one per orientation class.
inline std::vector<Direction> corpus_directions() {
  const double pi = std::numbers::pi;
  std::vector<Direction> out;
  for (double t : {0.0, pi / 8, 3 * pi / 8, pi / 2, 5 * pi / 8, pi, 1.3 * pi, 3 * pi / 2, 1.6 * pi, 1.85 * pi})
    out.push_back(direction_from_theta(t));
  return out;
}

/// Region conformance for one leader direction: the members of E(anchor)
/// among `queries` must fit in a box of 1 x e or e x 1, those of F in
/// 1 x f or f x 1. Returns a description of the first failure.
struct RegionCheck {
  std::size_t samples = 0;
  std::optional<std::string> failure;
};

inline bool fits(const Scalar& w, const Scalar& h, int k) {
  if (k == 0) return false;
  return (w <= k && h <= 1) || (w <= 1 && h <= k);
}

inline void check_regions(const Frame& regions, const OrientationExponents& table, const Point& anchor,
                          const std::vector<Point>& queries, RegionCheck& out) {
  for (int side = 0; side < 2; ++side) {
    const RegionKind kind = side == 0 ? RegionKind::BottomLabel : RegionKind::TopLabel;
    const int bound = side == 0 ? table.e : table.f;
    std::optional<Scalar> x0, x1, y0, y1;
    for (const auto& q : queries) {
      ++out.samples;
      if (!in_influence_region(q, anchor, kind, regions)) continue;
      if (!x0 || q.x < *x0) x0 = q.x;
      if (!x1 || q.x > *x1) x1 = q.x;
      if (!y0 || q.y < *y0) y0 = q.y;
      if (!y1 || q.y > *y1) y1 = q.y;
    }
    if (!x0 || out.failure) continue;
    const Scalar w = *x1 - *x0, h = *y1 - *y0;
    if (!fits(w, h, bound))
      out.failure = std::string(side == 0 ? "E" : "F") + " extent " + std::to_string(w.get_d()) + " x " +
                    std::to_string(h.get_d()) + " exceeds bound " + std::to_string(bound) + " at direction " +
                    regions.dir().to_string();
  }
}

/// Samples `per_theta` random queries around a random anchor for each of
/// `thetas`. With `flipped`, regions use d = (-cos, -sin) while the tables
/// stay indexed by theta.
inline RegionCheck region_conformance(std::mt19937_64& rng, const std::vector<double>& thetas, std::size_t per_theta,
                                      bool flipped) {
  RegionCheck out;
  std::uniform_int_distribution<long> c(-4000, 4000);
  for (double t : thetas) {
    const Frame table_frame(direction_from_theta(t));
    const double tf = t == 0 ? 0 : 2 * std::numbers::pi - t;
    const Frame region_frame(flipped ? direction_from_theta(tf) : direction_from_theta(t));
    const Point anchor(Scalar(c(rng), 1000), Scalar(c(rng), 1000));
    std::vector<Point> qs;
    for (std::size_t i = 0; i < per_theta; ++i)
      qs.push_back({anchor.x + Scalar(c(rng), 1000), anchor.y + Scalar(c(rng), 1000)});
    check_regions(region_frame, exponents_for(table_frame), anchor, qs, out);
  }
  return out;
}

/// Two exact axis angles and two random angles in each eighth of the circle.
inline std::vector<double> stratified_thetas(std::mt19937_64& rng, int per_cell = 2) {
  std::vector<double> out;
  std::uniform_real_distribution<double> u(0.02, 0.98);
  const double q = std::numbers::pi / 4;
  for (int k = 0; k < 8; ++k) {
    out.push_back(k * q);
    for (int i = 0; i < per_cell; ++i) out.push_back((k + u(rng)) * q);
  }
  return out;
}

}  // namespace mixlabel::testing
