#pragma once

// Seeded random instances with a minimum point distance.

#include "instance.hpp"

#include <random>

namespace mixlabel {

struct GenOptions {
  std::size_t n = 10;
  std::uint64_t seed = 1;
  Scalar dmin{1, 2};
  Scalar box{10};           // points in [0, box]^2
  long resolution = 1000;   // coordinates are multiples of 1/resolution
  std::size_t attempts_per_point = 10000;
};

inline Instance generate(const GenOptions& opt) {
  if (opt.n == 0) throw DomainError("n must be positive");
  if (opt.dmin < 0 || opt.box <= 0 || opt.resolution <= 0) throw DomainError("bad generator parameters");
  std::mt19937_64 rng(opt.seed);
  const Scalar steps_q = opt.box * opt.resolution;
  const Integer steps = steps_q.get_num() / steps_q.get_den();
  if (steps > Integer(std::numeric_limits<long>::max())) throw DomainError("box too large for the resolution");
  std::uniform_int_distribution<long> coord(0, steps.get_si());
  const Scalar d2 = opt.dmin * opt.dmin;
  Instance inst;
  for (std::size_t i = 0; i < opt.n; ++i) {
    bool placed = false;
    for (std::size_t a = 0; a < opt.attempts_per_point && !placed; ++a) {
      Point p(Scalar(coord(rng), opt.resolution), Scalar(coord(rng), opt.resolution));
      bool ok = true;
      for (const auto& q : inst.points) {
        Point v = p - q;
        if (dot(v, v) < d2 || (v.x == 0 && v.y == 0)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        inst.points.push_back(p);
        placed = true;
      }
    }
    if (!placed) throw DomainError("could not place " + std::to_string(opt.n) + " points at distance >= " +
                                   opt.dmin.get_str() + " in the box");
  }
  return inst;
}

}  // namespace mixlabel
