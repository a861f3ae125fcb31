#pragma once

// Orientation sweep: the optimum is constant between consecutive critical
// directions, so one solve per interval covers every slope.

#include "solver_general.hpp"

#include <algorithm>
#include <thread>

namespace mixlabel {

/// All directions of lines through two label corners, both ways, plus the
/// directions through pairs of points; deduplicated and sorted by angle.
inline std::vector<Direction> critical_directions(const Instance& inst) {
  std::vector<Point> corners;
  for (std::size_t i = 0; i < inst.size(); ++i)
    for (auto& c : inst.label(i).corners()) corners.push_back(c);
  std::sort(corners.begin(), corners.end(), [](const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  corners.erase(std::unique(corners.begin(), corners.end(),
                            [](const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }),
                corners.end());
  std::vector<Direction> out;
  auto add = [&](const Point& a, const Point& b) {
    Point v = b - a;
    out.emplace_back(v.x, v.y);
    out.emplace_back(-v.x, -v.y);
  };
  for (std::size_t i = 0; i < corners.size(); ++i)
    for (std::size_t j = i + 1; j < corners.size(); ++j) add(corners[i], corners[j]);
  for (std::size_t i = 0; i < inst.size(); ++i)
    for (std::size_t j = i + 1; j < inst.size(); ++j) add(inst.points[i], inst.points[j]);
  std::sort(out.begin(), out.end(), angle_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct SlopeInterval {
  Direction lo;
  Direction hi;
  Direction representative;
  std::optional<long long> value;  // nullopt: infeasible throughout
};

struct SweepResult {
  std::vector<SlopeInterval> intervals;
  std::size_t argmax = 0;

  const SlopeInterval& best() const { return intervals.at(argmax); }
};

/// Primitive-vector sum of two directions less than pi apart: strictly
/// between them.
inline Direction mediant(const Direction& a, const Direction& b) {
  return Direction(Scalar(a.dx() + b.dx()), Scalar(a.dy() + b.dy()));
}

/// One interval per pair of angularly consecutive critical directions
/// (counterclockwise from lo to hi), solved at the mediant.
inline SweepResult sweep_solve(const Instance& inst, unsigned threads = 0) {
  const auto dirs = critical_directions(inst);
  SweepResult res;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const auto& lo = dirs[i];
    const auto& hi = dirs[(i + 1) % dirs.size()];
    res.intervals.push_back({lo, hi, mediant(lo, hi), std::nullopt});
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(res.intervals.size()));
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < res.intervals.size(); i += threads) {
      try {
        res.intervals[i].value = solve_general(inst, res.intervals[i].representative).optimum;
      } catch (const Infeasible&) {
        res.intervals[i].value = std::nullopt;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
  }
  std::optional<long long> best;
  for (std::size_t i = 0; i < res.intervals.size(); ++i) {
    const auto& v = res.intervals[i].value;
    if (v && (!best || *v > *best)) {
      best = v;
      res.argmax = i;
    }
  }
  if (!best) throw Infeasible("no leader direction admits a valid labeling");
  return res;
}

}  // namespace mixlabel
