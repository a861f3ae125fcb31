#pragma once

// One-call pipeline: scale to unit labels, run the obstacle fixpoint, pick a
// solver, then route externals and check the result.

#include "preprocess.hpp"
#include "routing.hpp"
#include "solver_general.hpp"
#include "solver_left.hpp"
#include "validity.hpp"

#include <string>

namespace mixlabel {

enum class Mode { Auto, Left, General };

inline Mode parse_mode(const std::string& s) {
  if (s == "auto") return Mode::Auto;
  if (s == "left") return Mode::Left;
  if (s == "general") return Mode::General;
  throw DomainError("unknown mode '" + s + "' (auto, left, general)");
}

inline bool is_left_direction(const Direction& d) { return d == Direction(-1, 0); }

struct Solution {
  Labeling labeling;
  long long optimum = 0;
  std::string solver;  // "left" or "general"
  PreprocessReport obstacles;
};

/// Labels are assumed w x h everywhere; the solvers see the scaled copy.
inline Solution solve_instance(const Instance& inst, const Direction& d, Mode mode = Mode::Auto,
                               GeneralOptions opt = {}) {
  inst.validate();
  const bool scale = !inst.unit_labels();
  const Instance work = scale ? scale_instance(inst, inst.label_w, inst.label_h) : inst;
  const Direction wd = scale ? scale_direction(d, inst.label_w, inst.label_h) : d;
  Solution s;
  s.obstacles = obstacle_fixpoint(work, wd);
  s.obstacles.scaled = scale;
  const bool left = mode == Mode::Left || (mode == Mode::Auto && is_left_direction(wd));
  if (left && !is_left_direction(wd)) throw DomainError("the left solver needs direction (-1,0), i.e. theta = 0");
  SolveResult r = left ? solve_left(work) : solve_general(work, wd, opt);
  s.labeling = r.labeling;
  s.optimum = r.optimum;
  s.solver = left ? "left" : "general";
  return s;
}

/// Validity of the labeling and, when given, of its routed external labels.
inline std::optional<std::string> check_labeling(const Instance& inst, const Labeling& lab, const Direction& d,
                                                 const std::vector<RoutedExternal>* routes = nullptr) {
  if (auto v = is_valid(inst, lab, d); !v) return v.violation->describe();
  if (!routes) return std::nullopt;
  Routing r;
  r.externals = *routes;
  if (auto o = routed_overlap(r)) {
    return "external-labels-overlap " + std::to_string(o->first) + " " + std::to_string(o->second);
  }
  std::vector<char> seen(inst.size(), 0);
  for (const auto& e : *routes) {
    if (e.index >= inst.size() || seen[e.index]) return "bad-route-index " + std::to_string(e.index);
    seen[e.index] = 1;
    if (std::find(lab.external.begin(), lab.external.end(), e.index) == lab.external.end())
      return "route-for-internal-point " + std::to_string(e.index);
  }
  return std::nullopt;
}

}  // namespace mixlabel
