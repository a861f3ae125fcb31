#pragma once

// Exact dynamic program for leaders pointing left (direction (-1, 0)).
// A subproblem is a horizontal slab between two external anchors l < u
// plus at most one internal point r just below l whose label reaches
// into the slab. The rightmost external point of the slab splits it.

#include "validity.hpp"

#include <algorithm>
#include <numeric>

namespace mixlabel {

struct SolveResult {
  long long optimum = 0;
  Labeling labeling;
};

/// Topmost instance point strictly inside the open unit square whose
/// top-left corner is `corner`; -1 if there is none.
inline int topmost_in_unit_square(const Instance& inst, const Point& corner) {
  int best = -1;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Point& q = inst.points[i];
    if (corner.x < q.x && q.x < corner.x + 1 && corner.y - 1 < q.y && q.y < corner.y) {
      if (best < 0 || q.y > inst.points[static_cast<std::size_t>(best)].y) best = static_cast<int>(i);
    }
  }
  return best;
}

class LeftSolver {
 public:
  static constexpr int NONE = -1;

  explicit LeftSolver(const Instance& inst) : inst_(inst) {
    if (!inst.unit_labels()) throw DomainError("left solver needs unit labels; scale the instance first");
    inst.validate();
    n_ = static_cast<int>(inst.size());
    N_ = n_ + 2;
    conf_ = Conflicts::build(inst, Direction(Scalar(-1), Scalar(0)));
    for (int i = 0; i < n_; ++i) {
      if (conf_.buried[static_cast<std::size_t>(i)]) throw Infeasible("point " + std::to_string(i) + " lies inside an obstacle");
    }
    build_world();
    build_orders();
    build_E();
    ll_nb_.assign(static_cast<std::size_t>(n_), {});
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q)
        if (p != q && conf_.ll(static_cast<std::size_t>(p), static_cast<std::size_t>(q))) ll_nb_[static_cast<std::size_t>(p)].push_back(q);
  }

  int bottom_dummy() const { return n_; }
  int top_dummy() const { return n_ + 1; }
  const Point& world(int i) const { return pts_[static_cast<std::size_t>(i)]; }

  /// Points below p (in slab order) whose labels may reach across p's leader.
  const std::vector<int>& E(int p) const { return E_[static_cast<std::size_t>(p)]; }

  /// Topmost point of E(p), or NONE.
  int top_of_E(int p) const { return qp_[static_cast<std::size_t>(p)]; }

  /// Topmost point of E(p) among the points above l and r.
  int rho(int p, int ell, int r) const {
    int q = top_of_E(p);
    if (q != NONE && ry_[static_cast<std::size_t>(q)] > ry_[static_cast<std::size_t>(ell)]) return q;
    if (r != NONE && in_E(p, r)) return r;
    return NONE;
  }

  /// S(l,u): slab points left of both anchors, ordered right to left.
  std::vector<int> S(int ell, int u) const {
    std::vector<int> out;
    for (int q : by_x_desc_)
      if (in_S(q, ell, u)) out.push_back(q);
    return out;
  }

  /// Psi'(p, r) for every p in S(l,u) (order of S()) and every r in
  /// {NONE} followed by E(l).
  std::vector<std::vector<Count>> psi_prime_table(int ell, int u) const {
    Sweep sw = sweep(ell, u);
    const auto& El = E(ell);
    std::vector<std::vector<Count>> out(sw.s.size(), std::vector<Count>(El.size() + 1));
    for (std::size_t j = 0; j <= El.size(); ++j) {
      int r = j == 0 ? NONE : El[j - 1];
      RInfo ri = r_info(sw, ell, u, r);
      for (std::size_t k = 0; k < sw.s.size(); ++k) out[k][j] = psi_prime(sw, ri, k);
    }
    return out;
  }

  SolveResult solve() {
    const std::size_t NN = static_cast<std::size_t>(N_) * static_cast<std::size_t>(N_);
    phi_.assign(NN, {});
    arg_.assign(NN, {});
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> size;
    for (int a = 0; a < N_; ++a)
      for (int b = 0; b < N_; ++b)
        if (ry_[static_cast<std::size_t>(a)] < ry_[static_cast<std::size_t>(b)]) {
          int cnt = 0;
          for (int q = 0; q < n_; ++q) cnt += in_S(q, a, b) ? 1 : 0;
          pairs.emplace_back(a, b);
          size.push_back(cnt);
        }
    std::vector<std::size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return size[x] < size[y]; });
    for (auto idx : order) compute_cell(pairs[idx].first, pairs[idx].second);

    Count best = phi(bottom_dummy(), top_dummy(), NONE);
    if (best.is_neg_inf()) throw Infeasible("no valid labeling exists");
    std::vector<char> internal(static_cast<std::size_t>(n_), 0);
    reconstruct(internal);
    return {best.value(), Labeling::from_mask(internal)};
  }

 private:
  struct Sweep {
    std::vector<int> s;         // S(l,u), right to left
    std::vector<Count> base;    // Psi'(s[k], NONE)
    Count all = 0;              // Psi(S) with r = NONE
    bool complement_ok = true;  // slab points outside S are placeable
    std::vector<int> complement;
  };

  struct RInfo {
    bool dead = false;      // r conflicts with the anchors or the complement
    std::size_t first = 0;  // first k (right to left) whose label meets r's
  };

  void build_world() {
    pts_ = inst_.points;
    Scalar maxx = pts_[0].x, miny = pts_[0].y, maxy = pts_[0].y;
    for (const auto& p : pts_) {
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
    // Strictly more than n + 2 beyond every label corner.
    Scalar off = Scalar(n_ + 3);
    pts_.push_back({maxx + 1 + off, miny - off});
    pts_.push_back({maxx + 1 + off, maxy + 1 + off});
  }

  void build_orders() {
    std::vector<int> idx(static_cast<std::size_t>(N_));
    std::iota(idx.begin(), idx.end(), 0);
    auto P = [&](int i) -> const Point& { return pts_[static_cast<std::size_t>(i)]; };
    // x-order: x ascending, higher y first on ties.
    std::vector<int> xs = idx;
    std::sort(xs.begin(), xs.end(), [&](int a, int b) {
      if (P(a).x != P(b).x) return P(a).x < P(b).x;
      return P(a).y > P(b).y;
    });
    // y-order: y ascending, larger x first on ties.
    std::vector<int> ys = idx;
    std::sort(ys.begin(), ys.end(), [&](int a, int b) {
      if (P(a).y != P(b).y) return P(a).y < P(b).y;
      return P(a).x > P(b).x;
    });
    rx_.assign(static_cast<std::size_t>(N_), 0);
    ry_.assign(static_cast<std::size_t>(N_), 0);
    for (int k = 0; k < N_; ++k) {
      rx_[static_cast<std::size_t>(xs[static_cast<std::size_t>(k)])] = k;
      ry_[static_cast<std::size_t>(ys[static_cast<std::size_t>(k)])] = k;
    }
    for (auto it = xs.rbegin(); it != xs.rend(); ++it)
      if (*it < n_) by_x_desc_.push_back(*it);
  }

  bool in_E(int p, int q) const {
    if (p >= n_ || q >= n_ || p == q) return false;
    const Point& a = pts_[static_cast<std::size_t>(p)];
    const Point& b = pts_[static_cast<std::size_t>(q)];
    return ry_[static_cast<std::size_t>(q)] < ry_[static_cast<std::size_t>(p)] && a.x <= b.x && b.x < a.x + 1 &&
           a.y - 1 < b.y && b.y <= a.y;
  }

  void build_E() {
    E_.assign(static_cast<std::size_t>(N_), {});
    qp_.assign(static_cast<std::size_t>(N_), NONE);
    for (int p = 0; p < n_; ++p) {
      for (int q = 0; q < n_; ++q) {
        if (!in_E(p, q)) continue;
        E_[static_cast<std::size_t>(p)].push_back(q);
        int& t = qp_[static_cast<std::size_t>(p)];
        if (t == NONE || ry_[static_cast<std::size_t>(q)] > ry_[static_cast<std::size_t>(t)]) t = q;
      }
    }
  }

  bool in_slab(int q, int ell, int u) const {
    auto y = ry_[static_cast<std::size_t>(q)];
    return ry_[static_cast<std::size_t>(ell)] < y && y < ry_[static_cast<std::size_t>(u)];
  }

  bool in_S(int q, int ell, int u) const {
    auto x = rx_[static_cast<std::size_t>(q)];
    return in_slab(q, ell, u) && x < rx_[static_cast<std::size_t>(ell)] && x < rx_[static_cast<std::size_t>(u)];
  }

  // Conflict lookups; dummies conflict with nothing.
  bool ll(int a, int b) const {
    return a < n_ && b < n_ && conf_.ll(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  bool rh(int a, int b) const {
    return a < n_ && b < n_ && conf_.rh(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  bool rc(int a, int b) const {
    return a < n_ && b < n_ && conf_.rc(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  bool no_label(int a) const { return a < n_ && conf_.label_blocked[static_cast<std::size_t>(a)]; }
  bool no_leader(int a) const { return a < n_ && conf_.leader_blocked[static_cast<std::size_t>(a)]; }

  Sweep sweep(int ell, int u) const {
    Sweep sw;
    ++epoch_;
    if (mark_.size() != static_cast<std::size_t>(n_)) mark_.assign(static_cast<std::size_t>(n_), 0);
    auto place = [&](int q) {
      bool ok = !no_label(q) && !rh(ell, q) && !rh(u, q);
      for (int nb : ll_nb_[static_cast<std::size_t>(q)])
        if (mark_[static_cast<std::size_t>(nb)] == epoch_) ok = false;
      mark_[static_cast<std::size_t>(q)] = epoch_;
      return ok;
    };
    for (int q : by_x_desc_) {
      if (q == ell || q == u || !in_slab(q, ell, u)) continue;
      if (in_S(q, ell, u)) {
        sw.s.push_back(q);
      } else {
        sw.complement.push_back(q);
      }
    }
    // Every complement point is right of every S point, so the sweep
    // places the complement first.
    for (int q : sw.complement) sw.complement_ok = place(q) && sw.complement_ok;
    bool ok = sw.complement_ok;
    long long count = 0;
    for (int q : sw.s) {
      sw.base.push_back(ok ? Count(count) : NEG_INFINITY);
      ok = place(q) && ok;
      ++count;
    }
    sw.all = ok ? Count(count) : NEG_INFINITY;
    return sw;
  }

  RInfo r_info(const Sweep& sw, int ell, int u, int r) const {
    RInfo ri;
    ri.first = sw.s.size();
    if (r == NONE) return ri;
    if (no_label(r) || rh(u, r) || rh(ell, r)) ri.dead = true;
    for (int c : sw.complement)
      if (ll(r, c)) ri.dead = true;
    for (std::size_t k = 0; k < sw.s.size(); ++k) {
      if (ll(r, sw.s[k])) {
        ri.first = k;
        break;
      }
    }
    return ri;
  }

  static Count psi_prime(const Sweep& sw, const RInfo& ri, std::size_t k) {
    if (ri.dead || ri.first < k) return NEG_INFINITY;
    return sw.base[k];
  }

  static Count psi_all(const Sweep& sw, const RInfo& ri) {
    if (ri.dead || ri.first < sw.s.size()) return NEG_INFINITY;
    return sw.all;
  }

  std::size_t cell(int ell, int u) const { return static_cast<std::size_t>(ell) * static_cast<std::size_t>(N_) + static_cast<std::size_t>(u); }

  std::size_t r_slot(int ell, int r) const {
    if (r == NONE) return 0;
    const auto& El = E(ell);
    auto it = std::find(El.begin(), El.end(), r);
    if (it == El.end()) throw ContractViolation("r is not in E(l)");
    return static_cast<std::size_t>(it - El.begin()) + 1;
  }

  Count phi(int ell, int u, int r) const {
    const auto& v = phi_[cell(ell, u)];
    if (v.empty()) throw ContractViolation("subproblem used before it was computed");
    return v[r_slot(ell, r)];
  }

  void compute_cell(int ell, int u) {
    Sweep sw = sweep(ell, u);
    const auto& El = E(ell);
    auto& out = phi_[cell(ell, u)];
    auto& arg = arg_[cell(ell, u)];
    out.assign(El.size() + 1, NEG_INFINITY);
    arg.assign(El.size() + 1, -1);
    if (!sw.complement_ok) return;
    for (std::size_t j = 0; j <= El.size(); ++j) {
      int r = j == 0 ? NONE : El[j - 1];
      RInfo ri = r_info(sw, ell, u, r);
      if (ri.dead) continue;
      Count best = psi_all(sw, ri);
      int choice = -1;
      for (std::size_t k = 0; k < sw.s.size(); ++k) {
        int p = sw.s[k];
        if (no_leader(p) || rc(p, ell) || rc(p, u)) continue;
        Count right = psi_prime(sw, ri, k);
        if (right.is_neg_inf()) continue;
        Count v = right + phi(ell, p, r) + phi(p, u, rho(p, ell, r));
        if (v > best || (v == best && !v.is_neg_inf() && choice >= 0 && p < choice)) {
          best = v;
          choice = p;
        }
      }
      out[j] = best;
      arg[j] = choice;
    }
  }

  void reconstruct(std::vector<char>& internal) const {
    struct Job {
      int ell, u, r;
    };
    std::vector<Job> stack{{bottom_dummy(), top_dummy(), NONE}};
    while (!stack.empty()) {
      Job j = stack.back();
      stack.pop_back();
      int choice = arg_[cell(j.ell, j.u)][r_slot(j.ell, j.r)];
      for (int q : S(j.ell, j.u)) {
        if (q == choice) break;
        internal[static_cast<std::size_t>(q)] = 1;
      }
      if (choice < 0) continue;
      stack.push_back({j.ell, choice, j.r});
      stack.push_back({choice, j.u, rho(choice, j.ell, j.r)});
    }
  }

  const Instance& inst_;
  int n_ = 0;
  int N_ = 0;
  Conflicts conf_;
  std::vector<Point> pts_;
  std::vector<int> rx_, ry_;
  std::vector<int> by_x_desc_;
  std::vector<std::vector<int>> E_;
  std::vector<int> qp_;
  std::vector<std::vector<int>> ll_nb_;
  std::vector<std::vector<Count>> phi_;
  std::vector<std::vector<int>> arg_;
  mutable std::vector<int> mark_;
  mutable int epoch_ = 0;
};

/// Maximum number of internal labels for leaders pointing left.
inline SolveResult solve_left(const Instance& inst) { return LeftSolver(inst).solve(); }

}  // namespace mixlabel
