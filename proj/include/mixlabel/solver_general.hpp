#pragma once

// Exact dynamic program for an arbitrary leader direction.
//
// A subproblem is a slab between two external anchors l and u (in frame
// coordinates) and the set S(l,u) of slab points left of both anchors.
// Slab points outside S(l,u) are internal. Every other point whose status
// is already fixed influences S(l,u) only through pairwise conflicts, so its
// effect is a set of points that may not be internal (KI) and a set that may
// not be external (KE). The key is (l, u, KI, KE).
//
// The rightmost external point p of S(l,u) splits it into S(l,p), S(p,u)
// and the internal points right of p. Points of S(l,p) that can conflict
// with points of S(p,u) have their statuses enumerated at the split and
// imposed on both halves.

#include "frame.hpp"
#include "solver_left.hpp"
#include "validity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace mixlabel {

struct GeneralOptions {
  /// Keep at most two internal points per side among the points whose
  /// labels reach across the splitting leader.
  bool prune = false;
};

struct GeneralStats {
  std::size_t subproblems = 0;
  std::size_t largest_guess = 0;  // most boundary points enumerated at one split
};

class GeneralSolver {
 public:
  GeneralSolver(const Instance& inst, const Direction& d, GeneralOptions opt = {})
      : inst_(inst), frame_(d), opt_(opt) {
    if (!inst.unit_labels()) throw DomainError("general solver needs unit labels; scale the instance first");
    inst.validate();
    n_ = static_cast<int>(inst.size());
    W_ = (static_cast<std::size_t>(n_) + 63) / 64;
    conf_ = Conflicts::build(inst, d);
    for (int i = 0; i < n_; ++i)
      if (conf_.buried[static_cast<std::size_t>(i)]) throw Infeasible("point " + std::to_string(i) + " lies inside an obstacle");
    build_orders();
    pot_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (a == b) continue;
        auto A = static_cast<std::size_t>(a), B = static_cast<std::size_t>(b);
        pot_[A * static_cast<std::size_t>(n_) + B] = conf_.ll(A, B) || conf_.rc(A, B) || conf_.rh(A, B) || conf_.rh(B, A);
      }
    pairs_.resize(static_cast<std::size_t>(n_ + 2) * static_cast<std::size_t>(n_ + 2));
  }

  SolveResult solve() {
    Key root{bottom(), top(), zero(), zero()};
    Count best = phi(root);
    if (best.is_neg_inf()) throw Infeasible("no valid labeling exists");
    std::vector<char> internal(static_cast<std::size_t>(n_), 0);
    reconstruct(root, internal);
    return {best.value(), Labeling::from_mask(internal)};
  }

  const GeneralStats& stats() const { return stats_; }

 private:
  using Bits = std::vector<std::uint64_t>;

  struct Key {
    int ell, u;
    Bits ki, ke;
    friend bool operator==(const Key&, const Key&) = default;
  };

  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<int>()(k.ell) * 1000003u ^ std::hash<int>()(k.u);
      for (auto w : k.ki) h = h * 1099511628211ull ^ std::hash<std::uint64_t>()(w);
      for (auto w : k.ke) h = h * 1099511628211ull ^ std::hash<std::uint64_t>()(w + 0x9e3779b97f4a7c15ull);
      return h;
    }
  };

  struct Entry {
    Count value = NEG_INFINITY;
    int p = -1;  // -1: every point of S is internal
    Key left, right;
  };

  struct PairInfo {
    bool ready = false;
    std::vector<int> s;  // S(l,u), right to left
    std::vector<int> c;  // slab points outside S(l,u)
    Bits f_int;          // anchors or complement forbid internal
    Bits f_ext;          // anchors or complement forbid external
  };

  int bottom() const { return n_; }
  int top() const { return n_ + 1; }

  Bits zero() const { return Bits(W_, 0); }
  static bool test(const Bits& b, int i) { return (b[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
  static void set(Bits& b, int i) { b[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  static void reset(Bits& b, int i) { b[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void build_orders() {
    std::vector<Scalar> fx, fy;
    for (const auto& p : inst_.points) {
      fx.push_back(frame_.fx(p));
      fy.push_back(frame_.fy(p));
    }
    std::vector<int> idx(static_cast<std::size_t>(n_));
    std::iota(idx.begin(), idx.end(), 0);
    auto xs = idx, ys = idx;
    auto by = [](const std::vector<Scalar>& v) {
      return [&v](int a, int b) {
        const auto& A = v[static_cast<std::size_t>(a)];
        const auto& B = v[static_cast<std::size_t>(b)];
        return A != B ? A < B : a < b;
      };
    };
    std::sort(xs.begin(), xs.end(), by(fx));
    std::sort(ys.begin(), ys.end(), by(fy));
    rx_.assign(static_cast<std::size_t>(n_ + 2), 0);
    ry_.assign(static_cast<std::size_t>(n_ + 2), 0);
    for (int k = 0; k < n_; ++k) {
      rx_[static_cast<std::size_t>(xs[static_cast<std::size_t>(k)])] = k;
      ry_[static_cast<std::size_t>(ys[static_cast<std::size_t>(k)])] = k + 1;
    }
    // Dummies: far right, below and above everything.
    rx_[static_cast<std::size_t>(bottom())] = rx_[static_cast<std::size_t>(top())] = n_;
    ry_[static_cast<std::size_t>(bottom())] = 0;
    ry_[static_cast<std::size_t>(top())] = n_ + 1;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) by_x_desc_.push_back(*it);
  }

  bool real(int a) const { return a < n_; }
  std::size_t at(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b); }
  bool ll(int a, int b) const { return real(a) && real(b) && conf_.ll_[at(a, b)]; }
  bool rh(int a, int b) const { return real(a) && real(b) && conf_.rh_[at(a, b)]; }
  bool rc(int a, int b) const { return real(a) && real(b) && conf_.rc_[at(a, b)]; }
  bool pot(int a, int b) const { return pot_[at(a, b)] != 0; }
  /// Conflict of a with status sa (true = internal) and b with status sb.
  bool clash(int a, bool sa, int b, bool sb) const {
    if (sa && sb) return ll(a, b);
    if (!sa && !sb) return rc(a, b);
    return sa ? rh(b, a) : rh(a, b);
  }

  int ry(int a) const { return ry_[static_cast<std::size_t>(a)]; }
  int rx(int a) const { return rx_[static_cast<std::size_t>(a)]; }

  const PairInfo& pair_info(int ell, int u) {
    auto& pi = pairs_[static_cast<std::size_t>(ell) * static_cast<std::size_t>(n_ + 2) + static_cast<std::size_t>(u)];
    if (pi.ready) return pi;
    pi.ready = true;
    pi.f_int = zero();
    pi.f_ext = zero();
    for (int q : by_x_desc_) {
      if (q == ell || q == u || !(ry(ell) < ry(q) && ry(q) < ry(u))) continue;
      if (rx(q) < rx(ell) && rx(q) < rx(u)) {
        pi.s.push_back(q);
      } else {
        pi.c.push_back(q);
      }
    }
    for (int s : pi.s) {
      auto S = static_cast<std::size_t>(s);
      bool no_int = conf_.label_blocked[S] || clash(s, true, ell, false) || clash(s, true, u, false);
      bool no_ext = conf_.leader_blocked[S] || clash(s, false, ell, false) || clash(s, false, u, false);
      for (int c : pi.c) {
        no_int = no_int || clash(s, true, c, true);
        no_ext = no_ext || clash(s, false, c, true);
      }
      if (no_int) set(pi.f_int, s);
      if (no_ext) set(pi.f_ext, s);
    }
    return pi;
  }

  /// Drops constraints the child's own anchors and complement imply.
  void canonicalize(Key& k) {
    const auto& pi = pair_info(k.ell, k.u);
    for (std::size_t w = 0; w < W_; ++w) {
      k.ki[w] &= ~pi.f_int[w];
      k.ke[w] &= ~pi.f_ext[w];
    }
  }

  Count phi(const Key& key) {
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second.value;
    Entry e = evaluate(key);
    ++stats_.subproblems;
    Count v = e.value;
    memo_.emplace(key, std::move(e));
    return v;
  }

  struct Guess {
    Bits internal;  // guessed statuses of the boundary points of one side
    Bits external;
    Count value = NEG_INFINITY;
    Key child;
  };

  Entry evaluate(const Key& key) {
    const PairInfo& pi = pair_info(key.ell, key.u);
    const auto& S = pi.s;
    Entry best;
    auto may_int = [&](int s) { return !test(pi.f_int, s) && !test(key.ki, s); };
    auto may_ext = [&](int s) { return !test(pi.f_ext, s) && !test(key.ke, s); };
    for (int s : S)
      if (!may_int(s) && !may_ext(s)) return best;

    // Every point internal.
    {
      bool ok = true;
      for (std::size_t a = 0; a < S.size() && ok; ++a) {
        ok = may_int(S[a]);
        for (std::size_t b = a + 1; b < S.size() && ok; ++b) ok = !ll(S[a], S[b]);
      }
      if (ok) best.value = Count(static_cast<long long>(S.size()));
    }

    // S[k] is the rightmost external point; S[0..k) are internal.
    for (std::size_t k = 0; k < S.size(); ++k) {
      if (k > 0) {
        int r = S[k - 1];
        bool ok = may_int(r);
        for (std::size_t j = 0; j + 1 < k && ok; ++j) ok = !ll(r, S[j]);
        if (!ok) break;
      }
      const int p = S[k];
      if (!may_ext(p)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = !rh(p, S[j]);
      if (!ok) continue;

      std::vector<int> lo, hi, r_lo, r_hi, c_lo, c_hi;
      for (std::size_t j = k + 1; j < S.size(); ++j) (ry(S[j]) < ry(p) ? lo : hi).push_back(S[j]);
      for (std::size_t j = 0; j < k; ++j) (ry(S[j]) < ry(p) ? r_lo : r_hi).push_back(S[j]);
      for (int c : pi.c) (ry(c) < ry(p) ? c_lo : c_hi).push_back(c);

      Key k1 = child_key(key, key.ell, p, lo, key.u, c_hi, r_hi);
      Key k2 = child_key(key, p, key.u, hi, key.ell, c_lo, r_lo);

      std::vector<int> g1, g2;
      for (int s : lo) {
        for (int t : hi)
          if (pot(s, t)) {
            g1.push_back(s);
            break;
          }
      }
      for (int t : hi) {
        for (int s : lo)
          if (pot(t, s)) {
            g2.push_back(t);
            break;
          }
      }
      stats_.largest_guess = std::max(stats_.largest_guess, g1.size() + g2.size());

      auto a1 = guesses(k1, g1, hi);
      auto a2 = guesses(k2, g2, lo);
      std::sort(a2.begin(), a2.end(), [](const Guess& x, const Guess& y) { return x.value > y.value; });
      const Count base = Count(static_cast<long long>(k));
      for (const auto& x : a1) {
        for (const auto& y : a2) {
          Count v = base + x.value + y.value;
          if (!(v > best.value || (v == best.value && best.p >= 0 && p < best.p))) break;
          if (!compatible(g1, x, g2, y)) continue;
          best.value = v;
          best.p = p;
          best.left = x.child;
          best.right = y.child;
          break;
        }
      }
    }
    return best;
  }

  /// Constraints on one half from fixed points outside it: the parent's
  /// own constraints, the far anchor, and the internal points (complement
  /// and right of p) on the far side of p's leader.
  Key child_key(const Key& parent, int ell, int u, const std::vector<int>& side, int far_anchor,
                const std::vector<int>& far_c, const std::vector<int>& far_r) {
    Key k{ell, u, zero(), zero()};
    for (int s : side) {
      bool no_int = test(parent.ki, s) || clash(s, true, far_anchor, false);
      bool no_ext = test(parent.ke, s) || clash(s, false, far_anchor, false);
      for (const auto* v : {&far_c, &far_r})
        for (int c : *v) {
          no_int = no_int || clash(s, true, c, true);
          no_ext = no_ext || clash(s, false, c, true);
        }
      if (no_int) set(k.ki, s);
      if (no_ext) set(k.ke, s);
    }
    canonicalize(k);
    return k;
  }

  /// All status assignments of the boundary points g of one half that are
  /// allowed there, with the best value of that half under each.
  std::vector<Guess> guesses(const Key& base, const std::vector<int>& g, const std::vector<int>& other) {
    const auto& pi = pair_info(base.ell, base.u);
    std::vector<Guess> out;
    Bits in = zero(), ex = zero();
    auto reaches = [&](int s) {
      for (int t : other)
        if (ll(s, t) || rh(t, s)) return true;
      return false;
    };
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int crossing_internal) {
      if (i == g.size()) {
        Key k = base;
        for (int s : g) {
          if (test(in, s)) set(k.ke, s);
          if (test(ex, s)) set(k.ki, s);
        }
        canonicalize(k);
        Count v = phi(k);
        if (!v.is_neg_inf()) out.push_back({in, ex, v, std::move(k)});
        return;
      }
      const int s = g[i];
      auto fits = [&](bool st) {
        for (std::size_t j = 0; j < i; ++j) {
          int t = g[j];
          if (clash(s, st, t, test(in, t))) return false;
        }
        return true;
      };
      if (!test(pi.f_int, s) && !test(base.ki, s) && fits(true)) {
        int c = crossing_internal + (reaches(s) ? 1 : 0);
        if (!opt_.prune || c <= 2) {
          set(in, s);
          rec(i + 1, c);
          reset(in, s);
        }
      }
      if (!test(pi.f_ext, s) && !test(base.ke, s) && fits(false)) {
        set(ex, s);
        rec(i + 1, crossing_internal);
        reset(ex, s);
      }
    };
    rec(0, 0);
    return out;
  }

  bool compatible(const std::vector<int>& g1, const Guess& x, const std::vector<int>& g2, const Guess& y) const {
    for (int s : g1)
      for (int t : g2)
        if (pot(s, t) && clash(s, test(x.internal, s), t, test(y.internal, t))) return false;
    return true;
  }

  void reconstruct(const Key& root, std::vector<char>& internal) {
    std::vector<Key> stack{root};
    while (!stack.empty()) {
      Key k = std::move(stack.back());
      stack.pop_back();
      const Entry& e = memo_.at(k);
      const auto& S = pair_info(k.ell, k.u).s;
      for (int s : S) {
        if (s == e.p) break;
        internal[static_cast<std::size_t>(s)] = 1;
      }
      if (e.p < 0) continue;
      stack.push_back(e.left);
      stack.push_back(e.right);
    }
  }

  const Instance& inst_;
  Frame frame_;
  GeneralOptions opt_;
  int n_ = 0;
  std::size_t W_ = 1;
  Conflicts conf_;
  std::vector<char> pot_;
  std::vector<int> rx_, ry_;
  std::vector<int> by_x_desc_;
  std::vector<PairInfo> pairs_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
  GeneralStats stats_;
};

inline SolveResult solve_general(const Instance& inst, const Direction& d, GeneralOptions opt = {}) {
  return GeneralSolver(inst, d, opt).solve();
}

}  // namespace mixlabel
