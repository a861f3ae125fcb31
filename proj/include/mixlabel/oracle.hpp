#pragma once

// Exhaustive ground truth over all 2^n partitions.

#include "validity.hpp"

#include <cstdint>
#include <string>

namespace mixlabel {

struct OracleResult {
  long long optimum = 0;
  Labeling witness;
  std::uint64_t enumerated = 0;
};

struct ForcedSets {
  std::vector<char> internal;  // empty or size n
  std::vector<char> external;
};

namespace detail {

inline bool lex_smaller(std::uint32_t a, std::uint32_t b) {
  // Compare the sorted index lists of the two sets.
  while (a && b) {
    int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace detail

/// Maximum number of internal labels over all valid partitions. Refuses
/// n > cap. Ties go to the lexicographically smallest internal set.
inline OracleResult brute_force(const Instance& inst, const Direction& d, std::size_t cap = 16,
                                const ForcedSets& forced = {}) {
  const std::size_t n = inst.size();
  if (n > cap) throw DomainError("oracle refuses n = " + std::to_string(n) + " above cap " + std::to_string(cap));
  if (n > 30) throw DomainError("oracle cannot enumerate more than 30 points");
  const auto c = Conflicts::build(inst, d);
  std::vector<std::uint32_t> ll(n, 0), rh(n, 0), rc(n, 0);
  std::uint32_t must_in = 0, must_out = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (c.buried[p]) throw Infeasible("point " + std::to_string(p) + " lies inside an obstacle");
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      if (c.ll(p, q)) ll[p] |= 1u << q;
      if (c.rh(p, q)) rh[p] |= 1u << q;
      if (c.rc(p, q)) rc[p] |= 1u << q;
    }
    if (c.label_blocked[p]) must_out |= 1u << p;
    if (c.leader_blocked[p]) must_in |= 1u << p;
    if (!forced.internal.empty() && forced.internal[p]) must_in |= 1u << p;
    if (!forced.external.empty() && forced.external[p]) must_out |= 1u << p;
  }
  OracleResult res;
  res.optimum = -1;
  std::uint32_t best = 0;
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint64_t m64 = 0; m64 <= all; ++m64) {
    const auto in = static_cast<std::uint32_t>(m64);
    ++res.enumerated;
    if ((in & must_in) != must_in || (in & must_out) != 0) continue;
    const std::uint32_t out = all & ~in;
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p) {
      if (in >> p & 1u) {
        ok = (ll[p] & in) == 0;
      } else {
        ok = (rh[p] & in) == 0 && (rc[p] & out) == 0;
      }
    }
    if (!ok) continue;
    long long k = __builtin_popcount(in);
    if (k > res.optimum || (k == res.optimum && detail::lex_smaller(in, best))) {
      res.optimum = k;
      best = in;
    }
  }
  if (res.optimum < 0) throw Infeasible("no valid partition respects the forced sets");
  std::vector<char> mask(n, 0);
  for (std::size_t p = 0; p < n; ++p) mask[p] = (best >> p & 1u) ? 1 : 0;
  res.witness = Labeling::from_mask(mask);
  return res;
}

}  // namespace mixlabel
