#include <gtest/gtest.h>

#include "support.hpp"

using namespace mixlabel;
using namespace mixlabel::testing;

namespace {

/// A grid point of the leader-only bottom region of `anchor`.
std::optional<Point> find_leader_only(const Point& anchor, const Frame& f) {
  for (long i = -40; i <= 40; ++i)
    for (long j = -40; j <= 40; ++j) {
      Point q{anchor.x + Scalar(i, 10), anchor.y + Scalar(j, 10)};
      if (in_influence_region(q, anchor, RegionKind::BottomLeaderOnly, f)) return q;
    }
  return std::nullopt;
}

Instance mirrored(const Instance& inst) {
  Instance m;
  for (const auto& p : inst.points) m.points.push_back({p.y, p.x});
  return m;
}

}  // namespace

TEST(Configurations, LeadersToTheRightHaveOnlyTheEmptyConfiguration) {
  std::mt19937_64 rng(61);
  auto inst = random_instance(rng, 9, Scalar(3, 20), 2);
  Frame f(Direction(1, 0));
  for (std::size_t a = 0; a < inst.size(); ++a) {
    auto cs = enumerate_configurations(inst, a, Side::Bottom, f);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_TRUE(cs[0].empty());
  }
}

TEST(Configurations, ThetaZeroSingletons) {
  // Three points in the open unit square below-right of the anchor.
  auto inst = make({pt(0, 0), ptq(1, 10, -1, 10), ptq(1, 2, -1, 2), ptq(9, 10, -3, 10), pt(5, 5)});
  auto cs = enumerate_configurations(inst, 0, Side::Bottom, Frame(Direction(-1, 0)));
  ASSERT_EQ(cs.size(), 4u);
  EXPECT_TRUE(cs[0].empty());
  for (std::size_t k = 1; k < 4; ++k) {
    EXPECT_EQ(cs[k].internal.size(), 1u);
    EXPECT_FALSE(cs[k].external_e2);
  }
  // No top region at theta = 0.
  EXPECT_EQ(enumerate_configurations(inst, 4, Side::Top, Frame(Direction(-1, 0))).size(), 1u);
}

TEST(Configurations, LeaderOnlyPointGivesAnExternalConfiguration) {
  Frame f(direction_from_theta(1.4 * std::numbers::pi));
  auto q = find_leader_only(pt(0, 0), f);
  ASSERT_TRUE(q);
  auto inst = make({pt(0, 0), *q});
  auto cs = enumerate_configurations(inst, 0, Side::Bottom, f);
  EXPECT_NE(std::find(cs.begin(), cs.end(), Configuration{{}, 1}), cs.end());
}

TEST(Configurations, InternalSetsArePairwiseDisjointAndCapped) {
  std::mt19937_64 rng(62);
  for (int it = 0; it < 6; ++it) {
    auto inst = random_instance(rng, 12, Scalar(1, 10), 3);
    for (const auto& d : corpus_directions()) {
      Frame f(d);
      auto x = exponents_for(f);
      for (std::size_t a = 0; a < inst.size(); a += 3)
        for (int prune = 0; prune < 2; ++prune)
          for (Side s : {Side::Bottom, Side::Top}) {
            const auto cap = static_cast<std::size_t>(s == Side::Bottom ? x.e : x.f);
            for (const auto& c : enumerate_configurations(inst, a, s, f, prune)) {
              EXPECT_FALSE(!c.internal.empty() && c.external_e2);
              EXPECT_LE(c.internal.size(), prune ? std::min<std::size_t>(cap, 2) : cap);
              EXPECT_TRUE(std::is_sorted(c.internal.begin(), c.internal.end()));
              for (std::size_t i = 0; i < c.internal.size(); ++i)
                for (std::size_t j = i + 1; j < c.internal.size(); ++j)
                  EXPECT_FALSE(rects_overlap(inst.label(c.internal[i]), inst.label(c.internal[j])));
            }
          }
    }
  }
}

TEST(Compatible, NothingNearbyGivesTheEmptyConfiguration) {
  auto inst = make({pt(10, 0), pt(10, 10), pt(0, 5)});
  Frame f(Direction(-1, 0));
  auto cs = compatible_bottom(inst, f, 2, 0, 1, {});
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_TRUE(cs[0].empty());
  cs = compatible_top(inst, f, 2, 0, 1, {});
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_TRUE(cs[0].empty());
}

TEST(Compatible, ForcedSlabPointMustBeInternal) {
  // q = (1/2, 9/2) lies in E(p) for p = (0,5), inside the slab and right of p.
  auto inst = make({pt(10, 0), pt(10, 10), pt(0, 5), ptq(1, 2, 9, 2)});
  Frame f(Direction(-1, 0));
  auto cs = compatible_bottom(inst, f, 2, 0, 1, {});
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].internal, std::vector<std::size_t>{3});
}

TEST(Compatible, AnchorInLeaderOnlyRegionIsExternal) {
  Frame f(direction_from_theta(1.4 * std::numbers::pi));
  auto ell = find_leader_only(pt(0, 0), f);
  ASSERT_TRUE(ell);
  // u far above p's leader line in frame terms.
  Point up{Scalar(50) * Scalar(f.dir().dy()), Scalar(0) - 50 * Scalar(f.dir().dx())};
  ASSERT_GT(f.fy(up), f.fy(pt(0, 0)));
  auto inst = make({*ell, up, pt(0, 0)});
  auto cs = compatible_bottom(inst, f, 2, 0, 1, {});
  ASSERT_FALSE(cs.empty());
  for (const auto& c : cs) EXPECT_EQ(c.external_e2, std::optional<std::size_t>(0));

  // The mirrored picture swaps bottom and top.
  auto m = mirrored(inst);
  auto ct = compatible_top(m, f.mirrored(), 2, 1, 0, {});
  EXPECT_EQ(ct, cs);
}

TEST(Compatible, TopMirrorsBottomOnRandomInstances) {
  std::mt19937_64 rng(63);
  for (int it = 0; it < 5; ++it) {
    auto inst = random_instance(rng, 8, Scalar(1, 5), 3);
    auto m = mirrored(inst);
    for (const auto& d : corpus_directions()) {
      Frame f(d);
      for (std::size_t p = 0; p < inst.size(); ++p) {
        std::size_t ell = (p + 1) % inst.size(), u = (p + 2) % inst.size();
        if (!(f.fy(inst.points[ell]) < f.fy(inst.points[u]))) std::swap(ell, u);
        EXPECT_EQ(compatible_bottom(inst, f, p, ell, u, {}), compatible_top(m, f.mirrored(), p, u, ell, {}));
      }
    }
  }
}

TEST(RightmostConflict, EmptyConfigurationWithEmptyRegion) {
  auto inst = make({pt(10, 0), pt(10, 10), ptq(49, 5, 1, 5), pt(6, 3)});
  EXPECT_FALSE(rightmost_conflict(inst, Frame(Direction(-1, 0)), 0, 1, {}, Side::Bottom));
}

TEST(RightmostConflict, InternalLabelOverlapsOneSlabLabel) {
  auto inst = make({pt(10, 0), pt(10, 10), ptq(49, 5, 1, 5), pt(6, 3), ptq(21, 2, -1, 2)});
  auto r = rightmost_conflict(inst, Frame(Direction(-1, 0)), 0, 1, Configuration{{4}, std::nullopt}, Side::Bottom);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, 2u);
}

TEST(RightmostConflict, LeaderPiercingTwoSlabLabelsReportsTheRightmost) {
  Frame f(direction_from_theta(1.4 * std::numbers::pi));
  const Point ell = pt(0, 0);
  auto q = find_leader_only(ell, f);
  ASSERT_TRUE(q);
  const Point dv = f.dir().as_point();
  std::vector<Point> pts{ell, {60 * dv.y, Scalar(0) - 60 * dv.x}, *q};
  // Labels centred on q's leader, far enough along it to be above ell's leader.
  std::vector<std::size_t> hit;
  for (long t = 1; t <= 40 && hit.size() < 2; ++t) {
    Point s{q->x + Scalar(t, 2) * dv.x - Scalar(1, 2), q->y + Scalar(t, 2) * dv.y - Scalar(1, 2)};
    if (f.fy(s) <= f.fy(ell) || f.fy(s) >= f.fy(pts[1])) continue;
    if (f.fx(s) >= f.fx(ell) || f.fx(s) >= f.fx(pts[1])) continue;
    if (!hit.empty() && (s.x - pts.back().x) * (s.x - pts.back().x) < 4) continue;
    pts.push_back(s);
    hit.push_back(pts.size() - 1);
  }
  ASSERT_EQ(hit.size(), 2u);
  auto inst = make(pts);
  auto r = rightmost_conflict(inst, f, 0, 1, Configuration{{}, 2}, Side::Bottom);
  ASSERT_TRUE(r);
  const std::size_t expect = f.fx(inst.points[hit[0]]) > f.fx(inst.points[hit[1]]) ? hit[0] : hit[1];
  EXPECT_EQ(*r, expect);
}

TEST(Iota, HandDerivedValues) {
  EXPECT_EQ(iota_estimate(10, 10, Frame(Direction(1, 0))), 333);
  EXPECT_EQ(iota_estimate(10, 10, Frame(Direction(0, 1))), 9);
  EXPECT_EQ(iota_estimate(1234, 7, Frame(Direction(0, 1))), 9);
  EXPECT_THROW(iota_estimate(0, 1, Frame(Direction(0, 1))), DomainError);
}

TEST(Iota, DominatedByTheLargestTerm) {
  for (int k = 0; k < 64; ++k) {
    Frame f(direction_from_theta(k * std::numbers::pi / 32));
    auto x = exponents_for(f);
    for (long n : {1L, 5L, 20L})
      for (long delta : {1L, 3L, 7L}) {
        Integer top = 9;
        for (int i = 0; i < 2 * (x.e_prime + x.f_prime); ++i) top *= n;
        for (int i = 0; i < 2 * (x.e_star + x.f_star); ++i) top *= delta;
        EXPECT_LE(iota_estimate(n, delta, f), top);
        if (x.e_prime + x.f_prime == 0) {
          EXPECT_LE(iota_estimate(n, delta, f), 9 * delta * delta * delta * delta);
        }
      }
  }
}

TEST(Configurations, UniverseSizeGrowsWithDensityAndLeaderRegions) {
  std::mt19937_64 rng(64);
  for (int it = 0; it < 12; ++it) {
    auto inst = random_instance(rng, 10 + it % 8, it % 2 ? Scalar(3, 20) : Scalar(2, 5), 3);
    const double n = static_cast<double>(inst.size()), delta = static_cast<double>(density(inst));
    for (const auto& d : corpus_directions()) {
      Frame f(d);
      auto x = exponents_for(f);
      for (std::size_t a = 0; a < inst.size(); a += 2)
        for (Side s : {Side::Bottom, Side::Top}) {
          const int es = s == Side::Bottom ? x.e_star : x.f_star, ep = s == Side::Bottom ? x.e_prime : x.f_prime;
          const double bound = 2 * (std::pow(delta, es) + std::pow(n, ep));
          EXPECT_LE(static_cast<double>(enumerate_configurations(inst, a, s, f, true).size()), bound);
        }
    }
  }
}

TEST(Configurations, SlabLabelOverlapsAtMostOneInternalLabel) {
  // Slab candidates are frame-left of the anchor, above its leader, clear of
  // it, and with no point inside their own label.
  std::mt19937_64 rng(5);
  long checked = 0;
  for (int it = 0; it < 60; ++it) {
    auto inst = random_instance(rng, 9 + it % 12, it % 2 ? Scalar(3, 20) : Scalar(2, 5), 3);
    const std::size_t n = inst.size();
    std::vector<char> clear(n, 1);
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t z = 0; z < n; ++z)
        if (z != q && rect_contains_closed(inst.label(q), inst.points[z])) clear[q] = 0;
    for (const auto& d : corpus_directions()) {
      Frame f(d);
      if (exponents_for(f).e < 2) continue;
      for (std::size_t a = 0; a < n; ++a)
        for (const auto& c : enumerate_configurations(inst, a, Side::Bottom, f)) {
          if (c.internal.size() < 2) continue;
          for (std::size_t q = 0; q < n; ++q) {
            if (!clear[q] || f.fy(inst.points[q]) <= f.fy(inst.points[a]) || f.fx(inst.points[q]) >= f.fx(inst.points[a]))
              continue;
            if (ray_hits_rect(inst.leader(a, d), inst.label(q))) continue;
            ++checked;
            int overlaps = 0;
            for (auto i : c.internal) overlaps += rects_overlap(inst.label(q), inst.label(i));
            EXPECT_LE(overlaps, 1);
          }
        }
    }
  }
  EXPECT_GT(checked, 40);
}
