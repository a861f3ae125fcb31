#include <gtest/gtest.h>

#include "support.hpp"

using namespace mixlabel;
using namespace mixlabel::testing;

TEST(Frame, IdentityAtThetaZero) {
  Frame f(Direction(-1, 0));
  Point p = ptq(7, 3, -5, 2);
  EXPECT_EQ(f.fx(p), p.x);
  EXPECT_EQ(f.fy(p), p.y);
}

TEST(Frame, FrameXDecreasesAlongTheLeader) {
  for (double t : {0.4, 1.9, 3.3, 5.0}) {
    Frame f(direction_from_theta(t));
    Point p = ptq(1, 3, 2, 7);
    Point q{p.x + f.dir().as_point().x, p.y + f.dir().as_point().y};
    EXPECT_LT(f.fx(q), f.fx(p));
    EXPECT_EQ(f.fy(q), f.fy(p));
  }
}

TEST(Frame, CellsFollowEighthsOfTheCircle) {
  const double q = std::numbers::pi / 4;
  for (int k = 0; k < 8; ++k) {
    EXPECT_EQ(Frame(direction_from_theta(k * q)).cell(), 2 * k);
    EXPECT_EQ(Frame(direction_from_theta((k + 0.5) * q)).cell(), 2 * k + 1);
  }
}

TEST(InSlab, Examples) {
  Frame f(Direction(-1, 0));
  SlabQuery s{pt(0, 0), pt(0, 2), &f};
  EXPECT_EQ(in_slab(pt(-1, 1), s), SlabClass::InS);
  EXPECT_EQ(in_slab(pt(5, 1), s), SlabClass::InClosedSlabRightOfBoth);
  EXPECT_EQ(in_slab(pt(0, 3), s), SlabClass::Outside);
}

TEST(InSlab, AnchorsMustBeOrdered) {
  Frame f(Direction(-1, 0));
  SlabQuery s{pt(0, 2), pt(0, 0), &f};
  EXPECT_THROW(in_slab(pt(-1, 1), s), ContractViolation);
}

TEST(Regions, BottomLabelRegionAtThetaZeroIsTheUnitSquareBelowRight) {
  Frame f(Direction(-1, 0));
  Point l = ptq(3, 2, 1, 4);
  EXPECT_TRUE(in_influence_region({l.x + Scalar(1, 2), l.y - Scalar(1, 2)}, l, RegionKind::BottomLabel, f));
  EXPECT_FALSE(in_influence_region({l.x + Scalar(3, 2), l.y - Scalar(1, 2)}, l, RegionKind::BottomLabel, f));
  EXPECT_FALSE(in_influence_region({l.x - Scalar(1, 2), l.y - Scalar(1, 2)}, l, RegionKind::BottomLabel, f));
  EXPECT_FALSE(in_influence_region({l.x + Scalar(1, 2), l.y - Scalar(3, 2)}, l, RegionKind::BottomLabel, f));
}

TEST(Regions, BottomLabelRegionEmptyForLeadersToTheRight) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-3000, 3000);
  Frame f(Direction(1, 0));
  for (int i = 0; i < 300; ++i) {
    Point q(Scalar(c(rng), 1000), Scalar(c(rng), 1000));
    EXPECT_FALSE(in_influence_region(q, pt(0, 0), RegionKind::BottomLabel, f));
  }
}

TEST(Regions, LeaderOnlyIsLeaderMinusLabel) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> c(-3000, 3000);
  for (double t : {4.2, 5.2, 5.9, 0.5}) {
    Frame f(direction_from_theta(t));
    for (int i = 0; i < 100; ++i) {
      Point q(Scalar(c(rng), 1000), Scalar(c(rng), 1000));
      for (auto [all, lab, only] : {std::tuple{RegionKind::BottomLeader, RegionKind::BottomLabel, RegionKind::BottomLeaderOnly},
                                    std::tuple{RegionKind::TopLeader, RegionKind::TopLabel, RegionKind::TopLeaderOnly}}) {
        bool expect = in_influence_region(q, pt(0, 0), all, f) && !in_influence_region(q, pt(0, 0), lab, f);
        EXPECT_EQ(in_influence_region(q, pt(0, 0), only, f), expect);
      }
    }
  }
}

TEST(Regions, TopRegionIsTheMirrorOfTheBottomRegion) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-3000, 3000);
  for (double t : {0.3, 1.2, 2.5, 3.0, 4.0, 4.9, 5.6, 6.1}) {
    Frame f(direction_from_theta(t));
    Frame m = f.mirrored();
    Point a(Scalar(c(rng), 1000), Scalar(c(rng), 1000));
    for (int i = 0; i < 150; ++i) {
      Point q(a.x + Scalar(c(rng), 1000), a.y + Scalar(c(rng), 1000));
      EXPECT_EQ(in_influence_region(q, a, RegionKind::TopLabel, f),
                in_influence_region({q.y, q.x}, {a.y, a.x}, RegionKind::BottomLabel, m));
      EXPECT_EQ(in_influence_region(q, a, RegionKind::TopLeader, f),
                in_influence_region({q.y, q.x}, {a.y, a.x}, RegionKind::BottomLeader, m));
    }
  }
}

TEST(Exponents, TableExamples) {
  const double pi = std::numbers::pi;
  auto x0 = exponents_for(Frame(direction_from_theta(0)));
  EXPECT_EQ(x0, (OrientationExponents{1, 0, 0, 0, 1, 0}));
  auto x1 = exponents_for(Frame(direction_from_theta(1.6 * pi)));
  EXPECT_EQ(x1, (OrientationExponents{3, 2, 1, 1, 1, 1}));
  auto x2 = exponents_for(Frame(direction_from_theta(pi / 2)));
  EXPECT_EQ(x2.e, 0);
  EXPECT_EQ(x2.f, 0);
}

TEST(Exponents, BoundsAndStars) {
  for (int k = 0; k < 64; ++k) {
    auto x = exponents_for(Frame(direction_from_theta(k * std::numbers::pi / 32)));
    EXPECT_LE(x.e, 3);
    EXPECT_LE(x.f, 3);
    EXPECT_LE(x.e_prime, 1);
    EXPECT_LE(x.f_prime, 1);
    EXPECT_EQ(x.e_star, std::min(1, x.e));
    EXPECT_EQ(x.f_star, std::min(1, x.f));
  }
}

TEST(Regions, MembershipStaysWithinTheTableBoxes) {
  std::mt19937_64 rng(11);
  auto res = region_conformance(rng, stratified_thetas(rng, 1), 200, false);
  EXPECT_FALSE(res.failure) << *res.failure;
}
