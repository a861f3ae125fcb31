#include <gtest/gtest.h>

#include "support.hpp"

using namespace mixlabel;
using namespace mixlabel::testing;

namespace {

MapPolygon square(long r) { return MapPolygon({pt(-r, -r), pt(r, -r), pt(r, r), pt(-r, r)}); }

Labeling all_external(std::size_t n) {
  Labeling lab;
  for (std::size_t i = 0; i < n; ++i) lab.external.push_back(i);
  return lab;
}

}  // namespace

TEST(ClipLeader, AxisDirections) {
  EXPECT_EQ(clip_leader_to_map(pt(0, 0), Direction(-1, 0), square(5)), pt(-5, 0));
  EXPECT_EQ(clip_leader_to_map(pt(0, 0), Direction(0, -1), square(5)), pt(0, -5));
}

TEST(ClipLeader, TriangleAndDiagonal) {
  MapPolygon tri({pt(-10, -10), pt(10, -10), pt(0, 10)});
  Point e = clip_leader_to_map(pt(0, 0), Direction(1, 1), tri);
  EXPECT_EQ(e.x, e.y);
  EXPECT_EQ(2 * e.x + e.y, 10);
  EXPECT_EQ(e, ptq(10, 3, 10, 3));
}

TEST(ClipLeader, OutsideOrOnBoundaryIsRejected) {
  EXPECT_THROW(clip_leader_to_map(pt(7, 0), Direction(-1, 0), square(5)), DomainError);
  EXPECT_THROW(clip_leader_to_map(pt(5, 0), Direction(-1, 0), square(5)), DomainError);
}

TEST(MapPolygon, OrientationAndConvexity) {
  MapPolygon cw({pt(-1, -1), pt(-1, 1), pt(1, 1), pt(1, -1)});
  EXPECT_GT(signed_area2(cw.vertices), 0);
  EXPECT_THROW(MapPolygon({pt(0, 0), pt(4, 0), pt(1, 1), pt(0, 4)}), DomainError);
  EXPECT_THROW(MapPolygon({pt(0, 0), pt(4, 0)}), DomainError);
}

TEST(MapPolygon, DefaultContainsEveryLabel) {
  auto inst = make({pt(0, 0), ptq(7, 2, -3, 1)});
  auto m = MapPolygon::around(inst);
  for (std::size_t i = 0; i < inst.size(); ++i)
    for (const auto& c : inst.label(i).corners()) EXPECT_TRUE(point_in_polygon_open(m.vertices, c));
}

TEST(RouteOuter, SingleExternalSitsOnItsExit) {
  auto inst = make({pt(0, 0)});
  auto r = route_outer(inst, all_external(1), Direction(-1, 0), square(5));
  ASSERT_EQ(r.externals.size(), 1u);
  EXPECT_EQ(r.externals[0].boundary_exit, pt(-5, 0));
  EXPECT_EQ(r.externals[0].label_rect, Rect(pt(-6, 0), 1, 1));
  // Right class mirrors: lower-left corner at the exit.
  r = route_outer(inst, all_external(1), Direction(1, 0), square(5));
  EXPECT_EQ(r.externals[0].label_rect, Rect(pt(5, 0), 1, 1));
}

TEST(RouteOuter, SecondLabelShiftsOutward) {
  auto inst = make({ptq(0, 1, 1, 2), pt(3, 0)});
  auto r = route_outer(inst, all_external(2), Direction(-1, 0), square(5));
  ASSERT_EQ(r.externals.size(), 2u);
  EXPECT_EQ(r.externals[0].index, 0u);
  EXPECT_EQ(r.externals[0].label_rect, Rect(ptq(-6, 1, 1, 2), 1, 1));
  EXPECT_EQ(r.externals[1].label_rect, Rect(pt(-7, 0), 1, 1));
  EXPECT_EQ(r.externals[1].outer_path, (std::vector<Point>{pt(-5, 0), pt(-6, 0)}));
  EXPECT_FALSE(routed_overlap(r));
  EXPECT_TRUE(r.path_contacts.empty());
}

TEST(RouteOuter, RightClassStacksTopDown) {
  auto inst = make({ptq(0, 1, 1, 2), pt(-3, 0)});
  auto r = route_outer(inst, all_external(2), Direction(1, 0), square(5));
  ASSERT_EQ(r.externals.size(), 2u);
  EXPECT_EQ(r.externals[0].label_rect, Rect(ptq(5, 1, 1, 2), 1, 1));
  EXPECT_EQ(r.externals[1].label_rect, Rect(pt(6, 0), 1, 1));
  EXPECT_TRUE(r.path_contacts.empty());
}

TEST(RouteOuter, SpacedExitsDoNotShift) {
  auto inst = make({pt(0, 0), pt(2, 2)});
  auto r = route_outer(inst, all_external(2), Direction(-1, 0), square(5));
  for (const auto& e : r.externals) EXPECT_EQ(e.label_rect.x1(), -5);
}

TEST(RouteOuter, RandomSolutionsRouteCleanly) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> th(0, 2 * std::numbers::pi);
  int routed = 0;
  for (int it = 0; it < 40; ++it) {
    auto inst = random_instance(rng, 4 + it % 12, Scalar(3, 20), 3);
    const Direction d = direction_from_theta(th(rng));
    Solution s;
    try {
      s = solve_instance(inst, d);
    } catch (const Infeasible&) {
      continue;
    }
    const auto map = MapPolygon::of(inst);
    auto r = route_outer(inst, s.labeling, d, map);
    EXPECT_EQ(r.externals.size(), s.labeling.external.size());
    EXPECT_FALSE(routed_overlap(r));
    EXPECT_TRUE(r.path_contacts.empty());
    for (const auto& e : r.externals) {
      ASSERT_EQ(e.outer_path.size(), 2u);
      EXPECT_EQ(e.outer_path[0].y, e.outer_path[1].y);
      EXPECT_EQ(e.outer_path[0], e.boundary_exit);
    }
    auto again = route_outer(inst, s.labeling, d, map);
    for (std::size_t i = 0; i < r.externals.size(); ++i) {
      EXPECT_EQ(again.externals[i].index, r.externals[i].index);
      EXPECT_EQ(again.externals[i].label_rect, r.externals[i].label_rect);
    }
    EXPECT_FALSE(check_labeling(inst, s.labeling, d, &r.externals));
    routed += static_cast<int>(r.externals.size());
  }
  EXPECT_GT(routed, 40);
}
