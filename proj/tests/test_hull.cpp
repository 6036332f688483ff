#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bicover/circular_hull.hpp"
#include "bicover/mec.hpp"
#include "bicover/oracle.hpp"

using namespace bicover;

TEST_CASE("constructor rejects nonpositive radius") {
  CHECK_THROWS_AS(CircularHull(0.0, InsertOrder::CCW), GeomError);
  CHECK_THROWS_AS(CircularHull(-1.0, InsertOrder::CCW), GeomError);
}

TEST_CASE("hull becomes empty when points spread beyond 2r") {
  CircularHull h(1.0, InsertOrder::CCW);
  CHECK(h.insert({0, 0}) == CircularHull::Status::NonEmpty);
  CHECK(h.insert({3, 0}) == CircularHull::Status::BecameEmpty);
  CHECK_FALSE(h.nonempty());
  // empty is absorbing
  CHECK(h.insert({0.1, 0}) == CircularHull::Status::BecameEmpty);
  CHECK_THROWS_AS(h.dual_intersection(), GeomError);
}

TEST_CASE("emptiness matches the minimum enclosing disk on prefixes") {
  std::mt19937_64 rng(99);
  auto u01 = [&] { return (rng() >> 11) * 0x1.0p-53; };
  for (int trial = 0; trial < 50; ++trial) {
    ConvexPolygon p = random_convex_polygon(6 + static_cast<int>(rng() % 20), rng());
    const double r = (0.3 + 0.5 * u01()) * p.diameter() / 2.0;
    CircularHull h(r, InsertOrder::CCW);
    std::vector<Vec2> pts;
    bool empty = false;
    for (int i = 0; i < p.n(); ++i) {
      pts.push_back(p.vertex(i));
      const auto st = h.insert(p.vertex(i));
      empty = empty || st == CircularHull::Status::BecameEmpty;
      const double need = mec(pts).disk.radius;
      if (need > r * (1.0 + 1e-6)) {
        CHECK(empty);
        break;
      }
      if (need < r * (1.0 - 1e-6)) CHECK_FALSE(empty);
    }
  }
}

TEST_CASE("pops never exceed insertions") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    ConvexPolygon p = random_convex_polygon(8 + static_cast<int>(rng() % 40), rng());
    CircularHull h(p.diameter(), InsertOrder::CCW, false);
    for (int i = 0; i < p.n(); ++i) h.insert(p.vertex(i));
    CHECK(h.pops() <= h.insertions());
    CHECK(h.size() + h.pops() == h.insertions());
  }
}

TEST_CASE("every inserted point lies in every arc disk of the hull") {
  // Hull vertices delimit arcs whose supporting disks must contain all input.
  std::mt19937_64 rng(7);
  for (auto order : {InsertOrder::CCW, InsertOrder::CW}) {
    ConvexPolygon p = random_convex_polygon(24, 77);
    const double r = 0.8 * mec(p.vertices()).disk.radius * 1.4;
    CircularHull h(r, order, true);
    std::vector<Vec2> pts;
    for (int k = 0; k < p.n(); ++k) {
      const int idx = order == InsertOrder::CCW ? k : p.n() - 1 - k;
      if (h.insert(p.vertex(idx)) == CircularHull::Status::BecameEmpty) break;
      pts.push_back(p.vertex(idx));
      const auto verts = h.vertices_ccw();
      if (verts.size() < 2) continue;
      for (size_t i = 0; i < verts.size(); ++i) {
        const Disk d = disk_through_left(verts[i], verts[(i + 1) % verts.size()], r);
        for (Vec2 q : pts) CHECK(d.contains(q, 1e-7));
      }
    }
    (void)rng;
  }
}

TEST_CASE("neighbors and supporting disk on a simple triangle") {
  CircularHull h(2.0, InsertOrder::CCW);
  h.insert({0, 0});
  h.insert({1, 0});
  h.insert({1, 1});
  REQUIRE(h.size() == 3);
  auto [ccw, cw] = h.neighbors({1, 0});
  CHECK(ccw == Vec2{1, 1});
  CHECK(cw == Vec2{0, 0});
  Disk d = h.supporting_disk({0, 0});
  CHECK(d.radius == doctest::Approx(2.0));
  CHECK(std::abs(dist(d.center, Vec2{0, 0}) - 2.0) < 1e-12);
  CHECK(std::abs(dist(d.center, Vec2{1, 0}) - 2.0) < 1e-12);
  CHECK(cross(Vec2{1, 0} - Vec2{0, 0}, d.center - Vec2{0, 0}) > 0);  // left side
  CHECK_THROWS_AS(h.supporting_disk({5, 5}), GeomError);
}

TEST_CASE("dual intersection of two points") {
  CircularHull h(1.0, InsertOrder::CCW);
  h.insert({-0.5, 0});
  h.insert({0.5, 0});
  DiskIntersection di = h.dual_intersection();
  CHECK_FALSE(di.full_disk);
  REQUIRE(di.arcs.size() == 2);
  // I_r is the lens of the two unit disks; its two corners are the arc
  // endpoints, each at distance 1 from both hull vertices
  for (const auto& a : di.arcs) {
    for (Vec2 corner : {a.from, a.to}) {
      CHECK(std::abs(dist(corner, Vec2{-0.5, 0}) - 1.0) < 1e-12);
      CHECK(std::abs(dist(corner, Vec2{0.5, 0}) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("dual intersection of a single point is the full disk") {
  CircularHull h(1.5, InsertOrder::CCW);
  h.insert({2, 3});
  DiskIntersection di = h.dual_intersection();
  CHECK(di.full_disk);
  CHECK(di.r == 1.5);
}

TEST_CASE("dual intersection vertices are centers covering all input") {
  ConvexPolygon p = random_convex_polygon(16, 3);
  const double r = mec(p.vertices()).disk.radius * 1.05;
  CircularHull h(r, InsertOrder::CCW);
  for (int i = 0; i < p.n(); ++i) h.insert(p.vertex(i));
  DiskIntersection di = h.dual_intersection();
  REQUIRE_FALSE(di.arcs.empty());
  for (const auto& a : di.arcs) {
    // any point of I_r covers all inserted points; check the arc endpoints
    for (Vec2 c : {a.from, a.to}) {
      for (int i = 0; i < p.n(); ++i) CHECK(dist(c, p.vertex(i)) <= r * (1.0 + 1e-7));
    }
  }
}

TEST_CASE("edge events: moving point traversal reports pop locations") {
  // Thin wedge: traversing the far edge pops the middle vertex somewhere
  // strictly inside the edge.
  const double r = 1.0;
  CircularHull h(r, InsertOrder::CCW, false);
  h.insert({0, 0});
  h.insert({1.2, -0.4});
  std::vector<EdgeEvent> events;
  h.insert_edge({1.2, -0.4}, {1.4, 1.2}, &events, 1);
  for (const auto& ev : events) {
    CHECK(ev.t >= 0.0);
    CHECK(ev.t <= 1.0);
    CHECK(ev.edge_index == 1);
    // the event location lies on the supporting disk boundary
    CHECK(std::abs(dist(ev.location, ev.supporting_disk.center) - r) < 1e-6);
  }
  // events are ordered along the edge
  for (size_t i = 1; i < events.size(); ++i) CHECK(events[i - 1].t <= events[i].t);
}

TEST_CASE("CW insertion mirrors CCW insertion") {
  ConvexPolygon p = random_convex_polygon(20, 11);
  const double r = mec(p.vertices()).disk.radius * 1.2;
  CircularHull fwd(r, InsertOrder::CCW);
  for (int i = 0; i < p.n(); ++i) fwd.insert(p.vertex(i));
  CircularHull bwd(r, InsertOrder::CW);
  for (int i = p.n() - 1; i >= 0; --i) bwd.insert(p.vertex(i));
  auto a = fwd.vertices_ccw();
  auto b = bwd.vertices_ccw();
  REQUIRE(a.size() == b.size());
  // same cyclic vertex set; both anchored at opposite ends of the same chain
  for (Vec2 v : a) {
    bool found = false;
    for (Vec2 w : b) found = found || dist(v, w) < 1e-9;
    CHECK(found);
  }
}
