#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bicover/decision.hpp"
#include "bicover/mec.hpp"
#include "bicover/optimizer.hpp"
#include "bicover/oracle.hpp"

using namespace bicover;

namespace {

ConvexPolygon unit_square() { return validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

ConvexPolygon rect_1x4() { return validate_polygon({{0, 0}, {4, 0}, {4, 1}, {0, 1}}); }

}  // namespace

TEST_CASE("solve pins the analytic half-rectangle optima") {
  // two disks each covering half the rectangle: r = sqrt((w/2)^2 + h^2)/2
  const SolveResult sq = solve(unit_square(), 1e-9);
  CHECK(sq.r_high == doctest::Approx(0.5590169943749474).epsilon(1e-6));
  const SolveResult re = solve(rect_1x4(), 1e-9);
  CHECK(re.r_high == doctest::Approx(1.118033988749895).epsilon(1e-6));
}

TEST_CASE("solve rejects out-of-range tolerances") {
  CHECK_THROWS_AS(solve(unit_square(), 0.0), GeomError);
  CHECK_THROWS_AS(solve(unit_square(), 0.2), GeomError);
  CHECK_THROWS_AS(solve(unit_square(), -1e-3), GeomError);
}

TEST_CASE("bracket invariant: infeasible below, feasible above") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const ConvexPolygon p = random_convex_polygon(8 + static_cast<int>(rng() % 24), rng());
    const SolveResult res = solve(p, 1e-7);
    CHECK(res.r_low <= res.r_high);
    CHECK(res.r_high - res.r_low <= 1e-7 * upper_bound(p) * (1.0 + 1e-12));
    CHECK(decide(p, res.r_high).yes);
    if (res.r_low > 0.0) CHECK_FALSE(decide(p, res.r_low * (1.0 - 1e-6)).yes);
    CHECK(verify_cover(p, res.disks[0], res.disks[1]));
  }
}

TEST_CASE("solve agrees with the sampling oracle") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const ConvexPolygon p = random_convex_polygon(6 + static_cast<int>(rng() % 26), rng());
    OracleConfig cfg;
    cfg.x_samples = 256;
    cfg.refine_rounds = 2;
    const double want = rstar_bruteforce(p, cfg);
    const double got = solve(p, 1e-9).r_high;
    CHECK(std::abs(got - want) < 1e-3 * want);
  }
}

TEST_CASE("verify_cover on hand-built configurations") {
  const ConvexPolygon sq = unit_square();
  // each disk covers one horizontal half: needs r >= sqrt(1/4 + 1/16) ~ 0.559
  CHECK(verify_cover(sq, Disk{{0.5, 0.25}, 0.57}, Disk{{0.5, 0.75}, 0.57}));
  CHECK_FALSE(verify_cover(sq, Disk{{0.5, 0.25}, 0.5}, Disk{{0.5, 0.75}, 0.5}));
  const Disk m = mec(sq.vertices()).disk;
  CHECK(verify_cover(sq, m, m));
  CHECK_THROWS_AS(verify_cover(sq, Disk{{0.5, 0.25}, 0.57}, Disk{{0.5, 0.75}, 0.6}), GeomError);
}

TEST_CASE("verify_cover catches a boundary gap between the disks") {
  // both disks leave the midpoint of the top edge uncovered
  const ConvexPolygon sq = unit_square();
  CHECK_FALSE(verify_cover(sq, Disk{{0.12, 0.5}, 0.52}, Disk{{0.88, 0.5}, 0.52}));
}

TEST_CASE("upper_bound equals the enclosing-circle radius") {
  CHECK(upper_bound(unit_square()) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  const ConvexPolygon tri =
      validate_polygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
  CHECK(upper_bound(tri) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
  const SolveResult res = solve(unit_square(), 1e-9);
  CHECK(res.r_high <= upper_bound(unit_square()) * (1.0 + 1e-12));
}

TEST_CASE("solve is equivariant under scaling") {
  const ConvexPolygon p = random_convex_polygon(18, 13);
  const double base = solve(p, 1e-9).r_high;
  for (double c : {0.5, 3.0}) {
    std::vector<Vec2> scaled(p.vertices().size());
    for (size_t i = 0; i < scaled.size(); ++i) {
      scaled[i] = {c * p.vertices()[i].x, c * p.vertices()[i].y};
    }
    const double got = solve(validate_polygon(std::move(scaled)), 1e-9).r_high;
    CHECK(got == doctest::Approx(c * base).epsilon(1e-7));
  }
}

TEST_CASE("returned disks carry the reported radius and split points lie on edges") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    const ConvexPolygon p = random_convex_polygon(10 + static_cast<int>(rng() % 20), rng());
    const SolveResult res = solve(p, 1e-8);
    CHECK(res.disks[0].radius == doctest::Approx(res.r_high));
    CHECK(res.disks[1].radius == doctest::Approx(res.r_high));
    for (const BoundaryPoint& s : res.splits) {
      CHECK(s.edge_index >= 0);
      CHECK(s.edge_index < p.n());
      CHECK(s.t >= 0.0);
      CHECK(s.t < 1.0 + 1e-12);
    }
  }
}
