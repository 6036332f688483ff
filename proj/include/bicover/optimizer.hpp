#pragma once

#include <array>

#include "bicover/decision.hpp"
#include "bicover/geom.hpp"

namespace bicover {

/// Certified bracket around the optimal radius with a witness at r_high.
struct SolveResult {
  double r_low = 0.0;   // certified infeasible (or 0)
  double r_high = 0.0;  // certified feasible
  std::array<Disk, 2> disks{};
  std::array<BoundaryPoint, 2> splits{};
};

/// Minimum radius for two congruent covering disks, by bisection over
/// decide() starting from [0, mec radius], down to relative width tol.
/// tol must lie in (0, 0.1].
SolveResult solve(const ConvexPolygon& p, double tol = 1e-9);

/// True iff the union of the two disks covers the whole boundary (hence the
/// polygon). Each edge is split at its circle intersections; a sub-segment
/// with both endpoints and midpoint inside one disk lies inside it.
/// Throws RadiusMismatch when the radii differ beyond tolerance.
bool verify_cover(const ConvexPolygon& p, const Disk& d1, const Disk& d2);

/// Radius of the minimum enclosing disk: a feasible starting upper bound.
double upper_bound(const ConvexPolygon& p);

}  // namespace bicover
