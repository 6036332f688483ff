#pragma once

#include <vector>

#include "bicover/geom.hpp"

namespace bicover {

struct MecResult {
  Disk disk;
  std::vector<Vec2> support;  // 1 to 3 points on the boundary of the disk
};

/// Minimum enclosing disk, randomized incremental. The processing order is
/// shuffled with a seed derived from the input bytes, so repeated calls on
/// the same input give identical results.
MecResult mec(const std::vector<Vec2>& points);

/// Smallest radius covering the chain (its vertex set; covering the vertex
/// set of a convex subchain covers the chain itself).
double tau(const ConvexPolygon& p, const Chain& c);

bool is_chain_coverable(const ConvexPolygon& p, const Chain& c, double r);

}  // namespace bicover
