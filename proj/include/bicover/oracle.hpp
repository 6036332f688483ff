#pragma once

#include <cstdint>
#include <utility>

#include "bicover/geom.hpp"
#include "bicover/mec.hpp"

namespace bicover {

struct OracleConfig {
  int x_samples = 256;   // boundary samples for the outer search
  int refine_rounds = 2;
  uint64_t seed = 1;
};

/// (tau of P_{x,y}, tau of P_{y,x}).
std::pair<double, double> tau_pair(const ConvexPolygon& p, BoundaryPoint x, BoundaryPoint y);

/// Farthest point h with tau(p, h) <= tau(h, p): binary search over vertices
/// using the monotonicity of tau in its endpoints, then bisection within the
/// located edge to 1e-12 * perimeter.
BoundaryPoint h_point(const ConvexPolygon& p, BoundaryPoint q);

/// Brute-force r*: for sampled x, the inner split y is found by bisection on
/// the sign of tau(x,y) - tau(y,x); the minimum over x is refined locally.
double rstar_bruteforce(const ConvexPolygon& p, const OracleConfig& cfg);

/// Slow decision by sampled split search. One-sided: never a false yes.
bool decide_bruteforce(const ConvexPolygon& p, double r, const OracleConfig& cfg);

/// Deterministic random polygon: jittered angles and radii on an ellipse,
/// redrawn until validation accepts. Same (n, seed) gives identical output.
ConvexPolygon random_convex_polygon(int n, uint64_t seed);

/// FNV-1a hash of the vertex bytes; used to key golden records.
uint64_t polygon_hash(const ConvexPolygon& p);

}  // namespace bicover
