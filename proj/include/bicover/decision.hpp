#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "bicover/circular_hull.hpp"
#include "bicover/geom.hpp"

namespace bicover {

/// Determinator sets of the minimal covering disk at the coverage boundary:
/// T1 {x, f(x), one vertex}, T2 {x, f(x)} at distance 2r, T3 {f(x), one
/// vertex} at distance 2r, T4 {f(x), two vertices}.
enum class PieceType { T1, T2, T3, T4 };

/// Maximal interval of x (one edge) on which the coverage function has a
/// fixed combinatorial structure: fixed image edge, fixed nearby hull
/// vertices on both sides, fixed determinator set.
struct Piece {
  double s_lo = 0.0, s_hi = 0.0;  // x-interval, unrolled lifted coords
  double y_lo = 0.0, y_hi = 0.0;  // image interval, unrolled
  int x_edge = 0;
  int image_edge = 0;
  PieceType type = PieceType::T2;
  std::array<Vec2, 2> determinators{};
  int n_det = 0;
  // hull vertices adjacent to x (ccw side) and to f(x) (cw side), nearest
  // first; together with x they pin the covering disk on this interval
  std::array<Vec2, 3> xtops{};
  int n_xtops = 0;
  std::array<Vec2, 3> ytops{};
  int n_ytops = 0;
};

/// Piecewise-algebraic coverage map over one boundary period.
/// direction CCW: F̃(s) ∈ [s, s+L], the farthest counterclockwise reach.
/// direction CW:  G̃(s) ∈ [s−L, s], the farthest clockwise reach; built by
/// running the CCW machinery on the mirrored polygon.
class CoverageFunction {
 public:
  InsertOrder direction = InsertOrder::CCW;
  double eval(LiftedCoord s) const;
  /// Piece boundaries mapped to the original polygon's coordinates, one
  /// period, sorted ascending in [0, L).
  std::vector<double> breakpoints() const;
  /// Breakpoints with the exact function value at each (no root solving:
  /// the values are stored with the pieces), sorted ascending in s.
  std::vector<std::pair<double, double>> breakpoint_values() const;
  size_t piece_count() const { return pieces_.size(); }
  const std::vector<Piece>& pieces() const { return pieces_; }
  /// Polygon the pieces reference (the mirror image for direction CW).
  const ConvexPolygon& domain() const { return *poly_; }

  size_t insertions = 0;  // totals over the internal hull passes
  size_t pops = 0;

 private:
  friend CoverageFunction build_coverage(const ConvexPolygon&, double, InsertOrder);
  std::shared_ptr<const ConvexPolygon> poly_;
  std::vector<Piece> pieces_;  // tile [s_origin, s_origin+L) on *poly_
  double s_origin_ = 0.0;
  double L_ = 0.0;
  double r_ = 0.0;
  double eval_forward(double s) const;  // F̃ on *poly_
};

struct FarthestResult {
  BoundaryPoint endpoint;
  Disk disk;  // minimal covering disk of the maximal chain
  PieceType type;
};

struct DecisionWitness {
  BoundaryPoint x;       // first split point
  BoundaryPoint split2;  // second split point
  Disk d1;               // covers the CCW chain x -> split2
  Disk d2;               // covers the CCW chain split2 -> x
};

struct DecisionStats {
  size_t pieces_f = 0;
  size_t pieces_g = 0;
  size_t insertions = 0;
  size_t pops = 0;
};

struct DecisionResult {
  bool yes = false;
  std::optional<DecisionWitness> witness;
  DecisionStats stats;
};

/// The trivial one-disk test: the minimum enclosing disk when its radius is
/// at most r, otherwise nothing.
std::optional<Disk> one_disk_check(const ConvexPolygon& p, double r);

/// Farthest boundary point reachable from x in the given direction with the
/// chain still r-coverable. Requires P itself not r-coverable.
FarthestResult farthest_coverable(const ConvexPolygon& p, BoundaryPoint x, double r,
                                  InsertOrder direction = InsertOrder::CCW);

/// x0 = vertex 0, x_{k+1} = f(x_k). For r >= r* the three chains between
/// consecutive anchors cover the whole boundary.
std::array<BoundaryPoint, 4> anchor_points(const ConvexPolygon& p, double r);

/// Builds the full piecewise structure of f (CCW) or g (CW) at radius r.
/// Requires P not r-coverable. Throws RadiusTooSmall when the sweep fails
/// to wrap the boundary within the chain budget (r far below r*).
CoverageFunction build_coverage(const ConvexPolygon& p, double r, InsertOrder direction);

/// Can two congruent radius-r disks cover P? With a witness when yes.
/// Honors BICOVER_DEBUG=1: cross-checks sampled pieces against fresh
/// farthest_coverable evaluations on stderr.
DecisionResult decide(const ConvexPolygon& p, double r);

}  // namespace bicover
