#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicover {

/// Relative tolerance used by all degeneracy tests. Scaled by the polygon
/// diameter (or the relevant local quantity) before use.
inline constexpr double kEps = 1e-9;

enum class Errc {
  TooFewVertices,
  NotConvex,
  CocircularQuadruple,
  DegenerateEdge,
  Collinear,
  NonpositiveRadius,
  EmptyInput,
  OrderViolation,
  NotAHullVertex,
  EmptyHull,
  RadiusTooSmall,
  RadiusMismatch,
  InvalidRadius,
  NonFinite,
};

class GeomError : public std::runtime_error {
 public:
  GeomError(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
  Errc code;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 perp_ccw(Vec2 a) { return {-a.y, a.x}; }  // rotate 90 degrees CCW

struct Disk {
  Vec2 center;
  double radius = 0.0;

  bool contains(Vec2 p, double rel_tol = kEps) const {
    return dist(center, p) <= radius * (1.0 + rel_tol) + rel_tol;
  }
};

/// Disk of radius r through a and b whose center lies to the left of a->b.
/// Requires |ab| <= 2r (within tolerance; the sagitta is clamped at zero).
Disk disk_through_left(Vec2 a, Vec2 b, double r);

/// Circumcircle of three non-collinear points.
Disk circumcircle3(Vec2 a, Vec2 b, Vec2 c);

/// Intersections of a circle with the segment a->b, as sorted parameters
/// t in [0,1] with the realized points. Tangency is reported once.
std::vector<std::pair<double, Vec2>> circle_segment_intersections(const Disk& d, Vec2 a, Vec2 b);

/// Point on the directed edge `edge_index`, at parameter t in [0,1).
/// Vertices are canonicalized as (edge, t=0).
struct BoundaryPoint {
  int edge_index = 0;
  double t = 0.0;
  bool operator==(const BoundaryPoint&) const = default;
};

/// Arc-length coordinate on the boundary, in [0, L) when reduced. Images of
/// the coverage functions are stored unrolled (may exceed L).
using LiftedCoord = double;

/// Whether validation rejects polygons with four cocircular vertices.
/// Symmetric inputs (squares, regular polygons) are cocircular by
/// construction and still well-behaved, so the default accepts them and
/// records the violation in a flag instead.
enum class GeneralPosition { Allow, Require };

class ConvexPolygon {
 public:
  /// Validates n >= 3, strict convexity, CCW orientation and nondegenerate
  /// edges, then builds the cached arc-length tables. Throws GeomError on
  /// violation; with GeneralPosition::Require, cocircular quadruples are
  /// rejected as well.
  static ConvexPolygon validate(std::vector<Vec2> points,
                                GeneralPosition gp = GeneralPosition::Allow);

  bool general_position_violated() const { return gp_violated_; }

  int n() const { return static_cast<int>(verts_.size()); }
  const std::vector<Vec2>& vertices() const { return verts_; }
  Vec2 vertex(int i) const { return verts_[mod_index(i)]; }
  double perimeter() const { return perimeter_; }
  double diameter() const { return diameter_; }

  Vec2 edge_start(int i) const { return verts_[mod_index(i)]; }
  Vec2 edge_end(int i) const { return verts_[mod_index(i + 1)]; }
  double edge_length(int i) const;
  /// Arc length from vertex 0 to the start of edge i.
  double edge_s_base(int i) const { return cum_[mod_index(i)]; }

  Vec2 realize(BoundaryPoint b) const;
  LiftedCoord to_lifted(BoundaryPoint b) const;
  BoundaryPoint from_lifted(LiftedCoord s) const;
  double wrap(LiftedCoord s) const;  // reduce mod perimeter into [0, L)

  /// Three-way comparison of a and b in the circular order anchored at
  /// `anchor`: negative if a <_anchor b, zero if equal, positive otherwise.
  int circular_compare(LiftedCoord anchor, LiftedCoord a, LiftedCoord b) const;

  int mod_index(int i) const {
    int n_ = n();
    int m = i % n_;
    return m < 0 ? m + n_ : m;
  }

 private:
  ConvexPolygon() = default;
  std::vector<Vec2> verts_;
  std::vector<double> cum_;  // cum_[i] = arc length from v0 to vi; cum_[n] = L
  double perimeter_ = 0.0;
  double diameter_ = 0.0;
  bool gp_violated_ = false;
};

/// CCW subchain of the boundary from `start` to `end`. When start == end,
/// `full` distinguishes the whole boundary from a single point.
struct Chain {
  BoundaryPoint start;
  BoundaryPoint end;
  bool full = false;
};

/// Vertex set of a chain: realized start, interior polygon vertices in CCW
/// order, realized end. Coincident endpoints are deduplicated.
std::vector<Vec2> chain_vertices(const ConvexPolygon& p, const Chain& c);

ConvexPolygon validate_polygon(std::vector<Vec2> points,
                               GeneralPosition gp = GeneralPosition::Allow);

}  // namespace bicover
