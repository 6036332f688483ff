#pragma once

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "bicover/geom.hpp"

namespace bicover {

/// Direction in which the moving insertion end advances along the polygon
/// boundary. CCW inserts at the counterclockwise end (chains grown forward),
/// CW at the clockwise end (reverse passes).
enum class InsertOrder { CCW, CW };

/// Boundary description of the disk intersection I_r, dual to the hull.
/// Each arc lies on the circle of radius r centered at a hull vertex.
struct DiskIntersection {
  double r = 0.0;
  bool full_disk = false;  // single-point hull: I_r is the whole disk
  struct Arc {
    Vec2 center;  // a hull vertex of the dual circular hull
    Vec2 from;    // arc endpoints, CCW; vertices of I_r
    Vec2 to;
  };
  std::vector<Arc> arcs;
};

/// A pop recorded while the moving point traverses an edge: the location on
/// the edge where the hull neighbor of the moving point changes.
struct EdgeEvent {
  double t = 0.0;  // parameter along the traversed edge, 0 at `from`
  Vec2 location;
  Vec2 departing_vertex;
  Disk supporting_disk;  // the arc disk whose boundary the moving point crossed
  int edge_index = -1;
};

/// Semi-dynamic circular hull of radius r for points inserted in boundary
/// order. Vertices live on a deque; insertions pop redundant vertices from
/// the insertion end, and when the chain wraps far enough around, the
/// closing arc can also swallow vertices at the far (anchor) end. With
/// `track_empty`, emptiness is decided exactly via the minimum enclosing
/// disk of all inserted points; once the hull becomes empty it stays empty.
class CircularHull {
 public:
  enum class Status { NonEmpty, BecameEmpty };

  CircularHull(double r, InsertOrder order, bool track_empty = true);

  Status insert(Vec2 p);

  /// Moving-point traversal of the segment from->to, ending with `to`
  /// inserted. Appends one event per popped vertex, in traversal order.
  Status insert_edge(Vec2 from, Vec2 to, std::vector<EdgeEvent>* events, int edge_index = -1);

  bool nonempty() const { return !empty_; }
  size_t size() const { return stack_.size(); }
  double radius() const { return r_; }
  InsertOrder order() const { return order_; }

  /// Hull vertices in insertion order: anchor first, newest last.
  const std::deque<Vec2>& stack() const { return stack_; }
  std::vector<Vec2> vertices_ccw() const;

  /// (ccw, cw) neighbors of a current hull vertex, closing arc included.
  std::pair<Vec2, Vec2> neighbors(Vec2 v) const;
  /// Supporting disk delta(v) of the arc from v to ccw(v).
  Disk supporting_disk(Vec2 v) const;

  DiskIntersection dual_intersection() const;

  size_t insertions() const { return insertions_; }
  size_t pops() const { return pops_; }

 private:
  struct PopRecord {
    Vec2 v;
    Vec2 below;
    Disk delta;
  };

  size_t find_vertex(Vec2 v) const;
  bool newcomer_redundant(Vec2 z) const;
  bool covered_by_candidate_arc(Vec2 below, Vec2 z, Vec2 v) const;
  Disk arc_disk(Vec2 below, Vec2 top) const;
  void do_pops(Vec2 z, std::vector<PopRecord>* popped);
  void do_bottom_pops();
  bool would_be_empty(Vec2 p);

  double r_;
  InsertOrder order_;
  bool track_empty_;
  bool empty_ = false;
  std::deque<Vec2> stack_;
  std::vector<Vec2> inserted_;  // only kept when track_empty_
  Disk mec_disk_{{0, 0}, 0};
  size_t insertions_ = 0;
  size_t pops_ = 0;
};

}  // namespace bicover
