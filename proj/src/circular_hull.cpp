#include "bicover/circular_hull.hpp"

#include <algorithm>
#include <limits>

#include "bicover/mec.hpp"

namespace bicover {

CircularHull::CircularHull(double r, InsertOrder order, bool track_empty)
    : r_(r), order_(order), track_empty_(track_empty) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw GeomError(Errc::NonpositiveRadius, "circular hull radius must be positive");
  }
}

Disk CircularHull::arc_disk(Vec2 below, Vec2 top) const {
  // Supporting disk of the hull arc between the stack neighbors below/top.
  // In CCW boundary order the arc runs below->top for CCW insertion and
  // top->below for CW insertion.
  return order_ == InsertOrder::CCW ? disk_through_left(below, top, r_)
                                    : disk_through_left(top, below, r_);
}

bool CircularHull::covered_by_candidate_arc(Vec2 below, Vec2 z, Vec2 v) const {
  if (dist(below, z) > 2.0 * r_ * (1.0 + kEps)) return false;
  const Disk cand = arc_disk(below, z);
  return dist(cand.center, v) <= r_ * (1.0 + kEps);
}

bool CircularHull::newcomer_redundant(Vec2 z) const {
  // The newcomer lies between the stack top and the anchor in circular
  // order; it is interior to the current hull exactly when it is inside the
  // supporting disk of the closing arc (top -> anchor). Interior points stay
  // interior as the hull grows, so they can be dropped for good.
  if (stack_.size() < 2) return false;
  const Vec2 top = stack_.back();
  const Vec2 anchor = stack_.front();
  if (dist(top, anchor) > 2.0 * r_ * (1.0 + kEps)) return false;
  const Disk d = order_ == InsertOrder::CCW ? disk_through_left(top, anchor, r_)
                                            : disk_through_left(anchor, top, r_);
  return dist(d.center, z) <= r_ * (1.0 + kEps);
}

bool CircularHull::would_be_empty(Vec2 p) {
  inserted_.push_back(p);
  if (inserted_.size() == 1) {
    mec_disk_ = {p, 0.0};
    return false;
  }
  if (dist(mec_disk_.center, p) <= mec_disk_.radius * (1.0 + kEps)) return false;
  mec_disk_ = mec(inserted_).disk;
  return mec_disk_.radius > r_ * (1.0 + kEps);
}

void CircularHull::do_bottom_pops() {
  // With the newest point pushed, the closing arc (top -> anchor) can
  // swallow vertices at the anchor end once the chain wraps far enough
  // around: the anchor is redundant when it lies inside the supporting disk
  // of the candidate arc from the top directly to the second vertex.
  while (stack_.size() >= 3) {
    const Vec2 top = stack_.back();
    const Vec2 anchor = stack_.front();
    const Vec2 second = stack_[1];
    if (dist(top, second) > 2.0 * r_ * (1.0 + kEps)) break;
    const Disk cand = order_ == InsertOrder::CCW ? disk_through_left(top, second, r_)
                                                 : disk_through_left(second, top, r_);
    if (dist(cand.center, anchor) > r_ * (1.0 + kEps)) break;
    stack_.pop_front();
    ++pops_;
  }
}

void CircularHull::do_pops(Vec2 z, std::vector<PopRecord>* popped) {
  while (stack_.size() >= 2) {
    const Vec2 top = stack_[stack_.size() - 1];
    const Vec2 below = stack_[stack_.size() - 2];
    if (!covered_by_candidate_arc(below, z, top)) break;
    if (popped) popped->push_back({top, below, arc_disk(below, top)});
    stack_.pop_back();
    ++pops_;
  }
}

CircularHull::Status CircularHull::insert(Vec2 p) {
  ++insertions_;
  if (empty_) return Status::BecameEmpty;
  if (newcomer_redundant(p)) return Status::NonEmpty;  // hull unchanged
  if (track_empty_ && would_be_empty(p)) {
    empty_ = true;
    return Status::BecameEmpty;
  }
  do_pops(p, nullptr);
  stack_.push_back(p);
  do_bottom_pops();
  return Status::NonEmpty;
}

CircularHull::Status CircularHull::insert_edge(Vec2 from, Vec2 to,
                                               std::vector<EdgeEvent>* events, int edge_index) {
  ++insertions_;
  if (empty_) return Status::BecameEmpty;
  if (newcomer_redundant(to)) return Status::NonEmpty;  // hull unchanged, no events
  if (track_empty_ && would_be_empty(to)) {
    empty_ = true;
    return Status::BecameEmpty;
  }
  std::vector<PopRecord> popped;
  do_pops(to, &popped);
  stack_.push_back(to);
  do_bottom_pops();

  if (events) {
    double prev_t = 0.0;
    for (const PopRecord& rec : popped) {
      // The moving point pops rec.v where it crosses the boundary of the
      // supporting disk of the arc (rec.below, rec.v); past the crossing,
      // rec.v is covered by the candidate arc from rec.below.
      const auto hits = circle_segment_intersections(rec.delta, from, to);
      double t_ev = prev_t;
      bool found = false;
      for (const auto& [t, loc] : hits) {
        if (t < prev_t - 1e-9) continue;
        const double probe = std::min(1.0, t + 1e-7);
        const Vec2 z = from + (to - from) * probe;
        if (covered_by_candidate_arc(rec.below, z, rec.v)) {
          t_ev = std::max(t, prev_t);
          found = true;
          break;
        }
      }
      if (!found && !hits.empty()) t_ev = std::max(hits.front().first, prev_t);
      EdgeEvent ev;
      ev.t = t_ev;
      ev.location = from + (to - from) * t_ev;
      ev.departing_vertex = rec.v;
      ev.supporting_disk = rec.delta;
      ev.edge_index = edge_index;
      events->push_back(ev);
      prev_t = t_ev;
    }
  }
  return Status::NonEmpty;
}

std::vector<Vec2> CircularHull::vertices_ccw() const {
  std::vector<Vec2> v(stack_.begin(), stack_.end());
  if (order_ == InsertOrder::CW) std::reverse(v.begin(), v.end());
  return v;
}

size_t CircularHull::find_vertex(Vec2 v) const {
  if (empty_ || stack_.empty()) throw GeomError(Errc::EmptyHull, "hull is empty");
  const std::vector<Vec2> verts = vertices_ccw();
  size_t best = 0;
  double bd = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < verts.size(); ++i) {
    const double d = dist(verts[i], v);
    if (d < bd) {
      bd = d;
      best = i;
    }
  }
  if (bd > kEps * r_ * 1e3) throw GeomError(Errc::NotAHullVertex, "not a hull vertex");
  return best;
}

std::pair<Vec2, Vec2> CircularHull::neighbors(Vec2 v) const {
  const std::vector<Vec2> verts = vertices_ccw();
  const size_t i = find_vertex(v);
  const size_t n = verts.size();
  return {verts[(i + 1) % n], verts[(i + n - 1) % n]};
}

Disk CircularHull::supporting_disk(Vec2 v) const {
  const std::vector<Vec2> verts = vertices_ccw();
  const size_t i = find_vertex(v);
  const size_t n = verts.size();
  if (n == 1) return {verts[0], r_};  // degenerate one-vertex hull
  return disk_through_left(verts[i], verts[(i + 1) % n], r_);
}

DiskIntersection CircularHull::dual_intersection() const {
  if (empty_) throw GeomError(Errc::EmptyHull, "hull is empty");
  if (stack_.empty()) throw GeomError(Errc::EmptyHull, "no points inserted");
  DiskIntersection out;
  out.r = r_;
  const std::vector<Vec2> verts = vertices_ccw();
  const size_t n = verts.size();
  if (n == 1) {
    out.full_disk = true;
    out.arcs.push_back({verts[0], verts[0] + Vec2{r_, 0.0}, verts[0] + Vec2{r_, 0.0}});
    return out;
  }
  // Vertices of I_r are the supporting-disk centers; the arc around hull
  // vertex v_i connects the centers of its two incident arcs.
  std::vector<Vec2> centers(n);
  for (size_t i = 0; i < n; ++i) {
    centers[i] = disk_through_left(verts[i], verts[(i + 1) % n], r_).center;
  }
  for (size_t i = 0; i < n; ++i) {
    out.arcs.push_back({verts[i], centers[(i + n - 1) % n], centers[i]});
  }
  return out;
}

}  // namespace bicover
