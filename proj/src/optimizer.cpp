#include "bicover/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "bicover/mec.hpp"

namespace bicover {

double upper_bound(const ConvexPolygon& p) { return mec(p.vertices()).disk.radius; }

SolveResult solve(const ConvexPolygon& p, double tol) {
  if (!(tol > 0.0) || tol > 0.1) {
    throw GeomError(Errc::InvalidRadius, "solve: tol must lie in (0, 0.1]");
  }
  SolveResult out;
  double lo = 0.0;
  double hi = upper_bound(p);
  DecisionResult feasible = decide(p, hi);  // one-disk coverable at the MEC radius
  for (int it = 0; it < 200 && hi - lo > tol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    DecisionResult d = decide(p, mid);
    if (d.yes) {
      hi = mid;
      feasible = std::move(d);
    } else {
      lo = mid;
    }
  }
  out.r_low = lo;
  out.r_high = hi;
  if (!feasible.witness) {
    // defensive: re-extract at the certified feasible radius
    feasible = decide(p, hi);
  }
  const DecisionWitness& w = *feasible.witness;
  out.disks = {w.d1, w.d2};
  out.splits = {w.x, w.split2};
  // report the witness at exactly r_high
  out.disks[0].radius = hi;
  out.disks[1].radius = hi;
  return out;
}

bool verify_cover(const ConvexPolygon& p, const Disk& d1, const Disk& d2) {
  const double scale = std::max({d1.radius, d2.radius, p.diameter()});
  if (std::abs(d1.radius - d2.radius) > kEps * scale) {
    throw GeomError(Errc::RadiusMismatch, "verify_cover: disks must have equal radius");
  }
  const double tol = 1e-7;
  auto inside = [&](Vec2 q) { return d1.contains(q, tol) || d2.contains(q, tol); };
  for (int e = 0; e < p.n(); ++e) {
    const Vec2 a = p.edge_start(e);
    const Vec2 b = p.edge_end(e);
    // split the edge at every circle crossing; each sub-segment then lies
    // entirely inside or outside each disk, so endpoint+midpoint checks
    // decide containment exactly
    std::vector<double> cuts{0.0, 1.0};
    for (const Disk& d : {d1, d2}) {
      for (const auto& [t, loc] : circle_segment_intersections(d, a, b)) cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      for (double t : {cuts[i], 0.5 * (cuts[i] + cuts[i + 1]), cuts[i + 1]}) {
        if (!inside(a + (b - a) * t)) return false;
      }
    }
  }
  return true;
}

}  // namespace bicover
