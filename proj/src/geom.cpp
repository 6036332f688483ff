#include "bicover/geom.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace bicover {

Disk disk_through_left(Vec2 a, Vec2 b, double r) {
  const double d = dist(a, b);
  if (d > 2.0 * r * (1.0 + 1e-6)) {
    throw GeomError(Errc::RadiusTooSmall, "disk_through_left: points farther apart than 2r");
  }
  double h2 = r * r - 0.25 * d * d;
  if (h2 < 0.0) h2 = 0.0;
  const Vec2 m = (a + b) * 0.5;
  if (d == 0.0) return {m, r};
  const Vec2 n = perp_ccw((b - a) * (1.0 / d));
  return {m + n * std::sqrt(h2), r};
}

Disk circumcircle3(Vec2 a, Vec2 b, Vec2 c) {
  const double scale = std::max({dist(a, b), dist(b, c), dist(a, c)});
  const double area2 = cross(b - a, c - a);
  if (std::abs(area2) <= kEps * scale * scale) {
    throw GeomError(Errc::Collinear, "circumcircle3: collinear points");
  }
  const double ba = dot(b - a, b - a);
  const double ca = dot(c - a, c - a);
  const double ux = (c.y - a.y) * ba - (b.y - a.y) * ca;
  const double uy = (b.x - a.x) * ca - (c.x - a.x) * ba;
  const Vec2 center = {a.x + ux / (2.0 * area2), a.y + uy / (2.0 * area2)};
  return {center, dist(center, a)};
}

std::vector<std::pair<double, Vec2>> circle_segment_intersections(const Disk& d, Vec2 a, Vec2 b) {
  std::vector<std::pair<double, Vec2>> out;
  const Vec2 ab = b - a;
  const double A = dot(ab, ab);
  if (A == 0.0) return out;
  const Vec2 ac = a - d.center;
  const double B = 2.0 * dot(ab, ac);
  const double C = dot(ac, ac) - d.radius * d.radius;
  double disc = B * B - 4.0 * A * C;
  const double disc_tol = kEps * (B * B + 4.0 * A * (std::abs(C) + d.radius * d.radius));
  if (disc < -disc_tol) return out;
  if (disc < 0.0) disc = 0.0;
  const double sq = std::sqrt(disc);
  double t1 = (-B - sq) / (2.0 * A);
  double t2 = (-B + sq) / (2.0 * A);
  const double t_tol = kEps * (1.0 + d.radius / std::sqrt(A));
  // tangency within tolerance: one event
  const bool tangent = (t2 - t1) * std::sqrt(A) <= kEps * std::max(1.0, d.radius);
  for (double t : {t1, t2}) {
    if (t < -t_tol || t > 1.0 + t_tol) continue;
    t = std::clamp(t, 0.0, 1.0);
    out.emplace_back(t, a + ab * t);
    if (tangent) break;
  }
  if (out.size() == 2 && out[0].first > out[1].first) std::swap(out[0], out[1]);
  return out;
}

namespace {

bool finite(Vec2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Distance of d to the circumcircle of (a,b,c); +inf when a,b,c collinear.
double cocircular_deviation(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  try {
    Disk k = circumcircle3(a, b, c);
    return std::abs(dist(k.center, d) - k.radius);
  } catch (const GeomError&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

ConvexPolygon ConvexPolygon::validate(std::vector<Vec2> points, GeneralPosition gp) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw GeomError(Errc::TooFewVertices, "polygon needs at least 3 vertices");
  double minx = points[0].x, maxx = points[0].x, miny = points[0].y, maxy = points[0].y;
  for (Vec2 p : points) {
    if (!finite(p)) throw GeomError(Errc::NonFinite, "non-finite vertex coordinate");
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double diam = std::hypot(maxx - minx, maxy - miny);
  if (diam <= 0.0) throw GeomError(Errc::DegenerateEdge, "all vertices coincide");

  double area2 = 0.0;
  for (int i = 0; i < n; ++i) {
    area2 += cross(points[i], points[(i + 1) % n]);
  }
  if (area2 <= 0.0) throw GeomError(Errc::NotConvex, "vertices not in counterclockwise order");

  for (int i = 0; i < n; ++i) {
    const Vec2 e0 = points[(i + 1) % n] - points[i];
    const Vec2 e1 = points[(i + 2) % n] - points[(i + 1) % n];
    const double l0 = norm(e0), l1 = norm(e1);
    if (l0 < kEps * diam) throw GeomError(Errc::DegenerateEdge, "degenerate edge");
    if (cross(e0, e1) <= kEps * l0 * l1) {
      throw GeomError(Errc::NotConvex, "non-strict convex turn at vertex");
    }
  }

  // General circular position. Full quadruple enumeration is affordable only
  // for small n; beyond that, consecutive quadruples plus a seeded random
  // sample. Dense smooth polygons are numerically cocircular on consecutive
  // quadruples at double precision, so the check is skipped for n > 512.
  const double cotol = kEps * diam;
  bool gp_violated = false;
  if (n <= 32) {
    for (int i = 0; i < n && !gp_violated; ++i)
      for (int j = i + 1; j < n && !gp_violated; ++j)
        for (int k = j + 1; k < n && !gp_violated; ++k)
          for (int l = k + 1; l < n; ++l)
            if (cocircular_deviation(points[i], points[j], points[k], points[l]) < cotol) {
              gp_violated = true;
              break;
            }
  } else if (n <= 512) {
    for (int i = 0; i < n && !gp_violated; ++i)
      if (cocircular_deviation(points[i], points[(i + 1) % n], points[(i + 2) % n],
                               points[(i + 3) % n]) < cotol)
        gp_violated = true;
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < 5000 && !gp_violated; ++s) {
      int i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
      if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
      if (cocircular_deviation(points[i], points[j], points[k], points[l]) < cotol)
        gp_violated = true;
    }
  }
  if (gp_violated && gp == GeneralPosition::Require) {
    throw GeomError(Errc::CocircularQuadruple, "four vertices cocircular");
  }

  ConvexPolygon poly;
  poly.gp_violated_ = gp_violated;
  poly.verts_ = std::move(points);
  poly.diameter_ = diam;
  poly.cum_.resize(n + 1);
  poly.cum_[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    poly.cum_[i + 1] = poly.cum_[i] + dist(poly.verts_[i], poly.verts_[(i + 1) % n]);
  }
  poly.perimeter_ = poly.cum_[n];
  return poly;
}

double ConvexPolygon::edge_length(int i) const {
  const int k = mod_index(i);
  return cum_[k + 1] - cum_[k];
}

Vec2 ConvexPolygon::realize(BoundaryPoint b) const {
  const Vec2 a = edge_start(b.edge_index);
  return a + (edge_end(b.edge_index) - a) * b.t;
}

LiftedCoord ConvexPolygon::to_lifted(BoundaryPoint b) const {
  const int i = mod_index(b.edge_index);
  return cum_[i] + b.t * (cum_[i + 1] - cum_[i]);
}

double ConvexPolygon::wrap(LiftedCoord s) const {
  double m = std::fmod(s, perimeter_);
  return m < 0.0 ? m + perimeter_ : m;
}

BoundaryPoint ConvexPolygon::from_lifted(LiftedCoord s) const {
  const double w = wrap(s);
  auto it = std::upper_bound(cum_.begin(), cum_.end(), w);
  int i = static_cast<int>(it - cum_.begin()) - 1;
  if (i >= n()) i = n() - 1;
  double t = (w - cum_[i]) / (cum_[i + 1] - cum_[i]);
  if (t >= 1.0) {  // canonicalize onto the next edge
    i = mod_index(i + 1);
    t = 0.0;
  }
  return {i, t};
}

int ConvexPolygon::circular_compare(LiftedCoord anchor, LiftedCoord a, LiftedCoord b) const {
  const double da = wrap(a - anchor);
  const double db = wrap(b - anchor);
  if (da < db) return -1;
  if (da > db) return 1;
  return 0;
}

std::vector<Vec2> chain_vertices(const ConvexPolygon& p, const Chain& c) {
  const double L = p.perimeter();
  const double s0 = p.to_lifted(c.start);
  const double s1 = p.to_lifted(c.end);
  double span = p.wrap(s1 - s0);
  const bool same_point = span == 0.0;
  if (same_point && !c.full) return {p.realize(c.start)};
  if (same_point) span = L;

  std::vector<Vec2> out;
  out.push_back(p.realize(c.start));
  const double eps = 1e-12 * L;
  for (int k = 1; k <= p.n(); ++k) {
    const int idx = p.mod_index(c.start.edge_index + k);
    const double off = p.wrap(p.edge_s_base(idx) - s0);
    if (off > eps && off < span - eps) out.push_back(p.vertex(idx));
  }
  if (!same_point) {
    const Vec2 e = p.realize(c.end);
    if (dist(e, out.back()) > eps) out.push_back(e);
  }
  return out;
}

ConvexPolygon validate_polygon(std::vector<Vec2> points, GeneralPosition gp) {
  return ConvexPolygon::validate(std::move(points), gp);
}

}  // namespace bicover
