#include "bicover/decision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "bicover/mec.hpp"


namespace bicover {

namespace {

constexpr double kCoverSlack = 1e-9;  // relative slack for candidate cover checks

/// Fixed-order Welzl for the small local point sets used by the piece
/// evaluators (m <= 10). Deterministic; no shuffle needed at this size.
Disk mini_mec(const Vec2* pts, int m) {
  Disk d{pts[0], 0.0};
  auto outside = [&](Vec2 q) { return dist(d.center, q) > d.radius * (1.0 + 1e-12) + 1e-15; };
  for (int i = 1; i < m; ++i) {
    if (!outside(pts[i])) continue;
    d = {pts[i], 0.0};
    for (int j = 0; j < i; ++j) {
      if (!outside(pts[j])) continue;
      d = {(pts[i] + pts[j]) * 0.5, 0.5 * dist(pts[i], pts[j])};
      for (int k = 0; k < j; ++k) {
        if (!outside(pts[k])) continue;
        try {
          d = circumcircle3(pts[i], pts[j], pts[k]);
        } catch (const GeomError&) {
          // collinear: widest diametral pair of the three
          Disk best{{0, 0}, -1.0};
          const std::array<std::pair<Vec2, Vec2>, 3> prs{
              std::pair{pts[i], pts[j]}, std::pair{pts[i], pts[k]}, std::pair{pts[j], pts[k]}};
          for (const auto& [a, b] : prs) {
            Disk cand{(a + b) * 0.5, 0.5 * dist(a, b)};
            if (cand.radius > best.radius) best = cand;
          }
          d = best;
        }
      }
    }
  }
  return d;
}

struct LocalPts {
  std::array<Vec2, 10> p{};
  int m = 0;
  void add(Vec2 v) {
    for (int i = 0; i < m; ++i) {
      if (dist(p[i], v) < 1e-13) return;  // dedupe coincident points
    }
    if (m < static_cast<int>(p.size())) p[m++] = v;
  }
};

struct RootResult {
  enum class K { Root, AllCover, NoneCover };
  K k = K::Root;
  double t = 0.0;  // parameter in the queried window
  Disk disk{{0, 0}, 0};
  PieceType type = PieceType::T2;
  std::array<Vec2, 2> det{};
  int ndet = 0;
};

bool covers_all(const Disk& d, const LocalPts& loc, Vec2 extra, double r) {
  const double lim = r * (1.0 + kCoverSlack);
  if (dist(d.center, extra) > lim) return false;
  for (int i = 0; i < loc.m; ++i) {
    if (dist(d.center, loc.p[i]) > lim) return false;
  }
  return true;
}

/// Allocation-free variant of circle_segment_intersections for the hot
/// evaluation path; same tolerance model, results ascending in t.
int circ_seg_t(const Disk& d, Vec2 a, Vec2 b, double out[2]) {
  const Vec2 ab = b - a;
  const double A = dot(ab, ab);
  if (A == 0.0) return 0;
  const Vec2 ac = a - d.center;
  const double B = 2.0 * dot(ab, ac);
  const double C = dot(ac, ac) - d.radius * d.radius;
  double disc = B * B - 4.0 * A * C;
  const double disc_tol = kEps * (B * B + 4.0 * A * (std::abs(C) + d.radius * d.radius));
  if (disc < -disc_tol) return 0;
  if (disc < 0.0) disc = 0.0;
  const double sq = std::sqrt(disc);
  const double t1 = (-B - sq) / (2.0 * A);
  const double t2 = (-B + sq) / (2.0 * A);
  const double t_tol = kEps * (1.0 + d.radius / std::sqrt(A));
  const bool tangent = (t2 - t1) * std::sqrt(A) <= kEps * std::max(1.0, d.radius);
  int m = 0;
  for (double t : {t1, t2}) {
    if (t < -t_tol || t > 1.0 + t_tol) continue;
    out[m++] = std::clamp(t, 0.0, 1.0);
    if (tangent) break;
  }
  if (m == 2 && out[0] > out[1]) std::swap(out[0], out[1]);
  return m;
}

bool center_in_triangle(Vec2 c, Vec2 a, Vec2 b, Vec2 q) {
  const double s1 = cross(b - a, c - a);
  const double s2 = cross(q - b, c - b);
  const double s3 = cross(a - q, c - q);
  const double tol = -1e-9 * (dist(a, b) + dist(b, q) + dist(q, a)) *
                     (dist(a, b) + dist(b, q) + dist(q, a));
  return (s1 >= tol && s2 >= tol && s3 >= tol) || (s1 <= -tol && s2 <= -tol && s3 <= -tol);
}

/// Largest (want_max) or smallest coverable parameter t in [t_lo, t_hi]
/// for the moving point p(t) = a0 + (a1-a0)t against the local point set.
/// The coverability boundary is where the minimum enclosing disk of the
/// locals plus p(t) has radius exactly r; its support must include p(t),
/// so the root is found among the O(1) candidate support configurations
/// and certified by a cover check. `x_index`: index of x in `loc` (or -1)
/// for determinator typing.
RootResult coverage_root(Vec2 a0, Vec2 a1, double t_lo, double t_hi, const LocalPts& loc,
                         double r, bool want_max, int x_index) {
  RootResult out;
  auto at = [&](double t) { return a0 + (a1 - a0) * t; };
  auto coverable = [&](double t) {
    std::array<Vec2, 11> buf;
    for (int i = 0; i < loc.m; ++i) buf[i] = loc.p[i];
    buf[loc.m] = at(t);
    return mini_mec(buf.data(), loc.m + 1).radius <= r * (1.0 + kEps);
  };

  const bool cov_lo = coverable(t_lo);
  const bool cov_hi = coverable(t_hi);
  if (cov_lo && cov_hi) {
    out.k = RootResult::K::AllCover;
    return out;
  }
  if (!cov_lo && !cov_hi) {
    out.k = RootResult::K::NoneCover;
    return out;
  }

  const double seg_len = dist(a0, a1);
  const double t_tol = seg_len > 0 ? 1e-9 * (1.0 + r / seg_len) : 1e-9;

  struct Cand {
    double t;
    Disk disk;
    int i, j;  // support indices in loc; j == -1 for a diametral pair with p
  };
  Cand best_cand{0.0, {{0, 0}, 0}, -1, -1};
  bool have_cand = false;
  auto consider = [&](double t, const Disk& d, int i, int j) {
    if (t < t_lo - t_tol || t > t_hi + t_tol) return;
    t = std::clamp(t, t_lo, t_hi);
    if (have_cand && (want_max ? t <= best_cand.t : t >= best_cand.t)) return;
    const Vec2 p = at(t);
    if (!covers_all(d, loc, p, r)) return;
    if (j >= 0 && !center_in_triangle(d.center, loc.p[i], loc.p[j], p)) return;
    best_cand = {t, d, i, j};
    have_cand = true;
  };

  double ts[2];
  // diametral pair {loc[i], p}
  for (int i = 0; i < loc.m; ++i) {
    const int m = circ_seg_t({loc.p[i], 2.0 * r}, a0, a1, ts);
    for (int q = 0; q < m; ++q) {
      consider(ts[q], Disk{(loc.p[i] + at(ts[q])) * 0.5, r}, i, -1);
    }
  }
  // triple {loc[i], loc[j], p} on a radius-r circle
  for (int i = 0; i < loc.m; ++i) {
    for (int j = i + 1; j < loc.m; ++j) {
      if (dist(loc.p[i], loc.p[j]) > 2.0 * r * (1.0 + kEps)) continue;
      for (const Disk& d : {disk_through_left(loc.p[i], loc.p[j], r),
                            disk_through_left(loc.p[j], loc.p[i], r)}) {
        const int m = circ_seg_t({d.center, r}, a0, a1, ts);
        for (int q = 0; q < m; ++q) consider(ts[q], d, i, j);
      }
    }
  }

  const Cand* pick = have_cand ? &best_cand : nullptr;
  if (pick) {
    out.k = RootResult::K::Root;
    out.t = pick->t;
    out.disk = pick->disk;
    if (pick->j < 0) {
      if (pick->i == x_index) {
        out.type = PieceType::T2;
      } else {
        out.type = PieceType::T3;
        out.det[out.ndet++] = loc.p[pick->i];
      }
    } else {
      if (pick->i == x_index || pick->j == x_index) {
        out.type = PieceType::T1;
        out.det[out.ndet++] = loc.p[pick->i == x_index ? pick->j : pick->i];
      } else {
        out.type = PieceType::T4;
        out.det[out.ndet++] = loc.p[pick->i];
        out.det[out.ndet++] = loc.p[pick->j];
      }
    }
    return out;
  }

  // No candidate certified (grazing or near-degenerate support): fall back
  // to bisection on the small-set predicate and classify from the support.
  double lo = t_lo, hi = t_hi;
  const bool lo_side_coverable = cov_lo;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool c = coverable(mid);
    if (c == lo_side_coverable) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t_root = lo_side_coverable == want_max ? lo : hi;
  out.k = RootResult::K::Root;
  out.t = t_root;
  {
    std::array<Vec2, 11> buf;
    for (int i = 0; i < loc.m; ++i) buf[i] = loc.p[i];
    buf[loc.m] = at(t_root);
    out.disk = mini_mec(buf.data(), loc.m + 1);
    bool has_x = false;
    for (int i = 0; i < loc.m; ++i) {
      if (std::abs(dist(out.disk.center, loc.p[i]) - out.disk.radius) < 1e-6 * r) {
        if (i == x_index) {
          has_x = true;
        } else if (out.ndet < 2) {
          out.det[out.ndet++] = loc.p[i];
        }
      }
    }
    out.type = has_x ? (out.ndet == 0 ? PieceType::T2 : PieceType::T1)
                     : (out.ndet <= 1 ? PieceType::T3 : PieceType::T4);
  }
  return out;
}

}  // namespace

std::optional<Disk> one_disk_check(const ConvexPolygon& p, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw GeomError(Errc::InvalidRadius, "radius must be positive and finite");
  }
  Disk d = mec(p.vertices()).disk;
  if (d.radius <= r * (1.0 + kEps)) return d;
  return std::nullopt;
}

namespace {

/// Chain points starting at x going CCW: x itself, then every vertex
/// strictly within one period.
std::vector<Vec2> chain_points_from(const ConvexPolygon& p, BoundaryPoint x) {
  std::vector<Vec2> pts;
  pts.reserve(p.n() + 1);
  pts.push_back(p.realize(x));
  const double s0 = p.to_lifted(x);
  for (int k = 0; k <= p.n(); ++k) {
    const int idx = p.mod_index(x.edge_index + 1 + k);
    const double off = p.wrap(p.edge_s_base(idx) - s0);
    if (off > 1e-12 * p.perimeter() && static_cast<int>(pts.size()) <= p.n()) {
      if (pts.size() == 1 || dist(pts.back(), p.vertex(idx)) > 0) pts.push_back(p.vertex(idx));
    }
  }
  return pts;
}

ConvexPolygon mirror_polygon(const ConvexPolygon& p) {
  std::vector<Vec2> q(p.n());
  for (int i = 0; i < p.n(); ++i) {
    const Vec2 v = p.vertex((p.n() - i) % p.n());
    q[i] = {v.x, -v.y};
  }
  return validate_polygon(std::move(q));
}

BoundaryPoint mirror_point(const ConvexPolygon& p, const ConvexPolygon& q, BoundaryPoint b) {
  return q.from_lifted(q.perimeter() - p.to_lifted(b));
}

}  // namespace

FarthestResult farthest_coverable(const ConvexPolygon& p, BoundaryPoint x, double r,
                                  InsertOrder direction) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw GeomError(Errc::RadiusTooSmall, "farthest_coverable needs r > 0");
  }
  if (direction == InsertOrder::CW) {
    const ConvexPolygon q = mirror_polygon(p);
    FarthestResult res = farthest_coverable(q, mirror_point(p, q, x), r, InsertOrder::CCW);
    res.endpoint = mirror_point(q, p, res.endpoint);
    res.disk.center.y = -res.disk.center.y;
    return res;
  }

  const std::vector<Vec2> pts = chain_points_from(p, x);
  const auto cov_prefix = [&](int k) {
    std::vector<Vec2> pre(pts.begin(), pts.begin() + k);
    return mec(pre).disk.radius <= r * (1.0 + kEps);
  };
  // largest coverable vertex prefix; cov_prefix(1) always holds
  int lo = 1, hi = static_cast<int>(pts.size());
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (cov_prefix(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const int k = lo;

  // endpoint lies between chain point k-1 and the next chain point
  const double s0 = p.to_lifted(x);
  std::vector<double> spts(pts.size());
  spts[0] = s0;
  {
    int count = 1;
    for (int kk = 0; kk <= p.n() && count < static_cast<int>(pts.size()); ++kk) {
      const int idx = p.mod_index(x.edge_index + 1 + kk);
      const double off = p.wrap(p.edge_s_base(idx) - s0);
      if (off > 1e-12 * p.perimeter()) spts[count++] = s0 + off;
    }
  }
  const double s_lo_pt = spts[k - 1];
  const double s_hi_pt = k < static_cast<int>(spts.size()) ? spts[k] : s0 + p.perimeter();

  // bisect on the edge segment between them with the full-prefix predicate
  std::vector<Vec2> buf(pts.begin(), pts.begin() + k);
  buf.push_back({0, 0});
  auto cov_at = [&](double s) {
    buf.back() = p.realize(p.from_lifted(s));
    return mec(buf).disk.radius <= r * (1.0 + kEps);
  };
  double a = s_lo_pt, b = s_hi_pt;
  if (cov_at(b)) {
    a = b;  // whole segment coverable; endpoint at the far end
  } else {
    for (int it = 0; it < 60 && b - a > 1e-13 * p.perimeter(); ++it) {
      const double mid = 0.5 * (a + b);
      (cov_at(mid) ? a : b) = mid;
    }
  }

  FarthestResult out;
  out.endpoint = p.from_lifted(a);
  buf.back() = p.realize(out.endpoint);
  MecResult m = mec(buf);
  out.disk = m.disk;
  // classify determinators against x and the endpoint
  bool has_x = false, has_f = false;
  int verts = 0;
  const Vec2 fx = buf.back();
  for (Vec2 s : m.support) {
    if (dist(s, buf.front()) < 1e-9 * (1.0 + r)) {
      has_x = true;
    } else if (dist(s, fx) < 1e-9 * (1.0 + r)) {
      has_f = true;
    } else {
      ++verts;
    }
  }
  (void)has_f;
  out.type = has_x ? (verts == 0 ? PieceType::T2 : PieceType::T1)
                   : (verts <= 1 ? PieceType::T3 : PieceType::T4);
  return out;
}

std::array<BoundaryPoint, 4> anchor_points(const ConvexPolygon& p, double r) {
  std::array<BoundaryPoint, 4> xs;
  xs[0] = BoundaryPoint{0, 0.0};
  for (int i = 1; i < 4; ++i) {
    xs[i] = farthest_coverable(p, xs[i - 1], r).endpoint;
  }
  return xs;
}

// ---------------------------------------------------------------------------
// coverage construction

namespace {

struct SideSeg {
  double s_lo = 0.0, s_hi = 0.0;  // unrolled lifted interval
  std::array<Vec2, 3> tops{};     // hull vertices nearest the moving end
  int ntops = 0;
};

/// Hull pass from s_from to s_to (unrolled; descending for CW), recording
/// for every maximal event-free stretch the up-to-3 hull vertices adjacent
/// to the moving end. Returned ascending in s.
std::vector<SideSeg> side_segments(const ConvexPolygon& p, double r, double s_from, double s_to,
                                   InsertOrder order, size_t* ins_total, size_t* pops_total) {
  const double L = p.perimeter();
  const int dir = order == InsertOrder::CCW ? 1 : -1;
  const double span_eps = 1e-13 * L;
  std::vector<SideSeg> segs;

  CircularHull h(r, order, false);
  h.insert(p.realize(p.from_lifted(s_from)));

  double s_cur = s_from;
  std::vector<EdgeEvent> events;
  while (dir * (s_to - s_cur) > span_eps) {
    const BoundaryPoint b = p.from_lifted(s_cur);
    double step;  // arc length to the next vertex in the travel direction
    if (dir > 0) {
      const double t = b.t;
      step = (1.0 - t) * p.edge_length(b.edge_index);
      if (step <= span_eps) step = p.edge_length(b.edge_index + 1);
    } else {
      step = b.t * p.edge_length(b.edge_index);
      if (step <= span_eps) step = p.edge_length(b.edge_index - 1);
    }
    double s_stop = s_cur + dir * step;
    if (dir * (s_to - s_stop) < 0) s_stop = s_to;

    const Vec2 from = p.realize(p.from_lifted(s_cur));
    const Vec2 to = p.realize(p.from_lifted(s_stop));
    events.clear();
    const size_t pre_size = h.size();
    h.insert_edge(from, to, &events, b.edge_index);
    const auto& st = h.stack();
    const bool pushed = !st.empty() && dist(st.back(), to) < 1e-13;
    const size_t base_n = st.size() - (pushed ? 1 : 0);
    (void)pre_size;

    const int m = static_cast<int>(events.size());
    for (int j = 0; j <= m; ++j) {
      SideSeg seg;
      const double t_a = j == 0 ? 0.0 : events[j - 1].t;
      const double t_b = j == m ? 1.0 : events[j].t;
      const double sa = s_cur + dir * t_a * std::abs(s_stop - s_cur);
      const double sb = s_cur + dir * t_b * std::abs(s_stop - s_cur);
      seg.s_lo = std::min(sa, sb);
      seg.s_hi = std::max(sa, sb);
      // tops: the vertices still to be popped after event j, then the
      // surviving stack below them
      for (int q = j; q < m && seg.ntops < 3; ++q) {
        seg.tops[seg.ntops++] = events[q].departing_vertex;
      }
      for (size_t q = base_n; q > 0 && seg.ntops < 3; --q) {
        seg.tops[seg.ntops++] = st[q - 1];
      }
      if (seg.s_hi - seg.s_lo > span_eps) segs.push_back(seg);
    }
    s_cur = s_stop;
  }

  *ins_total += h.insertions();
  *pops_total += h.pops();
  if (dir < 0) std::reverse(segs.begin(), segs.end());
  return segs;
}

LocalPts make_locals(const ConvexPolygon& p, double s_x, const SideSeg& xs, const SideSeg& ys,
                     int* x_index) {
  LocalPts loc;
  loc.add(p.realize(p.from_lifted(s_x)));
  *x_index = 0;
  // the vertices flanking x and the image window can carry the minimal disk
  // even when the reconstructed hull tops no longer expose them; only add
  // them when they provably lie inside the chain x -> f for every f queried
  const double tiny = 1e-12 * p.perimeter();
  const BoundaryPoint bx = p.from_lifted(s_x);
  const double s_ccw = s_x + (1.0 - bx.t) * p.edge_length(bx.edge_index);
  if (s_ccw <= ys.s_lo + tiny) loc.add(p.edge_end(bx.edge_index));
  const double y_mid = 0.5 * (ys.s_lo + ys.s_hi);
  const BoundaryPoint bf = p.from_lifted(y_mid);
  const double s_cw = y_mid - bf.t * p.edge_length(bf.edge_index);
  if (s_cw >= s_x - tiny) loc.add(p.edge_start(bf.edge_index));
  for (int i = 0; i < xs.ntops; ++i) loc.add(xs.tops[i]);
  for (int i = 0; i < ys.ntops; ++i) loc.add(ys.tops[i]);
  return loc;
}

}  // namespace

double CoverageFunction::eval_forward(double s) const {
  // piece lookup
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), s,
                             [](double v, const Piece& pc) { return v < pc.s_lo; });
  if (it != pieces_.begin()) --it;
  const Piece& pc = *it;
  if (pc.y_hi - pc.y_lo <= 1e-13 * L_) return pc.y_lo;

  LocalPts loc;
  loc.add(poly_->realize(poly_->from_lifted(s)));
  {
    const double tiny = 1e-12 * L_;
    const BoundaryPoint bx = poly_->from_lifted(s);
    const double s_ccw = s + (1.0 - bx.t) * poly_->edge_length(bx.edge_index);
    if (s_ccw <= pc.y_lo + tiny) loc.add(poly_->edge_end(bx.edge_index));
    const double y_mid = 0.5 * (pc.y_lo + pc.y_hi);
    const BoundaryPoint bf = poly_->from_lifted(y_mid);
    const double s_cw = y_mid - bf.t * poly_->edge_length(bf.edge_index);
    if (s_cw >= s - tiny) loc.add(poly_->edge_start(bf.edge_index));
  }
  for (int i = 0; i < pc.n_xtops; ++i) loc.add(pc.xtops[i]);
  for (int i = 0; i < pc.n_ytops; ++i) loc.add(pc.ytops[i]);

  const Vec2 a0 = poly_->realize(poly_->from_lifted(pc.y_lo));
  const Vec2 a1 = poly_->realize(poly_->from_lifted(pc.y_hi));
  RootResult rr = coverage_root(a0, a1, 0.0, 1.0, loc, r_, /*want_max=*/true, 0);
  switch (rr.k) {
    case RootResult::K::AllCover:
      return pc.y_hi;
    case RootResult::K::NoneCover:
      return pc.y_lo;
    case RootResult::K::Root:
      return pc.y_lo + rr.t * (pc.y_hi - pc.y_lo);
  }
  return pc.y_lo;
}

double CoverageFunction::eval(LiftedCoord s) const {
  if (direction == InsertOrder::CCW) {
    const double k = std::floor((s - s_origin_) / L_);
    return eval_forward(s - k * L_) + k * L_;
  }
  // G̃(s) on the original polygon from F̃ on the mirror image
  const double sq = L_ - s;
  const double k = std::floor((sq - s_origin_) / L_);
  const double fq = eval_forward(sq - k * L_) + k * L_;
  const double reach = fq - sq;
  return s - reach;
}

std::vector<std::pair<double, double>> CoverageFunction::breakpoint_values() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(pieces_.size());
  for (const Piece& pc : pieces_) {
    if (direction == InsertOrder::CCW) {
      double w = std::fmod(pc.s_lo, L_);
      if (w < 0) w += L_;
      out.emplace_back(w, pc.y_lo - (pc.s_lo - w));
    } else {
      // piece coordinates live on the mirror image; map back
      double w = std::fmod(L_ - pc.s_lo, L_);
      if (w < 0) w += L_;
      const double reach = pc.y_lo - pc.s_lo;
      out.emplace_back(w, w - reach);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> CoverageFunction::breakpoints() const {
  std::vector<double> bps;
  bps.reserve(pieces_.size());
  for (const Piece& pc : pieces_) {
    const double s = direction == InsertOrder::CCW ? pc.s_lo : L_ - pc.s_lo;
    double w = std::fmod(s, L_);
    if (w < 0) w += L_;
    bps.push_back(w);
  }
  std::sort(bps.begin(), bps.end());
  return bps;
}

CoverageFunction build_coverage(const ConvexPolygon& p, double r, InsertOrder direction) {
  if (direction == InsertOrder::CW) {
    auto q = std::make_shared<ConvexPolygon>(mirror_polygon(p));
    CoverageFunction cf = build_coverage(*q, r, InsertOrder::CCW);
    cf.direction = InsertOrder::CW;
    cf.poly_ = q;  // keep the mirror alive; pieces reference it
    return cf;
  }

  CoverageFunction cf;
  cf.direction = InsertOrder::CCW;
  cf.poly_ = std::make_shared<ConvexPolygon>(p);
  const ConvexPolygon& P = *cf.poly_;
  const double L = P.perimeter();
  cf.L_ = L;
  cf.r_ = r;
  cf.s_origin_ = 0.0;

  // anchor chain x0=v0, x_{k+1}=f(x_k), continued until it wraps
  std::vector<double> anchors{0.0};
  const int cap = 2 * P.n() + 16;
  while (anchors.back() < L) {
    if (static_cast<int>(anchors.size()) > cap) {
      throw GeomError(Errc::RadiusTooSmall, "coverage sweep did not wrap the boundary");
    }
    const BoundaryPoint cur = P.from_lifted(anchors.back());
    const double reach = P.wrap(P.to_lifted(farthest_coverable(P, cur, r).endpoint) -
                                P.wrap(anchors.back()));
    if (reach <= 1e-12 * L) {
      throw GeomError(Errc::RadiusTooSmall, "coverage sweep stalled");
    }
    anchors.push_back(anchors.back() + reach);
  }
  if (anchors.size() < 2) {
    throw GeomError(Errc::RadiusTooSmall, "polygon is one-disk coverable");
  }

  const double tol_s = 1e-12 * L;

  // classify-and-emit with splitting at determinator/type transitions
  struct Emitter {
    CoverageFunction& cf;
    const ConvexPolygon& P;
    double r, L;
    void emit(double s_lo, double s_hi, double y_lo, double y_hi, const SideSeg& xs,
              const SideSeg& ys, int depth) {
      if (s_hi - s_lo <= 1e-12 * L) return;
      auto resolve = [&](double s) {
        int xi = 0;
        LocalPts loc = make_locals(P, s, xs, ys, &xi);
        const Vec2 a0 = P.realize(P.from_lifted(y_lo));
        const Vec2 a1 = P.realize(P.from_lifted(y_hi));
        return coverage_root(a0, a1, 0.0, 1.0, loc, r, true, xi);
      };
      auto signature_eq = [&](const RootResult& a, const RootResult& b) {
        // AllCover/NoneCover at a probe point means the root sits at the
        // window boundary there (a numerical artifact of the probe offset,
        // not a combinatorial transition): never split on it.
        if (a.k != RootResult::K::Root || b.k != RootResult::K::Root) return true;
        if (a.type != b.type || a.ndet != b.ndet) return false;
        for (int i = 0; i < a.ndet; ++i) {
          if (dist(a.det[i], b.det[i]) > 1e-9 * (1.0 + r)) return false;
        }
        return true;
      };
      const double pad = 1e-7 * (s_hi - s_lo);
      RootResult ra = resolve(s_lo + pad);
      RootResult rb = resolve(s_hi - pad);
      if (depth < 3 && !signature_eq(ra, rb)) {
        double lo = s_lo + pad, hi = s_hi - pad;
        for (int it = 0; it < 30 && hi - lo > 1e-11 * L; ++it) {
          const double mid = 0.5 * (lo + hi);
          (signature_eq(ra, resolve(mid)) ? lo : hi) = mid;
        }
        const double split = 0.5 * (lo + hi);
        // keep the children's y-windows exact at the new boundary
        const RootResult rs = resolve(split);
        double y_split = y_hi;
        if (rs.k == RootResult::K::Root) {
          y_split = y_lo + rs.t * (y_hi - y_lo);
        } else if (rs.k == RootResult::K::NoneCover) {
          y_split = y_lo;
        }
        emit(s_lo, split, y_lo, y_split, xs, ys, depth + 1);
        emit(split, s_hi, y_split, y_hi, xs, ys, depth + 1);
        return;
      }
      Piece pc;
      pc.s_lo = s_lo;
      pc.s_hi = s_hi;
      pc.y_lo = y_lo;
      pc.y_hi = y_hi;
      pc.x_edge = P.from_lifted(0.5 * (s_lo + s_hi)).edge_index;
      pc.image_edge = P.from_lifted(0.5 * (y_lo + y_hi)).edge_index;
      const RootResult& rc = ra.k == RootResult::K::Root ? ra : rb;
      pc.type = rc.type;
      pc.n_det = rc.k == RootResult::K::Root ? rc.ndet : 0;
      for (int i = 0; i < pc.n_det; ++i) pc.determinators[i] = rc.det[i];
      pc.n_xtops = xs.ntops;
      for (int i = 0; i < xs.ntops; ++i) pc.xtops[i] = xs.tops[i];
      pc.n_ytops = ys.ntops;
      for (int i = 0; i < ys.ntops; ++i) pc.ytops[i] = ys.tops[i];
      cf.pieces_.push_back(pc);
    }
  } emitter{cf, P, r, L};

  const int n_chains = static_cast<int>(anchors.size()) - 1;
  for (int c = 1; c <= n_chains; ++c) {
    const double A = anchors[c - 1];
    const double B = std::min(anchors[c], L);
    const double M = anchors[c];
    const double E = (B >= L - tol_s) ? anchors[1] + L
                                      : (c + 1 < static_cast<int>(anchors.size())
                                             ? anchors[c + 1]
                                             : anchors[1] + L);
    if (B - A <= tol_s) continue;

    std::vector<SideSeg> xsegs =
        side_segments(P, r, M, A, InsertOrder::CW, &cf.insertions, &cf.pops);
    std::vector<SideSeg> ysegs =
        side_segments(P, r, M, E, InsertOrder::CCW, &cf.insertions, &cf.pops);
    if (ysegs.empty()) {  // f constant at M over the whole chain
      SideSeg stub;
      stub.s_lo = stub.s_hi = M;
      stub.tops[0] = P.realize(P.from_lifted(M));
      stub.ntops = 1;
      ysegs.push_back(stub);
    }

    size_t xi = 0, yi = 0;
    double s_cur = A, y_cur = M;
    while (s_cur < B - tol_s && xi < xsegs.size()) {
      const SideSeg& xs = xsegs[xi];
      if (xs.s_hi <= s_cur + tol_s) {
        ++xi;
        continue;
      }
      while (yi + 1 < ysegs.size() && ysegs[yi].s_hi <= y_cur + tol_s) ++yi;
      const SideSeg& ys = ysegs[yi];

      const double x_end = std::min(xs.s_hi, B);
      const double w_lo = std::max(y_cur, ys.s_lo);
      const double w_hi = std::max(w_lo, ys.s_hi);

      int x_idx = 0;
      LocalPts loc = make_locals(P, x_end, xs, ys, &x_idx);
      const Vec2 a0 = P.realize(P.from_lifted(w_lo));
      const Vec2 a1 = P.realize(P.from_lifted(w_hi));
      RootResult rr = w_hi - w_lo <= tol_s
                          ? RootResult{RootResult::K::AllCover}
                          : coverage_root(a0, a1, 0.0, 1.0, loc, r, true, x_idx);

      if (rr.k == RootResult::K::AllCover && yi + 1 < ysegs.size()) {
        // f passes the top of this y-segment within the x-segment: find the
        // crossing x' with f(x') = w_hi by solving on the x side
        LocalPts loc2;
        loc2.add(P.realize(P.from_lifted(w_hi)));
        for (int i = 0; i < xs.ntops; ++i) loc2.add(xs.tops[i]);
        for (int i = 0; i < ys.ntops; ++i) loc2.add(ys.tops[i]);
        const Vec2 b0 = P.realize(P.from_lifted(s_cur));
        const Vec2 b1 = P.realize(P.from_lifted(x_end));
        RootResult ir = coverage_root(b0, b1, 0.0, 1.0, loc2, r, /*want_max=*/false, -1);
        double split_x;
        if (ir.k == RootResult::K::AllCover) {
          split_x = s_cur;  // f already beyond this y-segment at s_cur
        } else if (ir.k == RootResult::K::NoneCover) {
          split_x = x_end;
        } else {
          split_x = s_cur + ir.t * (x_end - s_cur);
        }
        emitter.emit(s_cur, split_x, y_cur, w_hi, xs, ys, 0);
        s_cur = split_x;
        y_cur = w_hi;
        ++yi;
        continue;
      }

      double f_hi;
      if (rr.k == RootResult::K::Root) {
        f_hi = w_lo + rr.t * (w_hi - w_lo);
      } else if (rr.k == RootResult::K::AllCover) {
        f_hi = w_hi;  // last y-segment
      } else {
        f_hi = w_lo;
      }
      if (f_hi < y_cur) f_hi = y_cur;
      emitter.emit(s_cur, x_end, y_cur, f_hi, xs, ys, 0);
      s_cur = x_end;
      y_cur = f_hi;
      ++xi;
    }
  }

  std::sort(cf.pieces_.begin(), cf.pieces_.end(),
            [](const Piece& a, const Piece& b) { return a.s_lo < b.s_lo; });
  if (cf.pieces_.empty()) {
    throw GeomError(Errc::RadiusTooSmall, "no coverage pieces produced");
  }
  return cf;
}

// ---------------------------------------------------------------------------
// decision

namespace {

Disk chain_disk(const ConvexPolygon& p, BoundaryPoint a, BoundaryPoint b, double r) {
  Chain c{a, b};
  if (p.wrap(p.to_lifted(b) - p.to_lifted(a)) == 0.0) c.full = true;
  Disk d = mec(chain_vertices(p, c)).disk;
  d.radius = r;
  return d;
}

void debug_audit(const ConvexPolygon& p, double r, const CoverageFunction& f) {
  const ConvexPolygon& dom = f.domain();
  const size_t n = f.piece_count();
  const size_t step = std::max<size_t>(1, n / 64);
  int bad = 0;
  for (size_t i = 0; i < n; i += step) {
    const Piece& pc = f.pieces()[i];
    const double s = 0.5 * (pc.s_lo + pc.s_hi);
    const double got = f.direction == InsertOrder::CCW
                           ? f.eval(s)
                           : 0.0;  // audit runs on the forward structure only
    if (f.direction != InsertOrder::CCW) break;
    const FarthestResult fr = farthest_coverable(dom, dom.from_lifted(s), r);
    const double want = s + dom.wrap(dom.to_lifted(fr.endpoint) - dom.wrap(s));
    if (std::abs(got - want) > 1e-6 * dom.perimeter()) {
      std::fprintf(stderr, "bicover: coverage self-audit mismatch at s=%.17g: %.17g vs %.17g\n",
                   s, got, want);
      ++bad;
    }
  }
  if (bad) {
    std::fprintf(stderr, "bicover: %d coverage self-audit mismatches (r=%.17g, n=%d)\n", bad, r,
                 p.n());
  }
}

}  // namespace

DecisionResult decide(const ConvexPolygon& p, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw GeomError(Errc::InvalidRadius, "decide: radius must be positive and finite");
  }
  DecisionResult out;
  const double L = p.perimeter();

  if (auto od = one_disk_check(p, r)) {
    out.yes = true;
    out.witness = DecisionWitness{BoundaryPoint{0, 0.0}, p.from_lifted(L / 2), *od, *od};
    return out;
  }

  // Three greedy chains must wrap the boundary when r >= r*; if they fall
  // short the answer is immediately no.
  double s_reach = 0.0;
  BoundaryPoint cur{0, 0.0};
  for (int i = 0; i < 3; ++i) {
    const FarthestResult fr = farthest_coverable(p, cur, r);
    s_reach += p.wrap(p.to_lifted(fr.endpoint) - p.to_lifted(cur));
    cur = fr.endpoint;
    if (s_reach >= L) break;
  }
  if (s_reach < L * (1.0 - 1e-12)) {
    out.yes = false;
    return out;
  }

  CoverageFunction F = build_coverage(p, r, InsertOrder::CCW);
  CoverageFunction G = build_coverage(p, r, InsertOrder::CW);
  out.stats.pieces_f = F.piece_count();
  out.stats.pieces_g = G.piece_count();
  out.stats.insertions = F.insertions + G.insertions;
  out.stats.pops = F.pops + G.pops;

  if (std::getenv("BICOVER_DEBUG")) {
    debug_audit(p, r, F);
    debug_audit(p, r, G);
  }

  // Merged breakpoint ring. The exact function values at each function's
  // own breakpoints are stored with the pieces, so the ring with per-
  // interval bounds is assembled without any root solving.
  const std::vector<std::pair<double, double>> fbv = F.breakpoint_values();
  const std::vector<std::pair<double, double>> gbv = G.breakpoint_values();
  std::vector<double> bps;
  bps.reserve(fbv.size() + gbv.size());
  for (const auto& [s, v] : fbv) bps.push_back(s);
  for (const auto& [s, v] : gbv) bps.push_back(s);
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end(),
                        [&](double a, double b) { return b - a < 1e-12 * L; }),
            bps.end());
  if (bps.empty()) bps.push_back(0.0);
  const size_t m = bps.size();

  // F upper bound at b: exact F at the first F-breakpoint >= b (monotone).
  // G lower bound at a: exact G at the last G-breakpoint <= a.
  auto f_upper = [&](double s) {
    double k = 0.0;
    while (s >= L) s -= L, k += L;
    while (s < 0) s += L, k -= L;
    auto it = std::lower_bound(fbv.begin(), fbv.end(), std::pair{s - 1e-12 * L, 0.0});
    if (it == fbv.end()) return fbv.front().second + L + k;
    return it->second + k;
  };
  auto g_lower = [&](double s) {
    double k = 0.0;
    while (s >= L) s -= L, k += L;
    while (s < 0) s += L, k -= L;
    auto it = std::upper_bound(gbv.begin(), gbv.end(), std::pair{s + 1e-12 * L, 0.0});
    if (it == gbv.begin()) return gbv.back().second - L + k;
    return std::prev(it)->second + k;
  };
  auto phi = [&](double s) { return F.eval(s) - G.eval(s) - L; };

  // Monotonicity of F̃ and G̃ bounds the maximum on [b_i, b_{i+1}] by
  // F̃(b_{i+1}) - G̃(b_i) - L; only intervals whose bound can beat the
  // current best need the interior search.
  std::vector<std::pair<double, size_t>> order(m);
  for (size_t i = 0; i < m; ++i) {
    const double b = i + 1 < m ? bps[i + 1] : bps[0] + L;
    order[i] = {f_upper(b) - g_lower(bps[i]) - L, i};
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  double best = -std::numeric_limits<double>::infinity();
  double best_s = bps[0];
  std::vector<double> bp_phi(m, std::numeric_limits<double>::quiet_NaN());
  auto phi_at_bp = [&](size_t i) {
    if (std::isnan(bp_phi[i])) bp_phi[i] = phi(bps[i]);
    return bp_phi[i];
  };

  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (const auto& [bound, i] : order) {
    if (bound <= best) break;
    const double a = bps[i];
    const double b = i + 1 < m ? bps[i + 1] : bps[0] + L;
    for (size_t e : {i, (i + 1) % m}) {
      const double v = phi_at_bp(e);
      const double s_e = e == i ? a : b;
      if (v > best) {
        best = v;
        best_s = s_e;
      }
    }
    if (bound <= best || b - a <= 1e-12 * L) continue;
    // coarse scan, then golden section in the best bracket
    const int grid = 9;
    double gbest = -std::numeric_limits<double>::infinity();
    int gidx = 0;
    for (int k = 0; k <= grid; ++k) {
      const double s = a + (b - a) * k / grid;
      const double v = phi(s);
      if (v > gbest) {
        gbest = v;
        gidx = k;
      }
    }
    double lo = a + (b - a) * std::max(0, gidx - 1) / grid;
    double hi = a + (b - a) * std::min(grid, gidx + 1) / grid;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = phi(x1), f2 = phi(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-12 * L; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = phi(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = phi(x1);
      }
    }
    const double s_mid = 0.5 * (lo + hi);
    const double v_mid = std::max({phi(s_mid), gbest, f1, f2});
    if (v_mid > best) {
      best = v_mid;
      best_s = f1 >= f2 && f1 >= gbest ? x1 : (f2 >= gbest ? x2 : a + (b - a) * gidx / grid);
      if (phi(s_mid) >= v_mid) best_s = s_mid;
    }
    if (best >= 1e-9 * L) break;  // clear yes: no need to polish the argmax
  }

  if (best < 0.0) {
    out.yes = false;
    return out;
  }

  out.yes = true;
  const double s_star = best_s;
  const double g_star = G.eval(s_star);
  BoundaryPoint x = p.from_lifted(p.wrap(s_star));
  BoundaryPoint split2 = p.from_lifted(p.wrap(g_star + L));
  out.witness = DecisionWitness{x, split2, chain_disk(p, x, split2, r),
                                chain_disk(p, split2, x, r)};
  return out;
}

}  // namespace bicover
