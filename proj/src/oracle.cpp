#include "bicover/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace bicover {

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double tau_span(const ConvexPolygon& p, double s_from, double span) {
  Chain c{p.from_lifted(s_from), p.from_lifted(s_from + span)};
  if (span >= p.perimeter()) c.full = true;
  return tau(p, c);
}

}  // namespace

std::pair<double, double> tau_pair(const ConvexPolygon& p, BoundaryPoint x, BoundaryPoint y) {
  return {tau(p, Chain{x, y}), tau(p, Chain{y, x})};
}

BoundaryPoint h_point(const ConvexPolygon& p, BoundaryPoint q) {
  const double L = p.perimeter();
  const double s0 = p.to_lifted(q);
  // keep(off) is true while tau(q, q+off) <= tau(q+off, q); it flips exactly
  // once as off grows from 0 to L.
  auto keep = [&](double off) {
    const double a = tau_span(p, s0, off);
    const double b = tau_span(p, s0 + off, L - off);
    return a <= b;
  };

  // Locate the bracketing pair of vertex offsets by binary search.
  std::vector<double> offs;
  for (int k = 1; k <= p.n(); ++k) {
    const double off = p.wrap(p.edge_s_base(q.edge_index + k) - s0);
    if (off > 1e-12 * L) offs.push_back(off);
  }
  std::sort(offs.begin(), offs.end());
  double lo = 1e-12 * L, hi = L - 1e-12 * L;
  size_t a = 0, b = offs.size();  // offs[a..b) undecided
  while (a < b) {
    const size_t m = (a + b) / 2;
    if (keep(offs[m])) {
      lo = offs[m];
      a = m + 1;
    } else {
      hi = offs[m];
      b = m;
    }
  }
  for (int it = 0; it < 60 && hi - lo > 1e-12 * L; ++it) {
    const double m = 0.5 * (lo + hi);
    (keep(m) ? lo : hi) = m;
  }
  return p.from_lifted(s0 + lo);
}

namespace {

/// Split value at x: the equalized max(tau fore, tau aft) over the inner
/// split, found as the root of their difference.
double split_value(const ConvexPolygon& p, double sx) {
  const double L = p.perimeter();
  double lo = 1e-9 * L, hi = L - 1e-9 * L;
  for (int it = 0; it < 48; ++it) {
    const double m = 0.5 * (lo + hi);
    const double fore = tau_span(p, sx, m);
    const double aft = tau_span(p, sx + m, L - m);
    (fore <= aft ? lo : hi) = m;
  }
  const double m = 0.5 * (lo + hi);
  return std::max(tau_span(p, sx, m), tau_span(p, sx + m, L - m));
}

}  // namespace

double rstar_bruteforce(const ConvexPolygon& p, const OracleConfig& cfg) {
  const double L = p.perimeter();
  const int ns = std::max(8, cfg.x_samples);
  double best = std::numeric_limits<double>::infinity();
  double best_s = 0.0;
  for (int i = 0; i < ns; ++i) {
    const double sx = L * i / ns;
    const double v = split_value(p, sx);
    if (v < best) {
      best = v;
      best_s = sx;
    }
  }
  double window = L / ns;
  for (int round = 0; round < cfg.refine_rounds; ++round) {
    const int k = 32;
    double lo = best_s - window, hi = best_s + window;
    for (int i = 0; i <= k; ++i) {
      const double sx = lo + (hi - lo) * i / k;
      const double v = split_value(p, sx);
      if (v < best) {
        best = v;
        best_s = sx;
      }
    }
    window = (hi - lo) / k;
  }
  return best;
}

bool decide_bruteforce(const ConvexPolygon& p, double r, const OracleConfig& cfg) {
  if (!(r > 0.0)) return false;
  const double L = p.perimeter();
  if (mec(p.vertices()).disk.radius <= r * (1.0 + kEps)) return true;
  const int ns = std::max(8, cfg.x_samples);
  auto longest = [&](double s_from, bool forward) {
    double lo = 0.0, hi = L;
    for (int it = 0; it < 48; ++it) {
      const double m = 0.5 * (lo + hi);
      const double t =
          forward ? tau_span(p, s_from, m) : tau_span(p, s_from - m, m);
      (t <= r * (1.0 + kEps) ? lo : hi) = m;
    }
    return lo;  // certified coverable extent
  };
  auto reach = [&](double sx) { return longest(sx, true) + longest(sx, false); };
  double best = -1.0, best_s = 0.0;
  for (int i = 0; i < ns; ++i) {
    const double sx = L * i / ns;
    const double v = reach(sx);
    if (v >= L) return true;
    if (v > best) {
      best = v;
      best_s = sx;
    }
  }
  // refine around the most promising x; narrow feasible windows between
  // sample points are caught here
  double window = L / ns;
  for (int round = 0; round < std::max(1, cfg.refine_rounds); ++round) {
    const int k = 32;
    const double lo = best_s - window, hi = best_s + window;
    for (int i = 0; i <= k; ++i) {
      const double sx = lo + (hi - lo) * i / k;
      const double v = reach(sx);
      if (v >= L) return true;
      if (v > best) {
        best = v;
        best_s = sx;
      }
    }
    window = (hi - lo) / k;
  }
  return false;
}

ConvexPolygon random_convex_polygon(int n, uint64_t seed) {
  if (n < 3) throw GeomError(Errc::TooFewVertices, "need n >= 3");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(n));
  const double dtheta = 2.0 * std::numbers::pi / n;
  // Angle gaps stay >= 0.5*dtheta and the radial jitter is kept small
  // relative to dtheta^2 so the worst-case deflection cannot create a
  // reflex vertex even for dense polygons.
  const double ang_jit = 0.25;
  const double rad_jit = std::min(0.15, 0.05 * dtheta * dtheta);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vec2> pts(n);
    for (int i = 0; i < n; ++i) {
      const double th = (i + ang_jit * (2.0 * unit_double(rng) - 1.0)) * dtheta;
      const double rho = 1.0 + rad_jit * (2.0 * unit_double(rng) - 1.0);
      pts[i] = {rho * std::cos(th), 0.8 * rho * std::sin(th)};
    }
    try {
      return ConvexPolygon::validate(std::move(pts));
    } catch (const GeomError&) {
      continue;  // redraw
    }
  }
  throw GeomError(Errc::NotConvex, "random polygon generation failed to converge");
}

uint64_t polygon_hash(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  const unsigned char* b = reinterpret_cast<const unsigned char*>(v.data());
  uint64_t h = 0xcbf29ce484222325ull;
  for (size_t i = 0; i < v.size() * sizeof(Vec2); ++i) {
    h ^= b[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace bicover
