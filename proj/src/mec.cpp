#include "bicover/mec.hpp"

#include <algorithm>
#include <cstring>
#include <random>

namespace bicover {

namespace {

uint64_t fnv1a(const void* data, size_t len) {
  const unsigned char* b = static_cast<const unsigned char*>(data);
  uint64_t h = 0xcbf29ce484222325ull;
  for (size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

bool inside(const Disk& d, Vec2 p, double slack) {
  return dist(d.center, p) <= d.radius + slack;
}

Disk disk2(Vec2 a, Vec2 b) {
  const Vec2 m = (a + b) * 0.5;
  return {m, dist(a, b) * 0.5};
}

}  // namespace

MecResult mec(const std::vector<Vec2>& points) {
  if (points.empty()) throw GeomError(Errc::EmptyInput, "mec of empty point set");

  std::vector<Vec2> pts = points;
  const uint64_t seed = fnv1a(points.data(), points.size() * sizeof(Vec2));
  std::mt19937_64 rng(seed);
  std::shuffle(pts.begin(), pts.end(), rng);

  double scale = 0.0;
  for (Vec2 p : pts) scale = std::max(scale, std::abs(p.x) + std::abs(p.y));
  const double slack = kEps * std::max(scale, 1e-300);

  const size_t n = pts.size();
  Disk d{pts[0], 0.0};
  std::vector<Vec2> sup{pts[0]};
  for (size_t i = 1; i < n; ++i) {
    if (inside(d, pts[i], slack)) continue;
    d = {pts[i], 0.0};
    sup = {pts[i]};
    for (size_t j = 0; j < i; ++j) {
      if (inside(d, pts[j], slack)) continue;
      d = disk2(pts[i], pts[j]);
      sup = {pts[i], pts[j]};
      for (size_t k = 0; k < j; ++k) {
        if (inside(d, pts[k], slack)) continue;
        try {
          d = circumcircle3(pts[i], pts[j], pts[k]);
          sup = {pts[i], pts[j], pts[k]};
        } catch (const GeomError&) {
          // collinear triple: the diametral pair of the three
          Disk best = disk2(pts[i], pts[j]);
          sup = {pts[i], pts[j]};
          if (dist(pts[i], pts[k]) * 0.5 > best.radius) {
            best = disk2(pts[i], pts[k]);
            sup = {pts[i], pts[k]};
          }
          if (dist(pts[j], pts[k]) * 0.5 > best.radius) {
            best = disk2(pts[j], pts[k]);
            sup = {pts[j], pts[k]};
          }
          d = best;
        }
      }
    }
  }
  return {d, sup};
}

double tau(const ConvexPolygon& p, const Chain& c) {
  const std::vector<Vec2> verts = chain_vertices(p, c);
  if (verts.size() == 1) return 0.0;
  return mec(verts).disk.radius;
}

bool is_chain_coverable(const ConvexPolygon& p, const Chain& c, double r) {
  if (r < 0.0) return false;
  return tau(p, c) <= r * (1.0 + kEps);
}

}  // namespace bicover
