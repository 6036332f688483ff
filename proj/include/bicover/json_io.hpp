#pragma once

#include <string>

#include "bicover/geom.hpp"
#include "bicover/optimizer.hpp"

namespace bicover {

/// Reads {"vertices": [[x,y], ...]} and validates it.
/// Throws GeomError on malformed JSON or an invalid polygon.
ConvexPolygon read_polygon_file(const std::string& path);

/// Writes {"vertices": ...} with 17 significant digits. Deterministic:
/// identical polygons produce identical bytes.
void write_polygon_file(const std::string& path, const ConvexPolygon& p);

/// Serializes a solve result:
/// {"radius", "disks": [{cx,cy,r} x2], "splits": [s1,s2] (lifted coords),
///  "bracket": [r_low,r_high], "meta": {"tool","version","seed","timings_ms"}}
std::string result_to_json(const ConvexPolygon& p, const SolveResult& res, uint64_t seed,
                           double timings_ms);

/// SVG with the polygon outline, both disks, and the two split points;
/// viewBox fits the union's bounding box with a 5% margin.
std::string result_to_svg(const ConvexPolygon& p, const SolveResult& res);

}  // namespace bicover
