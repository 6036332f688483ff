#include "bicover/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bicover {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ConvexPolygon read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeomError(Errc::EmptyInput, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw GeomError(Errc::EmptyInput, std::string("malformed JSON: ") + e.what());
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw GeomError(Errc::EmptyInput, "missing \"vertices\" array");
  }
  std::vector<Vec2> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw GeomError(Errc::EmptyInput, "vertices must be [x, y] number pairs");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return validate_polygon(std::move(pts));
}

void write_polygon_file(const std::string& path, const ConvexPolygon& p) {
  // hand-rolled serialization keeps 17-digit doubles and stable bytes
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (int i = 0; i < p.n(); ++i) {
    if (i) os << ",";
    os << "[" << fmt17(p.vertex(i).x) << "," << fmt17(p.vertex(i).y) << "]";
  }
  os << "]}\n";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GeomError(Errc::EmptyInput, "cannot write " + path);
  out << os.str();
}

std::string result_to_json(const ConvexPolygon& p, const SolveResult& res, uint64_t seed,
                           double timings_ms) {
  std::ostringstream os;
  os << "{\"radius\":" << fmt17(res.r_high) << ",\"disks\":[";
  for (int i = 0; i < 2; ++i) {
    if (i) os << ",";
    os << "{\"cx\":" << fmt17(res.disks[i].center.x) << ",\"cy\":" << fmt17(res.disks[i].center.y)
       << ",\"r\":" << fmt17(res.disks[i].radius) << "}";
  }
  os << "],\"splits\":[" << fmt17(p.to_lifted(res.splits[0])) << ","
     << fmt17(p.to_lifted(res.splits[1])) << "],\"bracket\":[" << fmt17(res.r_low) << ","
     << fmt17(res.r_high) << "],\"meta\":{\"tool\":\"bicover\",\"version\":\"1.0.0\",\"seed\":"
     << seed << ",\"timings_ms\":" << fmt17(timings_ms) << "}}\n";
  return os.str();
}

std::string result_to_svg(const ConvexPolygon& p, const SolveResult& res) {
  double xmin = res.disks[0].center.x - res.disks[0].radius;
  double xmax = res.disks[0].center.x + res.disks[0].radius;
  double ymin = res.disks[0].center.y - res.disks[0].radius;
  double ymax = res.disks[0].center.y + res.disks[0].radius;
  for (const Disk& d : {res.disks[1]}) {
    xmin = std::min(xmin, d.center.x - d.radius);
    xmax = std::max(xmax, d.center.x + d.radius);
    ymin = std::min(ymin, d.center.y - d.radius);
    ymax = std::max(ymax, d.center.y + d.radius);
  }
  for (int i = 0; i < p.n(); ++i) {
    xmin = std::min(xmin, p.vertex(i).x);
    xmax = std::max(xmax, p.vertex(i).x);
    ymin = std::min(ymin, p.vertex(i).y);
    ymax = std::max(ymax, p.vertex(i).y);
  }
  const double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
  xmin -= margin;
  ymin -= margin;
  const double w = xmax - xmin + margin;
  const double h = ymax - ymin + margin;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt17(xmin) << " "
     << fmt17(ymin) << " " << fmt17(w) << " " << fmt17(h) << "\">\n";
  os << "  <polygon points=\"";
  for (int i = 0; i < p.n(); ++i) {
    if (i) os << " ";
    os << fmt17(p.vertex(i).x) << "," << fmt17(p.vertex(i).y);
  }
  os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt17(0.004 * std::max(w, h))
     << "\"/>\n";
  const char* colors[2] = {"#1f77b4", "#d62728"};
  for (int i = 0; i < 2; ++i) {
    os << "  <circle cx=\"" << fmt17(res.disks[i].center.x) << "\" cy=\""
       << fmt17(res.disks[i].center.y) << "\" r=\"" << fmt17(res.disks[i].radius)
       << "\" fill=\"none\" stroke=\"" << colors[i] << "\" stroke-width=\""
       << fmt17(0.004 * std::max(w, h)) << "\"/>\n";
  }
  for (int i = 0; i < 2; ++i) {
    const Vec2 s = p.realize(res.splits[i]);
    const double rr = 0.01 * std::max(w, h);
    os << "  <rect x=\"" << fmt17(s.x - rr) << "\" y=\"" << fmt17(s.y - rr) << "\" width=\""
       << fmt17(2 * rr) << "\" height=\"" << fmt17(2 * rr) << "\" fill=\"#2ca02c\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bicover
