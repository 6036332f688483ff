#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicover/decision.hpp"
#include "bicover/json_io.hpp"
#include "bicover/mec.hpp"
#include "bicover/optimizer.hpp"
#include "bicover/oracle.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNo = 3;
constexpr int kExitVerifyFailed = 4;

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

bicover::ConvexPolygon load_polygon(const std::string& path, bool perturb) {
  bicover::ConvexPolygon p = bicover::read_polygon_file(path);
  if (!perturb) return p;
  // deterministic jitter seeded from the input bytes
  std::mt19937_64 rng(bicover::polygon_hash(p));
  const double mag = 1e-7 * p.diameter();
  std::vector<bicover::Vec2> pts = p.vertices();
  for (auto& v : pts) {
    const double a = (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    const double b = (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    v.x += mag * a;
    v.y += mag * b;
  }
  return bicover::validate_polygon(std::move(pts));
}

int cmd_decide(const std::string& input, double r, bool oracle, bool perturb) {
  const bicover::ConvexPolygon p = load_polygon(input, perturb);
  bool yes;
  nlohmann::json out;
  if (oracle) {
    yes = bicover::decide_bruteforce(p, r, {});
    out["answer"] = yes ? "yes" : "no";
  } else {
    const bicover::DecisionResult d = bicover::decide(p, r);
    yes = d.yes;
    out["answer"] = yes ? "yes" : "no";
    if (d.witness) {
      const auto& w = *d.witness;
      out["witness"] = {
          {"disks",
           {{{"cx", w.d1.center.x}, {"cy", w.d1.center.y}, {"r", w.d1.radius}},
            {{"cx", w.d2.center.x}, {"cy", w.d2.center.y}, {"r", w.d2.radius}}}},
          {"splits", {p.to_lifted(w.x), p.to_lifted(w.split2)}},
      };
    }
  }
  std::cout << out.dump() << "\n";
  return yes ? kExitYes : kExitNo;
}

int cmd_solve(const std::string& input, double tol, const std::string& out_path,
              const std::string& svg_path, bool perturb) {
  const bicover::ConvexPolygon p = load_polygon(input, perturb);
  const double t0 = now_ms();
  const bicover::SolveResult res = bicover::solve(p, tol);
  const double elapsed = now_ms() - t0;
  if (!bicover::verify_cover(p, res.disks[0], res.disks[1])) {
    std::cerr << "bicover: witness verification failed\n";
    return kExitVerifyFailed;
  }
  // wall time goes to stderr only; the result file stays byte-identical
  // across repeated runs on the same input
  std::cerr << "bicover: solved in " << elapsed << " ms\n";
  const std::string json = bicover::result_to_json(p, res, 0, 0.0);
  if (out_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "bicover: cannot write " << out_path << "\n";
      return kExitBadInput;
    }
    out << json;
  }
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) {
      std::cerr << "bicover: cannot write " << svg_path << "\n";
      return kExitBadInput;
    }
    svg << bicover::result_to_svg(p, res);
  }
  return kExitYes;
}

int cmd_gen(int n, uint64_t seed, const std::string& out_path) {
  const bicover::ConvexPolygon p = bicover::random_convex_polygon(n, seed);
  bicover::write_polygon_file(out_path.empty() ? "/dev/stdout" : out_path, p);
  return kExitYes;
}

int cmd_verify(const std::string& input, const std::string& result_path, bool perturb) {
  const bicover::ConvexPolygon p = load_polygon(input, perturb);
  std::ifstream in(result_path);
  if (!in) {
    std::cerr << "bicover: cannot open " << result_path << "\n";
    return kExitBadInput;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bicover: malformed result file: " << e.what() << "\n";
    return kExitBadInput;
  }
  bicover::Disk d[2];
  try {
    for (int i = 0; i < 2; ++i) {
      d[i].center = {j["disks"][i]["cx"].get<double>(), j["disks"][i]["cy"].get<double>()};
      d[i].radius = j["disks"][i]["r"].get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bicover: result file missing disks: " << e.what() << "\n";
    return kExitBadInput;
  }
  const bool ok = bicover::verify_cover(p, d[0], d[1]);
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? kExitYes : kExitVerifyFailed;
}

int cmd_bench(std::vector<int> sizes, int trials) {
  std::sort(sizes.begin(), sizes.end());
  std::vector<double> medians;
  std::cout << "n,trial,decide_ms,pieces\n";
  for (int n : sizes) {
    std::vector<double> times;
    for (int trial = 1; trial <= trials; ++trial) {
      const bicover::ConvexPolygon p =
          bicover::random_convex_polygon(n, static_cast<uint64_t>(trial));
      double r;
      if (n <= 256) {
        bicover::OracleConfig cfg;
        cfg.x_samples = 128;
        cfg.refine_rounds = 1;
        r = 1.05 * bicover::rstar_bruteforce(p, cfg);
      } else {
        r = 1.05 * bicover::solve(p, 1e-3).r_high;
      }
      const double t0 = now_ms();
      const bicover::DecisionResult d = bicover::decide(p, r);
      const double ms = now_ms() - t0;
      times.push_back(ms);
      std::printf("%d,%d,%.3f,%zu\n", n, trial, ms, d.stats.pieces_f + d.stats.pieces_g);
    }
    std::sort(times.begin(), times.end());
    medians.push_back(times[times.size() / 2]);
  }
  std::cout << "# median_doubling_ratios:";
  for (size_t i = 1; i < medians.size(); ++i) {
    std::printf(" %.3f", medians[i] / std::max(1e-9, medians[i - 1]));
  }
  std::cout << "\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-disk boundary cover for convex polygons"};
  app.require_subcommand(1);
  bool perturb = false;
  app.add_flag("--perturb", perturb,
               "apply a deterministic 1e-7*diameter jitter to the input vertices");

  auto* sc_decide = app.add_subcommand("decide", "can two radius-r disks cover the polygon?");
  std::string in_path, out_path, svg_path, result_path;
  double r = 0.0, tol = 1e-9;
  bool oracle = false;
  sc_decide->add_option("--input", in_path, "polygon JSON file")->required();
  sc_decide->add_option("--r", r, "disk radius")->required();
  sc_decide->add_flag("--oracle", oracle, "use the slow sampling-based decision");

  auto* sc_solve = app.add_subcommand("solve", "minimize the common disk radius");
  sc_solve->add_option("--input", in_path, "polygon JSON file")->required();
  sc_solve->add_option("--tol", tol, "relative bracket tolerance, in (0, 0.1]");
  sc_solve->add_option("--out", out_path, "result JSON path (stdout when omitted)");
  sc_solve->add_option("--svg", svg_path, "also write an SVG figure");

  auto* sc_gen = app.add_subcommand("gen", "generate a random convex polygon");
  int n = 0;
  uint64_t seed = 1;
  sc_gen->add_option("--n", n, "vertex count, >= 3")->required();
  sc_gen->add_option("--seed", seed, "generator seed");
  sc_gen->add_option("--out", out_path, "output path (stdout when omitted)");

  auto* sc_verify = app.add_subcommand("verify", "re-check a solve result against its polygon");
  sc_verify->add_option("--input", in_path, "polygon JSON file")->required();
  sc_verify->add_option("--result", result_path, "result JSON file")->required();

  auto* sc_bench = app.add_subcommand("bench", "decision timing across sizes, CSV on stdout");
  std::vector<int> sizes{1024, 2048, 4096, 8192, 16384, 32768, 65536};
  int trials = 5;
  std::string r_mode = "near-opt";
  sc_bench->add_option("--sizes", sizes, "instance sizes");
  sc_bench->add_option("--trials", trials, "trials per size");
  sc_bench->add_option("--r-mode", r_mode, "radius selection mode (near-opt)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kExitUsage;
  }

  try {
    if (sc_decide->parsed()) return cmd_decide(in_path, r, oracle, perturb);
    if (sc_solve->parsed()) return cmd_solve(in_path, tol, out_path, svg_path, perturb);
    if (sc_gen->parsed()) return cmd_gen(n, seed, out_path);
    if (sc_verify->parsed()) return cmd_verify(in_path, result_path, perturb);
    if (sc_bench->parsed()) return cmd_bench(sizes, trials);
  } catch (const bicover::GeomError& e) {
    if (sc_gen->parsed() && e.code == bicover::Errc::TooFewVertices) {
      std::cerr << "bicover: " << e.what() << "\n";
      return kExitUsage;
    }
    std::cerr << "bicover: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "bicover: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitUsage;
}
