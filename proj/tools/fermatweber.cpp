// Command-line front end: chain solves, table reproduction, N(k) thresholds,
// general Weber solves, and extension-family detection.
//
// Exit codes: 0 success, 1 usage error, 2 numeric or degenerate-input error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fw/chain.hpp"
#include "fw/dominance.hpp"
#include "fw/symmetry.hpp"
#include "fw/weber.hpp"

namespace {

using nlohmann::json;

bool g_precise = false;

// 6 significant figures by default, matching the precision of published
// reference values; --precise emits full doubles
double emit(double v) {
  if (g_precise) return v;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::strtod(buf, nullptr);
}

std::string format_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), g_precise ? "%.17g" : "%.6g", v);
  return buf;
}

std::vector<fw::Point2> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<fw::Point2> points;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    json j;
    in >> j;
    if (!j.is_array()) throw std::runtime_error("expected a JSON array of [x, y] pairs");
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2)
        throw std::runtime_error("expected a JSON array of [x, y] pairs");
      points.push_back({e[0].get<double>(), e[1].get<double>()});
    }
  } else {
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      double x, y;
      if (std::sscanf(line.c_str(), " %lf , %lf", &x, &y) != 2)
        throw std::runtime_error("malformed point line: " + line);
      points.push_back({x, y});
    }
  }
  if (points.empty()) throw std::runtime_error("no points in file: " + path);
  for (const auto& p : points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::runtime_error("non-finite coordinate in file: " + path);
  return points;
}

void run_chain(int n, int k) {
  const auto result = fw::minimize_on_axis(fw::build_chain(n, k));
  json out{{"n", n},
           {"k", k},
           {"x_star", emit(result.x_star)},
           {"psi_star", emit(result.psi_star)},
           {"at_root", result.at_root}};
  std::cout << out.dump() << "\n";
}

void run_table(int k, int n_max) {
  if (n_max < k) throw fw::chain_error("table: n-max must be at least k");
  std::cout << "n,psi,x\n";
  for (int n = std::max(k, 3); n <= n_max; ++n) {
    const auto result = fw::minimize_on_axis(fw::build_chain(n, k));
    std::cout << n << "," << format_sig(result.psi_star) << ","
              << format_sig(result.x_star) << "\n";
  }
}

void run_nk(int k) {
  const auto result = fw::compute_threshold(k);
  json out{{"k", result.k},
           {"n_threshold", result.n_threshold},
           {"certificate_low", emit(result.certificate_low)},
           {"certificate_high", emit(result.certificate_high)}};
  std::cout << out.dump() << "\n";
}

void run_solve(const std::string& path) {
  const auto points = read_points(path);
  const auto sol = fw::solve_weber(points);
  json out{{"location", {emit(sol.location.x), emit(sol.location.y)}},
           {"objective", emit(sol.objective)},
           {"iterations", sol.iterations},
           {"converged", sol.converged}};
  out["at_fixed_point_index"] =
      sol.at_fixed_point_index ? json(*sol.at_fixed_point_index) : json();
  std::cout << out.dump() << "\n";
}

void run_detect(const std::string& path) {
  const auto points = read_points(path);
  const auto report = fw::detect_extension(points);
  json out{{"is_extension_member", report.is_extension_member}};
  if (report.is_extension_member) {
    out["pivot"] = {emit(report.pivot->x), emit(report.pivot->y)};
    out["axis_direction"] = {emit(report.axis_direction->x),
                             emit(report.axis_direction->y)};
    json base = json::array();
    for (const auto& p : *report.base_set)
      base.push_back({emit(p.x), emit(p.y)});
    out["base_set"] = base;
    json angles = json::array();
    for (double a : report.base_spec->half_angles) angles.push_back(emit(a));
    out["half_angles"] = angles;
    out["condition_a_value"] = emit(*report.condition_a_value);
    out["weber_at_pivot"] = *report.weber_at_pivot;
  }
  std::cout << out.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermat-Weber points of regular polygonal chains and "
               "reflection-symmetric point sets"};
  app.require_subcommand(1);
  app.add_flag("--precise", g_precise,
               "emit full double precision instead of 6 significant figures");

  int n = 0, k = 0, n_max = 0;
  std::string file;

  auto* chain = app.add_subcommand("chain", "solve one chain C_n(k)");
  chain->add_option("--n", n, "polygon order")->required();
  chain->add_option("--k", k, "chain length")->required();

  auto* table = app.add_subcommand("table", "CSV of chain solves for n = k..n-max");
  table->add_option("--k", k, "chain length")->required();
  table->add_option("--n-max", n_max, "largest polygon order")->required();

  auto* nk = app.add_subcommand("nk", "root-vertex threshold N(k) for odd k");
  nk->add_option("--k", k, "chain length (odd)")->required();

  auto* solve = app.add_subcommand("solve", "Weber point of a point file");
  solve->add_option("file", file, "point file (x,y lines or .json)")->required();

  auto* detect = app.add_subcommand("detect",
                                    "extension-family membership of a point file");
  detect->add_option("file", file, "point file (x,y lines or .json)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (chain->parsed()) run_chain(n, k);
    if (table->parsed()) run_table(k, n_max);
    if (nk->parsed()) run_nk(k);
    if (solve->parsed()) run_solve(file);
    if (detect->parsed()) run_detect(file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
