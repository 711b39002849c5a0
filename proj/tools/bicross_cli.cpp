// Copyright 2026 The bicross Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand prints JSON (or point-set text
// for `gen`) on stdout; the exit code is 0 iff no check failed.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "bicross/density.hpp"
#include "bicross/errors.hpp"
#include "bicross/experiments.hpp"
#include "bicross/generators.hpp"
#include "bicross/oracle.hpp"
#include "bicross/point_io.hpp"
#include "bicross/serialization.hpp"
#include "bicross/strategies.hpp"
#include "bicross/verifiers.hpp"

namespace {

using namespace bicross;

PointSet load_points(const std::string& path) {
  if (path == "-") return read_point_set(std::cin);
  return read_point_set_file(path);
}

std::vector<int> parse_subset(const std::string& text, const PointSet& p) {
  if (text.empty()) return all_indices(p);
  std::vector<int> out;
  for (int i : parse_n_range(text)) {
    if (i >= p.size()) throw Error(ErrorCode::kInvalidArgument, "index " + std::to_string(i) + " out of range");
    out.push_back(i);
  }
  return out;
}

Coloring load_coloring(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::kParse, "cannot open " + file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return Coloring::parse(text);
  }
  if (inline_text.empty()) throw Error(ErrorCode::kInvalidArgument, "give --coloring or --coloring-file");
  return Coloring::parse(inline_text);
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct GenOptions {
  std::string generator;
  int n = 10;
  std::uint64_t seed = 0;
  std::string alpha = "2";
  std::string jitter;
  int n1 = 10;
  int n2 = 10;
  std::string wedge = "18/5";
  std::string out;
  std::string labels_out;
};

PointSet generate(const GenOptions& o, std::optional<GridLabels>& labels, std::optional<Coloring>& coloring) {
  const std::string& g = o.generator;
  if (g == "polygon") {
    return perturbed_regular_polygon(o.n, o.jitter.empty() ? default_polygon_jitter(o.n) : parse_coord(o.jitter), o.seed);
  }
  if (g == "convex") return random_convex_set(o.n, o.seed);
  if (g == "flat") return flat_convex_set(o.n, o.seed);
  if (g == "uniform") return uniform_square(o.n, o.seed);
  if (g == "dense") return dense_set(o.n, parse_coord(o.alpha), o.seed);
  if (g == "island") return island_fixture(o.n1, o.n2, parse_coord(o.wedge), Coord(3), o.seed);
  if (g == "grid-fill") return grid_fill_fixture(o.n);
  if (g == "good-cell") return plant_good_cell(o.n, o.seed);
  if (g == "figure9") {
    Figure9 f = figure9_configuration();
    coloring = f.coloring;
    return f.points;
  }
  if (g == "p0" || g == "random-grid" || g == "equidistant") {
    LabeledGrid grid = g == "p0"            ? perturbed_grid_p0(o.n, o.seed)
                       : g == "random-grid" ? random_perturbed_grid(o.n, o.seed)
                                            : equidistant_convex_grid(o.n);
    labels = grid.labels;
    return grid.points;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator: " + g);
}

StrategyOutcome run_strategy(const std::string& name, const PointSet& p, std::uint64_t seed,
                             const std::string& alpha, long r, int k) {
  if (name == "alternate-convex") return alternate_convex(p);
  if (name == "flat-convex") return flat_convex_coloring(p);
  if (name == "one-crossing") return one_crossing_coloring(p);
  if (name == "island-wedge") return island_wedge_coloring(p);
  if (name == "five-eighths") return grid_five_eighths_coloring(p);
  if (name == "grid-fill") return grid_fill_coloring(p, all_indices(p), k);
  if (name == "dense") return dense_coloring(p, parse_coord(alpha), r, k);
  if (name == "random") {
    StrategyOutcome o;
    o.coloring = random_coloring(p, seed);
    return o;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicolored MST crossing toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a point set");
  gen_cmd->add_option("--generator,-g", gen.generator,
                      "polygon|convex|flat|uniform|dense|island|p0|random-grid|equidistant|grid-fill|good-cell|figure9")
      ->required();
  gen_cmd->add_option("--n", gen.n, "number of points (k for grid-fill)");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--alpha", gen.alpha, "density parameter for dense");
  gen_cmd->add_option("--jitter", gen.jitter, "rational jitter for polygon");
  gen_cmd->add_option("--n1", gen.n1, "island: points in the unit disk");
  gen_cmd->add_option("--n2", gen.n2, "island: points in the wedge");
  gen_cmd->add_option("--wedge", gen.wedge, "island: wedge angle in degrees (rational)");
  gen_cmd->add_option("--out,-o", gen.out, "output file (default stdout)");
  gen_cmd->add_option("--labels-out", gen.labels_out, "grid generators: write v/w indices as JSON");

  std::string points_path = "-", subset_text, coloring_text, coloring_file, strategy, alpha = "2";
  bool all_msts = false, use_min = false, dump_trees = false, nongeneric = false;
  std::size_t cap = kDefaultMstCap;
  int max_n = kOracleMaxN, workers = 0, k = 11;
  long r = -1;
  std::uint64_t seed = 0;

  auto* mst_cmd = app.add_subcommand("mst", "minimum spanning tree(s) of a point set");
  mst_cmd->add_option("--points,-p", points_path, "point file, - for stdin");
  mst_cmd->add_option("--subset", subset_text, "indices, e.g. 0..5,9");
  mst_cmd->add_flag("--all", all_msts, "enumerate every MST");
  mst_cmd->add_option("--cap", cap, "enumeration cap");

  auto* cross_cmd = app.add_subcommand("cross", "crossings between the red and blue MSTs");
  cross_cmd->add_option("--points,-p", points_path);
  cross_cmd->add_option("--coloring,-c", coloring_text, "string over R, B, D");
  cross_cmd->add_option("--coloring-file", coloring_file);
  cross_cmd->add_flag("--min", use_min, "minimum over all MST pairs (non-generic input)");
  cross_cmd->add_option("--cap", cap);
  cross_cmd->add_flag("--dump-trees", dump_trees, "include both trees and crossing pairs");

  auto* color_cmd = app.add_subcommand("color", "run a coloring strategy");
  color_cmd->add_option("--points,-p", points_path);
  color_cmd->add_option("--strategy,-s", strategy,
                        "alternate-convex|flat-convex|one-crossing|island-wedge|five-eighths|grid-fill|dense|random")
      ->required();
  color_cmd->add_option("--seed", seed);
  color_cmd->add_option("--alpha", alpha);
  color_cmd->add_option("--r", r, "dense: rich-cell threshold (default 2k^2)");
  color_cmd->add_option("--k", k, "grid size for grid-fill and dense");
  color_cmd->add_flag("--dump-trees", dump_trees);

  auto* oracle_cmd = app.add_subcommand("oracle", "exact crossing number by enumeration");
  oracle_cmd->add_option("--points,-p", points_path);
  oracle_cmd->add_option("--max-n", max_n, "refuse larger inputs");
  oracle_cmd->add_flag("--nongeneric", nongeneric, "minimum over MST pairs inside");
  oracle_cmd->add_option("--workers", workers);

  std::string lemma;
  long trials = 100;
  int lemma_n = 40;
  auto* verify_cmd = app.add_subcommand("verify", "property-test a lemma");
  verify_cmd->add_option("--lemma", lemma, "small-angle|island|profile|good-cell")->required();
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--n", lemma_n, "points per instance (profile, good-cell)");
  verify_cmd->add_option("--wedge", gen.wedge, "island: wedge angle in degrees");
  verify_cmd->add_option("--workers", workers);

  ExperimentSpec spec;
  std::string n_text, out_dir;
  std::optional<long> exp_trials;
  bool list = false;
  auto* exp_cmd = app.add_subcommand("experiment", "run a named experiment, write CSV and JSON");
  exp_cmd->add_option("--name", spec.name);
  exp_cmd->add_option("--n", n_text, "n-range, e.g. 4..20 or 4..20:2 or 100,200");
  exp_cmd->add_option("--trials", exp_trials);
  exp_cmd->add_option("--seed", spec.seed);
  exp_cmd->add_option("--workers", spec.workers);
  exp_cmd->add_option("--out", out_dir, "directory for <name>.csv and <name>.json");
  exp_cmd->add_flag("--timing", spec.timing, "fill elapsed_ms (breaks byte-for-byte reruns)");
  exp_cmd->add_flag("--list", list, "list registered experiments");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      std::optional<GridLabels> labels;
      std::optional<Coloring> coloring;
      PointSet p = generate(gen, labels, coloring);
      if (gen.out.empty()) {
        write_point_set(std::cout, p);
      } else {
        write_point_set_file(gen.out, p);
      }
      if (!gen.labels_out.empty()) {
        if (!labels) throw Error(ErrorCode::kInvalidArgument, "--labels-out needs a grid generator");
        std::ofstream(gen.labels_out) << to_json(*labels).dump(2) << '\n';
      }
      if (coloring) std::cerr << "coloring " << coloring->str() << '\n';
      return 0;
    }
    if (*mst_cmd) {
      PointSet p = load_points(points_path);
      std::vector<int> subset = parse_subset(subset_text, p);
      if (all_msts) {
        Json trees = Json::array();
        for (const Tree& t : enumerate_msts(p, subset, cap)) trees.push_back(to_json(t));
        print({{"count", trees.size()}, {"trees", trees}});
      } else {
        print(to_json(mst(p, subset)));
      }
      return 0;
    }
    if (*cross_cmd) {
      PointSet p = load_points(points_path);
      Coloring c = load_coloring(coloring_text, coloring_file);
      if (use_min) {
        print({{"count", cross_rb_min(p, c, cap)}});
        return 0;
      }
      CrossingReport rep = cross_rb(p, c);
      CrossingProfile prof = longer_edge_crossing_profile(rep, p);
      Json j = dump_trees ? to_json(rep) : Json{{"count", rep.count}};
      j["profile"] = {{"max_red", prof.max_red}, {"max_blue", prof.max_blue}};
      print(j);
      return 0;
    }
    if (*color_cmd) {
      PointSet p = load_points(points_path);
      StrategyOutcome o = run_strategy(strategy, p, seed, alpha, r, k);
      Json j = to_json(o);
      CrossingReport rep = cross_rb(p, o.coloring);
      j["realized"] = rep.count;
      if (dump_trees) j["report"] = to_json(rep);
      print(j);
      return rep.count >= static_cast<std::size_t>(std::max(0L, o.guarantee)) ? 0 : 1;
    }
    if (*oracle_cmd) {
      PointSet p = load_points(points_path);
      auto start = std::chrono::steady_clock::now();
      OracleResult res = nongeneric ? exact_cross_number_nongeneric(p, cap, workers)
                                    : exact_cross_number(p, workers, max_n);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      print({{"value", res.value}, {"witness", res.witness.str()}, {"elapsed", ms}});
      return 0;
    }
    if (*verify_cmd) {
      Json j;
      bool ok = true;
      if (lemma == "small-angle" || lemma == "island") {
        LemmaReport rep = lemma == "small-angle" ? verify_small_angle_lemma(trials, seed, workers)
                                                 : verify_island_lemma(trials, seed, parse_coord(gen.wedge), workers);
        j = {{"lemma", lemma},
             {"samples", rep.samples},
             {"rejected", rep.rejected},
             {"violations", rep.violations},
             {"max_observed", rep.max_observed},
             {"notes", rep.notes}};
        ok = rep.violations == 0;
      } else if (lemma == "profile") {
        std::vector<ProfileInstance> inst = random_profile_instances(trials, lemma_n, seed);
        Figure9 f = figure9_configuration();
        inst.push_back({"figure9", f.points, f.coloring});
        ProfileReport rep = profile_crossing_constant(std::span<const ProfileInstance>(inst).first(inst.size() - 1));
        ProfileReport fixture = profile_crossing_constant(std::span<const ProfileInstance>(inst).last(1));
        Json hist = Json::object();
        for (const auto& [v, c] : rep.histogram) hist[std::to_string(v)] = c;
        j = {{"lemma", lemma},
             {"max_red", rep.max_red},
             {"max_blue", rep.max_blue},
             {"histogram", hist},
             {"figure9_blue", fixture.max_blue}};
        ok = fixture.max_blue >= 5;
      } else if (lemma == "good-cell") {
        long bad = 0;
        for (long t = 0; t < trials; ++t) {
          PointSet p = plant_good_cell(std::max(lemma_n, 4), mix_seed(seed, static_cast<std::uint64_t>(t)));
          GoodCellReport rep = detect_good_cells(p, std::max(lemma_n, 4));
          if (rep.good.empty() || internal_crossing_colorings(p, rep.good.front().members) != 2) ++bad;
        }
        j = {{"lemma", lemma}, {"samples", trials}, {"violations", bad}};
        ok = bad == 0;
      } else {
        throw Error(ErrorCode::kInvalidArgument, "unknown lemma: " + lemma);
      }
      print(j);
      return ok ? 0 : 1;
    }
    if (*exp_cmd) {
      if (list) {
        for (const ExperimentInfo& e : experiment_registry()) {
          std::cout << e.name << "  (n " << e.default_ns << ", trials " << e.default_trials << ")  "
                    << e.description << '\n';
        }
        return 0;
      }
      const ExperimentInfo& info = find_experiment(spec.name);
      spec.ns = parse_n_range(n_text.empty() ? info.default_ns : n_text);
      spec.trials = exp_trials.value_or(info.default_trials);
      ExperimentReport rep = run_experiment(spec);
      if (out_dir.empty()) {
        write_csv(std::cout, rep);
      } else {
        std::filesystem::create_directories(out_dir);
        std::ofstream csv(std::filesystem::path(out_dir) / (spec.name + ".csv"));
        write_csv(csv, rep);
        std::ofstream(std::filesystem::path(out_dir) / (spec.name + ".json")) << to_json(rep).dump(2) << '\n';
      }
      std::cerr << spec.name << ": " << rep.rows.size() << " rows, " << rep.failures() << " failures\n";
      return rep.failures() == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
