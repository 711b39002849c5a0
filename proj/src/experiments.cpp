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

#include "bicross/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "bicross/density.hpp"
#include "bicross/errors.hpp"
#include "bicross/generators.hpp"
#include "bicross/oracle.hpp"
#include "bicross/parallel.hpp"
#include "bicross/strategies.hpp"
#include "bicross/verifiers.hpp"

namespace bicross {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  bool any = false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw Error(ErrorCode::kParse, "bad n-range: " + std::string(whole));
    v = v * 10 + (ch - '0');
    any = true;
    if (v > 1000000) throw Error(ErrorCode::kParse, "n too large in: " + std::string(whole));
  }
  if (!any) throw Error(ErrorCode::kParse, "bad n-range: " + std::string(whole));
  return v;
}

long realized_of(const PointSet& p, const Coloring& c) { return static_cast<long>(cross_rb(p, c).count); }

// A fair random coloring may leave a class empty; it then has no crossings.
long random_crossings(const PointSet& p, std::uint64_t seed) {
  Coloring c = random_coloring(p, seed);
  if (c.count(Color::kRed) == 0 || c.count(Color::kBlue) == 0) return 0;
  return realized_of(p, c);
}

TrialResult at_least(long realized, long guarantee) {
  TrialResult r{realized, guarantee, {}};
  if (realized < guarantee) r.violation = "realized below guarantee";
  return r;
}

TrialResult zero_cross_5set(int, std::uint64_t seed) {
  ZeroCrossWitness w = search_zero_cross_5set(seed, 1000000);
  const std::vector<int> quad = {0, 1, 2, 3};
  TrialResult r{exact_cross_number(w.points, 1).value, exact_cross_number(w.points.subset(quad), 1).value, {}};
  if (r.realized != 0 || r.guarantee != 1) r.violation = "expected 0 with the apex and 1 without";
  return r;
}

TrialResult two_colors(int n, std::uint64_t seed) {
  PointSet p = uniform_square(n, seed);
  StrategyOutcome o = one_crossing_coloring(p);
  TrialResult r = at_least(realized_of(p, o.coloring), o.guarantee);
  if (r.realized < 1) r.violation = "no crossing";
  if (r.violation.empty() && exact_cross_number(p, 1).value < 1) r.violation = "oracle below 1";
  return r;
}

TrialResult convex_alternating(int n, std::uint64_t seed) {
  PointSet p = perturbed_regular_polygon(n, default_polygon_jitter(n), seed);
  StrategyOutcome o = alternate_convex(p);
  return at_least(realized_of(p, o.coloring), n / 2 - 1);
}

TrialResult convex_alternating_random(int n, std::uint64_t seed) {
  PointSet p = random_convex_set(n, seed);
  StrategyOutcome o = alternate_convex(p);
  return at_least(realized_of(p, o.coloring), n / 2 - 1);
}

TrialResult flat_convex(int n, std::uint64_t seed) {
  PointSet p = flat_convex_set(n, seed);
  StrategyOutcome o = flat_convex_coloring(p);
  TrialResult r{realized_of(p, o.coloring), n - 3, {}};
  if (r.realized != r.guarantee) r.violation = "expected exactly n - 3";
  return r;
}

TrialResult grid_p0_oracle(int n, std::uint64_t seed) {
  LabeledGrid g = perturbed_grid_p0(n, seed);
  const long bound = 5L * (n - 2) / 8;
  TrialResult r{exact_cross_number(g.points, 1).value, bound, {}};
  long colored = realized_of(g.points, grid_five_eighths_coloring(g.points).coloring);
  if (r.realized != bound) r.violation = "oracle differs from floor(5(n-2)/8)";
  if (colored != bound) r.violation = "5/8 coloring realizes " + std::to_string(colored);
  return r;
}

TrialResult grid_five_eighths(int n, std::uint64_t seed) {
  LabeledGrid g = random_perturbed_grid(n, seed);
  return at_least(realized_of(g.points, grid_five_eighths_coloring(g.points).coloring), 5L * (n - 2) / 8);
}

TrialResult equidistant_grid(int n, std::uint64_t) {
  LabeledGrid g = equidistant_convex_grid(n);
  TrialResult r{exact_cross_number_nongeneric(g.points, kDefaultMstCap, 1).value, n / 2 - 1, {}};
  if (r.realized > r.guarantee) r.violation = "above n/2 - 1";
  return r;
}

TrialResult small_angle(int, std::uint64_t seed) {
  LemmaReport rep = verify_small_angle_lemma(1, seed, 1);
  TrialResult r{rep.violations, 0, {}};
  if (rep.violations) r.violation = "conclusion failed";
  return r;
}

TrialResult island_lemma(int, std::uint64_t seed) {
  LemmaReport rep = verify_island_lemma(1, seed, Coord(18, 5), 1);
  TrialResult r{rep.max_observed, 1, {}};
  if (rep.violations) r.violation = "bridge count differs from 1";
  return r;
}

TrialResult good_cell(int n, std::uint64_t seed) {
  PointSet p = plant_good_cell(n, seed);
  GoodCellReport rep = detect_good_cells(p, n);
  if (rep.good.empty()) return {0, 2, "planted cell not detected"};
  TrialResult r{internal_crossing_colorings(p, rep.good.front().members), 2, {}};
  if (r.realized != 2) r.violation = "expected 2 of 16 colorings";
  return r;
}

TrialResult figure9(int, std::uint64_t) {
  Figure9 f = figure9_configuration();
  CrossingReport rep = cross_rb(f.points, f.coloring);
  TrialResult r{static_cast<long>(longer_edge_crossing_profile(rep, f.points).max_blue), 5, {}};
  if (rep.blue_tree.edges.size() != 1) r.violation = "blue tree is not a single edge";
  for (const Segment& s : f.red_segments) {
    if (std::find(rep.red_tree.edges.begin(), rep.red_tree.edges.end(), s) == rep.red_tree.edges.end()) {
      r.violation = "segment missing from the red tree";
    }
  }
  if (!tree_is_mst(f.points, rep.red_tree)) r.violation = "red tree is not an MST";
  if (r.realized < 5) r.violation = "blue-side profile below 5";
  return r;
}

TrialResult profile_random(int n, std::uint64_t seed) {
  std::vector<ProfileInstance> inst = random_profile_instances(1, n, seed);
  ProfileReport rep = profile_crossing_constant(inst);
  return {std::max(rep.max_red, rep.max_blue), 0, {}};
}

TrialResult island_wedge(int n, std::uint64_t seed) {
  PointSet p = uniform_square(n, seed);
  StrategyOutcome o = island_wedge_coloring(p);
  TrialResult r = at_least(realized_of(p, o.coloring), o.guarantee);
  if (o.stages.size() < 2) r.violation = "fewer than 2 stages";
  if (!stage_trees_embed(p, o)) r.violation = "stage tree not contained in the global tree";
  return r;
}

TrialResult random_expectation(int n, std::uint64_t seed) {
  return {random_crossings(uniform_square(n, seed), mix_seed(seed, 1)), 0, {}};
}

TrialResult convex_random(int n, std::uint64_t seed) {
  PointSet p = perturbed_regular_polygon(n, default_polygon_jitter(n), seed);
  return {random_crossings(p, mix_seed(seed, 1)), 0, {}};
}

TrialResult dense(int n, std::uint64_t seed) {
  PointSet p = dense_set(n, Coord(2), seed);
  StrategyOutcome o = dense_coloring(p, Coord(2));
  TrialResult r = at_least(realized_of(p, o.coloring), o.guarantee);
  if (o.guarantee < 1) r.violation = "no cell colored";
  return r;
}

TrialResult grid_fill(int n, std::uint64_t) {
  PointSet p = grid_fill_fixture(n);
  StrategyOutcome o = grid_fill_coloring(p, all_indices(p), n);
  TrialResult r{realized_of(p, o.coloring), o.guarantee, {}};
  if (r.realized != 1 || o.guarantee != 1) r.violation = "expected exactly 1 verified crossing";
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<ExpectationEstimate> estimates(const ExperimentReport& rep) {
  std::vector<ExpectationEstimate> out;
  for (const NStats& s : rep.per_n) out.push_back({s.n, s.rows - s.failures, s.mean, s.stderr_mean});
  return out;
}

}  // namespace

std::vector<int> parse_n_range(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (!part.empty()) {
      std::size_t dots = part.find("..");
      if (dots == std::string_view::npos) {
        out.push_back(parse_int(part, text));
      } else {
        std::string_view rest = part.substr(dots + 2);
        int step = 1;
        if (std::size_t colon = rest.find(':'); colon != std::string_view::npos) {
          step = parse_int(rest.substr(colon + 1), text);
          rest = rest.substr(0, colon);
        }
        int lo = parse_int(part.substr(0, dots), text), hi = parse_int(rest, text);
        if (step < 1 || lo > hi) throw Error(ErrorCode::kParse, "bad n-range: " + std::string(text));
        for (int n = lo; n <= hi; n += step) out.push_back(n);
      }
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw Error(ErrorCode::kParse, "empty n-range");
  return out;
}

const std::vector<ExperimentInfo>& experiment_registry() {
  static const std::vector<ExperimentInfo> registry = {
      {"zero-cross-5set", "5-set with crossing number 0 whose quadrilateral has 1", "5", 1, zero_cross_5set},
      {"two-colors", "one_crossing_coloring and oracle on uniform sets, both >= 1", "6..8", 200, two_colors},
      {"convex-alternating", "alternating hull coloring on perturbed regular polygons", "4..20", 50,
       convex_alternating},
      {"convex-alternating-random", "alternating hull coloring on random convex sets", "4..20", 50,
       convex_alternating_random},
      {"flat-convex", "flat convex coloring realizes exactly n - 3", "4..14", 50, flat_convex},
      {"grid-p0-oracle", "oracle and 5/8 coloring on the P0 grid equal floor(5(n-2)/8)", "4..12:2", 1,
       grid_p0_oracle},
      {"grid-five-eighths", "5/8 coloring on randomly bowed 2 x n/2 grids", "4..14:2", 20, grid_five_eighths},
      {"equidistant-grid", "non-generic oracle on the equidistant grid is <= n/2 - 1", "4..8:2", 1,
       equidistant_grid},
      {"small-angle", "crossing segments at a small angle: one premise-respecting sample per trial", "0",
       10000, small_angle},
      {"island-lemma", "a far island in a narrow wedge has one MST bridge", "0", 500, island_lemma},
      {"good-cell", "planted good cell: 2 of 16 colorings cross inside it", "400", 20, good_cell},
      {"figure9", "fixture: blue edge crossed by >= 5 longer red MST edges", "14", 1, figure9},
      {"profile-random", "longer-edge crossing profile of random colorings", "40", 1000, profile_random},
      {"island-wedge", "island/wedge coloring with discards on uniform sets", "2000", 20, island_wedge},
      {"random-expectation", "fair random coloring of uniform sets", "100,200,400,800", 200,
       random_expectation},
      {"convex-random", "fair random coloring of perturbed regular polygons", "8,16,40", 500, convex_random},
      {"dense", "rich-cell pipeline on alpha = 2 dense sets", "1600", 1, dense},
      {"grid-fill", "fill-in coloring on the shaped k x k fixture, exactly 1 crossing", "11", 1, grid_fill},
  };
  return registry;
}

const ExperimentInfo& find_experiment(std::string_view name) {
  for (const ExperimentInfo& e : experiment_registry()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown experiment: " + std::string(name));
}

long ExperimentReport::failures() const {
  return static_cast<long>(std::count_if(rows.begin(), rows.end(), [](const ExperimentRow& r) { return r.status != "ok"; }));
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  const ExperimentInfo& info = find_experiment(spec.name);
  if (spec.trials < 0) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 0");
  ExperimentReport rep;
  rep.spec = spec;
  const long per_n = spec.trials;
  const long total = per_n * static_cast<long>(spec.ns.size());
  rep.rows.resize(static_cast<std::size_t>(total));
  parallel_for(total, spec.workers, [&](long job) {
    ExperimentRow& row = rep.rows[static_cast<std::size_t>(job)];
    row.experiment = spec.name;
    row.n = spec.ns[static_cast<std::size_t>(job / per_n)];
    row.trial = job % per_n;
    row.seed = mix_seed(spec.seed, static_cast<std::uint64_t>(row.n), static_cast<std::uint64_t>(row.trial));
    auto start = std::chrono::steady_clock::now();
    try {
      TrialResult r = info.run(row.n, row.seed);
      row.realized = r.realized;
      row.guarantee = r.guarantee;
      if (!r.violation.empty()) row.status = "violation: " + r.violation;
    } catch (const Error& e) {
      row.status = std::string("error: ") + e.what();
    }
    if (spec.timing) {
      row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  });
  for (std::size_t k = 0; k < spec.ns.size(); ++k) {
    NStats s;
    s.n = spec.ns[k];
    double sum = 0, sum2 = 0;
    long used = 0;
    for (long t = 0; t < per_n; ++t) {
      const ExperimentRow& row = rep.rows[k * static_cast<std::size_t>(per_n) + static_cast<std::size_t>(t)];
      ++s.rows;
      if (row.status != "ok") ++s.failures;
      if (!row.realized) continue;
      long v = *row.realized;
      s.min = used ? std::min(s.min, v) : v;
      s.max = used ? std::max(s.max, v) : v;
      sum += static_cast<double>(v);
      sum2 += static_cast<double>(v) * static_cast<double>(v);
      ++used;
    }
    if (used) {
      s.mean = sum / static_cast<double>(used);
      if (used > 1) {
        double var = (sum2 - sum * s.mean) / static_cast<double>(used - 1);
        s.stderr_mean = std::sqrt(std::max(0.0, var) / static_cast<double>(used));
      }
    }
    rep.per_n.push_back(s);
  }
  return rep;
}

void write_csv(std::ostream& out, const ExperimentReport& report) {
  out << kCsvHeader << '\n';
  for (const ExperimentRow& r : report.rows) {
    out << r.experiment << ',' << r.n << ',' << r.trial << ',' << r.seed << ',';
    if (r.realized) out << *r.realized;
    out << ',';
    if (r.guarantee) out << *r.guarantee;
    out << ',';
    if (r.elapsed_ms) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(3);
      ms << *r.elapsed_ms;
      out << ms.str();
    }
    out << ',' << csv_field(r.status) << '\n';
  }
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  write_csv(out, report);
  return out.str();
}

Json to_json(const ExperimentReport& report) {
  Json per_n = Json::array();
  for (const NStats& s : report.per_n) {
    per_n.push_back({{"n", s.n},
                     {"rows", s.rows},
                     {"failures", s.failures},
                     {"mean", s.mean},
                     {"stderr", s.stderr_mean},
                     {"min", s.min},
                     {"max", s.max}});
  }
  return {{"experiment", report.spec.name},
          {"n", report.spec.ns},
          {"trials", report.spec.trials},
          {"seed", report.spec.seed},
          {"columns", kCsvHeader},
          {"rows", report.rows.size()},
          {"failures", report.failures()},
          {"per_n", per_n}};
}

std::vector<ExpectationEstimate> estimate_random_expectation(const std::vector<int>& ns, long trials,
                                                             std::uint64_t seed, int workers) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  return estimates(run_experiment({"random-expectation", ns, trials, seed, workers, false}));
}

std::vector<ExpectationEstimate> estimate_convex_random_expectation(const std::vector<int>& ns,
                                                                    long trials, std::uint64_t seed,
                                                                    int workers) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  return estimates(run_experiment({"convex-random", ns, trials, seed, workers, false}));
}

}  // namespace bicross
