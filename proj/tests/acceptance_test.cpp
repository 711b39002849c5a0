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

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails. Every bound is recomputed here from
// the experiment rows rather than trusted from the guarantee column.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "bicross/crossing.hpp"
#include "bicross/experiments.hpp"
#include "bicross/generators.hpp"
#include "bicross/oracle.hpp"
#include "bicross/spanning.hpp"
#include "bicross/verifiers.hpp"

namespace {

using namespace bicross;

constexpr std::uint64_t kSeed = 7;

struct Run {
  std::string name;
  std::string ns;
  long trials;
};

// Experiment runs backing each criterion. Criterion 14 replays all of them.
const std::map<int, std::vector<Run>>& runs() {
  static const std::map<int, std::vector<Run>> table = {
      {1, {{"zero-cross-5set", "5", 1}}},
      {2, {{"two-colors", "6..8", 200}}},
      {3, {{"convex-alternating", "4..20", 50}, {"convex-alternating-random", "4..20", 50}}},
      {4, {{"flat-convex", "4..14", 50}}},
      {5, {{"grid-p0-oracle", "4..12:2", 1}}},
      {6, {{"grid-five-eighths", "4..14:2", 20}}},
      {7, {{"equidistant-grid", "4..8:2", 1}}},
      {8, {{"small-angle", "0", 10000}, {"island-lemma", "0", 500}, {"good-cell", "400", 20}}},
      {9, {{"figure9", "14", 1}}},
      {10, {{"island-wedge", "2000", 20}}},
      {11, {{"random-expectation", "100,200,400,800", 200}}},
      {12, {{"convex-random", "8,16,40", 500}}},
      {13, {{"dense", "1600", 1}, {"grid-fill", "11", 1}}},
  };
  return table;
}

ExperimentReport run(const Run& r, int workers) {
  ExperimentSpec spec;
  spec.name = r.name;
  spec.ns = parse_n_range(r.ns);
  spec.trials = r.trials;
  spec.seed = kSeed;
  spec.workers = workers;
  return run_experiment(spec);
}

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Shared row checks: status ok, realized present, and a per-row predicate.
void check_rows(const ExperimentReport& rep, Verdict& v,
                const std::function<std::string(const ExperimentRow&)>& predicate) {
  for (const ExperimentRow& row : rep.rows) {
    if (row.status != "ok") {
      v.fail(row.experiment + " n=" + std::to_string(row.n) + " trial " + std::to_string(row.trial) + ": " +
             row.status);
      return;
    }
    if (!row.realized) {
      v.fail(row.experiment + ": missing realized value");
      return;
    }
    std::string why = predicate(row);
    if (!why.empty()) {
      v.fail(row.experiment + " n=" + std::to_string(row.n) + " trial " + std::to_string(row.trial) + ": " + why);
      return;
    }
  }
}

std::string expect_at_least(long got, long want) {
  return got >= want ? "" : "realized " + std::to_string(got) + " < " + std::to_string(want);
}

std::string expect_equal(long got, long want) {
  return got == want ? "" : "realized " + std::to_string(got) + " != " + std::to_string(want);
}

void expect_rows(const ExperimentReport& rep, Verdict& v, std::size_t rows) {
  if (rep.rows.size() != rows) {
    v.fail(rep.spec.name + ": " + std::to_string(rep.rows.size()) + " rows, expected " + std::to_string(rows));
  }
}

Verdict criterion(int id, const std::vector<ExperimentReport>& reps) {
  Verdict v;
  switch (id) {
    case 1: {
      // Direct replay of the search as well as the experiment row.
      ZeroCrossWitness w = search_zero_cross_5set(mix_seed(kSeed, 5, 0), 1000000);
      if (w.trials > 1000000) v.fail("search used " + std::to_string(w.trials) + " trials");
      if (w.points.size() != 5) v.fail("witness does not have 5 points");
      std::vector<int> rest;
      for (int i = 0; i < 5; ++i) {
        if (i != w.apex) rest.push_back(i);
      }
      if (exact_cross_number(w.points, 1).value != 0) v.fail("5-set crossing number is not 0");
      if (exact_cross_number(w.points.subset(rest), 1).value != 1) v.fail("without the apex it is not 1");
      check_rows(reps[0], v, [](const ExperimentRow& r) {
        return r.realized == 0 && r.guarantee == 1 ? "" : "expected 0 and 1";
      });
      break;
    }
    case 2:
      expect_rows(reps[0], v, 3 * 200);
      check_rows(reps[0], v, [](const ExperimentRow& r) { return expect_at_least(*r.realized, 1); });
      break;
    case 3:
      for (const auto& rep : reps) {
        expect_rows(rep, v, 17 * 50);
        check_rows(rep, v, [](const ExperimentRow& r) { return expect_at_least(*r.realized, r.n / 2 - 1); });
      }
      break;
    case 4:
      expect_rows(reps[0], v, 11 * 50);
      check_rows(reps[0], v, [](const ExperimentRow& r) { return expect_equal(*r.realized, r.n - 3); });
      break;
    case 5: {
      // floor(5(n-2)/8) at n = 4..12 step 2.
      const std::map<int, long> expected = {{4, 1}, {6, 2}, {8, 3}, {10, 5}, {12, 6}};
      expect_rows(reps[0], v, expected.size());
      check_rows(reps[0], v, [&](const ExperimentRow& r) { return expect_equal(*r.realized, expected.at(r.n)); });
      break;
    }
    case 6:
      // A 2 x m grid has even n, so the sweep covers the even sizes only.
      expect_rows(reps[0], v, 6 * 20);
      check_rows(reps[0], v, [](const ExperimentRow& r) { return expect_at_least(*r.realized, 5L * (r.n - 2) / 8); });
      break;
    case 7:
      expect_rows(reps[0], v, 3);
      check_rows(reps[0], v, [](const ExperimentRow& r) {
        return *r.realized <= r.n / 2 - 1 ? "" : "value " + std::to_string(*r.realized) + " above n/2 - 1";
      });
      break;
    case 8:
      expect_rows(reps[0], v, 10000);
      expect_rows(reps[1], v, 500);
      check_rows(reps[0], v, [](const ExperimentRow& r) { return expect_equal(*r.realized, 0); });
      check_rows(reps[1], v, [](const ExperimentRow& r) { return expect_equal(*r.realized, 1); });
      check_rows(reps[2], v, [](const ExperimentRow& r) { return expect_equal(*r.realized, 2); });
      break;
    case 9: {
      Figure9 f = figure9_configuration();
      CrossingReport rep = cross_rb(f.points, f.coloring);
      if (rep.blue_tree.edges.size() != 1 || rep.blue_tree.edges[0] != Segment::normalized(f.a, f.b)) {
        v.fail("blue tree is not the single edge ab");
      }
      if (f.red_segments.size() != 6) v.fail("fixture does not list 6 red segments");
      for (const Segment& s : f.red_segments) {
        if (std::find(rep.red_tree.edges.begin(), rep.red_tree.edges.end(), s) == rep.red_tree.edges.end()) {
          v.fail("a listed segment is not a red tree edge");
        }
      }
      if (!tree_is_mst(f.points, rep.red_tree)) v.fail("red tree is not an MST");
      if (longer_edge_crossing_profile(rep, f.points).max_blue < 5) v.fail("blue-side profile below 5");
      check_rows(reps[0], v, [](const ExperimentRow& r) { return expect_at_least(*r.realized, 5); });
      break;
    }
    case 10:
      expect_rows(reps[0], v, 20);
      check_rows(reps[0], v, [](const ExperimentRow& r) { return expect_at_least(*r.realized, *r.guarantee); });
      break;
    case 11: {
      const auto& stats = reps[0].per_n;
      if (stats.size() != 4) v.fail("expected 4 sizes");
      for (const NStats& s : stats) {
        // 99% two-sided normal interval for mean/n.
        if (s.mean - 2.576 * s.stderr_mean <= 0) v.fail("CI touches 0 at n=" + std::to_string(s.n));
      }
      for (std::size_t i = 1; i < stats.size(); ++i) {
        double ratio = stats[i].mean / stats[i - 1].mean;
        std::fprintf(stderr, "  n=%d mean=%.3f ratio=%.3f\n", stats[i].n, stats[i].mean, ratio);
        if (ratio < 1.6 || ratio > 2.4) v.fail("ratio " + std::to_string(ratio) + " at n=" + std::to_string(stats[i].n));
      }
      check_rows(reps[0], v, [](const ExperimentRow&) { return std::string(); });
      break;
    }
    case 12:
      for (const NStats& s : reps[0].per_n) {
        double bound = s.n / 4.0 - 1 - 3 * s.stderr_mean;
        std::fprintf(stderr, "  n=%d mean=%.3f bound=%.3f\n", s.n, s.mean, bound);
        if (s.mean < bound) v.fail("mean below n/4 - 1 - 3se at n=" + std::to_string(s.n));
      }
      if (reps[0].per_n.size() != 3) v.fail("expected 3 sizes");
      check_rows(reps[0], v, [](const ExperimentRow&) { return std::string(); });
      break;
    case 13:
      check_rows(reps[0], v, [](const ExperimentRow& r) {
        if (*r.guarantee < 1) return std::string("no cell colored");
        return expect_at_least(*r.realized, *r.guarantee);
      });
      check_rows(reps[1], v, [](const ExperimentRow& r) { return expect_equal(*r.realized, 1); });
      break;
    default:
      v.fail("unknown criterion");
  }
  return v;
}

void report(int id, const Verdict& v, double seconds) {
  std::printf("criterion %2d: %s  (%.1f s)%s%s\n", id, v.pass ? "PASS" : "FAIL", seconds,
              v.detail.empty() ? "" : "  ", v.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  int failed = 0;
  std::map<std::string, std::string> csv;

  for (const auto& [id, list] : runs()) {
    auto start = Clock::now();
    Verdict v;
    try {
      std::vector<ExperimentReport> reps;
      for (const Run& r : list) {
        reps.push_back(run(r, 1));
        csv[r.name] = to_csv(reps.back());
      }
      v = criterion(id, reps);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    report(id, v, std::chrono::duration<double>(Clock::now() - start).count());
    failed += !v.pass;
  }

  // Replay with a different worker count; the CSV must not change.
  auto start = Clock::now();
  Verdict v;
  try {
    for (const auto& [id, list] : runs()) {
      for (const Run& r : list) {
        if (to_csv(run(r, 3)) != csv.at(r.name)) v.fail(r.name + " CSV differs with 3 workers");
      }
    }
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  report(14, v, std::chrono::duration<double>(Clock::now() - start).count());
  failed += !v.pass;

  std::printf("%d of 14 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
