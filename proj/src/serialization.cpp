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

#include "bicross/serialization.hpp"

#include <algorithm>

#include "bicross/errors.hpp"

namespace bicross {

namespace {

Json segment_json(const Segment& s) { return Json::array({s.a, s.b}); }

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) {
    if (!x.is_number_integer()) {
      throw Error(ErrorCode::kParse, std::string(what) + " must hold integers");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const Tree& tree) {
  Json edges = Json::array();
  for (const Segment& e : tree.edges) edges.push_back(segment_json(e));
  return {{"vertices", tree.vertices}, {"edges", edges}, {"tie", tree.tie}};
}

Tree tree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw Error(ErrorCode::kParse, "tree needs \"vertices\" and \"edges\"");
  }
  Tree t;
  t.vertices = int_list(j.at("vertices"), "vertices");
  std::sort(t.vertices.begin(), t.vertices.end());
  for (const Json& e : j.at("edges")) {
    std::vector<int> ab = int_list(e, "edge");
    if (ab.size() != 2 || ab[0] == ab[1]) throw Error(ErrorCode::kParse, "edge must be two distinct indices");
    t.edges.push_back(Segment::normalized(ab[0], ab[1]));
  }
  if (t.edges.size() + 1 != t.vertices.size() && !(t.vertices.empty() && t.edges.empty())) {
    throw Error(ErrorCode::kParse, "tree needs |edges| = |vertices| - 1");
  }
  t.tie = j.value("tie", false);
  return t;
}

Json to_json(const Coloring& coloring) { return coloring.str(); }

Coloring coloring_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::kParse, "coloring must be a string");
  return Coloring::parse(j.get<std::string>());
}

Json to_json(const GridLabels& labels) { return {{"v", labels.v}, {"w", labels.w}}; }

GridLabels grid_labels_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("v") || !j.contains("w")) {
    throw Error(ErrorCode::kParse, "grid labels need \"v\" and \"w\"");
  }
  GridLabels g{int_list(j.at("v"), "v"), int_list(j.at("w"), "w")};
  if (g.v.size() != g.w.size()) throw Error(ErrorCode::kParse, "grid rows differ in length");
  return g;
}

Json to_json(const CrossingReport& report) {
  Json pairs = Json::array();
  for (const auto& [r, b] : report.pairs) {
    pairs.push_back({{"red", segment_json(r)}, {"blue", segment_json(b)}});
  }
  return {{"count", report.count},
          {"pairs", pairs},
          {"red_tree", to_json(report.red_tree)},
          {"blue_tree", to_json(report.blue_tree)}};
}

Json to_json(const StrategyOutcome& outcome) {
  Json stages = Json::array();
  for (const Stage& s : outcome.stages) {
    stages.push_back({{"points", s.points}, {"guarantee", s.guarantee}});
  }
  return {{"coloring", to_json(outcome.coloring)},
          {"guarantee", outcome.guarantee},
          {"trace", outcome.trace},
          {"stages", stages}};
}

}  // namespace bicross
