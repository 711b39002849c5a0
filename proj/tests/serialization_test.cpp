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

#include <doctest.h>

#include "bicross/generators.hpp"
#include "bicross/serialization.hpp"
#include "bicross/strategies.hpp"

using namespace bicross;

TEST_CASE("tree round-trip") {
  PointSet p = uniform_square(8, 2);
  Tree t = mst(p);
  CHECK(tree_from_json(to_json(t)) == t);
}

TEST_CASE("coloring and labels round-trip") {
  Coloring c = Coloring::parse("RBBDR");
  CHECK(to_json(c) == "RBBDR");
  CHECK(coloring_from_json(to_json(c)) == c);
  LabeledGrid g = perturbed_grid_p0(8, 1);
  GridLabels back = grid_labels_from_json(to_json(g.labels));
  CHECK(back.v == g.labels.v);
  CHECK(back.w == g.labels.w);
}

TEST_CASE("crossing report fields") {
  PointSet p = uniform_square(10, 3);
  CrossingReport rep = cross_rb(p, random_coloring(p, 1));
  Json j = to_json(rep);
  CHECK(j["count"] == rep.count);
  CHECK(j["pairs"].size() == rep.pairs.size());
}

TEST_CASE("strategy outcome") {
  PointSet p = flat_convex_set(6, 1);
  Json j = to_json(flat_convex_coloring(p));
  CHECK(j["guarantee"] == 3);
  CHECK(j["coloring"].get<std::string>().size() == 6);
}
