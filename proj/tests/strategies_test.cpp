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

#include "bicross/density.hpp"
#include "bicross/generators.hpp"
#include "bicross/strategies.hpp"
#include "test_util.hpp"

using namespace bicross;
using bicross::testing::error_code_of;
using bicross::testing::make_points;

namespace {

long realized(const PointSet& p, const StrategyOutcome& o) { return static_cast<long>(cross_rb(p, o.coloring).count); }

}  // namespace

TEST_CASE("alternating coloring on convex sets") {
  for (int n : {4, 5, 9, 16}) {
    PointSet p = perturbed_regular_polygon(n, default_polygon_jitter(n), 2);
    StrategyOutcome o = alternate_convex(p);
    CHECK(o.guarantee == n / 2 - 1);
    CHECK(realized(p, o) >= o.guarantee);
  }
  PointSet inner = make_points({{0, 0}, {4, 0}, {Coord(41, 10), 5}, {Coord(-1, 10), Coord(47, 10)}, {1, 2}});
  CHECK(error_code_of([&] { alternate_convex(inner); }) == ErrorCode::kNotConvexPosition);
}

TEST_CASE("flat coloring is exact") {
  for (int n = 4; n <= 12; ++n) {
    PointSet p = flat_convex_set(n, 40 + n);
    CHECK(is_flat(p));
    StrategyOutcome o = flat_convex_coloring(p);
    CHECK(realized(p, o) == n - 3);
  }
  PointSet round = perturbed_regular_polygon(8, default_polygon_jitter(8), 1);
  CHECK(error_code_of([&] { flat_convex_coloring(round); }) == ErrorCode::kNotFlat);
}

TEST_CASE("one-crossing coloring") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    PointSet p = uniform_square(6 + seed % 10, seed);
    StrategyOutcome o = one_crossing_coloring(p);
    CHECK(realized(p, o) >= 1);
  }
  CHECK(error_code_of([] { one_crossing_coloring(uniform_square(5, 1)); }) == ErrorCode::kTooFewPoints);
}

TEST_CASE("five-eighths grid coloring") {
  for (int n = 4; n <= 16; n += 2) {
    LabeledGrid g = random_perturbed_grid(n, n);
    StrategyOutcome o = grid_five_eighths_coloring(g.points);
    CHECK(o.guarantee == 5L * (n - 2) / 8);
    CHECK(realized(g.points, o) >= o.guarantee);
  }
  CHECK(error_code_of([] { grid_five_eighths_coloring(uniform_square(8, 1)); }) == ErrorCode::kNotLabeledGrid);
}

TEST_CASE("island wedge coloring embeds its stage trees") {
  PointSet p = uniform_square(600, 9);
  StrategyOutcome o = island_wedge_coloring(p);
  CHECK(o.stages.size() >= 1);
  CHECK(stage_trees_embed(p, o));
  CHECK(realized(p, o) >= o.guarantee);
}

TEST_CASE("grid fill fixture yields one crossing") {
  PointSet p = grid_fill_fixture(11);
  CHECK(fills_grid(p, 11));
  StrategyOutcome o = grid_fill_coloring(p, all_indices(p), 11);
  CHECK(o.guarantee == 1);
  CHECK(realized(p, o) == 1);
}

TEST_CASE("dense coloring colors rich cells") {
  PointSet p = dense_set(900, Coord(2), 4);
  CHECK(is_alpha_dense(p, Coord(2)));
  StrategyOutcome o = dense_coloring(p, Coord(2));
  CHECK(o.guarantee >= 1);
  CHECK(realized(p, o) >= o.guarantee);
}

TEST_CASE("random coloring is seed-determined") {
  PointSet p = uniform_square(30, 1);
  CHECK(random_coloring(p, 5) == random_coloring(p, 5));
  CHECK_FALSE(random_coloring(p, 5) == random_coloring(p, 6));
}

TEST_CASE("largest convex subset") {
  // A pentagon around two interior points: the pentagon wins.
  PointSet p = make_points({{0, 0}, {10, 1}, {12, 9}, {5, 14}, {-2, 8}, {5, 6}, {6, 5}});
  std::vector<int> s = largest_convex_subset(p);
  CHECK(s.size() >= 5);
  CHECK(in_convex_position(p.subset(s)));
}
