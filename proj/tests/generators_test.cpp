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
#include "test_util.hpp"

using namespace bicross;
using bicross::testing::error_code_of;

TEST_CASE("generators are deterministic in the seed") {
  CHECK(uniform_square(20, 3).points() == uniform_square(20, 3).points());
  CHECK_FALSE(uniform_square(20, 3).points() == uniform_square(20, 4).points());
  CHECK(random_convex_set(9, 1).points() == random_convex_set(9, 1).points());
}

TEST_CASE("convex generators") {
  for (int n : {4, 7, 20}) {
    for (const PointSet& p : {perturbed_regular_polygon(n, default_polygon_jitter(n), 1), random_convex_set(n, 1),
                              flat_convex_set(n, 1)}) {
      CHECK(p.size() == n);
      CHECK(is_generic(p).generic());
      CHECK(in_convex_position(p));
    }
  }
}

TEST_CASE("grid generators carry labels") {
  for (int n : {4, 8, 12}) {
    LabeledGrid g = perturbed_grid_p0(n, 2);
    CHECK(p0_constraints_hold(g));
    CHECK(is_generic(g.points).generic());
    CHECK(g.labels.v.size() == static_cast<std::size_t>(n / 2));
    CHECK(g.points.labels()[g.labels.w.back()] == "w" + std::to_string(n / 2));
  }
  CHECK(error_code_of([] { perturbed_grid_p0(7, 1); }) == ErrorCode::kInvalidArgument);
  LabeledGrid eq = equidistant_convex_grid(6);
  CHECK_FALSE(is_generic(eq.points).generic());
}

TEST_CASE("dense set meets its density bound") {
  PointSet p = dense_set(400, Coord(2), 1);
  CHECK(p.size() == 400);
  CHECK(is_alpha_dense(p, Coord(2)));
  SpreadReport s = spread(p);
  CHECK(s.min_squared_distance >= 1);
}

TEST_CASE("island fixture has a single bridge") {
  PointSet p = island_fixture(6, 9, Coord(18, 5), Coord(3), 5);
  CHECK(p.size() == 15);
  CHECK(bridge_count(p, 6) == 1);
}

TEST_CASE("figure 9 fixture") {
  Figure9 f = figure9_configuration();
  CHECK(f.points.size() == 14);
  CHECK(is_generic(f.points).generic());
  CHECK(f.red_segments.size() == 6);
}

TEST_CASE("grid fill fixture puts one point in each cell") {
  for (int k : {3, 5, 11}) {
    PointSet p = grid_fill_fixture(k);
    CHECK(p.size() == k * k);
    CHECK(fills_grid(p, k));
  }
}

TEST_CASE("dyadic truncation") {
  CHECK(truncate_dyadic(Coord(5, 3), 2) == Coord(3, 2));
  CHECK(truncate_dyadic(Coord(-5, 3), 2) == Coord(-3, 2));
}
