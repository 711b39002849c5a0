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
#include "test_util.hpp"

using namespace bicross;
using bicross::testing::make_points;

TEST_CASE("density uses the smallest integer-side square") {
  PointSet p = make_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(bounding_square_side(p, all_indices(p)) == 1);
  CHECK(density(p) == 4);
  PointSet q = make_points({{0, 0}, {Coord(3, 2), Coord(1, 3)}});
  CHECK(bounding_square_side(q, all_indices(q)) == 2);
  CHECK(density(q) == Coord(1, 2));
}

TEST_CASE("spread") {
  PointSet p = make_points({{0, 0}, {3, 0}, {0, 4}});
  SpreadReport s = spread(p);
  CHECK(s.min_squared_distance == 9);
  CHECK(s.squared_diameter == 25);
  // Scale-free: diameter^2 = 25 against alpha^2 * 3 * 9.
  CHECK(is_alpha_dense(p, Coord(1)));
  CHECK_FALSE(is_alpha_dense(p, Coord(9, 10)));
}

TEST_CASE("cells are open") {
  GridPlacement g{0, 0, 2};
  CHECK(cell_of({Coord(3, 2), Coord(3, 2)}, g, 2) == std::optional<std::pair<int, int>>({1, 1}));
  CHECK(cell_of({Coord(1, 2), Coord(3, 2)}, g, 2) == std::optional<std::pair<int, int>>({0, 1}));
  CHECK_FALSE(cell_of({1, Coord(1, 2)}, g, 2).has_value());  // on a grid line
  CHECK_FALSE(cell_of({3, Coord(1, 2)}, g, 2).has_value());
}

TEST_CASE("fills_grid needs every cell") {
  PointSet p = make_points({{Coord(1, 4), Coord(1, 4)}, {Coord(3, 4), Coord(1, 4)}, {Coord(1, 4), Coord(3, 4)}});
  CHECK_FALSE(fills_grid(p, 2));
  PointSet q = make_points({{Coord(1, 4), Coord(1, 4)},
                            {Coord(3, 4), Coord(1, 3)},
                            {Coord(1, 5), Coord(3, 4)},
                            {Coord(4, 5), Coord(2, 3)}});
  CHECK(fills_grid(q, 2));
}
