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

#ifndef BICROSS_DENSITY_HPP_
#define BICROSS_DENSITY_HPP_

#include <optional>
#include <span>
#include <vector>

#include "bicross/geometry.hpp"

namespace bicross {

// Side of the smallest square with integer side length containing the
// points (at least 1).
mpz_class bounding_square_side(const PointSet& points, std::span<const int> subset);

// phi(P) = |P| / side^2 with side from bounding_square_side.
Coord density(const PointSet& points, std::span<const int> subset);
Coord density(const PointSet& points);

struct SpreadReport {
  Coord min_squared_distance;
  Coord squared_diameter;
};

// Exact minimum and maximum pairwise squared distance. Needs >= 2 points.
SpreadReport spread(const PointSet& points, std::span<const int> subset);
SpreadReport spread(const PointSet& points);

// diameter < alpha * sqrt(n) * min distance, compared on squares. Measuring
// in units of the minimum distance makes the test scale-free.
bool is_alpha_dense(const PointSet& points, const Coord& alpha);

// The square [x0, x0 + side] x [y0, y0 + side] cut into k x k cells.
struct GridPlacement {
  Coord x0;
  Coord y0;
  Coord side;
};

// Square concentric with the bounding box, with side L * k / (k - 1) where L
// is the larger box extent, so that the extreme points sit at the middle of
// the boundary cells.
GridPlacement canonical_placement(const PointSet& points, std::span<const int> subset, int k);

// Cell (column, row) whose open interior contains p, if any.
std::optional<std::pair<int, int>> cell_of(const Point& p, const GridPlacement& grid, int k);

// True iff every open cell of the placement contains a point of the subset.
bool fills_grid(const PointSet& points, std::span<const int> subset, int k,
                const GridPlacement& grid);
// Same, under the canonical placement.
bool fills_grid(const PointSet& points, std::span<const int> subset, int k);
bool fills_grid(const PointSet& points, int k);

std::vector<int> all_indices(const PointSet& points);

}  // namespace bicross

#endif  // BICROSS_DENSITY_HPP_
