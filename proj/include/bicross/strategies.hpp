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

#ifndef BICROSS_STRATEGIES_HPP_
#define BICROSS_STRATEGIES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bicross/crossing.hpp"
#include "bicross/density.hpp"
#include "bicross/geometry.hpp"

namespace bicross {

// A group of points colored together by one step of a strategy, e.g. one
// island of the wedge procedure or the red pair of one grid cell.
struct Stage {
  std::vector<int> points;
  long guarantee = 0;
};

struct StrategyOutcome {
  Coloring coloring;
  long guarantee = 0;  // lower bound on cross_rb(P, coloring)
  std::vector<std::string> trace;
  std::vector<Stage> stages;
};

// Colors R, B, R, B, ... along the hull; Red gets the larger class.
// Raises kNotConvexPosition. Guarantee floor(n/2) - 1.
StrategyOutcome alternate_convex(const PointSet& points);

// Left-to-right arc rule for flat convex sets. Raises kTooFewPoints,
// kNotConvexPosition, kNotFlat. Guarantee n - 3.
StrategyOutcome flat_convex_coloring(const PointSet& points);

// Max y-extent < min gap between consecutive x-coordinates.
bool is_flat(const PointSet& points);

// Three red points forming one or two red edges that the blue tree must
// cross. Needs n > 5 (kTooFewPoints). Guarantee 1.
StrategyOutcome one_crossing_coloring(const PointSet& points);

// Staged islands with discards (D labels). Guarantee is the sum over stages
// of floor(s/2) - 1, where s is the size of the stage's convex subset.
StrategyOutcome island_wedge_coloring(const PointSet& points, int wedge_count = 100,
                                      const Coord& radius_factor = 3);

// For each stage, the MSTs of the stage's red and blue points are subtrees
// of the global red and blue MSTs.
bool stage_trees_embed(const PointSet& points, const StrategyOutcome& outcome);

// Rainbow columns 1, 5, 9, ... with section rule. Needs labels v1..vm and
// w1..wm (kNotLabeledGrid). Guarantee floor(5 (n - 2) / 8).
StrategyOutcome grid_five_eighths_coloring(const PointSet& points);

// Colors two points of `inner` red so that their edge crosses the blue tree.
// `inner` must fill a k x k grid (kDoesNotFill), k odd and >= 11. The rest
// of the coloring is Blue. Below k = 101 the guarantee is 1 only when
// cross_rb confirms a crossing.
StrategyOutcome grid_fill_coloring(const PointSet& points, std::span<const int> inner, int k = 101,
                                   const std::optional<GridPlacement>& placement = std::nullopt);

// Rich-cell pipeline: cells of side ceil(sqrt(r)) * alpha^2 holding >= r
// points, greedy selection with the 24 nearest cells excluded, then a
// shrinking-window search for a subset that fills a k x k grid in each.
// Raises kNoRichCells.
StrategyOutcome dense_coloring(const PointSet& points, const Coord& alpha, long r = -1,
                               int k = 11);

// Independent fair coin per point from Rng(seed): top bit set -> Red.
Coloring random_coloring(const PointSet& points, std::uint64_t seed);

// Maximum subset in convex position, in counterclockwise order starting at
// its lowest point.
std::vector<int> largest_convex_subset(const PointSet& points, std::span<const int> subset);
std::vector<int> largest_convex_subset(const PointSet& points);

}  // namespace bicross

#endif  // BICROSS_STRATEGIES_HPP_
