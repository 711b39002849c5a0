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

#ifndef BICROSS_GENERATORS_HPP_
#define BICROSS_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "bicross/crossing.hpp"
#include "bicross/geometry.hpp"

namespace bicross {

// Indices of the two rows of a 2 x m grid, left to right.
struct GridLabels {
  std::vector<int> v;  // bottom row
  std::vector<int> w;  // top row
};

struct LabeledGrid {
  PointSet points;  // labeled "v1".."vm", "w1".."wm"
  GridLabels labels;
};

// Every generator verifies its own post-conditions and retries with derived
// seeds (at most 64 attempts) before raising kGenerationFailed.

// Regular n-gon vertices (53-bit dyadic) moved by at most `jitter` per
// coordinate. Generic and in convex position.
PointSet perturbed_regular_polygon(int n, const Coord& jitter, std::uint64_t seed);
Coord default_polygon_jitter(int n);

// n random rational points on the unit circle, from t -> ((1-t^2), 2t)/(1+t^2).
PointSet random_convex_set(int n, std::uint64_t seed);

// Flat convex set: x near 1..n, y on two opposite tiny parabolic arcs.
PointSet flat_convex_set(int n, std::uint64_t seed);

// The perturbed 2 x (n/2) grid meeting the spacing constraints (a)-(d) of
// the tight construction; see p0_constraints_hold.
LabeledGrid perturbed_grid_p0(int n, std::uint64_t seed);
bool p0_constraints_hold(const LabeledGrid& grid);

// Generic convex perturbation of the 2 x (n/2) grid with random bow.
LabeledGrid random_perturbed_grid(int n, std::uint64_t seed);

// Deliberately non-generic grid: both rows are equally spaced on circular
// arcs and each point's nearest neighbor is its column partner.
LabeledGrid equidistant_convex_grid(int n);

// n i.i.d. uniform points of [0,1)^2 with 53-bit dyadic coordinates.
PointSet uniform_square(int n, std::uint64_t seed);

// Jittered unit grid rescaled so the minimum distance lies in [1, 1+2^-10);
// alpha-dense.
PointSet dense_set(int n, const Coord& alpha, std::uint64_t seed);

// First n1 points in the open unit disk at the origin, the other n2 beyond
// min_radius inside a wedge of wedge_deg degrees starting at the +x axis.
PointSet island_fixture(int n1, int n2, const Coord& wedge_deg, const Coord& min_radius,
                        std::uint64_t seed);

// Number of MST edges joining the first n1 points to the rest.
int bridge_count(const PointSet& points, int n1);

// 12 red points and a blue pair (a, b). Six red MST edges cross ab and
// five of them are longer than ab. The long edges come in two fans of two
// (hubs 0 and 3) plus one lone edge; the sixth is the short link from hub 0
// to the lone edge. Checked exactly on construction.
struct Figure9 {
  PointSet points;
  Coloring coloring;
  int a = 12;
  int b = 13;
  std::vector<Segment> red_segments;  // the first five are the long ones
};
Figure9 figure9_configuration();

// k^2 points, one inside each cell of the k x k unit grid (row-major).
PointSet grid_fill_fixture(int k);

// Truncates toward zero to a multiple of 2^-bits.
Coord truncate_dyadic(const Coord& value, unsigned bits);

}  // namespace bicross

#endif  // BICROSS_GENERATORS_HPP_
