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

#ifndef BICROSS_VERIFIERS_HPP_
#define BICROSS_VERIFIERS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bicross/crossing.hpp"
#include "bicross/geometry.hpp"

namespace bicross {

// Two segments ab and cd meeting at x.
struct SmallAngleSample {
  Point a, b, c, d, x;
};

// Exact premises: |ab|, |cd| >= 2; |ax| <= |xb|; |cx| <= |xd|; x lies
// inside both segments; the angle axc is certified at most 1 degree via
// cos^2 >= (4999/5000)^2 with a positive dot product.
bool small_angle_premises_hold(const SmallAngleSample& s);

// max{|ab|, |cd|} >= max{|ac|, |bd|} + 1/2, decided on squared quantities.
bool small_angle_conclusion_holds(const SmallAngleSample& s);

struct LemmaReport {
  long samples = 0;     // premise-respecting samples evaluated
  long rejected = 0;    // draws discarded by the premise check
  long violations = 0;  // samples whose conclusion failed
  long max_observed = 0;
  std::vector<std::string> notes;
};

// Draws `trials` premise-respecting samples (rejected draws do not count).
LemmaReport verify_small_angle_lemma(long trials, std::uint64_t seed, int workers = 0);

// Each trial builds island_fixture with random sizes and counts MST edges
// between the two parts; a count other than 1 is a violation. With a wedge
// outside the premise the counts are logged in max_observed only.
LemmaReport verify_island_lemma(long trials, std::uint64_t seed, const Coord& wedge_deg = Coord(18, 5),
                                int workers = 0);

struct ProfileInstance {
  std::string name;
  PointSet points;
  Coloring coloring;
};

struct ProfileReport {
  long max_red = 0;
  long max_blue = 0;
  // max(max_red, max_blue) per instance -> number of instances.
  std::map<long, long> histogram;
};

ProfileReport profile_crossing_constant(std::span<const ProfileInstance> instances);

// `count` uniform n-point sets, each under a random coloring.
std::vector<ProfileInstance> random_profile_instances(long count, int n, std::uint64_t seed);

struct GoodCell {
  int i = 0;  // column
  int j = 0;  // row
  // Points in the subcells left of, right of, below and above the center.
  std::array<int, 4> members{};
};

struct GoodCellReport {
  int cells_per_side = 0;
  std::vector<GoodCell> good;
};

// Cells of side 1/m with m = max(1, floor(sqrt(n / 4))), so each has area
// close to 4/n; each cell splits into 11 x 11 subcells, all half-open. A
// cell is good iff only the four subcells adjacent to the center subcell are
// occupied, by one point each. Raises kInvalidArgument outside [0, 1)^2.
GoodCellReport detect_good_cells(const PointSet& points, int n);

// n points in [0, 1)^2: one good cell at a random position, built from one
// point in each of the four subcells around its center, and n - 4 uniform
// points outside that cell. Needs n >= 4.
PointSet plant_good_cell(int n, std::uint64_t seed);

// Of the 16 colorings of the four points, those whose red and blue trees on
// these points alone cross.
int internal_crossing_colorings(const PointSet& points, const std::array<int, 4>& members);

}  // namespace bicross

#endif  // BICROSS_VERIFIERS_HPP_
