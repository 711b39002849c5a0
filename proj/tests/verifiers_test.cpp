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
#include "bicross/verifiers.hpp"

using namespace bicross;

TEST_CASE("small-angle property holds on random samples") {
  LemmaReport r = verify_small_angle_lemma(2000, 3, 1);
  CHECK(r.samples == 2000);
  CHECK(r.violations == 0);
}

TEST_CASE("small-angle premise check rejects a wide angle") {
  // Perpendicular crossing segments.
  SmallAngleSample s{{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {0, 0}};
  CHECK_FALSE(small_angle_premises_hold(s));
}

TEST_CASE("island property") {
  LemmaReport r = verify_island_lemma(40, 2, Coord(18, 5), 1);
  CHECK(r.samples == 40);
  CHECK(r.violations == 0);
}

TEST_CASE("planted good cell is detected and crosses for 2 of 16 colorings") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PointSet p = plant_good_cell(400, seed);
    GoodCellReport rep = detect_good_cells(p, 400);
    CHECK(rep.cells_per_side == 10);
    REQUIRE_FALSE(rep.good.empty());
    CHECK(internal_crossing_colorings(p, rep.good.front().members) == 2);
  }
}

TEST_CASE("profile of random colorings is small") {
  auto inst = random_profile_instances(50, 30, 1);
  ProfileReport rep = profile_crossing_constant(inst);
  long total = 0;
  for (const auto& [value, count] : rep.histogram) total += count;
  CHECK(total > 0);
  CHECK(rep.max_red <= 10);
  CHECK(rep.max_blue <= 10);
}
