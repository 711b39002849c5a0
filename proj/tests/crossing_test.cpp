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

#include "bicross/crossing.hpp"
#include "bicross/generators.hpp"
#include "bicross/strategies.hpp"
#include "test_util.hpp"

using namespace bicross;
using bicross::testing::error_code_of;
using bicross::testing::make_points;

namespace {

// Independent count: every red-MST edge against every blue-MST edge.
std::size_t naive_count(const PointSet& p, const Coloring& c) {
  Tree r = mst(p, c.indices_of(Color::kRed));
  Tree b = mst(p, c.indices_of(Color::kBlue));
  std::size_t n = 0;
  for (const Segment& e : r.edges) {
    for (const Segment& f : b.edges) n += segments_properly_cross(e, f, p);
  }
  return n;
}

}  // namespace

TEST_CASE("coloring strings") {
  Coloring c = Coloring::parse("RBDR");
  CHECK(c.str() == "RBDR");
  CHECK(c.count(Color::kRed) == 2);
  CHECK(c.indices_of(Color::kRed) == std::vector<int>{0, 3});
  CHECK(c.complement().str() == "BRDB");
  CHECK(error_code_of([] { Coloring::parse("RXB"); }) == ErrorCode::kParse);
}

TEST_CASE("crossing diagonals") {
  PointSet p = make_points({{0, 0}, {3, Coord(1, 10)}, {Coord(31, 10), 3}, {Coord(-1, 5), Coord(27, 10)}});
  CrossingReport rep = cross_rb(p, Coloring::parse("RBRB"));
  CHECK(rep.count == 1);
  CHECK(rep.pairs.size() == 1);
  CHECK(cross_rb(p, Coloring::parse("RRBB")).count == 0);
}

TEST_CASE("cross_rb agrees with a naive pairwise count") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    PointSet p = uniform_square(14, seed);
    Coloring c = random_coloring(p, seed + 100);
    if (c.count(Color::kRed) == 0 || c.count(Color::kBlue) == 0) continue;
    CHECK(cross_rb(p, c).count == naive_count(p, c));
    CHECK(cross_rb(p, c.complement()).count == naive_count(p, c));
  }
}

TEST_CASE("discarded points belong to neither tree") {
  PointSet p = uniform_square(10, 5);
  Coloring c = Coloring::parse("RRRDDBBBBR");
  CrossingReport rep = cross_rb(p, c);
  CHECK(rep.red_tree.vertices == std::vector<int>{0, 1, 2, 9});
  CHECK(rep.blue_tree.vertices == std::vector<int>{5, 6, 7, 8});
}

TEST_CASE("input errors") {
  PointSet p = uniform_square(5, 1);
  CHECK(error_code_of([&] { cross_rb(p, Coloring::parse("RRRRR")); }) == ErrorCode::kEmptyColorClass);
  CHECK(error_code_of([&] { cross_rb(p, Coloring::parse("RB")); }) == ErrorCode::kInvalidArgument);
  PointSet sq = make_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {2, 0}, {2, 1}});
  CHECK(error_code_of([&] { cross_rb(sq, Coloring::parse("RRRRBB")); }) == ErrorCode::kNonGenericInput);
}

TEST_CASE("minimum over MST pairs on a non-generic set") {
  // Unit square plus a far pair: red has 4 MSTs, two of which cross nothing.
  PointSet p = make_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {Coord(1, 2), Coord(-1, 2)}, {Coord(1, 2), Coord(1, 2)}});
  CHECK(cross_rb_min(p, Coloring::parse("RRRRBB")) == 0);
}

TEST_CASE("longer-edge profile counts only crossings at least as long") {
  Figure9 f = figure9_configuration();
  CrossingReport rep = cross_rb(f.points, f.coloring);
  CrossingProfile prof = longer_edge_crossing_profile(rep, f.points);
  CHECK(rep.count == 7);
  CHECK(prof.max_blue == 5);
}
