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

#include "bicross/geometry.hpp"
#include "bicross/point_io.hpp"
#include "bicross/rational.hpp"
#include "test_util.hpp"

using namespace bicross;
using bicross::testing::error_code_of;
using bicross::testing::make_points;

TEST_CASE("coordinates parse as exact rationals") {
  CHECK(parse_coord("3/6") == Coord(1, 2));
  CHECK(parse_coord("-1/8") == Coord(-1, 8));
  CHECK(parse_coord("7") == Coord(7));
  CHECK(format_coord(parse_coord("-2/4")) == "-1/2");
  CHECK(format_coord(Coord(3)) == "3");
  CHECK(error_code_of([] { parse_coord("0.5"); }) == ErrorCode::kParse);
  CHECK(error_code_of([] { parse_coord("1/0"); }) == ErrorCode::kParse);
  CHECK(error_code_of([] { parse_coord("abc"); }) == ErrorCode::kParse);
}

TEST_CASE("orientation is exact at tiny offsets") {
  Point a{0, 0}, b{1, 1};
  Coord eps = dyadic(1, 200);
  CHECK(orientation(a, b, {2, 2}) == Orientation::kCollinear);
  CHECK(orientation(a, b, {Coord(2), 2 + eps}) == Orientation::kCounterClockwise);
  CHECK(orientation(a, b, {Coord(2), 2 - eps}) == Orientation::kClockwise);
}

TEST_CASE("proper crossings and degenerate contacts") {
  PointSet p = make_points({{0, 0}, {2, 2}, {0, 2}, {2, 0}, {3, 0}, {4, 1}, {1, 0}, {1, 1}});
  CHECK(segments_properly_cross({0, 1}, {2, 3}, p));
  CHECK(segments_properly_cross({2, 3}, {0, 1}, p));
  CHECK_FALSE(segments_properly_cross({0, 6}, {4, 5}, p));
  // (0,0)-(2,0) against (1,0)-(1,1): an endpoint on the other interior.
  CHECK(error_code_of([&] { segments_properly_cross({0, 3}, {6, 7}, p); }) == ErrorCode::kDegenerateIntersection);
  // Collinear overlap.
  CHECK(error_code_of([&] { segments_properly_cross({0, 3}, {6, 4}, p); }) == ErrorCode::kDegenerateIntersection);
}

TEST_CASE("fast and wide lattices agree") {
  PointSet small = make_points({{0, 0}, {1, 0}, {0, 1}});
  CHECK(small.uses_fast_lattice());
  Coord tiny = dyadic(1, 90);
  PointSet big = make_points({{0, 0}, {1, tiny}, {tiny, 1}});
  CHECK_FALSE(big.uses_fast_lattice());
  CHECK(orientation(big, 0, 1, 2) == Orientation::kCounterClockwise);
  CHECK(squared_length(big, {0, 1}) == 1 + tiny * tiny);
  CHECK(compare_squared_lengths(big, {0, 1}, {0, 2}) == 0);
}

TEST_CASE("convex hull is counter-clockwise and skips interior points") {
  PointSet p = make_points({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 2}, {2, 0}});
  std::vector<int> hull = convex_hull(p);
  CHECK(hull.size() == 4);
  CHECK_FALSE(in_convex_position(p));
  CHECK(in_convex_position(p.subset(hull)));
}

TEST_CASE("genericity reports the first defect") {
  CHECK(is_generic(make_points({{0, 0}, {1, 0}, {3, 1}})).generic());
  GenericityReport col = is_generic(make_points({{0, 0}, {1, 1}, {3, 3}}));
  CHECK(col.kind == GenericityReport::Kind::kCollinear);
  GenericityReport dist = is_generic(make_points({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(dist.kind == GenericityReport::Kind::kRepeatedDistance);
  CHECK_FALSE(dist.describe().empty());
}

TEST_CASE("rigid transforms preserve the distance order") {
  PointSet p = make_points({{0, 0}, {3, 1}, {1, 5}});
  for (const PointSet& q : {translated(p, 7, Coord(-1, 3)), scaled(p, Coord(2, 7)), mirrored_x(p), swapped_xy(p)}) {
    CHECK(compare_squared_lengths(q, {0, 1}, {0, 2}) == compare_squared_lengths(p, {0, 1}, {0, 2}));
    CHECK(is_generic(q).generic());
  }
}

TEST_CASE("point text round-trips with and without labels") {
  PointSet plain = make_points({{Coord(1, 3), -2}, {0, Coord(5, 7)}});
  CHECK(parse_point_set(format_point_set(plain)).points() == plain.points());

  PointSet labeled(plain.points(), {"v1", "w1"});
  PointSet back = parse_point_set(format_point_set(labeled));
  CHECK(back.labels() == labeled.labels());
  CHECK(back.find_label("w1") == 1);

  CHECK(parse_point_set("# comment\n2\n0 0\n\n1 1/2\n").size() == 2);
  CHECK(error_code_of([] { parse_point_set("2\n0 0\n"); }) == ErrorCode::kParse);
  CHECK(error_code_of([] { parse_point_set("1\n0 0\n1 1\n"); }) == ErrorCode::kParse);
  CHECK(error_code_of([] { parse_point_set("2\n0 0 a\n1 1\n"); }) == ErrorCode::kParse);
}
