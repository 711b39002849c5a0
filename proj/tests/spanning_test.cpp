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
#include "bicross/oracle.hpp"
#include "bicross/radical_sum.hpp"
#include "bicross/spanning.hpp"
#include "test_util.hpp"

using namespace bicross;
using bicross::testing::make_points;

TEST_CASE("MST weight matches exhaustive spanning-tree search") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PointSet p = uniform_square(7, seed);
    Tree t = mst(p);
    CHECK(t.edges.size() == 6);
    CHECK_FALSE(t.tie);
    CHECK(compare(tree_length(p, t), brute_force_mst_weight(p, all_indices(p))) == 0);
    CHECK(tree_is_mst(p, t));
  }
}

TEST_CASE("MST of a subset only uses that subset") {
  PointSet p = uniform_square(12, 3);
  std::vector<int> sub = {1, 4, 5, 9};
  Tree t = mst(p, sub);
  CHECK(t.vertices == sub);
  for (const Segment& e : t.edges) {
    CHECK(std::binary_search(sub.begin(), sub.end(), e.a));
    CHECK(std::binary_search(sub.begin(), sub.end(), e.b));
  }
}

TEST_CASE("a square has four minimum spanning trees") {
  PointSet sq = make_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  std::vector<Tree> all = enumerate_msts(sq, all_indices(sq));
  CHECK(all.size() == 4);  // any three of the four sides
  CHECK(mst(sq).tie);
  for (const Tree& t : all) CHECK(tree_is_mst(sq, t));
  CHECK(edge_length_multiset(sq, all[0]) == std::vector<Coord>{1, 1, 1});
}

TEST_CASE("enumeration respects its cap") {
  // Equal spacing along both rows ties many edges.
  PointSet p = equidistant_convex_grid(8).points;
  CHECK(bicross::testing::error_code_of([&] { enumerate_msts(p, all_indices(p), 1); }) == ErrorCode::kCapExceeded);
}

TEST_CASE("weight classes are sorted and partition the edges") {
  PointSet p = uniform_square(6, 11);
  auto classes = weight_classes(p, all_indices(p));
  std::size_t total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    total += classes[i].edges.size();
    if (i) CHECK(classes[i - 1].squared_length < classes[i].squared_length);
  }
  CHECK(total == 15);
}

TEST_CASE("trees with one or two points") {
  PointSet p = make_points({{0, 0}, {1, 0}});
  CHECK(mst(p, std::vector<int>{0}).edges.empty());
  CHECK(mst(p).edges.size() == 1);
}
