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

#ifndef BICROSS_SPANNING_HPP_
#define BICROSS_SPANNING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "bicross/geometry.hpp"

namespace bicross {

// A spanning tree over a subset of a PointSet. Edges are normalized
// (a < b) and sorted.
struct Tree {
  std::vector<int> vertices;  // sorted
  std::vector<Segment> edges;
  // Set iff the vertex subset admits more than one MST.
  bool tie = false;

  friend bool operator==(const Tree& s, const Tree& t) {
    return s.vertices == t.vertices && s.edges == t.edges;
  }
};

// Edges of equal squared length, as processed together by Kruskal.
struct WeightClass {
  Coord squared_length;
  std::vector<Segment> edges;
};

inline constexpr std::size_t kDefaultMstCap = 100000;

// Kruskal over the complete Euclidean graph on `subset`, ordering edges by
// exact squared length, then by (min index, max index).
Tree mst(const PointSet& points, std::span<const int> subset);
Tree mst(const PointSet& points);

// All edge pairs of the subset grouped by squared length, ascending.
std::vector<WeightClass> weight_classes(const PointSet& points, std::span<const int> subset);

// Every distinct MST of the subset, sorted lexicographically by edge list.
// Raises kCapExceeded once more than `cap` trees exist.
std::vector<Tree> enumerate_msts(const PointSet& points, std::span<const int> subset,
                                 std::size_t cap = kDefaultMstCap);

// Cycle-property check: for every non-tree pair (u, v), no edge on the tree
// path from u to v is longer than |uv|. False if `tree` is not a spanning
// tree of its vertex set.
bool tree_is_mst(const PointSet& points, const Tree& tree);

// Sorted multiset of squared edge lengths.
std::vector<Coord> edge_length_multiset(const PointSet& points, const Tree& tree);

}  // namespace bicross

#endif  // BICROSS_SPANNING_HPP_
