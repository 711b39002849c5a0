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

#ifndef BICROSS_ORACLE_HPP_
#define BICROSS_ORACLE_HPP_

#include <cstdint>
#include <span>

#include "bicross/crossing.hpp"
#include "bicross/radical_sum.hpp"
#include "bicross/spanning.hpp"

namespace bicross {

inline constexpr int kOracleMaxN = 22;
inline constexpr int kNongenericOracleMaxN = 12;

struct OracleResult {
  long value = 0;
  // Lexicographically smallest maximizing coloring ('B' < 'R'); point 0 is
  // always Blue because complements give the same count.
  Coloring witness;
};

// max over all colorings with two non-empty classes of cross_rb. The
// coloring space is cut into contiguous ranges, one per worker, and merged
// by (value desc, witness asc), so the result is independent of `workers`
// (0 picks the hardware concurrency).
OracleResult exact_cross_number(const PointSet& points, int workers = 0, int max_n = kOracleMaxN);

// Same maximum with cross_rb_min inside; works on sets with repeated
// distances. Raises kCapExceeded through enumerate_msts.
OracleResult exact_cross_number_nongeneric(const PointSet& points,
                                           std::size_t cap = kDefaultMstCap, int workers = 0);

struct ZeroCrossWitness {
  PointSet points;
  int apex = 4;
  long trials = 0;
};

// Samples a convex quadrilateral with an apex point above its top side until
// the 5-set has crossing number 0 and the quadrilateral alone has 1.
// Raises kSearchExhausted after `budget` trials.
ZeroCrossWitness search_zero_cross_5set(std::uint64_t seed, long budget);

// Minimum Euclidean length over all spanning trees of `subset` (|subset| <= 8)
// by Pruefer-sequence enumeration; independent of Kruskal.
RadicalSum brute_force_mst_weight(const PointSet& points, std::span<const int> subset);

}  // namespace bicross

#endif  // BICROSS_ORACLE_HPP_
