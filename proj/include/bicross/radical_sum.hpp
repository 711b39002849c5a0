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

#ifndef BICROSS_RADICAL_SUM_HPP_
#define BICROSS_RADICAL_SUM_HPP_

#include <span>
#include <string>
#include <vector>

#include "bicross/geometry.hpp"
#include "bicross/spanning.hpp"

namespace bicross {

// A sum of square roots of non-negative rationals, e.g. a Euclidean tree
// length written as the sum of sqrt(squared edge length).
class RadicalSum {
 public:
  RadicalSum() = default;
  explicit RadicalSum(std::vector<Coord> radicands);

  void add(const Coord& radicand);

  // Sorted radicands; two sums with equal multisets are equal exactly.
  const std::vector<Coord>& radicands() const { return radicands_; }

  double approx() const;
  std::string str() const;

 private:
  std::vector<Coord> radicands_;
};

inline constexpr long kMinRadicalPrecision = 53;
inline constexpr long kMaxRadicalPrecision = 4096;

// Sign of a - b. Common radicands cancel exactly first; the remainder is
// separated by outward-rounded MPFR intervals at 53, 106, ... 4096 bits.
// Throws kIndistinguishableAtPrecision when the intervals still overlap.
int compare(const RadicalSum& a, const RadicalSum& b);

RadicalSum tree_length(const PointSet& points, const Tree& tree);

}  // namespace bicross

#endif  // BICROSS_RADICAL_SUM_HPP_
