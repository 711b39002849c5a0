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

#ifndef BICROSS_CROSSING_HPP_
#define BICROSS_CROSSING_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicross/geometry.hpp"
#include "bicross/spanning.hpp"

namespace bicross {

enum class Color : char { kRed = 'R', kBlue = 'B', kDiscarded = 'D' };

class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n, Color fill = Color::kBlue) : labels_(n, fill) {}
  explicit Coloring(std::vector<Color> labels) : labels_(std::move(labels)) {}

  // One character per point from {R, B, D}. Throws kParse.
  static Coloring parse(std::string_view text);
  std::string str() const;

  std::size_t size() const { return labels_.size(); }
  Color operator[](std::size_t i) const { return labels_[i]; }
  Color& operator[](std::size_t i) { return labels_[i]; }
  const std::vector<Color>& labels() const { return labels_; }

  std::vector<int> indices_of(Color c) const;
  std::size_t count(Color c) const;

  // Red and Blue swapped; Discarded unchanged.
  Coloring complement() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> labels_;
};

struct CrossingReport {
  std::size_t count = 0;
  std::vector<std::pair<Segment, Segment>> pairs;  // (edge of first tree, edge of second)
  Tree red_tree;
  Tree blue_tree;
};

// Exhaustive proper-crossing test over all edge pairs. Vertex sets must be
// disjoint.
CrossingReport cross_count(const Tree& first, const Tree& second, const PointSet& points);

// cross(R, B): crossings between the MSTs of the Red and Blue classes.
// Discarded points are ignored. Raises kEmptyColorClass, kNonGenericInput
// (an MST is not unique) or kDegenerateIntersection.
CrossingReport cross_rb(const PointSet& points, const Coloring& coloring);

// Minimum of cross_count over every pair of MSTs of the two classes.
std::size_t cross_rb_min(const PointSet& points, const Coloring& coloring,
                         std::size_t cap = kDefaultMstCap);

struct CrossingProfile {
  std::size_t max_red = 0;   // over red edges e: crossing blue edges at least as long as e
  std::size_t max_blue = 0;  // over blue edges e: crossing red edges at least as long as e
};

CrossingProfile longer_edge_crossing_profile(const CrossingReport& report, const PointSet& points);

}  // namespace bicross

#endif  // BICROSS_CROSSING_HPP_
