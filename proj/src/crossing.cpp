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

#include "bicross/crossing.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "bicross/errors.hpp"

namespace bicross {

Coloring Coloring::parse(std::string_view text) {
  std::vector<Color> labels;
  labels.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'R': labels.push_back(Color::kRed); break;
      case 'B': labels.push_back(Color::kBlue); break;
      case 'D': labels.push_back(Color::kDiscarded); break;
      case '\n':
      case '\r':
      case ' ':
        break;
      default:
        throw Error(ErrorCode::kParse, std::string("invalid coloring character '") + c + "'");
    }
  }
  return Coloring(std::move(labels));
}

std::string Coloring::str() const {
  std::string s;
  s.reserve(labels_.size());
  for (Color c : labels_) s.push_back(static_cast<char>(c));
  return s;
}

std::vector<int> Coloring::indices_of(Color c) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == c) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::size_t Coloring::count(Color c) const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), c));
}

Coloring Coloring::complement() const {
  Coloring out = *this;
  for (Color& c : out.labels_) {
    if (c == Color::kRed) {
      c = Color::kBlue;
    } else if (c == Color::kBlue) {
      c = Color::kRed;
    }
  }
  return out;
}

namespace {

template <class Int>
struct Box {
  Int x0, x1, y0, y1;
};

template <class Int>
Box<Int> box_of(const detail::Lattice<Int>& L, Segment s) {
  return {std::min(L.x[s.a], L.x[s.b]), std::max(L.x[s.a], L.x[s.b]),
          std::min(L.y[s.a], L.y[s.b]), std::max(L.y[s.a], L.y[s.b])};
}

void check_inputs(const PointSet& points, const Coloring& coloring) {
  if (coloring.size() != static_cast<std::size_t>(points.size())) {
    throw Error(ErrorCode::kInvalidArgument, "coloring length " + std::to_string(coloring.size()) +
                                                 " != point count " +
                                                 std::to_string(points.size()));
  }
  if (coloring.count(Color::kRed) == 0 || coloring.count(Color::kBlue) == 0) {
    throw Error(ErrorCode::kEmptyColorClass, "both color classes must be non-empty");
  }
}

}  // namespace

CrossingReport cross_count(const Tree& first, const Tree& second, const PointSet& points) {
  CrossingReport report;
  report.red_tree = first;
  report.blue_tree = second;
  points.visit_lattice([&](const auto& L) {
    using Int = std::decay_t<decltype(L.x[0])>;
    std::vector<Box<Int>> boxes;
    boxes.reserve(second.edges.size());
    for (const Segment& t : second.edges) boxes.push_back(box_of(L, t));
    for (const Segment& s : first.edges) {
      Box<Int> bs = box_of(L, s);
      for (std::size_t k = 0; k < second.edges.size(); ++k) {
        const Box<Int>& bt = boxes[k];
        if (bs.x1 < bt.x0 || bt.x1 < bs.x0 || bs.y1 < bt.y0 || bt.y1 < bs.y0) continue;
        if (segments_properly_cross(s, second.edges[k], points)) {
          report.pairs.emplace_back(s, second.edges[k]);
        }
      }
    }
  });
  report.count = report.pairs.size();
  return report;
}

CrossingReport cross_rb(const PointSet& points, const Coloring& coloring) {
  check_inputs(points, coloring);
  Tree red = mst(points, coloring.indices_of(Color::kRed));
  Tree blue = mst(points, coloring.indices_of(Color::kBlue));
  if (red.tie || blue.tie) {
    throw Error(ErrorCode::kNonGenericInput,
                std::string(red.tie ? "red" : "blue") + " MST is not unique");
  }
  return cross_count(red, blue, points);
}

std::size_t cross_rb_min(const PointSet& points, const Coloring& coloring, std::size_t cap) {
  check_inputs(points, coloring);
  auto reds = enumerate_msts(points, coloring.indices_of(Color::kRed), cap);
  auto blues = enumerate_msts(points, coloring.indices_of(Color::kBlue), cap);
  // The count decomposes over red-edge/blue-edge pairs, so cache per-pair
  // results across the product.
  std::map<std::pair<Segment, Segment>, bool> memo;
  auto crosses = [&](Segment s, Segment t) {
    auto key = std::make_pair(s, t);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool c = segments_properly_cross(s, t, points);
    memo.emplace(key, c);
    return c;
  };
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Tree& r : reds) {
    for (const Tree& b : blues) {
      std::size_t count = 0;
      for (const Segment& s : r.edges) {
        for (const Segment& t : b.edges) count += crosses(s, t);
        if (count >= best) break;
      }
      best = std::min(best, count);
      if (best == 0) return 0;
    }
  }
  return best;
}

CrossingProfile longer_edge_crossing_profile(const CrossingReport& report, const PointSet& points) {
  std::map<Segment, std::size_t> red_hits, blue_hits;
  for (const auto& [r, b] : report.pairs) {
    int cmp = compare_squared_lengths(points, b, r);
    if (cmp >= 0) ++red_hits[r];   // blue edge at least as long as red edge r
    if (cmp <= 0) ++blue_hits[b];  // red edge at least as long as blue edge b
  }
  CrossingProfile profile;
  for (const auto& [e, c] : red_hits) profile.max_red = std::max(profile.max_red, c);
  for (const auto& [e, c] : blue_hits) profile.max_blue = std::max(profile.max_blue, c);
  return profile;
}

}  // namespace bicross
