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

#include "bicross/density.hpp"

#include <algorithm>
#include <numeric>

#include "bicross/errors.hpp"

namespace bicross {

namespace {

struct Box {
  Coord min_x, max_x, min_y, max_y;
};

Box box_of(const PointSet& points, std::span<const int> subset) {
  if (subset.empty()) throw Error(ErrorCode::kInvalidArgument, "empty point subset");
  const Point& p0 = points[subset[0]];
  Box b{p0.x, p0.x, p0.y, p0.y};
  for (int i : subset) {
    const Point& p = points[i];
    if (p.x < b.min_x) b.min_x = p.x;
    if (p.x > b.max_x) b.max_x = p.x;
    if (p.y < b.min_y) b.min_y = p.y;
    if (p.y > b.max_y) b.max_y = p.y;
  }
  return b;
}

}  // namespace

std::vector<int> all_indices(const PointSet& points) {
  std::vector<int> idx(static_cast<std::size_t>(points.size()));
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

mpz_class bounding_square_side(const PointSet& points, std::span<const int> subset) {
  Box b = box_of(points, subset);
  Coord extent = std::max(Coord(b.max_x - b.min_x), Coord(b.max_y - b.min_y));
  mpz_class side = ceil_of(extent);
  return side < 1 ? mpz_class(1) : side;
}

Coord density(const PointSet& points, std::span<const int> subset) {
  mpz_class side = bounding_square_side(points, subset);
  Coord d(mpz_class(static_cast<long>(subset.size())), side * side);
  d.canonicalize();
  return d;
}

Coord density(const PointSet& points) { return density(points, all_indices(points)); }

SpreadReport spread(const PointSet& points, std::span<const int> subset) {
  if (subset.size() < 2) throw Error(ErrorCode::kInvalidArgument, "spread needs two points");
  Segment lo{subset[0], subset[1]};
  Segment hi = lo;
  points.visit_lattice([&](const auto& L) {
    auto lo_d = L.sq_dist(lo.a, lo.b);
    auto hi_d = lo_d;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = i + 1; j < subset.size(); ++j) {
        auto d = L.sq_dist(subset[i], subset[j]);
        if (d < lo_d) {
          lo_d = d;
          lo = {subset[i], subset[j]};
        }
        if (d > hi_d) {
          hi_d = d;
          hi = {subset[i], subset[j]};
        }
      }
    }
  });
  return {squared_length(points, lo), squared_length(points, hi)};
}

SpreadReport spread(const PointSet& points) { return spread(points, all_indices(points)); }

bool is_alpha_dense(const PointSet& points, const Coord& alpha) {
  if (points.size() < 2) return true;
  SpreadReport s = spread(points);
  return s.squared_diameter < alpha * alpha * points.size() * s.min_squared_distance;
}

GridPlacement canonical_placement(const PointSet& points, std::span<const int> subset, int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "grid size must be >= 2");
  Box b = box_of(points, subset);
  Coord extent = std::max(Coord(b.max_x - b.min_x), Coord(b.max_y - b.min_y));
  if (extent == 0) extent = 1;
  Coord side = extent * k / (k - 1);
  Coord cx = (b.min_x + b.max_x) / 2;
  Coord cy = (b.min_y + b.max_y) / 2;
  return {cx - side / 2, cy - side / 2, side};
}

std::optional<std::pair<int, int>> cell_of(const Point& p, const GridPlacement& grid, int k) {
  Coord u = (p.x - grid.x0) * k / grid.side;
  Coord v = (p.y - grid.y0) * k / grid.side;
  if (u.get_den() == 1 || v.get_den() == 1) return std::nullopt;  // on a grid line
  mpz_class i = floor_of(u);
  mpz_class j = floor_of(v);
  if (i < 0 || j < 0 || i >= k || j >= k) return std::nullopt;
  return std::make_pair(static_cast<int>(i.get_si()), static_cast<int>(j.get_si()));
}

bool fills_grid(const PointSet& points, std::span<const int> subset, int k,
                const GridPlacement& grid) {
  if (static_cast<long>(subset.size()) < static_cast<long>(k) * k) return false;
  std::vector<char> hit(static_cast<std::size_t>(k) * k, 0);
  std::size_t filled = 0;
  for (int i : subset) {
    auto c = cell_of(points[i], grid, k);
    if (!c) continue;
    char& h = hit[static_cast<std::size_t>(c->second) * k + c->first];
    if (!h) {
      h = 1;
      ++filled;
    }
  }
  return filled == hit.size();
}

bool fills_grid(const PointSet& points, std::span<const int> subset, int k) {
  if (subset.empty()) return false;
  return fills_grid(points, subset, k, canonical_placement(points, subset, k));
}

bool fills_grid(const PointSet& points, int k) { return fills_grid(points, all_indices(points), k); }

}  // namespace bicross
