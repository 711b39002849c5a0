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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "bicross/errors.hpp"
#include "bicross/spanning.hpp"
#include "bicross/strategies.hpp"

namespace bicross {

namespace {

constexpr unsigned kDirectionBits = 40;

struct Direction {
  Coord x, y;
};

std::vector<Direction> wedge_directions(int count) {
  std::vector<Direction> dirs;
  dirs.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    double t = 2.0 * std::numbers::pi * j / count;
    dirs.push_back({dyadic_from_double(std::cos(t), kDirectionBits),
                    dyadic_from_double(std::sin(t), kDirectionBits)});
  }
  return dirs;
}

Coord cross(const Direction& d, const Coord& vx, const Coord& vy) { return d.x * vy - d.y * vx; }

// Wedge j holds v iff cross(d_j, v) >= 0 and cross(d_{j+1}, v) < 0.
int wedge_of(const std::vector<Direction>& dirs, const Coord& vx, const Coord& vy) {
  const int w = static_cast<int>(dirs.size());
  auto in = [&](int j) {
    const Direction& lo = dirs[j];
    const Direction& hi = dirs[(j + 1) % w];
    return sgn(cross(lo, vx, vy)) >= 0 && sgn(cross(hi, vx, vy)) < 0;
  };
  double t = std::atan2(to_double(vy), to_double(vx));
  if (t < 0) t += 2.0 * std::numbers::pi;
  int guess = static_cast<int>(std::floor(t / (2.0 * std::numbers::pi) * w)) % w;
  for (int d : {0, -1, 1}) {
    int j = ((guess + d) % w + w) % w;
    if (in(j)) return j;
  }
  for (int j = 0; j < w; ++j) {
    if (in(j)) return j;
  }
  throw Error(ErrorCode::kInternalInvariantViolation, "vector lies in no wedge");
}

// Exact certificate that consecutive directions are less than ~5.7 degrees
// apart: positive dot product and sin^2 < 1/100.
bool wedge_is_narrow(const Direction& u, const Direction& v) {
  Coord dot = u.x * v.x + u.y * v.y;
  Coord crs = u.x * v.y - u.y * v.x;
  Coord nu = u.x * u.x + u.y * u.y;
  Coord nv = v.x * v.x + v.y * v.y;
  return dot > 0 && 100 * crs * crs < nu * nv;
}

}  // namespace

StrategyOutcome island_wedge_coloring(const PointSet& points, int wedge_count,
                                      const Coord& radius_factor) {
  if (wedge_count < 3) throw Error(ErrorCode::kInvalidArgument, "wedge_count must be >= 3");
  if (radius_factor < 1) throw Error(ErrorCode::kInvalidArgument, "radius_factor must be >= 1");
  const int n = points.size();
  StrategyOutcome out;
  out.coloring = Coloring(static_cast<std::size_t>(n), Color::kDiscarded);
  const std::vector<Direction> dirs = wedge_directions(wedge_count);
  bool premises_hold = radius_factor >= 3;
  for (int j = 0; j < wedge_count && premises_hold; ++j) {
    premises_hold = wedge_is_narrow(dirs[j], dirs[(j + 1) % wedge_count]);
  }
  if (!premises_hold) {
    out.trace.push_back("warning: wedges too wide or radius factor below 3; no guarantee");
  }
  const Coord factor_sq = radius_factor * radius_factor;

  std::vector<int> active = all_indices(points);
  points.visit_lattice([&](const auto& L) {
    using Wide = typename std::decay_t<decltype(L)>::Wide;
    while (active.size() >= 6) {
      const std::size_t m = active.size();
      std::size_t q = static_cast<std::size_t>(std::sqrt(static_cast<double>(m)));
      while ((q + 1) * (q + 1) <= m) ++q;
      while (q * q > m) --q;

      // Island: the point whose (q-1)-th nearest neighbor is closest.
      int center = -1, witness = -1;
      Wide radius_sq{};
      std::vector<std::pair<Wide, int>> dist(m);
      for (int x : active) {
        for (std::size_t t = 0; t < m; ++t) dist[t] = {L.sq_dist(x, active[t]), active[t]};
        // x itself sits at distance 0, so element q-1 is its (q-1)-th neighbor.
        std::nth_element(dist.begin(), dist.begin() + (q - 1), dist.end(),
                         [](const auto& u, const auto& v) { return u.first < v.first; });
        if (center < 0 || dist[q - 1].first < radius_sq) {
          center = x;
          witness = dist[q - 1].second;
          radius_sq = dist[q - 1].first;
        }
      }
      std::vector<int> island;
      for (int y : active) {
        if (L.sq_dist(center, y) <= radius_sq) island.push_back(y);
      }
      std::vector<int> convex = largest_convex_subset(points, island);
      if (convex.size() < 4) {
        out.trace.push_back("stop: island convex subset has " +
                            std::to_string(convex.size()) + " points");
        break;
      }
      for (std::size_t i = 0; i < convex.size(); ++i) {
        out.coloring[convex[i]] = i % 2 == 0 ? Color::kRed : Color::kBlue;
      }
      long g = static_cast<long>(convex.size()) / 2 - 1;
      out.stages.push_back({convex, g});

      // Survivors lie strictly beyond radius_factor * r from the center.
      std::vector<int> outside;
      const Coord& cx = points[center].x;
      const Coord& cy = points[center].y;
      const Coord r_sq = squared_distance(points[center], points[witness]);
      const Coord limit = factor_sq * r_sq;
      for (int y : active) {
        if (squared_distance(points[center], points[y]) > limit) outside.push_back(y);
      }
      std::vector<std::vector<int>> wedges(static_cast<std::size_t>(wedge_count));
      for (int y : outside) {
        Coord vx = points[y].x - cx;
        Coord vy = points[y].y - cy;
        wedges[wedge_of(dirs, vx, vy)].push_back(y);
      }
      std::size_t rich = 0;
      for (std::size_t j = 1; j < wedges.size(); ++j) {
        if (wedges[j].size() > wedges[rich].size()) rich = j;
      }
      out.trace.push_back("stage " + std::to_string(out.stages.size()) + ": m=" +
                          std::to_string(m) + " q=" + std::to_string(q) + " convex=" +
                          std::to_string(convex.size()) + " outside=" +
                          std::to_string(outside.size()) + " wedge " + std::to_string(rich) +
                          " keeps " + std::to_string(wedges[rich].size()));
      active = std::move(wedges[rich]);
    }
  });
  long total = 0;
  for (const Stage& s : out.stages) total += s.guarantee;
  out.guarantee = premises_hold ? total : 0;
  return out;
}

bool stage_trees_embed(const PointSet& points, const StrategyOutcome& outcome) {
  Tree red = mst(points, outcome.coloring.indices_of(Color::kRed));
  Tree blue = mst(points, outcome.coloring.indices_of(Color::kBlue));
  std::set<Segment> red_edges(red.edges.begin(), red.edges.end());
  std::set<Segment> blue_edges(blue.edges.begin(), blue.edges.end());
  for (const Stage& s : outcome.stages) {
    std::vector<int> r, b;
    for (int i : s.points) {
      if (outcome.coloring[i] == Color::kRed) r.push_back(i);
      if (outcome.coloring[i] == Color::kBlue) b.push_back(i);
    }
    if (!r.empty()) {
      for (const Segment& e : mst(points, r).edges) {
        if (!red_edges.count(e)) return false;
      }
    }
    if (!b.empty()) {
      for (const Segment& e : mst(points, b).edges) {
        if (!blue_edges.count(e)) return false;
      }
    }
  }
  return true;
}

}  // namespace bicross
