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
#include <map>
#include <set>

#include "bicross/errors.hpp"
#include "bicross/spanning.hpp"
#include "bicross/strategies.hpp"

namespace bicross {

namespace {

using Cell = std::pair<int, int>;

struct RedPair {
  int r1 = -1;
  int r2 = -1;
  int side = 0;  // quarter turns from the right-hand exit
  bool path_crosses = false;
};

// Quarter turn counterclockwise about the center cell (c, c).
Cell rotate(Cell cell, int c, int turns) {
  for (int t = 0; t < turns; ++t) cell = {2 * c - cell.second, cell.first};
  return cell;
}

Cell unrotate(Cell cell, int c, int turns) {
  for (int t = 0; t < turns; ++t) cell = {cell.second, 2 * c - cell.first};
  return cell;
}

bool in_window(Cell cell, int c, int h) {
  return std::abs(cell.first - c) <= h && std::abs(cell.second - c) <= h;
}

// Picks r1, r2 for a set filling a k x k grid. Windows scale the 101-grid
// offsets: Q spans cells c +- hq, Q' spans c +- (hq - 2), q sits in (c, c),
// and r1, r2 sit in the last Q' column at the bottom and top rows of Q.
// Returns nullopt when a designated cell is empty.
std::optional<RedPair> plan_red_pair(const PointSet& points, std::span<const int> inner, int k,
                                     const GridPlacement& grid, std::vector<std::string>& trace) {
  const int c = (k - 1) / 2;
  const int hq = std::max(3, static_cast<int>(std::lround(10.0 * k / 101.0)));
  const int hqp = hq - 2;
  std::map<Cell, std::vector<int>> by_cell;
  for (int i : inner) {
    if (auto cell = cell_of(points[i], grid, k)) by_cell[*cell].push_back(i);
  }
  auto first_in = [&](Cell cell) {
    auto it = by_cell.find(cell);
    return it == by_cell.end() ? -1 : *std::min_element(it->second.begin(), it->second.end());
  };
  const int q = first_in({c, c});
  if (q < 0) return std::nullopt;

  std::optional<RedPair> fallback;
  for (int side = 0; side < 4; ++side) {
    RedPair pair;
    pair.side = side;
    pair.r1 = first_in(rotate({c + hqp, c - hq}, c, side));
    pair.r2 = first_in(rotate({c + hqp, c + hq}, c, side));
    if (pair.r1 < 0 || pair.r2 < 0) continue;
    if (!fallback) fallback = pair;

    std::vector<int> window;
    std::map<int, Cell> cell_index;
    for (const auto& [cell, members] : by_cell) {
      if (!in_window(cell, c, hq)) continue;
      for (int i : members) {
        if (i == pair.r1 || i == pair.r2) continue;
        window.push_back(i);
        cell_index[i] = cell;
      }
    }
    Tree tree = mst(points, window);
    std::map<int, std::vector<int>> adj;
    for (const Segment& e : tree.edges) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    // Walk from q, stopping at the first vertex outside Q' on every branch.
    const Segment red = Segment::normalized(pair.r1, pair.r2);
    std::vector<std::pair<int, int>> stack{{q, -1}};
    std::map<int, int> parent;
    parent[q] = -1;
    while (!stack.empty() && !pair.path_crosses) {
      auto [u, from] = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (w == from) continue;
        parent[w] = u;
        Cell local = unrotate(cell_index[w], c, side);
        if (in_window(cell_index[w], c, hqp)) {
          stack.push_back({w, u});
          continue;
        }
        if (local.first != c + hqp + 1 || local.second <= c - hq || local.second >= c + hq) {
          continue;
        }
        for (int x = w; parent[x] >= 0; x = parent[x]) {
          if (segments_properly_cross(red, Segment::normalized(x, parent[x]), points)) {
            pair.path_crosses = true;
            break;
          }
        }
        if (pair.path_crosses) break;
      }
    }
    if (pair.path_crosses) {
      trace.push_back("exit side " + std::to_string(side) + ": path from center crosses r1r2");
      return pair;
    }
  }
  if (fallback) {
    trace.push_back("warning: no exit side with a crossing path; using side " +
                    std::to_string(fallback->side));
  }
  return fallback;
}

void check_grid_k(int k) {
  if (k < 11 || k % 2 == 0) {
    throw Error(ErrorCode::kInvalidArgument, "grid size k must be odd and >= 11");
  }
}

}  // namespace

StrategyOutcome grid_five_eighths_coloring(const PointSet& points) {
  const int n = points.size();
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::kNotLabeledGrid, "grid needs an even n >= 2");
  const int m = n / 2;
  std::vector<int> v(m + 1), w(m + 1);
  for (int i = 1; i <= m; ++i) {
    v[i] = points.find_label("v" + std::to_string(i));
    w[i] = points.find_label("w" + std::to_string(i));
    if (v[i] < 0 || w[i] < 0) {
      throw Error(ErrorCode::kNotLabeledGrid, "missing label v" + std::to_string(i) + " or w" +
                                                  std::to_string(i));
    }
  }
  const int k = (n - 2) / 8;
  const int d = ((n - 2) % 8) / 2;
  StrategyOutcome out;
  out.coloring = Coloring(static_cast<std::size_t>(n));
  Coloring& col = out.coloring;
  auto column = [&](int i, Color bottom, Color top) {
    col[v[i]] = bottom;
    col[w[i]] = top;
  };
  for (int i = 0; i <= k; ++i) column(4 * i + 1, Color::kBlue, Color::kRed);
  for (int i = 4 * k + 2; i <= m; ++i) {
    bool odd = (i - (4 * k + 1)) % 2 == 1;
    column(i, odd ? Color::kRed : Color::kBlue, odd ? Color::kBlue : Color::kRed);
  }
  for (int i = 0; i < k; ++i) {
    int l = 4 * i + 2, mid = 4 * i + 3, r = 4 * i + 4;
    bool top_shorter = compare_squared_lengths(points, Segment::normalized(w[l], w[r]),
                                               Segment::normalized(v[l], v[r])) < 0;
    Color middle = top_shorter ? Color::kRed : Color::kBlue;
    Color outer = top_shorter ? Color::kBlue : Color::kRed;
    column(l, outer, outer);
    column(mid, middle, middle);
    column(r, outer, outer);
  }
  out.guarantee = 5L * k + d;
  out.trace.push_back("n = 8*" + std::to_string(k) + " + 2 + 2*" + std::to_string(d));
  return out;
}

StrategyOutcome grid_fill_coloring(const PointSet& points, std::span<const int> inner, int k,
                                   const std::optional<GridPlacement>& placement) {
  check_grid_k(k);
  if (inner.empty()) throw Error(ErrorCode::kDoesNotFill, "empty inner set");
  GridPlacement grid = placement ? *placement : canonical_placement(points, inner, k);
  if (!fills_grid(points, inner, k, grid)) {
    throw Error(ErrorCode::kDoesNotFill,
                "inner set does not fill a " + std::to_string(k) + "x" + std::to_string(k) +
                    " grid");
  }
  StrategyOutcome out;
  out.coloring = Coloring(static_cast<std::size_t>(points.size()));
  std::optional<RedPair> pair = plan_red_pair(points, inner, k, grid, out.trace);
  if (!pair) throw Error(ErrorCode::kInternalInvariantViolation, "filled grid lacks a cell point");
  out.coloring[pair->r1] = Color::kRed;
  out.coloring[pair->r2] = Color::kRed;
  out.stages.push_back({{std::min(pair->r1, pair->r2), std::max(pair->r1, pair->r2)}, 1});
  if (k >= 101) {
    out.guarantee = 1;
    return out;
  }
  CrossingReport rep = cross_rb(points, out.coloring);
  if (rep.count >= 1) {
    out.guarantee = 1;
    out.trace.push_back("verified: " + std::to_string(rep.count) + " crossing(s)");
  } else {
    out.guarantee = 0;
    out.stages.back().guarantee = 0;
    out.trace.push_back("warning: no crossing found for k = " + std::to_string(k));
  }
  return out;
}

StrategyOutcome dense_coloring(const PointSet& points, const Coord& alpha, long r, int k) {
  check_grid_k(k);
  if (r < 0) r = 2L * k * k;
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "r must be positive");
  StrategyOutcome out;
  const int n = points.size();
  out.coloring = Coloring(static_cast<std::size_t>(n));
  if (n < 2) throw Error(ErrorCode::kNoRichCells, "fewer than two points");
  if (!is_alpha_dense(points, alpha)) {
    out.trace.push_back("warning: input is not alpha-dense for alpha = " + format_coord(alpha));
  }

  const Coord side = Coord(ceil_sqrt(Coord(r))) * alpha * alpha;
  Coord x0 = points[0].x, y0 = points[0].y;
  for (const Point& p : points.points()) {
    if (p.x < x0) x0 = p.x;
    if (p.y < y0) y0 = p.y;
  }
  std::map<Cell, std::vector<int>> cells;
  for (int i = 0; i < n; ++i) {
    mpz_class cx = floor_of((points[i].x - x0) / side);
    mpz_class cy = floor_of((points[i].y - y0) / side);
    cells[{static_cast<int>(cx.get_si()), static_cast<int>(cy.get_si())}].push_back(i);
  }
  std::vector<Cell> rich;
  for (const auto& [cell, members] : cells) {
    if (static_cast<long>(members.size()) >= r) rich.push_back(cell);
  }
  if (rich.empty()) {
    throw Error(ErrorCode::kNoRichCells, "no cell of side " + format_coord(side) + " holds " +
                                             std::to_string(r) + " points");
  }
  std::stable_sort(rich.begin(), rich.end(), [&](const Cell& a, const Cell& b) {
    return cells[a].size() > cells[b].size();
  });
  std::vector<Cell> chosen;
  for (const Cell& cell : rich) {
    bool clear = std::none_of(chosen.begin(), chosen.end(), [&](const Cell& o) {
      return std::abs(o.first - cell.first) <= 2 && std::abs(o.second - cell.second) <= 2;
    });
    if (clear) chosen.push_back(cell);
  }
  out.trace.push_back(std::to_string(rich.size()) + " rich cell(s), " +
                      std::to_string(chosen.size()) + " selected");

  std::vector<RedPair> pairs;
  for (const Cell& cell : chosen) {
    std::vector<int> s = cells[cell];
    std::optional<RedPair> pair;
    int rounds = 0;
    while (static_cast<long>(s.size()) >= static_cast<long>(k) * k) {
      GridPlacement grid = canonical_placement(points, s, k);
      if (fills_grid(points, s, k, grid)) {
        pair = plan_red_pair(points, s, k, grid, out.trace);
        break;
      }
      // Shrink to the fullest corner window of side L (k-1) / k.
      Coord lx = points[s[0]].x, ly = points[s[0]].y, hx = lx, hy = ly;
      for (int i : s) {
        if (points[i].x < lx) lx = points[i].x;
        if (points[i].x > hx) hx = points[i].x;
        if (points[i].y < ly) ly = points[i].y;
        if (points[i].y > hy) hy = points[i].y;
      }
      Coord extent = std::max(Coord(hx - lx), Coord(hy - ly));
      Coord w = extent * (k - 1) / k;
      std::vector<int> best;
      for (int corner = 0; corner < 4; ++corner) {
        Coord ax = corner & 1 ? Coord(lx + extent - w) : lx;
        Coord ay = corner & 2 ? Coord(ly + extent - w) : ly;
        std::vector<int> inside;
        for (int i : s) {
          const Point& p = points[i];
          if (p.x >= ax && p.x <= ax + w && p.y >= ay && p.y <= ay + w) inside.push_back(i);
        }
        if (inside.size() > best.size()) best = std::move(inside);
      }
      s = std::move(best);
      ++rounds;
    }
    if (!pair) {
      out.trace.push_back("cell (" + std::to_string(cell.first) + "," +
                          std::to_string(cell.second) + "): no filling subset after " +
                          std::to_string(rounds) + " rounds");
      continue;
    }
    out.trace.push_back("cell (" + std::to_string(cell.first) + "," + std::to_string(cell.second) +
                        "): fills after " + std::to_string(rounds) + " rounds, " +
                        std::to_string(s.size()) + " points");
    out.coloring[pair->r1] = Color::kRed;
    out.coloring[pair->r2] = Color::kRed;
    pairs.push_back(*pair);
  }
  if (pairs.empty()) {
    out.trace.push_back("warning: no cell produced a filling subset");
    return out;
  }
  CrossingReport rep = cross_rb(points, out.coloring);
  std::set<Segment> red_edges(rep.red_tree.edges.begin(), rep.red_tree.edges.end());
  std::set<Segment> crossed;
  for (const auto& [red, blue] : rep.pairs) crossed.insert(red);
  for (const RedPair& p : pairs) {
    Segment e = Segment::normalized(p.r1, p.r2);
    long g = red_edges.count(e) && crossed.count(e) ? 1 : 0;
    out.stages.push_back({{e.a, e.b}, g});
    out.guarantee += g;
  }
  return out;
}

}  // namespace bicross
