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

#include "bicross/strategies.hpp"

#include <algorithm>
#include <numeric>

#include "bicross/errors.hpp"

namespace bicross {

namespace {

std::string str_n(long v) { return std::to_string(v); }

std::vector<int> sorted_by_x(const PointSet& points) {
  std::vector<int> order = all_indices(points);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (points[i].x != points[j].x) return points[i].x < points[j].x;
    return points[i].y < points[j].y;
  });
  return order;
}

template <class Int>
std::vector<int> largest_convex_impl(const detail::Lattice<Int>& L, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  std::vector<int> best;
  if (!idx.empty()) best = {idx[0]};
  for (int p : idx) {
    std::vector<int> cand;
    for (int q : idx) {
      if (L.y[q] > L.y[p] || (L.y[q] == L.y[p] && L.x[q] > L.x[p])) cand.push_back(q);
    }
    if (cand.size() + 1 <= best.size()) continue;
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
      int o = L.orient(p, a, b);
      if (o != 0) return o > 0;
      return L.sq_dist(p, a) < L.sq_dist(p, b);
    });
    if (best.size() < 2) best = {p, cand[0]};
    const int m = static_cast<int>(cand.size());
    // len[i][j]: vertices on the convex chain p, ..., cand[i], cand[j].
    std::vector<int> len(static_cast<std::size_t>(m) * m, 0);
    std::vector<int> parent(static_cast<std::size_t>(m) * m, -1);
    auto at = [m](int i, int j) { return static_cast<std::size_t>(i) * m + j; };
    int best_len = static_cast<int>(best.size());
    int best_i = -1, best_j = -1;
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < j; ++i) {
        if (L.orient(p, cand[i], cand[j]) <= 0) continue;
        int l = 3, par = -1;
        for (int h = 0; h < i; ++h) {
          int prev = len[at(h, i)];
          if (prev + 1 > l && L.orient(cand[h], cand[i], cand[j]) > 0) {
            l = prev + 1;
            par = h;
          }
        }
        len[at(i, j)] = l;
        parent[at(i, j)] = par;
        if (l > best_len && L.orient(cand[i], cand[j], p) > 0) {
          best_len = l;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i >= 0) {
      std::vector<int> chain;
      int i = best_i, j = best_j;
      chain.push_back(cand[j]);
      while (i >= 0) {
        chain.push_back(cand[i]);
        int h = parent[at(i, j)];
        j = i;
        i = h;
      }
      chain.push_back(p);
      std::reverse(chain.begin(), chain.end());
      best = std::move(chain);
    }
  }
  return best;
}

}  // namespace

std::vector<int> largest_convex_subset(const PointSet& points, std::span<const int> subset) {
  std::vector<int> idx(subset.begin(), subset.end());
  return points.visit_lattice([&](const auto& L) { return largest_convex_impl(L, idx); });
}

std::vector<int> largest_convex_subset(const PointSet& points) {
  return largest_convex_subset(points, all_indices(points));
}

StrategyOutcome alternate_convex(const PointSet& points) {
  const int n = points.size();
  if (n < 3 || !in_convex_position(points)) {
    throw Error(ErrorCode::kNotConvexPosition, "alternating coloring needs a convex point set");
  }
  std::vector<int> hull = convex_hull(points);
  StrategyOutcome out;
  out.coloring = Coloring(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.coloring[hull[i]] = i % 2 == 0 ? Color::kRed : Color::kBlue;
  }
  out.guarantee = n / 2 - 1;
  out.trace.push_back("alternating along hull of " + str_n(n) + " points");
  out.stages.push_back({hull, out.guarantee});
  return out;
}

bool is_flat(const PointSet& points) {
  if (points.size() < 2) return true;
  std::vector<int> order = sorted_by_x(points);
  Coord min_gap = points[order[1]].x - points[order[0]].x;
  Coord lo_y = points[0].y, hi_y = points[0].y;
  for (std::size_t i = 1; i < order.size(); ++i) {
    Coord gap = points[order[i]].x - points[order[i - 1]].x;
    if (gap < min_gap) min_gap = gap;
  }
  for (const Point& p : points.points()) {
    if (p.y < lo_y) lo_y = p.y;
    if (p.y > hi_y) hi_y = p.y;
  }
  return hi_y - lo_y < min_gap;
}

StrategyOutcome flat_convex_coloring(const PointSet& points) {
  const int n = points.size();
  if (n < 4) throw Error(ErrorCode::kTooFewPoints, "flat coloring needs n >= 4");
  if (!in_convex_position(points)) {
    throw Error(ErrorCode::kNotConvexPosition, "flat coloring needs a convex point set");
  }
  if (!is_flat(points)) throw Error(ErrorCode::kNotFlat, "y-extent is not below every x-gap");
  std::vector<int> v = sorted_by_x(points);
  auto upper = [&](int i) {
    return orientation(points, v.front(), v.back(), v[i]) == Orientation::kCounterClockwise;
  };
  StrategyOutcome out;
  out.coloring = Coloring(static_cast<std::size_t>(n));
  Coloring& c = out.coloring;
  auto other = [](Color x) { return x == Color::kRed ? Color::kBlue : Color::kRed; };
  c[v[0]] = Color::kRed;
  c[v[1]] = Color::kBlue;
  for (int i = 2; i < n - 1; ++i) {
    Color prev = c[v[i - 1]];
    c[v[i]] = upper(i) == upper(i - 1) ? other(prev) : prev;
  }
  c[v[n - 1]] = other(c[v[n - 2]]);
  out.guarantee = n - 3;
  out.trace.push_back("flat arc rule over " + str_n(n) + " points");
  return out;
}

StrategyOutcome one_crossing_coloring(const PointSet& points) {
  const int n = points.size();
  if (n <= 5) throw Error(ErrorCode::kTooFewPoints, "one-crossing coloring needs n > 5");
  StrategyOutcome out;
  out.coloring = Coloring(static_cast<std::size_t>(n));
  out.guarantee = 1;
  std::vector<int> hull = convex_hull(points);
  auto paint = [&](std::vector<int> red) {
    for (int i : red) out.coloring[i] = Color::kRed;
    std::sort(red.begin(), red.end());
    out.stages.push_back({red, 1});
  };
  if (hull.size() >= 4) {
    out.trace.push_back("hull has " + str_n(static_cast<long>(hull.size())) +
                        " vertices: two non-adjacent hull vertices red");
    paint({hull[0], hull[2]});
    return out;
  }

  // Triangle hull: a, b span the longest side, c is the apex.
  int a = hull[0], b = hull[1], c = hull[2];
  for (int rot = 0; rot < 3; ++rot) {
    int x = hull[rot], y = hull[(rot + 1) % 3], z = hull[(rot + 2) % 3];
    if (compare_squared_lengths(points, Segment::normalized(x, y), Segment::normalized(a, b)) > 0) {
      a = x;
      b = y;
      c = z;
    }
  }
  std::vector<int> inner;
  for (int i = 0; i < n; ++i) {
    if (i != a && i != b && i != c) inner.push_back(i);
  }

  return points.visit_lattice([&](const auto& L) -> StrategyOutcome {
    auto strictly_inside = [&](int p, int q, int r, int y) {
      int o1 = L.orient(p, q, y), o2 = L.orient(q, r, y), o3 = L.orient(r, p, y);
      return o1 != 0 && o1 == o2 && o2 == o3;
    };
    for (int x : inner) {
      for (int y : inner) {
        if (y != x && strictly_inside(a, x, b, y)) {
          out.trace.push_back("triangle hull, point " + str_n(x) +
                              " sees a point inside triangle(a, x, b)");
          paint({a, x, b});
          return out;
        }
      }
    }
    using Wide = typename std::decay_t<decltype(L)>::Wide;
    auto proj = [&](int p) -> Wide {
      Wide ux = Wide(L.x[b]) - Wide(L.x[a]);
      Wide uy = Wide(L.y[b]) - Wide(L.y[a]);
      return (Wide(L.x[p]) - Wide(L.x[a])) * ux + (Wide(L.y[p]) - Wide(L.y[a])) * uy;
    };
    std::vector<int> order = inner;
    std::sort(order.begin(), order.end(), [&](int p, int q) { return proj(p) < proj(q); });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (proj(order[i]) == proj(order[i - 1])) {
        throw Error(ErrorCode::kInternalInvariantViolation,
                    "two inner points share a projection outside the triangle case");
      }
    }
    std::size_t mid = (order.size() - 1) / 2;
    if (mid == 0 || mid + 1 >= order.size()) {
      throw Error(ErrorCode::kInternalInvariantViolation, "middle point lacks a neighbor side");
    }
    int v = order[mid];
    if (proj(v) <= proj(c)) {
      out.trace.push_back("triangle hull, middle point left of apex: red {a, v, c}");
      paint({a, v, c});
    } else {
      out.trace.push_back("triangle hull, middle point right of apex: red {b, v, c}");
      paint({b, v, c});
    }
    return out;
  });
}

Coloring random_coloring(const PointSet& points, std::uint64_t seed) {
  Rng rng(seed);
  Coloring c(static_cast<std::size_t>(points.size()));
  for (int i = 0; i < points.size(); ++i) c[i] = rng.coin() ? Color::kRed : Color::kBlue;
  return c;
}

}  // namespace bicross
