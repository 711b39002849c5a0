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

#include "bicross/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <thread>

#include "bicross/errors.hpp"
#include "bicross/generators.hpp"

namespace bicross {

namespace {

int resolve_workers(int workers, std::uint64_t jobs) {
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), std::max<std::uint64_t>(jobs, 1)));
}

// Point i is Red iff bit (n - 1 - i) of mask is set, so numeric mask order
// equals lexicographic order of the coloring string.
Coloring coloring_of(std::uint64_t mask, int n) {
  Coloring c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if ((mask >> (n - 1 - i)) & 1U) c[i] = Color::kRed;
  }
  return c;
}

struct Best {
  long value = -1;
  std::uint64_t mask = 0;

  void offer(long v, std::uint64_t m) {
    if (v > value || (v == value && m < mask)) {
      value = v;
      mask = m;
    }
  }
};

// Runs eval over masks [1, 2^(n-1)) split into contiguous per-worker ranges.
template <class Eval>
OracleResult reduce_colorings(int n, int workers, const Eval& eval) {
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const std::uint64_t jobs = total - 1;
  const int w = resolve_workers(workers, jobs);
  std::vector<Best> best(static_cast<std::size_t>(w));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
  auto run = [&](int id) {
    try {
      std::uint64_t lo = 1 + jobs * id / w, hi = 1 + jobs * (id + 1) / w;
      for (std::uint64_t m = lo; m < hi; ++m) best[id].offer(eval(m), m);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < w; ++id) pool.emplace_back(run, id);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Best all;
  for (const Best& b : best) {
    if (b.value >= 0) all.offer(b.value, b.mask);
  }
  return {all.value, coloring_of(all.mask, n)};
}

}  // namespace

OracleResult exact_cross_number(const PointSet& points, int workers, int max_n) {
  const int n = points.size();
  if (n < 2) throw Error(ErrorCode::kTooFewPoints, "oracle needs at least 2 points");
  if (n > max_n || n > 62) {
    throw Error(ErrorCode::kTooLarge, "oracle limited to " + std::to_string(std::min(max_n, 62)) + " points");
  }
  if (GenericityReport g = is_generic(points); !g.generic()) {
    throw Error(ErrorCode::kNonGenericInput, g.describe());
  }
  // All edges in increasing length; unique because distances are distinct.
  std::vector<Segment> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  std::sort(edges.begin(), edges.end(), [&](const Segment& s, const Segment& t) {
    return compare_squared_lengths(points, s, t) < 0;
  });
  const std::size_t m = edges.size();
  std::vector<char> crosses(m * m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = e + 1; f < m; ++f) {
      const Segment& s = edges[e];
      const Segment& t = edges[f];
      if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) continue;
      crosses[e * m + f] = crosses[f * m + e] = segments_properly_cross(s, t, points);
    }
  }
  auto eval = [&](std::uint64_t mask) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto red = [&](int i) { return ((mask >> (n - 1 - i)) & 1U) != 0; };
    std::vector<int> tree_red, tree_blue;
    const int red_count = std::popcount(mask);
    const int need = (red_count - 1) + (n - red_count - 1);
    for (std::size_t e = 0; e < m && static_cast<int>(tree_red.size() + tree_blue.size()) < need; ++e) {
      const Segment& s = edges[e];
      if (red(s.a) != red(s.b)) continue;
      int x = find(s.a), y = find(s.b);
      if (x == y) continue;
      parent[x] = y;
      (red(s.a) ? tree_red : tree_blue).push_back(static_cast<int>(e));
    }
    long count = 0;
    for (int r : tree_red) {
      for (int b : tree_blue) count += crosses[static_cast<std::size_t>(r) * m + b];
    }
    return count;
  };
  return reduce_colorings(n, workers, eval);
}

OracleResult exact_cross_number_nongeneric(const PointSet& points, std::size_t cap, int workers) {
  const int n = points.size();
  if (n < 2) throw Error(ErrorCode::kTooFewPoints, "oracle needs at least 2 points");
  if (n > kNongenericOracleMaxN) {
    throw Error(ErrorCode::kTooLarge,
                "non-generic oracle limited to " + std::to_string(kNongenericOracleMaxN) + " points");
  }
  auto eval = [&](std::uint64_t mask) {
    return static_cast<long>(cross_rb_min(points, coloring_of(mask, n), cap));
  };
  return reduce_colorings(n, workers, eval);
}

ZeroCrossWitness search_zero_cross_5set(std::uint64_t seed, long budget) {
  if (budget < 1) throw Error(ErrorCode::kInvalidArgument, "budget must be >= 1");
  for (long trial = 0; trial < budget; ++trial) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
    auto u = [&] { return rng.signed_unit_dyadic(30); };
    // A trapezoid with a long base and a short raised top side, apex above
    // the top side: the shape where a zero-crossing 5-set lives.
    auto around = [&](int num, int den, int spread_den) -> Coord {
      Coord c(num, den);
      c.canonicalize();
      return c + u() / spread_den;
    };
    std::vector<Point> pts = {
        {Coord(0), Coord(0)},
        {around(17, 10, 7), u() / 7},
        {around(21, 20, 7), around(2, 5, 10)},
        {around(11, 20, 5), around(2, 5, 10)},
    };
    Coord top = std::max(pts[2].y, pts[3].y);
    pts.push_back({around(4, 5, 3), top + around(2, 5, 5)});
    std::vector<std::pair<Coord, Coord>> keys;
    for (const Point& p : pts) keys.emplace_back(p.x, p.y);
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) continue;
    PointSet p(std::move(pts));
    const std::vector<int> quad = {0, 1, 2, 3};
    if (!is_generic(p).generic() || !in_convex_position(p.subset(quad))) continue;
    if (exact_cross_number(p, 1).value != 0) continue;
    if (exact_cross_number(p.subset(quad), 1).value != 1) continue;
    return {std::move(p), 4, trial + 1};
  }
  throw Error(ErrorCode::kSearchExhausted,
              "no zero-crossing 5-set within " + std::to_string(budget) + " trials");
}

RadicalSum brute_force_mst_weight(const PointSet& points, std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  if (k > 8) throw Error(ErrorCode::kTooLarge, "brute-force MST limited to 8 points");
  if (k <= 1) return {};
  if (k == 2) return RadicalSum({squared_distance(points[subset[0]], points[subset[1]])});
  std::vector<Coord> d2(static_cast<std::size_t>(k * k));
  std::vector<double> len(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      d2[i * k + j] = squared_distance(points[subset[i]], points[subset[j]]);
      len[i * k + j] = std::sqrt(to_double(d2[i * k + j]));
    }
  }
  auto exact = [&](const std::vector<int>& edges) {
    RadicalSum s;
    for (int e : edges) s.add(d2[e]);
    return s;
  };
  // Every labeled tree on k vertices is a Pruefer sequence in [0, k)^(k-2).
  // Doubles rank trees; exact sums settle anything within 1e-9 relative.
  std::vector<int> seq(static_cast<std::size_t>(k - 2), 0);
  std::vector<int> best_edges, edges;
  double best_len = 0;
  while (true) {
    std::vector<int> degree(static_cast<std::size_t>(k), 1);
    for (int s : seq) ++degree[s];
    edges.clear();
    for (int s : seq) {
      int leaf = static_cast<int>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
      edges.push_back(leaf * k + s);
      --degree[leaf];
      --degree[s];
    }
    int u = static_cast<int>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    int v = static_cast<int>(std::find(degree.begin() + u + 1, degree.end(), 1) - degree.begin());
    edges.push_back(u * k + v);
    double total = 0;
    for (int e : edges) total += len[e];
    if (best_edges.empty() || total < best_len * (1 - 1e-9)) {
      best_edges = edges;
      best_len = total;
    } else if (total < best_len * (1 + 1e-9) && compare(exact(edges), exact(best_edges)) < 0) {
      best_edges = edges;
      best_len = total;
    }
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == k) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return exact(best_edges);
}

}  // namespace bicross
