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

#include "bicross/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "bicross/crossing.hpp"
#include "bicross/density.hpp"
#include "bicross/errors.hpp"
#include "bicross/spanning.hpp"

namespace bicross {

namespace {

constexpr int kMaxAttempts = 64;

template <class F>
auto with_retries(const std::string& what, std::uint64_t seed, F&& attempt) {
  for (int a = 0; a < kMaxAttempts; ++a) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(a)));
    if (auto result = attempt(rng)) return std::move(*result);
  }
  throw Error(ErrorCode::kGenerationFailed,
              what + ": post-conditions failed after " + std::to_string(kMaxAttempts) +
                  " attempts");
}

Coord pow2(int e) {
  Coord v = 1;
  if (e >= 0) {
    mpz_class z = 1;
    z <<= static_cast<unsigned>(e);
    v = z;
  } else {
    mpz_class z = 1;
    z <<= static_cast<unsigned>(-e);
    v = Coord(1, z);
  }
  v.canonicalize();
  return v;
}

std::vector<std::string> grid_label_names(int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("v" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("w" + std::to_string(i));
  return names;
}

LabeledGrid make_grid(std::vector<Point> pts) {
  const int m = static_cast<int>(pts.size()) / 2;
  LabeledGrid g{PointSet(std::move(pts), grid_label_names(m)), {}};
  for (int i = 0; i < m; ++i) {
    g.labels.v.push_back(i);
    g.labels.w.push_back(m + i);
  }
  return g;
}

// True iff the points are pairwise distinct (PointSet rejects duplicates).
bool distinct(const std::vector<Point>& pts) {
  std::vector<std::pair<Coord, Coord>> keys;
  keys.reserve(pts.size());
  for (const Point& p : pts) keys.emplace_back(p.x, p.y);
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

void require_even_grid(int n) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::kInvalidArgument, "grid needs an even n >= 4");
}

}  // namespace

Coord truncate_dyadic(const Coord& value, unsigned bits) {
  mpz_class scale = 1;
  scale <<= bits;
  Coord scaled = value * scale;
  mpz_class t;
  mpz_tdiv_q(t.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return dyadic(t, bits);
}

Coord default_polygon_jitter(int n) { return Coord(1, 10L * n * n); }

PointSet perturbed_regular_polygon(int n, const Coord& jitter, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "polygon needs n >= 3");
  if (jitter <= 0) throw Error(ErrorCode::kInvalidArgument, "jitter must be positive");
  return with_retries("perturbed_regular_polygon", seed, [&](Rng& rng) -> std::optional<PointSet> {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
      double t = 2.0 * std::numbers::pi * i / n;
      Coord dx = truncate_dyadic(jitter * rng.signed_unit_dyadic(53), 53);
      Coord dy = truncate_dyadic(jitter * rng.signed_unit_dyadic(53), 53);
      pts.push_back({dyadic_from_double(std::cos(t), 53) + dx,
                     dyadic_from_double(std::sin(t), 53) + dy});
    }
    if (!distinct(pts)) return std::nullopt;
    PointSet p(std::move(pts));
    if (!in_convex_position(p) || !is_generic(p).generic()) return std::nullopt;
    return p;
  });
}

PointSet random_convex_set(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "convex set needs n >= 3");
  return with_retries("random_convex_set", seed, [&](Rng& rng) -> std::optional<PointSet> {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
      // t in [-4, 4): the circle minus a small arc around (-1, 0).
      Coord t = 4 * rng.signed_unit_dyadic(12);
      Coord den = 1 + t * t;
      pts.push_back({(1 - t * t) / den, 2 * t / den});
    }
    if (!distinct(pts)) return std::nullopt;
    PointSet p(std::move(pts));
    if (!is_generic(p).generic()) return std::nullopt;
    return p;
  });
}

PointSet flat_convex_set(int n, std::uint64_t seed) {
  if (n < 4) throw Error(ErrorCode::kInvalidArgument, "flat set needs n >= 4");
  // eps * (n/2)^2 * 2 stays below the minimum x-gap of 1/2.
  int e = 2;
  while ((1L << e) < 4L * n * n) ++e;
  const Coord eps = pow2(-e);
  return with_retries("flat_convex_set", seed, [&](Rng& rng) -> std::optional<PointSet> {
    std::vector<Coord> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(Coord(i) + rng.unit_dyadic(20) / 4);
    std::vector<Point> pts;
    const Coord& x1 = xs.front();
    const Coord& xn = xs.back();
    for (int i = 0; i < n; ++i) {
      Coord bow = eps * (xs[i] - x1) * (xn - xs[i]);
      bool upper = rng.coin();
      pts.push_back({xs[i], upper ? bow : Coord(-bow)});
    }
    PointSet p(std::move(pts));
    if (!is_generic(p).generic() || !in_convex_position(p)) return std::nullopt;
    // The arcs may come out all on one side; flatness still must hold.
    Coord lo = p[0].y, hi = p[0].y;
    for (const Point& q : p.points()) {
      lo = std::min(lo, q.y);
      hi = std::max(hi, q.y);
    }
    if (!(hi - lo < Coord(1, 2))) return std::nullopt;
    return p;
  });
}

bool p0_constraints_hold(const LabeledGrid& grid) {
  const PointSet& P = grid.points;
  const auto& v = grid.labels.v;
  const auto& w = grid.labels.w;
  const int m = static_cast<int>(v.size());
  auto d2 = [&](int i, int j) { return squared_distance(P[i], P[j]); };
  // (a) every width-1 row edge is shorter than every column edge.
  Coord max_row = 0, min_col = d2(v[0], w[0]);
  for (int i = 0; i + 1 < m; ++i) {
    max_row = std::max({max_row, d2(v[i], v[i + 1]), d2(w[i], w[i + 1])});
  }
  for (int i = 0; i < m; ++i) min_col = std::min(min_col, d2(v[i], w[i]));
  if (!(max_row < min_col)) return false;
  // (b) |w_{2j+1} w_{2j+3}| < |v_{2j+1} v_{2j+3}| (1-based), i.e. even 0-based.
  for (int i = 0; i + 2 < m; i += 2) {
    if (!(d2(w[i], w[i + 2]) < d2(v[i], v[i + 2]))) return false;
  }
  // (c) |v_{2j} v_{2j+2}| < |w_{2j} w_{2j+2}| (1-based), i.e. odd 0-based.
  for (int i = 1; i + 2 < m; i += 2) {
    if (!(d2(v[i], v[i + 2]) < d2(w[i], w[i + 2]))) return false;
  }
  // (d) within 1/50 of the original grid position.
  const Coord r2(1, 2500);
  for (int i = 0; i < m; ++i) {
    if (!(squared_distance(P[v[i]], {Coord(i + 1), Coord(0)}) < r2)) return false;
    if (!(squared_distance(P[w[i]], {Coord(i + 1), Coord(1)}) < r2)) return false;
  }
  return true;
}

LabeledGrid perturbed_grid_p0(int n, std::uint64_t seed) {
  require_even_grid(n);
  const int m = n / 2;
  const Coord shrink = 1 - Coord(1, 100L * n);
  const Coord top_y(101, 100);
  const Coord amplitude = pow2(-20);
  const Coord jitter = pow2(-30);
  // Steps 1 and 2: raise the top row, shrink alternating x-coordinates.
  std::vector<Coord> vx(m), wx(m);
  for (int i = 1; i <= m; ++i) {
    vx[i - 1] = truncate_dyadic(i % 2 == 0 ? Coord(i * shrink) : Coord(i), 40);
    wx[i - 1] = truncate_dyadic(i % 2 == 1 ? Coord(i * shrink) : Coord(i), 40);
  }
  // Step 3: bow each row outward on a parabola in its own x, then jitter.
  auto bow = [&](const std::vector<Coord>& xs, int i) {
    Coord span = xs.back() - xs.front();
    return truncate_dyadic(4 * amplitude * (xs[i] - xs.front()) * (xs.back() - xs[i]) /
                               (span * span),
                           40);
  };
  return with_retries("perturbed_grid_p0", seed, [&](Rng& rng) -> std::optional<LabeledGrid> {
    std::vector<Point> pts;
    for (int i = 0; i < m; ++i) {
      pts.push_back({vx[i] + jitter * rng.signed_unit_dyadic(20),
                     -bow(vx, i) + jitter * rng.signed_unit_dyadic(20)});
    }
    for (int i = 0; i < m; ++i) {
      pts.push_back({wx[i] + jitter * rng.signed_unit_dyadic(20),
                     top_y + bow(wx, i) + jitter * rng.signed_unit_dyadic(20)});
    }
    LabeledGrid g = make_grid(std::move(pts));
    if (!in_convex_position(g.points) || !is_generic(g.points).generic()) return std::nullopt;
    if (!p0_constraints_hold(g)) return std::nullopt;
    return g;
  });
}

LabeledGrid random_perturbed_grid(int n, std::uint64_t seed) {
  require_even_grid(n);
  const int m = n / 2;
  const Coord jitter = pow2(-30);
  return with_retries("random_perturbed_grid", seed, [&](Rng& rng) -> std::optional<LabeledGrid> {
    // Independent bow amplitudes in [2^-12, 2^-10) per row.
    Coord amp_low = pow2(-12) * (1 + 3 * rng.unit_dyadic(16));
    Coord amp_high = pow2(-12) * (1 + 3 * rng.unit_dyadic(16));
    const Coord span = m - 1;
    std::vector<Point> pts;
    for (int row = 0; row < 2; ++row) {
      for (int i = 1; i <= m; ++i) {
        Coord x = Coord(i) + jitter * rng.signed_unit_dyadic(20);
        Coord b = 4 * (x - 1) * (Coord(m) - x) / (span * span);
        Coord y = row == 0 ? Coord(-amp_low * b) : Coord(1 + amp_high * b);
        pts.push_back({x, y + jitter * rng.signed_unit_dyadic(20)});
      }
    }
    LabeledGrid g = make_grid(std::move(pts));
    if (!in_convex_position(g.points) || !is_generic(g.points).generic()) return std::nullopt;
    return g;
  });
}

LabeledGrid equidistant_convex_grid(int n) {
  require_even_grid(n);
  const int m = n / 2;
  // Rational unit complex zeta = ((p^2-1) + 2p i) / (p^2+1), angle ~ 2/p.
  const long p = 10L * (m - 1) * (m - 1) + 10;
  const Coord c0(mpz_class(p * p - 1), mpz_class(p * p + 1));
  const Coord s0(mpz_class(2 * p), mpz_class(p * p + 1));
  const Coord radius(11 * p, 40);
  auto power = [&](int e) {
    Coord c = 1, s = 0;
    Coord bc = c0, bs = e < 0 ? Coord(-s0) : s0;
    for (int k = 0; k < std::abs(e); ++k) {
      Coord nc = c * bc - s * bs;
      Coord ns = c * bs + s * bc;
      c = nc;
      s = ns;
    }
    return std::make_pair(c, s);
  };
  std::vector<Point> pts(static_cast<std::size_t>(n));
  for (int k = 0; k < m; ++k) {
    auto [c, s] = power(2 * k - (m - 1));
    pts[k] = {radius * s, radius * (1 - c)};
    pts[m + k] = {radius * s, 1 - radius * (1 - c)};
  }
  LabeledGrid g = make_grid(std::move(pts));
  const PointSet& P = g.points;
  const Coord spacing = squared_distance(P[0], P[1]);
  for (int k = 0; k + 1 < m; ++k) {
    if (squared_distance(P[k], P[k + 1]) != spacing ||
        squared_distance(P[m + k], P[m + k + 1]) != spacing) {
      throw Error(ErrorCode::kGenerationFailed, "rows are not equidistant");
    }
  }
  for (int i = 0; i < n; ++i) {
    int partner = i < m ? i + m : i - m;
    Coord own = squared_distance(P[i], P[partner]);
    for (int j = 0; j < n; ++j) {
      if (j != i && j != partner && !(own < squared_distance(P[i], P[j]))) {
        throw Error(ErrorCode::kGenerationFailed, "column partner is not the nearest neighbor");
      }
    }
  }
  if (!in_convex_position(P)) throw Error(ErrorCode::kGenerationFailed, "grid is not convex");
  return g;
}

PointSet uniform_square(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "uniform_square needs n >= 1");
  return with_retries("uniform_square", seed, [&](Rng& rng) -> std::optional<PointSet> {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Coord x = rng.unit_dyadic(53);
      Coord y = rng.unit_dyadic(53);
      pts.push_back({std::move(x), std::move(y)});
    }
    if (!distinct(pts)) return std::nullopt;
    PointSet p(std::move(pts));
    if (!is_generic(p).generic()) return std::nullopt;
    return p;
  });
}

PointSet dense_set(int n, const Coord& alpha, std::uint64_t seed) {
  if (n < 4) throw Error(ErrorCode::kInvalidArgument, "dense_set needs n >= 4");
  if (alpha < Coord(3, 2)) throw Error(ErrorCode::kInvalidArgument, "dense_set needs alpha >= 3/2");
  // The n lattice points nearest the origin (ties by angle-free lexicographic order).
  long r = 1;
  while (static_cast<long>(std::floor(std::numbers::pi * r * r)) < 2L * n) ++r;
  std::vector<std::pair<long, std::pair<long, long>>> cand;
  for (long x = -r; x <= r; ++x) {
    for (long y = -r; y <= r; ++y) cand.push_back({x * x + y * y, {x, y}});
  }
  std::sort(cand.begin(), cand.end());
  cand.resize(static_cast<std::size_t>(n));
  return with_retries("dense_set", seed, [&](Rng& rng) -> std::optional<PointSet> {
    std::vector<Point> pts;
    for (const auto& [d, xy] : cand) {
      pts.push_back({Coord(xy.first) + rng.signed_unit_dyadic(20) / 32,
                     Coord(xy.second) + rng.signed_unit_dyadic(20) / 32});
    }
    PointSet raw(std::move(pts));
    Coord min_d2 = spread(raw).min_squared_distance;
    // s = t / 2^20 with t = ceil(2^20 / min_d), so s * min_d in [1, 1 + 2^-10).
    mpz_class t = ceil_sqrt(pow2(40) / min_d2);
    Coord s = dyadic(t, 20);
    PointSet p = scaled(raw, s);
    SpreadReport sp = spread(p);
    if (sp.min_squared_distance < 1 || !(sp.min_squared_distance < (1 + pow2(-10)) * (1 + pow2(-10)))) {
      return std::nullopt;
    }
    if (!(sp.squared_diameter < alpha * alpha * n) || !is_alpha_dense(p, alpha)) return std::nullopt;
    if (!is_generic(p).generic()) return std::nullopt;
    return p;
  });
}

PointSet island_fixture(int n1, int n2, const Coord& wedge_deg, const Coord& min_radius,
                        std::uint64_t seed) {
  if (n1 < 1 || n2 < 1) throw Error(ErrorCode::kInvalidArgument, "island_fixture needs n1, n2 >= 1");
  if (wedge_deg <= 0 || wedge_deg >= 180) {
    throw Error(ErrorCode::kInvalidArgument, "wedge angle must lie in (0, 180)");
  }
  const double wedge = to_double(wedge_deg) * std::numbers::pi / 180.0 * (1 - 1e-9);
  const Coord hx = dyadic_from_double(std::cos(wedge), 40);
  const Coord hy = dyadic_from_double(std::sin(wedge), 40);
  const Coord r2 = min_radius * min_radius;
  const double rmin = to_double(min_radius);
  return with_retries("island_fixture", seed, [&](Rng& rng) -> std::optional<PointSet> {
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n1) {
      Coord x = rng.signed_unit_dyadic(30), y = rng.signed_unit_dyadic(30);
      if (x * x + y * y < 1) pts.push_back({x, y});
    }
    int guard = 0;
    while (static_cast<int>(pts.size()) < n1 + n2) {
      if (++guard > 1000 * (n2 + 1)) return std::nullopt;
      double rho = rmin * (1.0 + rng.unit_double());
      double theta = wedge * rng.unit_double();
      Coord x = dyadic_from_double(rho * std::cos(theta), 30);
      Coord y = dyadic_from_double(rho * std::sin(theta), 30);
      // Strictly beyond min_radius and strictly inside the cone.
      if (x * x + y * y > r2 && y > 0 && hx * y - hy * x < 0) pts.push_back({x, y});
    }
    if (!distinct(pts)) return std::nullopt;
    PointSet p(std::move(pts));
    if (!is_generic(p).generic()) return std::nullopt;
    return p;
  });
}

int bridge_count(const PointSet& points, int n1) {
  int count = 0;
  for (const Segment& e : mst(points).edges) count += (e.a < n1) != (e.b < n1);
  return count;
}

Figure9 figure9_configuration() {
  // Output of tools/figure9_search.py: 16-bit dyadics, nudged off the
  // mirror symmetry of the optimum.
  std::vector<Point> pts = {
      {Coord(-6299, 8192), Coord(-1093, 16384)},   {Coord(-16657, 16384), Coord(126735, 65536)},
      {Coord(-172673, 65536), Coord(22985, 32768)}, {Coord(50419, 65536), Coord(-4469, 65536)},
      {Coord(86279, 32768), Coord(46049, 65536)},   {Coord(66649, 65536), Coord(126729, 65536)},
      {Coord(-1, 8192), Coord(559, 8192)},          {Coord(51, 65536), Coord(-127715, 65536)},
      {Coord(57201, 65536), Coord(-34691, 16384)},  {Coord(-155989, 65536), Coord(-35603, 16384)},
      {Coord(178449, 65536), Coord(5981, 8192)},    {Coord(180149, 65536), Coord(-43637, 65536)},
      {Coord(-1), Coord(0)},                        {Coord(1), Coord(0)},
  };
  Figure9 f{PointSet(std::move(pts)), Coloring::parse("RRRRRRRRRRRRBB"), 12, 13,
            {{0, 1}, {0, 2}, {3, 4}, {3, 5}, {6, 7}, {0, 6}}};
  auto fail = [](const std::string& why) {
    return Error(ErrorCode::kInternalInvariantViolation, "figure 9 fixture: " + why);
  };
  if (!is_generic(f.points).generic()) throw fail("not generic");
  CrossingReport rep = cross_rb(f.points, f.coloring);
  if (rep.blue_tree.edges != std::vector<Segment>{{f.a, f.b}}) throw fail("blue tree is not ab");
  const Segment ab{f.a, f.b};
  for (std::size_t i = 0; i < f.red_segments.size(); ++i) {
    const Segment& s = f.red_segments[i];
    if (std::find(rep.red_tree.edges.begin(), rep.red_tree.edges.end(), s) == rep.red_tree.edges.end()) {
      throw fail("segment is not a red MST edge");
    }
    if (!segments_properly_cross(s, ab, f.points)) throw fail("segment misses ab");
    if (i < 5 && compare_squared_lengths(f.points, s, ab) <= 0) throw fail("segment not longer than ab");
  }
  return f;
}

PointSet grid_fill_fixture(int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "grid_fill_fixture needs k >= 2");
  // Rows are compressed to spacing 1 - 2/(5(k-1)) so the blue tree is made
  // of column chains. For odd k >= 11 the column holding the red pair of
  // grid_fill_coloring sits left of center (its red cells excepted), and row
  // c carries the unique shortest bridges on both sides of it. The blue tree
  // then crosses the red edge exactly once.
  const Coord row_step = 1 - Coord(2, 5 * (k - 1));
  const bool shaped = k >= 11 && k % 2 == 1;
  const int c = (k - 1) / 2;
  const int hq = std::max(3, static_cast<int>(std::lround(10.0 * k / 101.0)));
  const int red_col = c + hq - 2;
  return with_retries("grid_fill_fixture", 0x6772696466696c6cULL,
                      [&](Rng& rng) -> std::optional<PointSet> {
                        std::vector<Point> pts;
                        for (int j = 0; j < k; ++j) {
                          for (int i = 0; i < k; ++i) {
                            Coord x = Coord(2 * i + 1, 2);
                            if (shaped && i == red_col && j != c - hq && j != c + hq) {
                              x -= Coord(1, 5);
                            }
                            if (shaped && j == c && i == red_col - 1) x += Coord(1, 50);
                            if (shaped && j == c && i == red_col + 1) x -= Coord(1, 20);
                            Coord y = Coord(7, 10) + row_step * j;
                            pts.push_back({x + rng.signed_unit_dyadic(20) * pow2(-20),
                                           y + rng.signed_unit_dyadic(20) * pow2(-20)});
                          }
                        }
                        PointSet p(std::move(pts));
                        if (!is_generic(p).generic() || !fills_grid(p, k)) return std::nullopt;
                        return p;
                      });
}

}  // namespace bicross
