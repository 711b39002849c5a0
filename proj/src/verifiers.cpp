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

#include "bicross/verifiers.hpp"

#include <algorithm>

#include "bicross/errors.hpp"
#include "bicross/generators.hpp"
#include "bicross/parallel.hpp"
#include "bicross/spanning.hpp"
#include "bicross/strategies.hpp"

namespace bicross {

namespace {

struct Vec {
  Coord x, y;
};

Vec operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
Coord dot(const Vec& u, const Vec& v) { return u.x * v.x + u.y * v.y; }
Coord cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }
Coord norm2(const Vec& u) { return dot(u, u); }

// x lies in the open segment pq.
bool strictly_inside(const Point& p, const Point& q, const Point& x) {
  return cross(q - p, x - p) == 0 && dot(p - x, q - x) < 0;
}

// Rational point on the unit circle for parameter t.
Vec unit(const Coord& t) {
  Coord den = 1 + t * t;
  return {(1 - t * t) / den, 2 * t / den};
}

Vec rotate(const Vec& u, const Vec& r) { return {u.x * r.x - u.y * r.y, u.x * r.y + u.y * r.x}; }

Point along(const Point& x, const Vec& u, const Coord& s) { return {x.x + s * u.x, x.y + s * u.y}; }

SmallAngleSample draw_small_angle(Rng& rng) {
  Point x{4 * rng.signed_unit_dyadic(20), 4 * rng.signed_unit_dyadic(20)};
  Vec u = unit(2 * rng.signed_unit_dyadic(20));
  // Rotation by 2 atan(s) with |s| < 9/1000, slightly beyond the 1 degree
  // premise so that the rejection path is exercised.
  Vec w = rotate(u, unit(Coord(9, 1000) * rng.signed_unit_dyadic(20)));
  auto arms = [&](Coord& near, Coord& far) {
    Coord total = 2 + 4 * rng.unit_dyadic(20);
    Coord f = rng.below(16) == 0 ? Coord(1, 2) : Coord(rng.unit_dyadic(20) / 2);
    near = total * f;
    far = total - near;
  };
  Coord alpha, beta, gamma, delta;
  arms(alpha, beta);
  arms(gamma, delta);
  return {along(x, u, alpha), along(x, u, -beta), along(x, w, gamma), along(x, w, -delta), x};
}

}  // namespace

bool small_angle_premises_hold(const SmallAngleSample& s) {
  if (norm2(s.b - s.a) < 4 || norm2(s.d - s.c) < 4) return false;
  if (!strictly_inside(s.a, s.b, s.x) || !strictly_inside(s.c, s.d, s.x)) return false;
  if (cross(s.b - s.a, s.d - s.c) == 0) return false;
  if (norm2(s.a - s.x) > norm2(s.b - s.x) || norm2(s.c - s.x) > norm2(s.d - s.x)) return false;
  Vec xa = s.a - s.x, xc = s.c - s.x;
  Coord d = dot(xa, xc);
  const Coord cos_bound(4999, 5000);
  return d > 0 && d * d >= cos_bound * cos_bound * norm2(xa) * norm2(xc);
}

bool small_angle_conclusion_holds(const SmallAngleSample& s) {
  Coord p = std::max(norm2(s.b - s.a), norm2(s.d - s.c));
  Coord q = std::max(norm2(s.c - s.a), norm2(s.d - s.b));
  // sqrt(p) >= sqrt(q) + 1/2  <=>  p - q - 1/4 >= sqrt(q).
  Coord lhs = p - q - Coord(1, 4);
  return lhs >= 0 && lhs * lhs >= q;
}

LemmaReport verify_small_angle_lemma(long trials, std::uint64_t seed, int workers) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  std::vector<long> rejected(static_cast<std::size_t>(trials), 0);
  std::vector<char> failed(static_cast<std::size_t>(trials), 0);
  parallel_for(trials, workers, [&](long t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    SmallAngleSample s = draw_small_angle(rng);
    while (!small_angle_premises_hold(s)) {
      ++rejected[t];
      s = draw_small_angle(rng);
    }
    failed[t] = !small_angle_conclusion_holds(s);
  });
  LemmaReport r;
  r.samples = trials;
  for (long t = 0; t < trials; ++t) {
    r.rejected += rejected[t];
    r.violations += failed[t];
  }
  return r;
}

LemmaReport verify_island_lemma(long trials, std::uint64_t seed, const Coord& wedge_deg, int workers) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  const bool premise = wedge_deg <= Coord(18, 5);
  std::vector<int> bridges(static_cast<std::size_t>(trials), 0);
  parallel_for(trials, workers, [&](long t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    int n1 = 1 + static_cast<int>(rng.below(12));
    int n2 = 1 + static_cast<int>(rng.below(12));
    PointSet p = island_fixture(n1, n2, wedge_deg, Coord(3), mix_seed(seed, static_cast<std::uint64_t>(t), 1));
    bridges[t] = bridge_count(p, n1);
  });
  LemmaReport r;
  r.samples = trials;
  for (int b : bridges) {
    r.max_observed = std::max<long>(r.max_observed, b);
    if (premise && b != 1) ++r.violations;
  }
  if (!premise) {
    r.notes.push_back("wedge outside the premise; bridge counts recorded, not judged");
  }
  return r;
}

ProfileReport profile_crossing_constant(std::span<const ProfileInstance> instances) {
  ProfileReport r;
  for (const ProfileInstance& inst : instances) {
    CrossingReport rep = cross_rb(inst.points, inst.coloring);
    CrossingProfile prof = longer_edge_crossing_profile(rep, inst.points);
    r.max_red = std::max<long>(r.max_red, static_cast<long>(prof.max_red));
    r.max_blue = std::max<long>(r.max_blue, static_cast<long>(prof.max_blue));
    ++r.histogram[static_cast<long>(std::max(prof.max_red, prof.max_blue))];
  }
  return r;
}

std::vector<ProfileInstance> random_profile_instances(long count, int n, std::uint64_t seed) {
  std::vector<ProfileInstance> out;
  for (long i = 0; i < count; ++i) {
    std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(i));
    PointSet p = uniform_square(n, s);
    Coloring c = random_coloring(p, mix_seed(s, 1));
    // Both classes must be non-empty for cross_rb.
    if (c.count(Color::kRed) == 0) c[0] = Color::kRed;
    if (c.count(Color::kBlue) == 0) c[0] = Color::kBlue;
    out.push_back({"uniform-" + std::to_string(i), std::move(p), std::move(c)});
  }
  return out;
}

GoodCellReport detect_good_cells(const PointSet& points, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  int m = 1;
  while (4L * (m + 1) * (m + 1) <= n) ++m;
  GoodCellReport r;
  r.cells_per_side = m;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cells;  // cell -> (subcell code, point)
  for (int p = 0; p < points.size(); ++p) {
    const Point& q = points[p];
    if (q.x < 0 || q.x >= 1 || q.y < 0 || q.y >= 1) {
      throw Error(ErrorCode::kInvalidArgument, "point " + std::to_string(p) + " outside [0, 1)^2");
    }
    Coord sx = q.x * (11 * m), sy = q.y * (11 * m);
    int gx = static_cast<int>(floor_of(sx).get_si()), gy = static_cast<int>(floor_of(sy).get_si());
    cells[{gx / 11, gy / 11}].push_back({(gx % 11) * 11 + gy % 11, p});
  }
  // Subcell codes (column * 11 + row) left, right, below, above the center.
  const std::array<int, 4> wanted = {4 * 11 + 5, 6 * 11 + 5, 5 * 11 + 4, 5 * 11 + 6};
  for (const auto& [cell, members] : cells) {
    if (members.size() != 4) continue;
    GoodCell g{cell.first, cell.second, {}};
    bool ok = true;
    for (int k = 0; k < 4 && ok; ++k) {
      auto it = std::find_if(members.begin(), members.end(), [&](const auto& e) { return e.first == wanted[k]; });
      ok = it != members.end();
      if (ok) g.members[k] = it->second;
    }
    if (ok) r.good.push_back(g);
  }
  return r;
}

PointSet plant_good_cell(int n, std::uint64_t seed) {
  if (n < 4) throw Error(ErrorCode::kInvalidArgument, "plant_good_cell needs n >= 4");
  int m = 1;
  while (4L * (m + 1) * (m + 1) <= n) ++m;
  const Coord cell(1, m), sub(1, 11 * m);
  Rng pick(mix_seed(seed, 0));
  const int ci = static_cast<int>(pick.below(static_cast<std::uint64_t>(m)));
  const int cj = static_cast<int>(pick.below(static_cast<std::uint64_t>(m)));
  const std::array<std::pair<int, int>, 4> subcells = {{{4, 5}, {6, 5}, {5, 4}, {5, 6}}};
  auto in_cell = [&](const Point& p) {
    return floor_of(p.x * m) == ci && floor_of(p.y * m) == cj;
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rng rng(mix_seed(seed, 1, static_cast<std::uint64_t>(attempt)));
    std::vector<Point> pts;
    for (const auto& [si, sj] : subcells) {
      pts.push_back({cell * ci + sub * (si + rng.unit_dyadic(40)), cell * cj + sub * (sj + rng.unit_dyadic(40))});
    }
    while (static_cast<int>(pts.size()) < n) {
      Point p{rng.unit_dyadic(53), rng.unit_dyadic(53)};
      if (!in_cell(p)) pts.push_back(std::move(p));
    }
    std::vector<std::pair<Coord, Coord>> keys;
    for (const Point& p : pts) keys.emplace_back(p.x, p.y);
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) continue;
    PointSet p(std::move(pts));
    if (is_generic(p).generic()) return p;
  }
  throw Error(ErrorCode::kGenerationFailed, "plant_good_cell: no generic set after 64 attempts");
}

int internal_crossing_colorings(const PointSet& points, const std::array<int, 4>& members) {
  int hits = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> red, blue;
    for (int k = 0; k < 4; ++k) ((mask >> k) & 1 ? red : blue).push_back(members[k]);
    if (red.size() < 2 || blue.size() < 2) continue;
    hits += cross_count(mst(points, red), mst(points, blue), points).count > 0;
  }
  return hits;
}

}  // namespace bicross
