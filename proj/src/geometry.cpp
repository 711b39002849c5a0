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

#include "bicross/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bicross/errors.hpp"

namespace bicross {

namespace {

constexpr std::size_t kFastLatticeBits = 61;

template <class Int>
bool lattice_less(const detail::Lattice<Int>& L, int i, int j) {
  if (L.x[i] != L.x[j]) return L.x[i] < L.x[j];
  return L.y[i] < L.y[j];
}

template <class Int>
bool lattice_equal(const detail::Lattice<Int>& L, int i, int j) {
  return L.x[i] == L.x[j] && L.y[i] == L.y[j];
}

}  // namespace

PointSet::PointSet() : PointSet(std::vector<Point>{}) {}

PointSet::PointSet(std::vector<Point> points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != points_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "label count does not match point count");
  }
  auto data = std::make_shared<LatticeData>();
  mpz_class den = 1;
  for (const Point& p : points_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.x.get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.y.get_den_mpz_t());
  }
  data->denominator = den;

  detail::Lattice<mpz_class> big;
  big.x.reserve(points_.size());
  big.y.reserve(points_.size());
  bool fits = true;
  for (const Point& p : points_) {
    mpz_class X = p.x.get_num() * (den / p.x.get_den());
    mpz_class Y = p.y.get_num() * (den / p.y.get_den());
    if (mpz_sizeinbase(X.get_mpz_t(), 2) > kFastLatticeBits ||
        mpz_sizeinbase(Y.get_mpz_t(), 2) > kFastLatticeBits) {
      fits = false;
    }
    big.x.push_back(std::move(X));
    big.y.push_back(std::move(Y));
  }
  if (fits) {
    detail::Lattice<std::int64_t> fast;
    fast.x.reserve(points_.size());
    fast.y.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      fast.x.push_back(big.x[i].get_si());
      fast.y.push_back(big.y[i].get_si());
    }
    data->variant = std::move(fast);
  } else {
    data->variant = std::move(big);
  }
  lattice_ = std::move(data);

  std::vector<int> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  visit_lattice([&](const auto& L) {
    std::sort(order.begin(), order.end(), [&](int i, int j) { return lattice_less(L, i, j); });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (lattice_equal(L, order[k - 1], order[k])) {
        throw Error(ErrorCode::kInvalidArgument,
                    "duplicate point at indices " + std::to_string(order[k - 1]) + " and " +
                        std::to_string(order[k]));
      }
    }
  });
}

int PointSet::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

PointSet PointSet::subset(std::span<const int> indices) const {
  std::vector<Point> pts;
  std::vector<std::string> labels;
  pts.reserve(indices.size());
  for (int i : indices) {
    pts.push_back(points_[i]);
    if (has_labels()) labels.push_back(labels_[i]);
  }
  return PointSet(std::move(pts), std::move(labels));
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  Coord det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return static_cast<Orientation>(sgn(det));
}

Orientation orientation(const PointSet& points, int a, int b, int c) {
  return points.visit_lattice(
      [&](const auto& L) { return static_cast<Orientation>(L.orient(a, b, c)); });
}

Coord squared_distance(const Point& a, const Point& b) {
  Coord dx = a.x - b.x;
  Coord dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Coord squared_length(const PointSet& points, Segment s) {
  return squared_distance(points[s.a], points[s.b]);
}

int compare_squared_lengths(const PointSet& points, Segment s, Segment t) {
  return points.visit_lattice([&](const auto& L) {
    auto ls = L.sq_dist(s.a, s.b);
    auto lt = L.sq_dist(t.a, t.b);
    return (ls > lt) - (ls < lt);
  });
}

bool segments_properly_cross(Segment s, Segment t, const PointSet& points) {
  return points.visit_lattice([&](const auto& L) {
    int o1 = L.orient(s.a, s.b, t.a);
    int o2 = L.orient(s.a, s.b, t.b);
    int o3 = L.orient(t.a, t.b, s.a);
    int o4 = L.orient(t.a, t.b, s.b);
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
      return o1 != o2 && o3 != o4;
    }
    auto touches = [&](int on_line, int seg_a, int seg_b, int p) {
      return on_line == 0 && L.in_box(seg_a, seg_b, p);
    };
    if (touches(o1, s.a, s.b, t.a) || touches(o2, s.a, s.b, t.b) ||
        touches(o3, t.a, t.b, s.a) || touches(o4, t.a, t.b, s.b)) {
      throw Error(ErrorCode::kDegenerateIntersection,
                  "segments (" + std::to_string(s.a) + "," + std::to_string(s.b) + ") and (" +
                      std::to_string(t.a) + "," + std::to_string(t.b) + ") touch");
    }
    return false;
  });
}

std::vector<int> convex_hull(const PointSet& points, std::span<const int> subset) {
  std::vector<int> idx(subset.begin(), subset.end());
  if (idx.size() <= 2) {
    return points.visit_lattice([&](const auto& L) {
      std::sort(idx.begin(), idx.end(), [&](int i, int j) { return lattice_less(L, i, j); });
      return idx;
    });
  }
  return points.visit_lattice([&](const auto& L) {
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return lattice_less(L, i, j); });
    std::vector<int> hull(2 * idx.size());
    std::size_t k = 0;
    for (int i : idx) {
      while (k >= 2 && L.orient(hull[k - 2], hull[k - 1], i) <= 0) --k;
      hull[k++] = i;
    }
    for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
      int i = idx[t];
      while (k >= lower && L.orient(hull[k - 2], hull[k - 1], i) <= 0) --k;
      hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
  });
}

std::vector<int> convex_hull(const PointSet& points) {
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  return convex_hull(points, all);
}

bool in_convex_position(const PointSet& points) {
  return static_cast<int>(convex_hull(points).size()) == points.size();
}

std::string GenericityReport::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kGeneric:
      out << "Generic";
      break;
    case Kind::kCollinear:
      out << "Collinear(" << triple[0] << "," << triple[1] << "," << triple[2] << ")";
      break;
    case Kind::kRepeatedDistance:
      out << "RepeatedDistance(" << first.a << "-" << first.b << ", " << second.a << "-"
          << second.b << ")";
      break;
  }
  return out.str();
}

namespace {

template <class Int>
GenericityReport find_collinear(const detail::Lattice<Int>& L, std::vector<int> idx) {
  using Wide = typename detail::Lattice<Int>::Wide;
  GenericityReport report;
  std::sort(idx.begin(), idx.end());
  struct Dir {
    Wide dx, dy;
    int j;
  };
  std::vector<Dir> dirs;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    int i = idx[a];
    dirs.clear();
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      int j = idx[b];
      Wide dx = Wide(L.x[j]) - Wide(L.x[i]);
      Wide dy = Wide(L.y[j]) - Wide(L.y[i]);
      // Fold into the half-plane dy > 0 or (dy == 0, dx > 0).
      if (dy < 0 || (dy == 0 && dx < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({std::move(dx), std::move(dy), j});
    }
    std::sort(dirs.begin(), dirs.end(), [](const Dir& u, const Dir& v) {
      Wide c = u.dx * v.dy - u.dy * v.dx;
      if (c != 0) return c > 0;
      return u.j < v.j;
    });
    for (std::size_t t = 1; t < dirs.size(); ++t) {
      const Dir& u = dirs[t - 1];
      const Dir& v = dirs[t];
      if (u.dx * v.dy - u.dy * v.dx == 0) {
        report.kind = GenericityReport::Kind::kCollinear;
        report.triple = {i, std::min(u.j, v.j), std::max(u.j, v.j)};
        return report;
      }
    }
  }
  return report;
}

template <class Int>
GenericityReport find_repeated_distance(const detail::Lattice<Int>& L,
                                        std::vector<int> idx) {
  using Wide = typename detail::Lattice<Int>::Wide;
  GenericityReport report;
  std::sort(idx.begin(), idx.end());
  struct Pair {
    Wide key;
    Segment s;
  };
  std::vector<Pair> pairs;
  pairs.reserve(idx.size() * (idx.size() - 1) / 2);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      pairs.push_back({L.sq_dist(idx[a], idx[b]), Segment{idx[a], idx[b]}});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& u, const Pair& v) {
    if (u.key != v.key) return u.key < v.key;
    return u.s < v.s;
  });
  for (std::size_t t = 1; t < pairs.size(); ++t) {
    if (pairs[t - 1].key == pairs[t].key) {
      report.kind = GenericityReport::Kind::kRepeatedDistance;
      report.first = pairs[t - 1].s;
      report.second = pairs[t].s;
      return report;
    }
  }
  return report;
}

}  // namespace

GenericityReport is_generic(const PointSet& points, std::span<const int> subset) {
  std::vector<int> idx(subset.begin(), subset.end());
  return points.visit_lattice([&](const auto& L) {
    GenericityReport report = find_collinear(L, idx);
    if (!report.generic()) return report;
    return find_repeated_distance(L, idx);
  });
}

GenericityReport is_generic(const PointSet& points) {
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  return is_generic(points, all);
}

namespace {

template <class F>
PointSet map_points(const PointSet& points, F&& f) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const Point& p : points.points()) out.push_back(f(p));
  return PointSet(std::move(out), points.labels());
}

}  // namespace

PointSet translated(const PointSet& points, const Coord& dx, const Coord& dy) {
  return map_points(points, [&](const Point& p) { return Point{p.x + dx, p.y + dy}; });
}

PointSet scaled(const PointSet& points, const Coord& factor) {
  return map_points(points, [&](const Point& p) { return Point{p.x * factor, p.y * factor}; });
}

PointSet mirrored_x(const PointSet& points) {
  return map_points(points, [](const Point& p) { return Point{-p.x, p.y}; });
}

PointSet swapped_xy(const PointSet& points) {
  return map_points(points, [](const Point& p) { return Point{p.y, p.x}; });
}

}  // namespace bicross
