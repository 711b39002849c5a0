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

#ifndef BICROSS_GEOMETRY_HPP_
#define BICROSS_GEOMETRY_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bicross/rational.hpp"

namespace bicross {

struct Point {
  Coord x;
  Coord y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

// An edge between two points of a PointSet, by index.
struct Segment {
  int a = 0;
  int b = 0;

  // Endpoints ordered so that a < b.
  static Segment normalized(int u, int v) { return u < v ? Segment{u, v} : Segment{v, u}; }

  friend auto operator<=>(const Segment&, const Segment&) = default;
};

enum class Orientation { kClockwise = -1, kCollinear = 0, kCounterClockwise = 1 };

namespace detail {

template <class Int>
struct WideOf;
template <>
struct WideOf<std::int64_t> {
  using type = __int128;
};
template <>
struct WideOf<mpz_class> {
  using type = mpz_class;
};

inline int sign_of(__int128 v) { return (v > 0) - (v < 0); }
inline int sign_of(const mpz_class& v) { return sgn(v); }

// Integer image of a point set: every coordinate multiplied by the common
// denominator. All predicates on a PointSet are evaluated here. With Int =
// int64_t every coordinate is below 2^61 in magnitude, so squared distances
// and orientation determinants fit in __int128 without overflow.
template <class Int>
struct Lattice {
  using Wide = typename WideOf<Int>::type;

  std::vector<Int> x;
  std::vector<Int> y;

  Wide sq_dist(int i, int j) const {
    Wide dx = Wide(x[i]) - Wide(x[j]);
    Wide dy = Wide(y[i]) - Wide(y[j]);
    return dx * dx + dy * dy;
  }

  // Sign of det(p_j - p_i, p_k - p_i).
  int orient(int i, int j, int k) const {
    Wide ax = Wide(x[j]) - Wide(x[i]);
    Wide ay = Wide(y[j]) - Wide(y[i]);
    Wide bx = Wide(x[k]) - Wide(x[i]);
    Wide by = Wide(y[k]) - Wide(y[i]);
    Wide det = ax * by - ay * bx;
    return sign_of(det);
  }

  // True iff point k lies within the closed axis-aligned box of i and j.
  bool in_box(int i, int j, int k) const {
    auto between = [](const Int& lo, const Int& hi, const Int& v) {
      return (lo <= v && v <= hi) || (hi <= v && v <= lo);
    };
    return between(x[i], x[j], x[k]) && between(y[i], y[j], y[k]);
  }
};

using LatticeVariant = std::variant<Lattice<std::int64_t>, Lattice<mpz_class>>;

}  // namespace detail

// An immutable ordered set of distinct points, optionally labeled.
class PointSet {
 public:
  PointSet();
  explicit PointSet(std::vector<Point> points, std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](int i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Index of the point carrying `label`, or -1.
  int find_label(std::string_view label) const;

  // Common denominator D of all coordinates; the lattice holds x * D.
  const mpz_class& denominator() const { return lattice_->denominator; }
  bool uses_fast_lattice() const { return lattice_->variant.index() == 0; }

  // Calls f(const detail::Lattice<Int>&) with the integer image.
  template <class F>
  decltype(auto) visit_lattice(F&& f) const {
    return std::visit(std::forward<F>(f), lattice_->variant);
  }

  PointSet subset(std::span<const int> indices) const;

 private:
  struct LatticeData {
    mpz_class denominator;
    detail::LatticeVariant variant;
  };

  std::vector<Point> points_;
  std::vector<std::string> labels_;
  std::shared_ptr<const LatticeData> lattice_;
};

Orientation orientation(const Point& a, const Point& b, const Point& c);
Orientation orientation(const PointSet& points, int a, int b, int c);

Coord squared_distance(const Point& a, const Point& b);
Coord squared_length(const PointSet& points, Segment s);

// Three-way comparison of |s|^2 and |t|^2, exact.
int compare_squared_lengths(const PointSet& points, Segment s, Segment t);

// True iff the open segments meet in exactly one point. Raises
// kDegenerateIntersection when an endpoint lies on the other segment or the
// segments overlap collinearly. The four endpoints must be distinct indices.
bool segments_properly_cross(Segment s, Segment t, const PointSet& points);

// Extreme points in counterclockwise order, starting from the leftmost
// (then lowest) point. Collinear boundary points are excluded.
std::vector<int> convex_hull(const PointSet& points);
std::vector<int> convex_hull(const PointSet& points, std::span<const int> subset);

bool in_convex_position(const PointSet& points);

struct GenericityReport {
  enum class Kind { kGeneric, kCollinear, kRepeatedDistance };

  Kind kind = Kind::kGeneric;
  std::array<int, 3> triple{};  // set for kCollinear
  Segment first{};              // set for kRepeatedDistance
  Segment second{};

  bool generic() const { return kind == Kind::kGeneric; }
  std::string describe() const;
};

// Certificate check: no three points collinear and all pairwise squared
// distances distinct. Collinearity is reported first.
GenericityReport is_generic(const PointSet& points);
GenericityReport is_generic(const PointSet& points, std::span<const int> subset);

// Similarity maps used by invariance tests and generators.
PointSet translated(const PointSet& points, const Coord& dx, const Coord& dy);
PointSet scaled(const PointSet& points, const Coord& factor);
PointSet mirrored_x(const PointSet& points);   // (x, y) -> (-x, y)
PointSet swapped_xy(const PointSet& points);   // (x, y) -> (y, x)

}  // namespace bicross

#endif  // BICROSS_GEOMETRY_HPP_
