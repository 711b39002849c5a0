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

#include <doctest.h>

#include "bicross/generators.hpp"
#include "bicross/oracle.hpp"
#include "test_util.hpp"

using namespace bicross;
using bicross::testing::error_code_of;
using bicross::testing::make_points;

namespace {

// Independent maximum over all 2-colorings using cross_rb directly.
long naive_cross_number(const PointSet& p) {
  const int n = p.size();
  long best = 0;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    Coloring c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) c[i] = Color::kRed;
    }
    best = std::max(best, static_cast<long>(cross_rb(p, c).count));
  }
  return best;
}

}  // namespace

TEST_CASE("oracle agrees with naive enumeration") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    PointSet p = uniform_square(4 + static_cast<int>(seed % 5), seed);
    OracleResult r = exact_cross_number(p, 1);
    CHECK(r.value == naive_cross_number(p));
    CHECK(static_cast<long>(cross_rb(p, r.witness).count) == r.value);
    CHECK(r.witness[0] == Color::kBlue);
  }
}

TEST_CASE("oracle is independent of the worker count") {
  PointSet p = uniform_square(11, 4);
  OracleResult a = exact_cross_number(p, 1);
  OracleResult b = exact_cross_number(p, 3);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
}

TEST_CASE("oracle input checks") {
  CHECK(error_code_of([] { exact_cross_number(uniform_square(1, 1)); }) == ErrorCode::kTooFewPoints);
  CHECK(error_code_of([] { exact_cross_number(uniform_square(23, 1)); }) == ErrorCode::kTooLarge);
  CHECK(error_code_of([] { exact_cross_number(uniform_square(9, 1), 1, 8); }) == ErrorCode::kTooLarge);
  PointSet sq = make_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(error_code_of([&] { exact_cross_number(sq); }) == ErrorCode::kNonGenericInput);
}

TEST_CASE("non-generic oracle on a square") {
  // Only the two diagonals can cross; each class of two has a unique tree.
  PointSet sq = make_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(exact_cross_number_nongeneric(sq, kDefaultMstCap, 1).value == 1);
}

TEST_CASE("zero-cross 5-set search") {
  ZeroCrossWitness w = search_zero_cross_5set(1, 100000);
  CHECK(w.points.size() == 5);
  CHECK(exact_cross_number(w.points, 1).value == 0);
  std::vector<int> quad = {0, 1, 2, 3};
  CHECK(exact_cross_number(w.points.subset(quad), 1).value == 1);
  CHECK(error_code_of([] { search_zero_cross_5set(1, 0); }) == ErrorCode::kInvalidArgument);
}
