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

#include "bicross/radical_sum.hpp"
#include "test_util.hpp"

using namespace bicross;
using bicross::testing::error_code_of;

TEST_CASE("identical multisets compare equal without numerics") {
  RadicalSum a({2, 3, 5});
  RadicalSum b({5, 2, 3});
  CHECK(compare(a, b) == 0);
}

TEST_CASE("ordering of nearby sums") {
  // sqrt 2 + sqrt 3 = 3.1462..., sqrt 10 = 3.1623...
  CHECK(compare(RadicalSum({2, 3}), RadicalSum({10})) < 0);
  CHECK(compare(RadicalSum({10}), RadicalSum({2, 3})) > 0);
  // sqrt 10 + sqrt 11 vs sqrt 5 + sqrt 18: differ near 1e-3.
  CHECK(compare(RadicalSum({10, 11}), RadicalSum({5, 18})) == (std::sqrt(10.0) + std::sqrt(11.0) <
                                                                       std::sqrt(5.0) + std::sqrt(18.0)
                                                                   ? -1
                                                                   : 1));
}

TEST_CASE("rational radicands") {
  // 1/2 against 1/3 + 1/5.
  CHECK(compare(RadicalSum({Coord(1, 4)}), RadicalSum({Coord(1, 9), Coord(1, 25)})) < 0);
  CHECK(RadicalSum({Coord(9, 4)}).approx() == doctest::Approx(1.5));
}

TEST_CASE("equal values with different radicands are reported") {
  // sqrt 2 + sqrt 8 == sqrt 18 exactly.
  CHECK(error_code_of([] { compare(RadicalSum({2, 8}), RadicalSum({18})); }) ==
        ErrorCode::kIndistinguishableAtPrecision);
}
