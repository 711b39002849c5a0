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

#ifndef BICROSS_TESTS_TEST_UTIL_HPP_
#define BICROSS_TESTS_TEST_UTIL_HPP_

#include <doctest.h>

#include <initializer_list>
#include <utility>
#include <vector>

#include "bicross/errors.hpp"
#include "bicross/geometry.hpp"

namespace bicross::testing {

inline PointSet make_points(std::initializer_list<std::pair<Coord, Coord>> xy) {
  std::vector<Point> pts;
  for (const auto& [x, y] : xy) pts.push_back({x, y});
  return PointSet(std::move(pts));
}

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a bicross::Error");
  return ErrorCode::kInternalInvariantViolation;
}

}  // namespace bicross::testing

#endif  // BICROSS_TESTS_TEST_UTIL_HPP_
