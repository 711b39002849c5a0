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

#include <sstream>

#include "bicross/experiments.hpp"
#include "test_util.hpp"

using namespace bicross;
using bicross::testing::error_code_of;

TEST_CASE("n-range syntax") {
  CHECK(parse_n_range("4..8") == std::vector<int>{4, 5, 6, 7, 8});
  CHECK(parse_n_range("4..10:3") == std::vector<int>{4, 7, 10});
  CHECK(parse_n_range("5,3,9") == std::vector<int>{5, 3, 9});
  CHECK(parse_n_range("1,4..6") == std::vector<int>{1, 4, 5, 6});
  CHECK(error_code_of([] { parse_n_range("4..x"); }) == ErrorCode::kParse);
  CHECK(error_code_of([] { parse_n_range(""); }) == ErrorCode::kParse);
}

TEST_CASE("registry lookups") {
  CHECK(find_experiment("flat-convex").default_trials == 50);
  CHECK(error_code_of([] { find_experiment("nope"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("rows are ordered and reproducible") {
  ExperimentSpec spec{"convex-alternating", {9, 5}, 4, 11, 1, false};
  ExperimentReport a = run_experiment(spec);
  REQUIRE(a.rows.size() == 8);
  CHECK(a.rows[0].n == 9);
  CHECK(a.rows[3].trial == 3);
  CHECK(a.rows[4].n == 5);
  CHECK(a.failures() == 0);
  spec.workers = 4;
  CHECK(to_csv(run_experiment(spec)) == to_csv(a));
  CHECK(to_csv(a).rfind(std::string(kCsvHeader) + "\n", 0) == 0);
}

TEST_CASE("trial errors become rows") {
  ExperimentReport r = run_experiment({"grid-five-eighths", {5}, 2, 1, 1, false});
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].status.rfind("error:", 0) == 0);
  CHECK_FALSE(r.rows[0].realized.has_value());
  CHECK(r.failures() == 2);
}

TEST_CASE("timing column stays empty unless asked") {
  ExperimentReport r = run_experiment({"figure9", {14}, 1, 0, 1, false});
  CHECK_FALSE(r.rows[0].elapsed_ms.has_value());
  ExperimentReport t = run_experiment({"figure9", {14}, 1, 0, 1, true});
  CHECK(t.rows[0].elapsed_ms.has_value());
}

TEST_CASE("JSON summary mirrors the rows") {
  ExperimentReport r = run_experiment({"convex-random", {8}, 30, 2, 1, false});
  Json j = to_json(r);
  CHECK(j["rows"] == 30);
  CHECK(j["per_n"][0]["n"] == 8);
  CHECK(j["failures"] == 0);
}

TEST_CASE("expectation estimates") {
  auto e = estimate_convex_random_expectation({8}, 100, 3, 1);
  REQUIRE(e.size() == 1);
  CHECK(e[0].trials == 100);
  CHECK(e[0].mean > 0);
  CHECK(error_code_of([] { estimate_convex_random_expectation({8}, 0, 3, 1); }) == ErrorCode::kInvalidArgument);
}
