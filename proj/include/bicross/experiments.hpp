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

#ifndef BICROSS_EXPERIMENTS_HPP_
#define BICROSS_EXPERIMENTS_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bicross/serialization.hpp"

namespace bicross {

// Parses "4..20", "4..20:2", "4,6,8" and mixtures such as "4..8,12".
std::vector<int> parse_n_range(std::string_view text);

struct ExperimentSpec {
  std::string name;
  std::vector<int> ns;
  long trials = 1;
  std::uint64_t seed = 0;
  int workers = 0;      // 0 = hardware concurrency
  bool timing = false;  // fill elapsed_ms; off keeps the CSV reproducible
};

struct ExperimentRow {
  std::string experiment;
  int n = 0;
  long trial = 0;
  std::uint64_t seed = 0;
  std::optional<long> realized;
  std::optional<long> guarantee;
  std::optional<double> elapsed_ms;
  // "ok", "violation: ..." or "error: ...".
  std::string status = "ok";
};

struct NStats {
  int n = 0;
  long rows = 0;
  long failures = 0;  // rows whose status is not "ok"
  double mean = 0;
  double stderr_mean = 0;
  long min = 0;
  long max = 0;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<ExperimentRow> rows;  // ordered by (position of n in spec.ns, trial)
  std::vector<NStats> per_n;

  long failures() const;
};

// Outcome of one trial; `violation` holds the failed check, if any.
struct TrialResult {
  long realized = 0;
  long guarantee = 0;
  std::string violation;
};

using TrialFn = std::function<TrialResult(int n, std::uint64_t seed)>;

struct ExperimentInfo {
  std::string name;
  std::string description;
  std::string default_ns;
  long default_trials = 1;
  TrialFn run;
};

const std::vector<ExperimentInfo>& experiment_registry();
const ExperimentInfo& find_experiment(std::string_view name);  // kInvalidArgument if unknown

// Trial (n, t) uses seed mix_seed(spec.seed, n, t). Trials run on a worker
// pool; rows are merged in (n, trial) order, so the output does not depend
// on the worker count. Trial errors become rows with an "error" status.
ExperimentReport run_experiment(const ExperimentSpec& spec);

inline constexpr const char* kCsvHeader =
    "experiment,n,trial,seed,realized,guarantee,elapsed_ms,status";

void write_csv(std::ostream& out, const ExperimentReport& report);
std::string to_csv(const ExperimentReport& report);
Json to_json(const ExperimentReport& report);

struct ExpectationEstimate {
  int n = 0;
  long trials = 0;
  double mean = 0;         // mean crossings
  double stderr_mean = 0;  // standard error of that mean
};

// Uniform points in the unit square under a fair random coloring.
std::vector<ExpectationEstimate> estimate_random_expectation(const std::vector<int>& ns, long trials,
                                                             std::uint64_t seed, int workers = 0);

// Perturbed regular polygons under a fair random coloring.
std::vector<ExpectationEstimate> estimate_convex_random_expectation(const std::vector<int>& ns,
                                                                    long trials, std::uint64_t seed,
                                                                    int workers = 0);

}  // namespace bicross

#endif  // BICROSS_EXPERIMENTS_HPP_
