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

#ifndef BICROSS_PARALLEL_HPP_
#define BICROSS_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace bicross {

inline int resolve_worker_count(int workers, long jobs) {
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return static_cast<int>(std::max(1L, std::min<long>(workers, jobs)));
}

// Calls fn(i) for every i in [0, count) on up to `workers` threads. Jobs are
// claimed from a shared counter; callers write results into slot i, so the
// outcome never depends on scheduling. The first exception is rethrown.
template <class Fn>
void parallel_for(long count, int workers, Fn&& fn) {
  if (count <= 0) return;
  const int w = resolve_worker_count(workers, count);
  if (w == 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
  std::vector<std::thread> pool;
  for (int id = 0; id < w; ++id) {
    pool.emplace_back([&, id] {
      try {
        for (long i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[id] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace bicross

#endif  // BICROSS_PARALLEL_HPP_
