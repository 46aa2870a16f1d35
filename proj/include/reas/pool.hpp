// Copyright 2026 The reas-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REAS_POOL_HPP
#define REAS_POOL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace reas {

// Applies fn(i) for i in [0, n) across `workers` threads. Results land in a
// vector indexed by i; downstream consumers iterate in index order, so the
// output is identical for any worker count. Tasks must not share mutable
// state; per-task randomness comes from counter-derived streams.
template <typename T, typename Fn>
std::vector<T> parallel_map(int n, int workers, Fn&& fn) {
  std::vector<T> results(static_cast<size_t>(n));
  if (n == 0) return results;
  if (workers <= 0)
    workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > n) workers = n;

  if (workers == 1) {
    for (int i = 0; i < n; ++i) results[static_cast<size_t>(i)] = fn(i);
    return results;
  }

  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        results[static_cast<size_t>(i)] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace reas

#endif  // REAS_POOL_HPP
