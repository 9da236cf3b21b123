// Copyright 2026 The gzot Authors.
//
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


#ifndef GZOT_HARNESS_POOL_HPP_
#define GZOT_HARNESS_POOL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "gzot/common/rng.hpp"

namespace gzot::harness {

/// Per-trial randomness: stream `index` of `seed`.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t index) { return Rng::from_seed(seed, index); }

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs fn(index, rng) for index in [0, count) on `workers` threads and
/// returns the results in index order. Output is independent of `workers`.
/// The first exception thrown by any trial is rethrown after all threads join.
template <class Fn>
auto run_trials(std::uint64_t count, std::uint64_t seed, unsigned workers, Fn fn)
    -> std::vector<decltype(fn(std::uint64_t{}, std::declval<Rng&>()))> {
  using Result = decltype(fn(std::uint64_t{}, std::declval<Rng&>()));
  std::vector<Result> results(count);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        Rng rng = trial_rng(seed, i);
        results[i] = fn(i, rng);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  workers = std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(workers, count)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace gzot::harness

#endif  // GZOT_HARNESS_POOL_HPP_
