// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace qillum::internal {

/// Run fn(i) for i in [0, count) on a fixed static partition of worker
/// threads. Results must be written to per-index slots by the caller, so
/// the outcome is identical for any thread count. The lowest-index
/// exception is rethrown after all workers join.
inline void parallel_for(long long count, const std::function<void(long long)>& fn) {
  if (count <= 0) return;
  const unsigned hw = std::thread::hardware_concurrency();
  const long long workers =
      std::min<long long>(count, hw == 0 ? 1 : static_cast<long long>(hw));
  if (workers <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }

  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<long long> first_bad(static_cast<std::size_t>(workers), -1);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const long long chunk = (count + workers - 1) / workers;
  for (long long w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const long long lo = w * chunk;
      const long long hi = std::min(count, lo + chunk);
      for (long long i = lo; i < hi; ++i) {
        try {
          fn(i);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
          first_bad[static_cast<std::size_t>(w)] = i;
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  std::exception_ptr chosen;
  long long chosen_idx = -1;
  for (std::size_t w = 0; w < errors.size(); ++w) {
    if (errors[w] && (chosen_idx < 0 || first_bad[w] < chosen_idx)) {
      chosen = errors[w];
      chosen_idx = first_bad[w];
    }
  }
  if (chosen) std::rethrow_exception(chosen);
}

}  // namespace qillum::internal
