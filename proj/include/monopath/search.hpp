/*
 * Copyright 2026 The monopath Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MONOPATH_SEARCH_HPP
#define MONOPATH_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace monopath {

/// Enumeration cap: MONOPATH_BUDGET from the environment, else 10^8.
std::uint64_t default_budget();

/// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

/// Throws BudgetExceeded when required > budget.
void check_budget(std::uint64_t required, std::uint64_t budget);

/// Smallest index i in [0, count) with pred(i), scanned by `jobs` workers.
///
/// Workers claim contiguous chunks in increasing order and abandon chunks
/// that start past the best hit so far, so the result equals the sequential
/// first match for any worker count. `pred` must be safe to call concurrently.
template <typename Pred>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t count, unsigned jobs, Pred&& pred) {
  if (jobs <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(1024, count / (jobs * 8)));
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      while (true) {
        const std::uint64_t start = next.fetch_add(chunk);
        if (start >= count || start >= best.load()) return;
        const std::uint64_t stop = std::min(count, start + chunk);
        for (std::uint64_t i = start; i < stop && i < best.load(); ++i) {
          if (pred(i)) {
            auto seen = best.load();
            while (i < seen && !best.compare_exchange_weak(seen, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  if (best.load() == UINT64_MAX) return std::nullopt;
  return best.load();
}

/// Calls f(combination) for every k-subset of 0..n-1 in lexicographic order
/// until f returns true. Returns whether some call returned true.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::uint32_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = static_cast<std::uint32_t>(i);
  while (true) {
    if (f(static_cast<const std::vector<std::uint32_t>&>(comb))) return true;
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace monopath

#endif  // MONOPATH_SEARCH_HPP
