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

#include "monopath/search.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "monopath/error.hpp"

namespace monopath {

std::uint64_t default_budget() {
  constexpr std::uint64_t fallback = 100'000'000;
  const char* env = std::getenv("MONOPATH_BUDGET");
  if (env == nullptr) return fallback;
  std::string_view text(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error("MONOPATH_BUDGET must be a non-negative integer, got '" + std::string(text) + "'");
  return value;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

void check_budget(std::uint64_t required, std::uint64_t budget) {
  if (required > budget) throw BudgetExceeded(required, budget);
}

}  // namespace monopath
