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

#ifndef MONOPATH_BOUND_HPP
#define MONOPATH_BOUND_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace monopath {

/// Values with more decimal digits than this are kept symbolic.
inline constexpr std::size_t kExactDigitCap = 1'000'000;

/// exp_height(base): height-fold iterated 2^x starting from base.
struct SymbolicTower {
  std::uint64_t base;
  unsigned height;
};

/// base^exponent, too large to expand.
struct SymbolicPower {
  std::uint64_t base;
  std::uint64_t exponent;
};

class BoundExpr {
 public:
  using Value = std::variant<mpz_class, SymbolicTower, SymbolicPower>;

  explicit BoundExpr(Value v) : value_(std::move(v)) {}

  bool is_exact() const { return std::holds_alternative<mpz_class>(value_); }
  const mpz_class& exact() const { return std::get<mpz_class>(value_); }
  const Value& value() const { return value_; }

  /// Decimal expansion when exact, otherwise "exp_h(b)" or "b^e".
  std::string to_string() const;

 private:
  Value value_;
};

/// Number of decimal digits of a non-negative integer, from its expansion.
std::size_t decimal_digits(const mpz_class& value);

/// exp_height(base), exact while every level fits under kExactDigitCap.
BoundExpr exp_tower(std::uint64_t base, unsigned height);

enum class BoundMode { Finite, General };

/// Duo size bound for k colours: k^(62500k) (Finite) or exp_10(k) (General).
BoundExpr theorem_bound(std::uint64_t colours, BoundMode mode);

}  // namespace monopath

#endif  // MONOPATH_BOUND_HPP
