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

#include <doctest.h>

#include <cmath>

#include "monopath/bound.hpp"

using namespace monopath;

TEST_CASE("finite bound at one colour") {
  const auto b = theorem_bound(1, BoundMode::Finite);
  REQUIRE(b.is_exact());
  CHECK(b.exact() == 1);
}

TEST_CASE("finite bound at two colours is 2^125000") {
  const auto b = theorem_bound(2, BoundMode::Finite);
  REQUIRE(b.is_exact());
  mpz_class shifted = 1;
  mpz_mul_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(), 125000);
  CHECK(b.exact() == shifted);
  const auto expected_digits = static_cast<std::size_t>(std::floor(125000 * std::log10(2.0))) + 1;
  CHECK(expected_digits == 37629);
  CHECK(decimal_digits(b.exact()) == expected_digits);
  CHECK(b.to_string().size() == expected_digits);
}

TEST_CASE("finite bound switches to symbolic past the digit cap") {
  // 13 * 62500 * log10(13) ~ 905k digits; 14 gives ~1.003M.
  CHECK(theorem_bound(13, BoundMode::Finite).is_exact());
  const auto big = theorem_bound(14, BoundMode::Finite);
  REQUIRE_FALSE(big.is_exact());
  const auto& power = std::get<SymbolicPower>(big.value());
  CHECK(power.base == 14);
  CHECK(power.exponent == 875000);
  CHECK(big.to_string() == "14^875000");
}

TEST_CASE("general bound is a height-10 tower") {
  const auto b = theorem_bound(1, BoundMode::General);
  REQUIRE_FALSE(b.is_exact());
  const auto& tower = std::get<SymbolicTower>(b.value());
  CHECK(tower.base == 1);
  CHECK(tower.height == 10);
  CHECK(b.to_string() == "exp_10(1)");
}

TEST_CASE("tower prefix values") {
  CHECK(exp_tower(1, 0).exact() == 1);
  CHECK(exp_tower(1, 1).exact() == 2);
  CHECK(exp_tower(1, 2).exact() == 4);
  CHECK(exp_tower(1, 3).exact() == 16);
  CHECK(exp_tower(1, 4).exact() == 65536);
  const auto fifth = exp_tower(1, 5);
  REQUIRE(fifth.is_exact());
  CHECK(decimal_digits(fifth.exact()) == 19729);
  CHECK_FALSE(exp_tower(1, 6).is_exact());
  CHECK(exp_tower(3, 2).exact() == 256);
}
