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

#include "monopath/bound.hpp"

#include <cmath>

#include "monopath/error.hpp"

namespace monopath {

std::string BoundExpr::to_string() const {
  struct Render {
    std::string operator()(const mpz_class& v) const { return v.get_str(); }
    std::string operator()(const SymbolicTower& t) const {
      return "exp_" + std::to_string(t.height) + "(" + std::to_string(t.base) + ")";
    }
    std::string operator()(const SymbolicPower& p) const {
      return std::to_string(p.base) + "^" + std::to_string(p.exponent);
    }
  };
  return std::visit(Render{}, value_);
}

std::size_t decimal_digits(const mpz_class& value) {
  if (value == 0) return 1;
  return value.get_str().size() - (value < 0 ? 1 : 0);
}

BoundExpr exp_tower(std::uint64_t base, unsigned height) {
  // Bit budget with headroom: 2^x has floor(x log10 2)+1 digits.
  const double max_exponent = static_cast<double>(kExactDigitCap) / std::log10(2.0) + 64;
  mpz_class value(static_cast<unsigned long>(base));
  for (unsigned level = 0; level < height; ++level) {
    if (value > max_exponent) return BoundExpr(SymbolicTower{base, height});
    mpz_class next = 0;
    mpz_setbit(next.get_mpz_t(), value.get_ui());
    if (decimal_digits(next) > kExactDigitCap) return BoundExpr(SymbolicTower{base, height});
    value = std::move(next);
  }
  return BoundExpr(std::move(value));
}

BoundExpr theorem_bound(std::uint64_t colours, BoundMode mode) {
  if (colours == 0) throw Error("bound needs at least one colour");
  if (mode == BoundMode::General) return exp_tower(colours, 10);
  const std::uint64_t exponent = 62500 * colours;
  const double estimate = static_cast<double>(exponent) * std::log10(static_cast<double>(colours));
  if (estimate > static_cast<double>(kExactDigitCap) + 16)
    return BoundExpr(SymbolicPower{colours, exponent});
  mpz_class value;
  mpz_ui_pow_ui(value.get_mpz_t(), colours, exponent);
  if (decimal_digits(value) > kExactDigitCap) return BoundExpr(SymbolicPower{colours, exponent});
  return BoundExpr(std::move(value));
}

}  // namespace monopath
