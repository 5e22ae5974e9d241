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

#ifndef MONOPATH_ERROR_HPP
#define MONOPATH_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace monopath {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VertexOutOfRange : public Error {
 public:
  VertexOutOfRange(std::uint64_t vertex, std::size_t order)
      : Error("vertex " + std::to_string(vertex) + " out of range for order " +
              std::to_string(order)),
        vertex_(vertex) {}

  std::uint64_t vertex() const { return vertex_; }

 private:
  std::uint64_t vertex_;
};

/// Raised by the text-format readers.
class ParseError : public Error {
 public:
  enum class Kind {
    MalformedHeader,
    MalformedLine,
    MissingArc,
    DuplicateArc,
    ColourOutOfRange,
  };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// An enumeration would visit more objects than the configured budget.
/// `required` saturates at UINT64_MAX.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("enumeration of " + std::to_string(required) +
              (required == UINT64_MAX ? "+" : "") +
              " objects exceeds budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

class NotFoundWithinCap : public Error {
 public:
  explicit NotFoundWithinCap(std::size_t cap)
      : Error("no duo of size at most " + std::to_string(cap)), cap_(cap) {}

  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class ColouringIncomplete : public Error {
 public:
  ColouringIncomplete(std::size_t given, std::size_t edges)
      : Error("colouring covers " + std::to_string(given) + " of " +
              std::to_string(edges) + " edges") {}
};

}  // namespace monopath

#endif  // MONOPATH_ERROR_HPP
