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

#include "monopath/vertex_set.hpp"

#include <algorithm>

namespace monopath {

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::of(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (auto v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::next(std::size_t from) const {
  if (from >= universe_) return npos;
  std::size_t i = from >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++i == words_.size()) return npos;
    w = words_[i];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace monopath
