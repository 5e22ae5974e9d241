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

#ifndef MONOPATH_KERNELS_HPP
#define MONOPATH_KERNELS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "monopath/model.hpp"

namespace monopath {

/// Every vertex outside S reaches some member of S by a monochromatic path.
bool is_absorbing(const ColouredTournament& t, const std::vector<Vertex>& s);

struct AbsorbingResult {
  std::size_t size;
  std::vector<Vertex> witness;
};

/// Minimum absorbing set, lexicographically least among the minimum ones.
/// Requires n >= 1.
AbsorbingResult min_absorbing(const ColouredTournament& t);

/// Independent K such that every other vertex is reached from K by a path of
/// at most two arcs.
bool is_quasi_kernel(const Digraph& d, const std::vector<Vertex>& k);

/// Smallest quasi-kernel, lexicographically least among those. Exhaustive.
std::vector<Vertex> quasi_kernel(const Digraph& d);

struct PartitionDuo {
  std::vector<Vertex> kernel;  // K: reaches others within two arcs
  std::vector<Vertex> sink;    // S: reached from others within two arcs

  friend bool operator==(const PartitionDuo&, const PartitionDuo&) = default;
};

/// Disjoint independent K, S such that each vertex is in K or S, is reached
/// from K, or reaches S, by a path of at most two arcs.
bool is_partition_duo(const Digraph& d, const PartitionDuo& p);

/// Minimum |K|+|S| partition duo. Ties: K then S in characteristic-vector
/// order, where A precedes B iff the smallest element of A xor B is in A.
PartitionDuo quasi_partition_duo(const Digraph& d);

/// A directed cycle of length 3 or 4 that is not quasi-monochromatic, rotated
/// to start at its smallest vertex; 3-cycles are reported before 4-cycles.
std::optional<std::vector<Vertex>> gs_violation(const ColouredTournament& t);

/// Every directed 3- and 4-cycle has all but at most one arc of one colour.
bool gs_condition(const ColouredTournament& t);

/// A vertex triple whose three connecting arcs carry three distinct colours.
std::optional<std::array<Vertex, 3>> minggang_violation(const ColouredTournament& t);

/// No triple of vertices spans three distinct colours (orientation ignored).
bool minggang_condition(const ColouredTournament& t);

}  // namespace monopath

#endif  // MONOPATH_KERNELS_HPP
