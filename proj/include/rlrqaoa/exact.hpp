// Copyright 2026 The rlrqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "rlrqaoa/ising.hpp"

namespace rlrqaoa {

inline constexpr int kExactMaxVertices = 30;

struct ExactSolution {
  Assignment assignment; // over all original labels; eliminated ones are 0
  double energy = 0.0;
  /// Number of maximizing assignments of the surviving vertices, counting
  /// both members of each global spin-flip pair.
  std::uint64_t degeneracy = 0;
};

/// Exhaustive maximization over the surviving vertices by Gray-code
/// enumeration. Without fields one spin is pinned to +1 and the degeneracy is
/// doubled. Ties are resolved toward the first assignment visited, which for
/// an edge-free instance is all +1.
ExactSolution brute_force_exact(const IsingInstance &instance);

} // namespace rlrqaoa
