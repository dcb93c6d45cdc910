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

// Independent reference computations shared by the test executables.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "rlrqaoa/ising.hpp"
#include "rlrqaoa/random.hpp"

namespace testing {

using namespace rlrqaoa;

struct RandomInstanceOptions {
  int n = 6;
  double edge_probability = 0.6;
  bool gaussian = true;
  bool fields = false;
  double offset = 0.0;
};

inline IsingInstance random_instance(const RandomInstanceOptions &o, Rng &rng) {
  IsingInstance inst(o.n);
  for (int u = 0; u < o.n; ++u)
    for (int v = u + 1; v < o.n; ++v)
      if (uniform01(rng) < o.edge_probability) {
        double w = o.gaussian ? standard_normal(rng) : ((rng() & 1) ? 1.0 : -1.0);
        if (w == 0.0)
          w = 0.5;
        inst.add_edge(u, v, w);
      }
  if (o.fields)
    for (int u = 0; u < o.n; ++u)
      inst.set_field(u, standard_normal(rng));
  inst.set_offset(o.offset);
  return inst;
}

/// Energy straight from the edge and field lists.
inline double naive_energy(const IsingInstance &inst, const Assignment &x) {
  double e = inst.offset();
  for (Vertex u : inst.vertices())
    e += inst.field(u) * x[u];
  for (const auto &we : inst.edges())
    e += we.weight * x[we.edge.u] * x[we.edge.v];
  return e;
}

/// Assignment over the surviving vertices from the low bits of `bits`.
inline Assignment assignment_from_bits(const IsingInstance &inst, std::uint64_t bits) {
  Assignment x(inst.n_original(), 0);
  int k = 0;
  for (Vertex u : inst.vertices())
    x[u] = ((bits >> k++) & 1) ? -1 : 1;
  return x;
}

struct NaiveOptimum {
  double energy = -std::numeric_limits<double>::infinity();
  std::uint64_t count = 0;
};

/// Full enumeration over all 2^m assignments of the surviving vertices.
inline NaiveOptimum naive_maximum(const IsingInstance &inst, double tol = 1e-9) {
  NaiveOptimum best;
  const int m = inst.num_vertices();
  std::vector<double> energies;
  energies.reserve(std::size_t{1} << m);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b)
    energies.push_back(naive_energy(inst, assignment_from_bits(inst, b)));
  best.energy = *std::max_element(energies.begin(), energies.end());
  for (double e : energies)
    best.count += e >= best.energy - tol;
  return best;
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// |a - b| / max(1, |a|, |b|).
inline double relative_error(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace testing
