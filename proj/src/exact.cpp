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

#include "rlrqaoa/exact.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "rlrqaoa/error.hpp"

namespace rlrqaoa {

ExactSolution brute_force_exact(const IsingInstance &instance) {
  const auto vertices = instance.vertices();
  const int m = static_cast<int>(vertices.size());
  if (m > kExactMaxVertices)
    throw Error(ErrorKind::size_limit,
                "exact solver is limited to " +
                    std::to_string(kExactMaxVertices) + " vertices, got " +
                    std::to_string(m));

  ExactSolution out;
  out.assignment.assign(instance.n_original(), 0);
  for (Vertex u : vertices)
    out.assignment[u] = 1;
  const bool symmetric = !instance.has_fields();
  if (m == 0 || (symmetric && instance.empty_edges())) {
    out.energy = instance.offset();
    out.degeneracy = std::uint64_t{1} << m;
    return out;
  }

  std::vector<int> local(instance.n_original(), -1);
  for (int i = 0; i < m; ++i)
    local[vertices[i]] = i;
  struct Neighbor {
    int index;
    double weight;
  };
  std::vector<std::vector<Neighbor>> adj(m);
  std::vector<double> h(m);
  double scale = 1.0;
  for (int i = 0; i < m; ++i) {
    h[i] = instance.field(vertices[i]);
    scale += std::abs(h[i]);
    for (const auto &[k, w] : instance.neighbors(vertices[i])) {
      adj[i].push_back({local[k], w});
      scale += 0.5 * std::abs(w);
    }
  }
  const double tol = 1e-9 * scale;

  std::vector<int> s(m, 1);
  std::vector<double> f(m);
  auto exact_state = [&] {
    double e = instance.offset();
    for (int i = 0; i < m; ++i) {
      f[i] = h[i];
      for (const auto &nb : adj[i])
        f[i] += nb.weight * s[nb.index];
      e += h[i] * s[i];
    }
    for (int i = 0; i < m; ++i)
      for (const auto &nb : adj[i])
        if (nb.index > i)
          e += nb.weight * s[i] * s[nb.index];
    return e;
  };

  // Gray code over the first `free` spins; the last is pinned when symmetric.
  const int free = symmetric ? m - 1 : m;
  const std::uint64_t total = std::uint64_t{1} << free;
  constexpr std::uint64_t kResync = std::uint64_t{1} << 16;

  double e = exact_state();
  double best = e;
  std::uint64_t best_code = 0;
  std::uint64_t count = 1;
  std::uint64_t code = 0;
  for (std::uint64_t t = 1; t < total; ++t) {
    const int i = std::countr_zero(t);
    code ^= std::uint64_t{1} << i;
    e -= 2.0 * s[i] * f[i];
    const double delta = -2.0 * s[i];
    s[i] = -s[i];
    for (const auto &nb : adj[i])
      f[nb.index] += delta * nb.weight;
    if ((t & (kResync - 1)) == 0)
      e = exact_state();
    if (e > best + tol) {
      best = e;
      best_code = code;
      count = 1;
    } else if (e >= best - tol) {
      ++count;
    }
  }

  for (int i = 0; i < free; ++i)
    out.assignment[vertices[i]] = ((best_code >> i) & 1U) ? -1 : 1;
  out.energy = energy(instance, out.assignment);
  out.degeneracy = symmetric ? 2 * count : count;
  return out;
}

} // namespace rlrqaoa
