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

#include <cmath>
#include <complex>
#include <string>

#include "rlrqaoa/error.hpp"
#include "rlrqaoa/qaoa.hpp"

namespace rlrqaoa {

StatevectorExpectations
statevector_expectations(const IsingInstance &instance,
                         std::span<const Angles> schedule) {
  const auto vertices = instance.vertices();
  const int n = static_cast<int>(vertices.size());
  if (n > kStatevectorMaxQubits)
    throw Error(ErrorKind::size_limit,
                "statevector simulation is limited to " +
                    std::to_string(kStatevectorMaxQubits) + " qubits, got " +
                    std::to_string(n));

  std::vector<int> qubit(instance.n_original(), -1);
  for (int q = 0; q < n; ++q)
    qubit[vertices[q]] = q;

  // Basis index bit q = 0 is the Z_q = +1 eigenstate.
  const std::size_t dim = std::size_t{1} << n;
  auto spin = [](std::size_t x, int q) { return ((x >> q) & 1U) ? -1.0 : 1.0; };

  const auto edges = instance.edges();
  std::vector<double> cost(dim, instance.offset());
  for (std::size_t x = 0; x < dim; ++x) {
    for (int q = 0; q < n; ++q)
      cost[x] += instance.field(vertices[q]) * spin(x, q);
    for (const auto &[e, w] : edges)
      cost[x] += w * spin(x, qubit[e.u]) * spin(x, qubit[e.v]);
  }

  using cplx = std::complex<double>;
  std::vector<cplx> psi(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim))));
  for (const Angles &layer : schedule) {
    for (std::size_t x = 0; x < dim; ++x)
      psi[x] *= std::polar(1.0, -layer.gamma * cost[x]);
    // exp(-i a X) = cos(a) I - i sin(a) X on every qubit.
    const cplx c(std::cos(layer.alpha), 0.0);
    const cplx s(0.0, -std::sin(layer.alpha));
    for (int q = 0; q < n; ++q) {
      const std::size_t bit = std::size_t{1} << q;
      for (std::size_t x = 0; x < dim; ++x) {
        if (x & bit)
          continue;
        const cplx a0 = psi[x];
        const cplx a1 = psi[x | bit];
        psi[x] = c * a0 + s * a1;
        psi[x | bit] = c * a1 + s * a0;
      }
    }
  }

  StatevectorExpectations out;
  out.vertices = vertices;
  out.z.assign(n, 0.0);
  out.zz.entries.reserve(edges.size());
  for (const auto &we : edges)
    out.zz.entries.push_back({we.edge, 0.0, 0.0, 0.0});
  for (std::size_t x = 0; x < dim; ++x) {
    const double p = std::norm(psi[x]);
    out.norm += p;
    for (int q = 0; q < n; ++q)
      out.z[q] += p * spin(x, q);
    for (auto &entry : out.zz.entries)
      entry.value +=
          p * spin(x, qubit[entry.edge.u]) * spin(x, qubit[entry.edge.v]);
  }
  return out;
}

} // namespace rlrqaoa
