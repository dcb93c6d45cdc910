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

#include <span>
#include <vector>

#include "rlrqaoa/ising.hpp"

namespace rlrqaoa {

/// Depth-1 QAOA angles: mixer angle alpha, phase angle gamma (radians).
struct Angles {
  double alpha = 0.0;
  double gamma = 0.0;

  friend bool operator==(const Angles &, const Angles &) = default;
};

/// Two-correlation M_uv = <Z_u Z_v> for one edge. The partial derivatives
/// are only populated by all_correlations_with_gradient().
struct Correlation {
  Edge edge;
  double value = 0.0;
  double d_alpha = 0.0;
  double d_gamma = 0.0;
};

/// One entry per edge of the instance, in canonical edge order.
class CorrelationVector {
public:
  std::vector<Correlation> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  const Correlation &operator[](std::size_t i) const { return entries[i]; }

  /// Index of the entry for `edge`, or size() when absent.
  std::size_t index_of(Edge edge) const;
};

// Closed-form depth-1 expectations. The public API takes (alpha, gamma) as in
// the QAOA state exp(-i alpha H_b) exp(-i gamma H_n)|+^n>; internally the
// couplings and fields are scaled by gamma. Products over "k != u" only visit
// actual neighbors, since a missing coupling contributes cos(0) = 1.

double expectation_z(const IsingInstance &instance, Angles angles, Vertex u);
double expectation_zz(const IsingInstance &instance, Angles angles, Edge edge);

CorrelationVector all_correlations(const IsingInstance &instance,
                                   Angles angles);
CorrelationVector all_correlations_with_gradient(const IsingInstance &instance,
                                                 Angles angles);

/// offset + Σ h_u <Z_u> + Σ J_uv <Z_u Z_v>.
double energy_expectation(const IsingInstance &instance, Angles angles);

/// <H>(alpha) = p cos(4 alpha) + q sin(4 alpha) + r at a fixed gamma.
struct PQRFit {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
  double gamma = 0.0;

  double energy_at(double alpha) const;
};

/// Solves for p, q, r from the energies at alpha = pi/8, -pi/8 and 0.
/// Requires a field-free instance (unsupported_fields otherwise).
PQRFit fit_pqr(const IsingInstance &instance, double gamma);

struct AlphaOptimum {
  double alpha = 0.0;
  double energy = 0.0;
};

/// Maximizer of the fitted curve: energy r + sqrt(p^2 + q^2), alpha with
/// tan(4 alpha) = q/p, p cos(4 alpha) >= 0 and q sin(4 alpha) >= 0.
AlphaOptimum optimal_alpha(const PQRFit &fit);

struct AngleOptimum {
  Angles angles;
  double energy = 0.0;
};

/// Energy-optimal depth-1 angles: grid_n equidistant gamma points on
/// [0, 2 pi] with the analytic alpha at each, then a bounded 1-D refinement of
/// gamma on the winner's neighboring interval (tolerance 1e-6).
AngleOptimum optimize_angles(const IsingInstance &instance, int grid_n = 2000);

/// Bounded refinement only, on [gamma_lo, gamma_hi].
AngleOptimum optimize_angles_in(const IsingInstance &instance, double gamma_lo,
                                double gamma_hi);

struct LandscapePoint {
  double alpha = 0.0;
  double gamma = 0.0;
  double energy = 0.0;
};

/// Energy on an alpha x gamma grid over [0, pi) x [0, 2 pi).
std::vector<LandscapePoint> energy_landscape(const IsingInstance &instance,
                                             int alpha_points,
                                             int gamma_points);

/// Exact 2^n-amplitude simulation of the depth-l state, l = schedule.size().
struct StatevectorExpectations {
  std::vector<Vertex> vertices; // alive labels, qubit order
  std::vector<double> z;        // <Z_u>, aligned with `vertices`
  CorrelationVector zz;         // <Z_u Z_v> per edge
  double norm = 0.0;
};

inline constexpr int kStatevectorMaxQubits = 14;

StatevectorExpectations
statevector_expectations(const IsingInstance &instance,
                         std::span<const Angles> schedule);

} // namespace rlrqaoa
