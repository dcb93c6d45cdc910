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
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rlrqaoa/exact.hpp"
#include "rlrqaoa/ising.hpp"
#include "rlrqaoa/qaoa.hpp"
#include "rlrqaoa/random.hpp"

namespace rlrqaoa {

struct RqaoaConfig {
  int n_c = 8;
  double tie_tolerance = 1e-8;
  int grid_n = 2000;
  std::uint64_t seed = 0;
  /// Re-optimize gamma only near the previous iteration's optimum instead of
  /// running the full grid.
  bool warm_start = false;
};

struct TrajectoryStep {
  Edge edge;
  int sign = 1;
  double abs_correlation = 0.0;
};

struct RunResult {
  Assignment assignment;
  double energy = 0.0;
  /// Present only when the exact optimum is known and strictly positive.
  std::optional<double> approx_ratio;
  /// Per iteration: number of edges tied with the maximal |M|, minus one.
  /// Always n - n_c long; iterations skipped on an edge-free instance are 0.
  std::vector<int> tie_counts;
  std::vector<TrajectoryStep> trajectory;
  std::vector<Angles> angle_log;
  std::uint64_t seed = 0;
};

/// achieved / exact when exact > 0.
std::optional<double> approximation_ratio(double achieved,
                                          std::optional<double> exact);

/// Indices of entries with |M| >= max|M| - tolerance.
std::vector<std::size_t> greedy_tie_set(const CorrelationVector &correlations,
                                        double tolerance);

struct GreedyChoice {
  std::size_t index = 0;
  Edge edge;
  int sign = 1;
  int ties = 0;
};

/// Uniform choice among the tie set; sign = sign(M) with sign(0) = +1.
GreedyChoice select_edge_greedy(const CorrelationVector &correlations,
                                Rng &rng, double tie_tolerance);

/// Memoizes optimize_angles() by coupling structure. Thread-safe.
class AngleCache {
public:
  explicit AngleCache(std::size_t capacity = 200000) : capacity_(capacity) {}

  AngleOptimum optimize(const IsingInstance &instance, int grid_n);
  std::size_t size() const;

private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, AngleOptimum> entries_;
  std::size_t capacity_;
};

struct RunOptions {
  std::optional<double> exact_energy;
  AngleCache *cache = nullptr;
};

/// One RQAOA run: n - n_c greedy contractions, exact solve of the remainder,
/// reconstruction on the original labels.
RunResult run_rqaoa(const IsingInstance &instance, const RqaoaConfig &config,
                    Rng &rng, const RunOptions &options = {});

/// Run i uses the stream make_stream(config.seed, i).
RunResult run_rqaoa_indexed(const IsingInstance &instance,
                            const RqaoaConfig &config, std::uint64_t index,
                            const RunOptions &options = {});

/// Runs [0, k) in parallel; results are in run order.
std::vector<RunResult> run_many(const IsingInstance &instance,
                                const RqaoaConfig &config, int k, int jobs,
                                const RunOptions &options = {});

struct BestOfOptions {
  int jobs = 1;
  std::optional<double> exact_energy;
  /// Stop at the first run whose energy exceeds this value. The result is
  /// the best of runs [0, stopping run], independent of `jobs`.
  std::optional<double> stop_above;
  AngleCache *cache = nullptr;
};

struct BestOfRuns {
  RunResult best;
  std::size_t best_index = 0;
  int runs_used = 0;
};

/// Highest-energy result over k independent runs (earliest run on ties).
BestOfRuns best_of_runs(const IsingInstance &instance,
                        const RqaoaConfig &config, int k,
                        const BestOfOptions &options = {});

} // namespace rlrqaoa
