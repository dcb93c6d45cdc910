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

#include "rlrqaoa/rqaoa.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "rlrqaoa/error.hpp"
#include "rlrqaoa/parallel.hpp"

namespace rlrqaoa {

std::optional<double> approximation_ratio(double achieved,
                                          std::optional<double> exact) {
  if (!exact || !(*exact > 0.0))
    return std::nullopt;
  return achieved / *exact;
}

std::vector<std::size_t> greedy_tie_set(const CorrelationVector &correlations,
                                        double tolerance) {
  double max_abs = 0.0;
  for (const auto &c : correlations.entries)
    max_abs = std::max(max_abs, std::abs(c.value));
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < correlations.size(); ++i)
    if (std::abs(correlations[i].value) >= max_abs - tolerance)
      tied.push_back(i);
  return tied;
}

GreedyChoice select_edge_greedy(const CorrelationVector &correlations,
                                Rng &rng, double tie_tolerance) {
  if (correlations.empty())
    throw Error(ErrorKind::no_action, "no edges to select from");
  if (tie_tolerance < 0.0)
    throw Error(ErrorKind::invalid_argument, "negative tie tolerance");
  const auto tied = greedy_tie_set(correlations, tie_tolerance);
  const std::size_t pick =
      tied.size() == 1 ? tied.front() : tied[uniform_index(rng, tied.size())];
  const auto &c = correlations[pick];
  return {pick, c.edge, sign_of(c.value), static_cast<int>(tied.size()) - 1};
}

namespace {

std::string structure_key(const IsingInstance &g) {
  std::string key;
  const auto edges = g.edges();
  key.reserve(edges.size() * (2 * sizeof(Vertex) + sizeof(double)));
  for (const auto &[e, w] : edges) {
    const auto bits = std::bit_cast<std::uint64_t>(w);
    key.append(reinterpret_cast<const char *>(&e.u), sizeof(Vertex));
    key.append(reinterpret_cast<const char *>(&e.v), sizeof(Vertex));
    key.append(reinterpret_cast<const char *>(&bits), sizeof(bits));
  }
  return key;
}

} // namespace

AngleOptimum AngleCache::optimize(const IsingInstance &instance, int grid_n) {
  if (instance.has_fields())
    return optimize_angles(instance, grid_n);
  auto key = structure_key(instance);
  key.append(reinterpret_cast<const char *>(&grid_n), sizeof(grid_n));
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end())
      return {it->second.angles, it->second.energy + instance.offset()};
  }
  const auto opt = optimize_angles(instance, grid_n);
  std::lock_guard lock(mutex_);
  if (entries_.size() >= capacity_)
    entries_.clear();
  entries_.emplace(std::move(key),
                   AngleOptimum{opt.angles, opt.energy - instance.offset()});
  return opt;
}

std::size_t AngleCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

RunResult run_rqaoa(const IsingInstance &instance, const RqaoaConfig &config,
                    Rng &rng, const RunOptions &options) {
  const int n = instance.num_vertices();
  if (config.n_c < 1 || config.n_c > n)
    throw Error(ErrorKind::invalid_argument,
                "n_c must lie in [1, " + std::to_string(n) + "], got " +
                    std::to_string(config.n_c));
  if (config.tie_tolerance < 0.0)
    throw Error(ErrorKind::invalid_argument, "negative tie tolerance");

  const int iterations = n - config.n_c;
  RunResult result;
  result.tie_counts.reserve(iterations);
  IsingInstance current = instance;
  ReconstructionMap map;

  for (int it = 0; it < iterations; ++it) {
    if (current.empty_edges())
      break;
    AngleOptimum opt;
    if (config.warm_start && !result.angle_log.empty()) {
      const double g = result.angle_log.back().gamma;
      opt = optimize_angles_in(current, g - std::numbers::pi / 8,
                               g + std::numbers::pi / 8);
    } else if (options.cache) {
      opt = options.cache->optimize(current, config.grid_n);
    } else {
      opt = optimize_angles(current, config.grid_n);
    }
    const auto correlations = all_correlations(current, opt.angles);
    const auto choice =
        select_edge_greedy(correlations, rng, config.tie_tolerance);
    map.append(contract_in_place(current, choice.edge, choice.sign));

    result.angle_log.push_back(opt.angles);
    result.tie_counts.push_back(choice.ties);
    result.trajectory.push_back(
        {choice.edge, choice.sign,
         std::abs(correlations[choice.index].value)});
  }
  result.tie_counts.resize(iterations, 0);

  Assignment remainder;
  if (current.num_vertices() <= kExactMaxVertices) {
    remainder = brute_force_exact(current).assignment;
  } else {
    // Only reachable when the instance became edge-free early.
    remainder.assign(instance.n_original(), 0);
    for (Vertex u : current.vertices())
      remainder[u] = 1;
  }
  result.assignment = reconstruct(map, std::move(remainder));
  result.energy = energy(instance, result.assignment);
  result.approx_ratio = approximation_ratio(result.energy, options.exact_energy);
  return result;
}

RunResult run_rqaoa_indexed(const IsingInstance &instance,
                            const RqaoaConfig &config, std::uint64_t index,
                            const RunOptions &options) {
  Rng rng = make_stream(config.seed, index);
  auto result = run_rqaoa(instance, config, rng, options);
  result.seed = derive_seed(config.seed, index);
  return result;
}

std::vector<RunResult> run_many(const IsingInstance &instance,
                                const RqaoaConfig &config, int k, int jobs,
                                const RunOptions &options) {
  if (k < 1)
    throw Error(ErrorKind::invalid_budget, "run budget must be at least 1");
  std::vector<RunResult> results(k);
  parallel_for(0, static_cast<std::size_t>(k), jobs, [&](std::size_t i) {
    results[i] = run_rqaoa_indexed(instance, config, i, options);
  });
  return results;
}

BestOfRuns best_of_runs(const IsingInstance &instance,
                        const RqaoaConfig &config, int k,
                        const BestOfOptions &options) {
  if (k < 1)
    throw Error(ErrorKind::invalid_budget, "run budget must be at least 1");
  const RunOptions run_options{options.exact_energy, options.cache};
  const std::size_t chunk =
      static_cast<std::size_t>(std::max(options.jobs, 1)) * 4;

  BestOfRuns out;
  std::vector<RunResult> batch;
  for (std::size_t start = 0; start < static_cast<std::size_t>(k);
       start += chunk) {
    const std::size_t end = std::min<std::size_t>(start + chunk, k);
    batch.assign(end - start, RunResult{});
    parallel_for(start, end, options.jobs, [&](std::size_t i) {
      batch[i - start] = run_rqaoa_indexed(instance, config, i, run_options);
    });
    for (std::size_t i = start; i < end; ++i) {
      auto &r = batch[i - start];
      const bool improves = out.runs_used == 0 || r.energy > out.best.energy;
      const bool stop = options.stop_above && r.energy > *options.stop_above;
      if (improves) {
        out.best = std::move(r);
        out.best_index = i;
      }
      out.runs_used = static_cast<int>(i + 1);
      if (stop)
        return out;
    }
  }
  return out;
}

} // namespace rlrqaoa
