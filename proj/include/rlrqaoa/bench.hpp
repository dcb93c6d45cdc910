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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rlrqaoa/instances.hpp"
#include "rlrqaoa/rqaoa.hpp"
#include "rlrqaoa/trainer.hpp"

namespace rlrqaoa {

/// Shared CSV layouts.
inline const std::vector<std::string> kRunsColumns{
    "instance_id", "seed", "energy", "exact_energy", "ratio", "ties_total", "runtime_ms"};
inline const std::vector<std::string> kTiesColumns{"instance_id", "run", "iteration", "ties"};
inline const std::vector<std::string> kCurveColumns{"episode", "energy", "best_so_far", "ratio"};
inline const std::vector<std::string> kHardIndexColumns{
    "instance_id", "n", "d", "weight_model", "exact_energy", "rqaoa_best", "ratio"};

struct TimedRun {
  RunResult result;
  std::optional<double> runtime_ms;
};

/// Runs [0, k) with per-run wall time when `timing` is set.
std::vector<TimedRun> timed_runs(const IsingInstance &instance,
                                 const RqaoaConfig &config, int k, int jobs,
                                 bool timing, const RunOptions &options = {});

void write_runs_csv(const std::filesystem::path &path, const std::string &id,
                    const std::vector<TimedRun> &runs,
                    std::optional<double> exact_energy, bool append = false);
void write_ties_csv(const std::filesystem::path &path, const std::string &id,
                    const std::vector<TimedRun> &runs);
void write_learning_curve(const std::filesystem::path &path,
                          const std::vector<CurvePoint> &curve);
void write_hard_index(const std::filesystem::path &path,
                      const std::vector<HardInstanceRecord> &records);

struct TieSummary {
  double mean_ratio = 0.0; // NaN without a positive exact optimum
  double std_ratio = 0.0;
  double ground_state_probability = 0.0;
  double tie_fraction = 0.0; // iterations with at least one tie
  double mean_ties_per_iteration = 0.0;
};

TieSummary summarize_runs(const std::vector<TimedRun> &runs, double exact_energy);

struct CageTiesConfig {
  int weight_seeds = 5;
  int runs = 200;
  RqaoaConfig rqaoa;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool timing = false;
};

struct CageTiesInstance {
  std::string id;
  IsingInstance instance;
  ExactSolution exact;
  std::vector<TimedRun> runs;
  TieSummary summary;
};

struct CageTiesReport {
  std::vector<CageTiesInstance> instances;
  TieSummary overall;
  /// Some weight seed has mean ratio in [0.91, 1] and tie fraction in [0.7, 1].
  bool seed_in_band = false;
};

/// Random +-1 weightings of the (3,8)-cage; weighting k is drawn from
/// make_stream(seed, k) and its runs use seed derive_seed(seed, 1000 + k).
CageTiesReport bench_cage_ties(const CageTiesConfig &config, AngleCache *cache = nullptr);
void write_cage_ties(const CageTiesReport &report, const std::filesystem::path &dir);

struct HardBenchInstance {
  std::string id;
  IsingInstance instance;
  double exact_energy = 0.0;
  /// Recomputed from rqaoa_runs runs when absent.
  std::optional<double> rqaoa_best;
};

struct HardBenchConfig {
  int rqaoa_runs = 1400;
  int rl_runs = 15;
  TrainerConfig trainer;
  RqaoaConfig rqaoa;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct HardBenchRow {
  std::string id;
  int n = 0;
  double exact_energy = 0.0;
  double rqaoa_best = 0.0;
  double rqaoa_ratio = 0.0;
  double rl_best = 0.0;
  double rl_ratio = 0.0;
  double rl_mean_ratio = 0.0; // mean over runs of each run's best ratio
  bool improved = false;
};

struct HardBenchReport {
  std::vector<HardBenchRow> rows;
  /// curves[instance][run]
  std::vector<std::vector<std::vector<CurvePoint>>> curves;
};

/// Hard instances from the mixed ensemble: member j cycles through the
/// feasible cells (n, d, model), n in [n_min, n_max], 3 <= d < n, both weight
/// models, and comes from make_member(.., seed, j).
MineResult mine_hard_mixed(int wanted, int n_min, int n_max, int max_scan,
                           std::uint64_t seed, const MineConfig &config);

/// Run r on instance k trains with seed derive_seed(derive_seed(seed, k), r).
HardBenchReport bench_hard_instances(const std::vector<HardBenchInstance> &instances,
                      const HardBenchConfig &config, AngleCache *cache = nullptr);
void write_hard_instances(const HardBenchReport &report, const std::filesystem::path &dir);

struct SeparationConfig {
  int instances = 5;
  int n = 30;
  int runs = 5;
  int episodes = 1000;
  TrainerConfig trainer;
  RqaoaConfig rqaoa;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool exact = true;
};

struct MeanCurve {
  std::vector<double> mean;
  std::vector<double> ci_low;  // 95% Student-t band
  std::vector<double> ci_high;
};

MeanCurve mean_curve(const std::vector<std::vector<CurvePoint>> &runs);

struct SeparationInstance {
  std::string id;
  IsingInstance instance;
  std::optional<double> exact_energy;
  /// runs[policy][run], policy 0 = RL-RQAOA, 1 = RL-RONE
  std::vector<std::vector<CurvePoint>> runs[2];
  MeanCurve curves[2];
};

struct SeparationReport {
  std::vector<SeparationInstance> instances;
  int checkpoint = 0; // episode index compared in the summary

  double mean_at_checkpoint(std::size_t instance, int policy) const;
};

/// Instance k comes from make_member(n, 3, bimodal, seed, k); both policies
/// share the training seeds derive_seed(derive_seed(seed, 100 + k), r).
SeparationReport bench_separation(const SeparationConfig &config, AngleCache *cache = nullptr);
void write_separation(const SeparationReport &report, const std::filesystem::path &dir);

} // namespace rlrqaoa
