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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlrqaoa/ising.hpp"
#include "rlrqaoa/policy.hpp"
#include "rlrqaoa/random.hpp"
#include "rlrqaoa/rqaoa.hpp"

namespace rlrqaoa {

struct AdamSettings {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Adam moment state, carried across updates.
class AdamState {
public:
  /// values += lr_i * m_hat_i / (sqrt(v_hat_i) + epsilon), i.e. ascent along
  /// `gradient`.
  void ascend(std::span<double> values, std::span<const double> gradient,
              std::span<const double> learning_rates,
              const AdamSettings &settings);

  long steps() const { return t_; }

private:
  std::vector<double> m_;
  std::vector<double> v_;
  long t_ = 0;
};

enum class AngleInit { energy_optimal, random };

const char *to_string(AngleInit init);
AngleInit parse_angle_init(const std::string &text);

struct TrainerConfig {
  int batch_size = 10;
  int total_episodes = 1400;
  double discount = 0.99;
  double lr_angles = 0.001;
  double lr_betas = 0.5;
  double beta_init = 25.0;
  AdamSettings adam;
  AngleInit angle_init = AngleInit::energy_optimal;
  BetaLayout layout = BetaLayout::one_all;
  /// When false the angles stay at their initial values.
  bool train_angles = true;
  /// Subtract the batch-mean terminal reward before weighting gradients.
  bool baseline = false;
  std::uint64_t seed = 0;
  int jobs = 1;
};

nlohmann::json to_json(const TrainerConfig &config);

struct EpisodeStep {
  int iteration = 0;
  Action action;
  double probability = 0.0;
  SparseGradient grad_log_prob;
  double abs_correlation = 0.0; // 1 for RL-RONE
};

struct EpisodeTrace {
  std::vector<EpisodeStep> steps;
  double terminal_reward = 0.0;
  std::vector<double> returns;
  Assignment assignment;
  double energy = 0.0;
};

/// Observer called once per step with the state before contraction.
using StepObserver =
    std::function<void(int iteration, const IsingInstance &state,
                       const CorrelationVector &correlations,
                       const ActionDistribution &distribution,
                       const Action &action)>;

struct EpisodeOptions {
  /// Evaluate RL-RQAOA correlations at the energy-optimal angles of each
  /// visited state instead of the per-iteration parameters (frozen limit
  /// mode; the angle gradients are then meaningless).
  bool optimal_angles_per_state = false;
  int grid_n = 2000;
  AngleCache *cache = nullptr;
  StepObserver observer;
};

/// One episode of the elimination MDP under `params` (policy kind taken from
/// params). The horizon is n - n_c; an edge-free state ends the episode early.
EpisodeTrace run_episode(const IsingInstance &instance,
                         const PolicyParams &params, int n_c, Rng &rng,
                         const EpisodeOptions &options = {});

/// G_t = discount^(H - t) * R for t = 0..H-1, R the terminal reward.
std::vector<double> compute_returns(const EpisodeTrace &trace, double discount);

/// One REINFORCE step: delta = (1/N) Σ_i Σ_t grad log pi(a_t) G_{i,t}, applied
/// by Adam ascent with lr_angles on angle coordinates and lr_betas on betas.
PolicyParams reinforce_update(const PolicyParams &params,
                              std::span<const EpisodeTrace> batch,
                              const TrainerConfig &config, AdamState &adam);

struct CurvePoint {
  int episode = 0;
  double energy = 0.0;
  double best_so_far = 0.0;
  std::optional<double> ratio;
  double angle_norm = 0.0;
  double beta_norm = 0.0;
};

struct TrainingResult {
  std::vector<CurvePoint> curve;
  std::optional<RunResult> best;
  PolicyParams final_params;
};

struct TrainOptions {
  std::optional<double> exact_energy;
  EpisodeOptions episode;
  /// Overrides angle_init when set (length must equal the horizon).
  std::optional<std::vector<Angles>> initial_angles;
};

/// total_episodes episodes in batches of batch_size, one REINFORCE update
/// per batch. Episode e draws from make_stream(seed, e + 1); stream 0 seeds
/// the initialization.
TrainingResult train(const IsingInstance &instance, PolicyKind kind,
                     const TrainerConfig &config,
                     const RqaoaConfig &rqaoa_config,
                     const TrainOptions &options = {});

/// Per-episode maximum of best_so_far over runs.
std::vector<double> aggregate_max(const std::vector<std::vector<CurvePoint>> &runs);

/// Per-episode maximum of best_so_far, kept only when more than half of the
/// runs hold that value (within `tolerance`).
std::vector<std::optional<double>>
aggregate_vote(const std::vector<std::vector<CurvePoint>> &runs,
               double tolerance = 1e-9);

} // namespace rlrqaoa
