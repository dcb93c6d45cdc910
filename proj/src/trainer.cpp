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

#include "rlrqaoa/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rlrqaoa/error.hpp"
#include "rlrqaoa/exact.hpp"
#include "rlrqaoa/parallel.hpp"

namespace rlrqaoa {

void AdamState::ascend(std::span<double> values, std::span<const double> gradient,
                       std::span<const double> learning_rates,
                       const AdamSettings &settings) {
  if (gradient.size() != values.size() || learning_rates.size() != values.size())
    throw Error(ErrorKind::invalid_argument, "Adam: size mismatch");
  if (m_.size() != values.size()) {
    m_.assign(values.size(), 0.0);
    v_.assign(values.size(), 0.0);
    t_ = 0;
  }
  ++t_;
  const double c1 = 1.0 - std::pow(settings.beta1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(settings.beta2, static_cast<double>(t_));
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double g = gradient[i];
    m_[i] = settings.beta1 * m_[i] + (1.0 - settings.beta1) * g;
    v_[i] = settings.beta2 * v_[i] + (1.0 - settings.beta2) * g * g;
    const double m_hat = m_[i] / c1;
    const double v_hat = v_[i] / c2;
    values[i] += learning_rates[i] * m_hat / (std::sqrt(v_hat) + settings.epsilon);
  }
}

const char *to_string(AngleInit init) {
  return init == AngleInit::energy_optimal ? "energy-optimal" : "random";
}

AngleInit parse_angle_init(const std::string &text) {
  if (text == "energy-optimal") return AngleInit::energy_optimal;
  if (text == "random") return AngleInit::random;
  throw Error(ErrorKind::invalid_argument, "unknown angle init '" + text + "'");
}

nlohmann::json to_json(const TrainerConfig &c) {
  return {{"batch_size", c.batch_size},
          {"total_episodes", c.total_episodes},
          {"discount", c.discount},
          {"lr_angles", c.lr_angles},
          {"lr_betas", c.lr_betas},
          {"beta_init", c.beta_init},
          {"adam", {{"beta1", c.adam.beta1}, {"beta2", c.adam.beta2}, {"epsilon", c.adam.epsilon}}},
          {"angle_init", to_string(c.angle_init)},
          {"beta_layout", to_string(c.layout)},
          {"train_angles", c.train_angles},
          {"baseline", c.baseline},
          {"seed", c.seed},
          {"jobs", c.jobs}};
}

namespace {

std::size_t sample_index(const std::vector<double> &probs, Rng &rng) {
  const double u = uniform01(rng);
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0)
      continue;
    acc += probs[i];
    last = i;
    if (u < acc)
      return i;
  }
  return last;
}

} // namespace

EpisodeTrace run_episode(const IsingInstance &instance,
                         const PolicyParams &params, int n_c, Rng &rng,
                         const EpisodeOptions &options) {
  const int n = instance.num_vertices();
  if (n_c < 1 || n_c > n)
    throw Error(ErrorKind::invalid_argument,
                "n_c must lie in [1, " + std::to_string(n) + "]");
  const int horizon = n - n_c;
  if (params.horizon() < horizon)
    throw Error(ErrorKind::parameter_coverage,
                "parameters cover " + std::to_string(params.horizon()) +
                    " iterations, episode needs " + std::to_string(horizon));

  EpisodeTrace trace;
  IsingInstance current = instance;
  ReconstructionMap map;
  const bool quantum = params.kind() == PolicyKind::rl_rqaoa;

  for (int it = 0; it < horizon; ++it) {
    if (current.empty_edges())
      break;
    CorrelationVector correlations;
    ActionDistribution dist;
    if (quantum) {
      Angles angles = params.angles(it);
      if (options.optimal_angles_per_state) {
        angles = options.cache ? options.cache->optimize(current, options.grid_n).angles
                               : optimize_angles(current, options.grid_n).angles;
      }
      correlations = all_correlations_with_gradient(current, angles);
      dist = policy_rlrqaoa(current, correlations, params, it);
    } else {
      dist = policy_rlrone(current, params, it);
    }
    const std::size_t pick = sample_index(dist.probs, rng);
    const Action action = dist.support[pick];
    if (options.observer)
      options.observer(it, current, correlations, dist, action);

    EpisodeStep step;
    step.iteration = it;
    step.action = action;
    step.probability = dist.probs[pick];
    step.grad_log_prob = grad_log_policy(current, correlations, params, it, action);
    step.abs_correlation = quantum ? std::abs(correlations[pick].value) : 1.0;
    trace.steps.push_back(std::move(step));

    map.append(contract_in_place(current, action.edge, action.sign));
  }

  Assignment remainder;
  if (current.num_vertices() <= kExactMaxVertices) {
    remainder = brute_force_exact(current).assignment;
  } else {
    remainder.assign(instance.n_original(), 0);
    for (Vertex u : current.vertices())
      remainder[u] = 1;
  }
  trace.assignment = reconstruct(map, std::move(remainder));
  trace.energy = energy(instance, trace.assignment);
  trace.terminal_reward = trace.energy;
  return trace;
}

std::vector<double> compute_returns(const EpisodeTrace &trace, double discount) {
  const std::size_t horizon = trace.steps.size();
  std::vector<double> g(horizon);
  double factor = 1.0;
  for (std::size_t k = horizon; k-- > 0;) {
    factor *= discount;
    g[k] = factor * trace.terminal_reward;
  }
  return g;
}

PolicyParams reinforce_update(const PolicyParams &params,
                              std::span<const EpisodeTrace> batch,
                              const TrainerConfig &config, AdamState &adam) {
  if (batch.empty())
    throw Error(ErrorKind::invalid_batch, "REINFORCE needs at least one episode");

  double baseline = 0.0;
  if (config.baseline) {
    for (const auto &trace : batch)
      baseline += trace.terminal_reward;
    baseline /= static_cast<double>(batch.size());
  }

  std::vector<double> delta(params.size(), 0.0);
  for (const auto &trace : batch) {
    EpisodeTrace shifted;
    const EpisodeTrace *source = &trace;
    if (config.baseline) {
      shifted.steps.resize(trace.steps.size());
      shifted.terminal_reward = trace.terminal_reward - baseline;
    }
    const auto returns = compute_returns(config.baseline ? shifted : *source,
                                         config.discount);
    for (std::size_t t = 0; t < trace.steps.size(); ++t)
      for (const auto &entry : trace.steps[t].grad_log_prob)
        delta[entry.index] += entry.value * returns[t];
  }
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  std::vector<double> lr(params.size(), config.lr_betas);
  for (std::size_t i = 0; i < params.size(); ++i) {
    delta[i] *= inv_n;
    if (params.is_angle(i)) {
      lr[i] = config.lr_angles;
      if (!config.train_angles)
        delta[i] = 0.0;
    }
  }

  PolicyParams next = params;
  adam.ascend(next.values(), delta, lr, config.adam);
  return next;
}

namespace {

RunResult to_run_result(const EpisodeTrace &trace,
                        std::optional<double> exact_energy) {
  RunResult r;
  r.assignment = trace.assignment;
  r.energy = trace.energy;
  r.approx_ratio = approximation_ratio(trace.energy, exact_energy);
  for (const auto &step : trace.steps)
    r.trajectory.push_back({step.action.edge, step.action.sign, step.abs_correlation});
  return r;
}

} // namespace

TrainingResult train(const IsingInstance &instance, PolicyKind kind,
                     const TrainerConfig &config,
                     const RqaoaConfig &rqaoa_config,
                     const TrainOptions &options) {
  if (config.batch_size < 1)
    throw Error(ErrorKind::invalid_argument, "batch size must be at least 1");
  if (!(config.discount >= 0.0 && config.discount <= 1.0))
    throw Error(ErrorKind::invalid_argument, "discount must lie in [0, 1]");
  if (!(config.lr_angles > 0.0 && config.lr_betas > 0.0))
    throw Error(ErrorKind::invalid_argument, "learning rates must be positive");
  if (config.total_episodes < 0)
    throw Error(ErrorKind::invalid_argument, "negative episode count");

  const int n_c = rqaoa_config.n_c;
  const int horizon = instance.num_vertices() - n_c;
  if (n_c < 1 || horizon < 0)
    throw Error(ErrorKind::invalid_argument, "n_c must lie in [1, n]");

  TrainingResult result;
  result.final_params =
      PolicyParams(kind, instance.n_original(), horizon, config.layout, config.beta_init);
  PolicyParams &params = result.final_params;

  if (kind == PolicyKind::rl_rqaoa && horizon > 0) {
    Rng init_rng = make_stream(config.seed, 0);
    std::vector<Angles> angles;
    if (options.initial_angles) {
      angles = *options.initial_angles;
      if (static_cast<int>(angles.size()) != horizon)
        throw Error(ErrorKind::invalid_argument, "initial angles must match the horizon");
    } else if (config.angle_init == AngleInit::energy_optimal) {
      // Follow one RQAOA run and reuse its per-iteration optimal angles.
      RunOptions run_options;
      run_options.cache = options.episode.cache;
      angles = run_rqaoa(instance, rqaoa_config, init_rng, run_options).angle_log;
    } else {
      for (int i = 0; i < horizon; ++i) {
        const double a = 2.0 * std::numbers::pi * uniform01(init_rng);
        const double g = 2.0 * std::numbers::pi * uniform01(init_rng);
        angles.push_back({a, g});
      }
    }
    for (int i = 0; i < horizon; ++i)
      params.set_angles(i, angles.empty() ? Angles{}
                                          : angles[std::min<std::size_t>(i, angles.size() - 1)]);
  }

  AdamState adam;
  double best_energy = -std::numeric_limits<double>::infinity();
  std::vector<EpisodeTrace> batch;
  for (int start = 0; start < config.total_episodes; start += config.batch_size) {
    const int end = std::min(start + config.batch_size, config.total_episodes);
    batch.assign(end - start, EpisodeTrace{});
    parallel_for(start, end, config.jobs, [&](std::size_t e) {
      Rng rng = make_stream(config.seed, e + 1);
      batch[e - start] = run_episode(instance, params, n_c, rng, options.episode);
    });

    const double angle_norm = params.angle_norm();
    const double beta_norm = params.beta_norm();
    for (int e = start; e < end; ++e) {
      auto &trace = batch[e - start];
      trace.returns = compute_returns(trace, config.discount);
      if (trace.energy > best_energy) {
        best_energy = trace.energy;
        result.best = to_run_result(trace, options.exact_energy);
        result.best->seed = derive_seed(config.seed, e + 1);
      }
      result.curve.push_back({e, trace.energy, best_energy,
                              approximation_ratio(trace.energy, options.exact_energy),
                              angle_norm, beta_norm});
    }
    params = reinforce_update(params, batch, config, adam);
  }
  return result;
}

std::vector<double> aggregate_max(const std::vector<std::vector<CurvePoint>> &runs) {
  std::size_t len = 0;
  for (const auto &r : runs)
    len = std::max(len, r.size());
  std::vector<double> out(len, -std::numeric_limits<double>::infinity());
  for (const auto &r : runs)
    for (std::size_t i = 0; i < r.size(); ++i)
      out[i] = std::max(out[i], r[i].best_so_far);
  return out;
}

std::vector<std::optional<double>>
aggregate_vote(const std::vector<std::vector<CurvePoint>> &runs, double tolerance) {
  const auto maxima = aggregate_max(runs);
  std::vector<std::optional<double>> out(maxima.size());
  for (std::size_t i = 0; i < maxima.size(); ++i) {
    std::size_t agree = 0;
    for (const auto &r : runs)
      if (i < r.size() && std::abs(r[i].best_so_far - maxima[i]) <= tolerance)
        ++agree;
    if (2 * agree > runs.size())
      out[i] = maxima[i];
  }
  return out;
}

} // namespace rlrqaoa
