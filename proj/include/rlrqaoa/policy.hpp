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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlrqaoa/ising.hpp"
#include "rlrqaoa/qaoa.hpp"

namespace rlrqaoa {

enum class PolicyKind {
  rl_rqaoa, ///< softmax over edges with logits beta_uv * |M_uv|
  rl_rone,  ///< softmax over (edge, sign) with logits beta^sign_uv
};

/// How inverse temperatures are shared.
enum class BetaLayout {
  one_all, ///< one beta per original vertex pair (default)
  all,     ///< one beta per iteration, shared by all pairs
  all_all, ///< one beta per (iteration, pair)
};

const char *to_string(PolicyKind kind);
const char *to_string(BetaLayout layout);
PolicyKind parse_policy_kind(const std::string &text);
BetaLayout parse_beta_layout(const std::string &text);

/// Trainable parameters stored as one flat vector:
///   [alphas (horizon) | gammas (horizon) | betas (| betas for sign -1)].
/// RL-RONE has no angles; its first beta block is for sign +1.
/// Pair-indexed betas use original vertex labels, so a pair keeps its
/// parameter across contractions.
class PolicyParams {
public:
  PolicyParams() = default;
  PolicyParams(PolicyKind kind, int n, int horizon, BetaLayout layout,
               double beta_init);

  PolicyKind kind() const { return kind_; }
  BetaLayout layout() const { return layout_; }
  int n() const { return n_; }
  int horizon() const { return horizon_; }

  std::size_t size() const { return values_.size(); }
  std::size_t num_angles() const { return angle_count_; }
  bool is_angle(std::size_t index) const { return index < angle_count_; }

  std::size_t alpha_index(int iteration) const;
  std::size_t gamma_index(int iteration) const;
  /// Throws parameter_coverage for an out-of-range iteration or label.
  std::size_t beta_index(int iteration, Edge pair, int sign = 1) const;

  double alpha(int iteration) const { return values_[alpha_index(iteration)]; }
  double gamma(int iteration) const { return values_[gamma_index(iteration)]; }
  Angles angles(int iteration) const { return {alpha(iteration), gamma(iteration)}; }
  double beta(int iteration, Edge pair, int sign = 1) const {
    return values_[beta_index(iteration, pair, sign)];
  }

  void set_angles(int iteration, Angles a);

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  double angle_norm() const;
  double beta_norm() const;

  friend bool operator==(const PolicyParams &, const PolicyParams &) = default;

private:
  std::size_t pair_index(Edge pair) const;
  std::size_t betas_per_sign() const;

  PolicyKind kind_ = PolicyKind::rl_rqaoa;
  BetaLayout layout_ = BetaLayout::one_all;
  int n_ = 0;
  int horizon_ = 0;
  std::size_t angle_count_ = 0;
  std::vector<double> values_;
};

/// Checkpoint format: {kind, layout, n, horizon, alphas, gammas,
/// betas: [[u, v, value], ...] (or [[iteration, value]] / [[iteration, u, v,
/// value]] for the other layouts), betas_minus for RL-RONE}.
nlohmann::json to_json(const PolicyParams &params);
PolicyParams params_from_json(const nlohmann::json &doc);

struct Action {
  Edge edge;
  int sign = 1;

  friend bool operator==(const Action &, const Action &) = default;
};

struct ActionDistribution {
  std::vector<Action> support;
  std::vector<double> probs;

  /// Index into support, or support.size() when absent.
  std::size_t index_of(const Action &action) const;
};

/// Numerically stable softmax (shift by the maximum logit).
std::vector<double> softmax(std::span<const double> logits);

/// Softmax over the current edges with logits
/// beta_uv |M_uv|; the action's sign is sign(M_uv).
ActionDistribution policy_rlrqaoa(const IsingInstance &instance,
                                  const CorrelationVector &correlations,
                                  const PolicyParams &params, int iteration);

/// Softmax over (edge, b) with logits beta^b_uv.
/// Support order is (e0,+1), (e0,-1), (e1,+1), ...
ActionDistribution policy_rlrone(const IsingInstance &instance,
                                 const PolicyParams &params, int iteration);

struct GradEntry {
  std::size_t index = 0;
  double value = 0.0;
};
using SparseGradient = std::vector<GradEntry>;

/// d log pi(action) / d theta, merged by parameter index. For RL-RQAOA the
/// correlations must carry d/d alpha and d/d gamma (see
/// all_correlations_with_gradient); d|M|/dM is taken as 0 at M = 0.
/// RL-RONE ignores `correlations`.
SparseGradient grad_log_policy(const IsingInstance &instance,
                               const CorrelationVector &correlations,
                               const PolicyParams &params, int iteration,
                               const Action &action);

} // namespace rlrqaoa
