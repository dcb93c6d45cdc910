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

#include "rlrqaoa/policy.hpp"

#include <algorithm>
#include <cmath>

#include "rlrqaoa/error.hpp"

namespace rlrqaoa {

const char *to_string(PolicyKind kind) {
  return kind == PolicyKind::rl_rqaoa ? "rl-rqaoa" : "rl-rone";
}

const char *to_string(BetaLayout layout) {
  switch (layout) {
  case BetaLayout::one_all: return "beta-one-all";
  case BetaLayout::all: return "beta-all";
  case BetaLayout::all_all: return "beta-all-all";
  }
  return "unknown";
}

PolicyKind parse_policy_kind(const std::string &text) {
  if (text == "rl-rqaoa") return PolicyKind::rl_rqaoa;
  if (text == "rl-rone") return PolicyKind::rl_rone;
  throw Error(ErrorKind::invalid_argument, "unknown policy kind '" + text + "'");
}

BetaLayout parse_beta_layout(const std::string &text) {
  if (text == "beta-one-all") return BetaLayout::one_all;
  if (text == "beta-all") return BetaLayout::all;
  if (text == "beta-all-all") return BetaLayout::all_all;
  throw Error(ErrorKind::invalid_argument, "unknown beta layout '" + text + "'");
}

PolicyParams::PolicyParams(PolicyKind kind, int n, int horizon,
                           BetaLayout layout, double beta_init)
    : kind_(kind), layout_(layout), n_(n), horizon_(horizon) {
  if (n < 1 || horizon < 0)
    throw Error(ErrorKind::invalid_argument, "invalid policy dimensions");
  angle_count_ = kind == PolicyKind::rl_rqaoa ? 2 * std::size_t(horizon) : 0;
  const std::size_t signs = kind == PolicyKind::rl_rone ? 2 : 1;
  values_.assign(angle_count_ + signs * betas_per_sign(), beta_init);
  std::fill(values_.begin(), values_.begin() + angle_count_, 0.0);
}

std::size_t PolicyParams::betas_per_sign() const {
  const std::size_t pairs = std::size_t(n_) * (n_ - 1) / 2;
  switch (layout_) {
  case BetaLayout::one_all: return pairs;
  case BetaLayout::all: return horizon_;
  case BetaLayout::all_all: return pairs * horizon_;
  }
  return 0;
}

std::size_t PolicyParams::alpha_index(int iteration) const {
  if (kind_ != PolicyKind::rl_rqaoa || iteration < 0 || iteration >= horizon_)
    throw Error(ErrorKind::parameter_coverage,
                "no angle parameter for iteration " + std::to_string(iteration));
  return static_cast<std::size_t>(iteration);
}

std::size_t PolicyParams::gamma_index(int iteration) const {
  return horizon_ + alpha_index(iteration);
}

std::size_t PolicyParams::pair_index(Edge pair) const {
  if (pair.u < 0 || pair.v >= n_ || pair.u >= pair.v)
    throw Error(ErrorKind::parameter_coverage,
                "no beta for pair (" + std::to_string(pair.u) + ", " +
                    std::to_string(pair.v) + ")");
  const auto u = static_cast<std::size_t>(pair.u);
  const auto v = static_cast<std::size_t>(pair.v);
  return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

std::size_t PolicyParams::beta_index(int iteration, Edge pair, int sign) const {
  if (iteration < 0 || iteration >= horizon_)
    throw Error(ErrorKind::parameter_coverage,
                "no beta for iteration " + std::to_string(iteration));
  std::size_t offset = 0;
  switch (layout_) {
  case BetaLayout::one_all:
    offset = pair_index(pair);
    break;
  case BetaLayout::all:
    offset = static_cast<std::size_t>(iteration);
    break;
  case BetaLayout::all_all:
    offset = static_cast<std::size_t>(iteration) * (std::size_t(n_) * (n_ - 1) / 2) +
             pair_index(pair);
    break;
  }
  if (kind_ == PolicyKind::rl_rone && sign < 0)
    offset += betas_per_sign();
  return angle_count_ + offset;
}

void PolicyParams::set_angles(int iteration, Angles a) {
  values_[alpha_index(iteration)] = a.alpha;
  values_[gamma_index(iteration)] = a.gamma;
}

double PolicyParams::angle_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < angle_count_; ++i)
    s += values_[i] * values_[i];
  return std::sqrt(s);
}

double PolicyParams::beta_norm() const {
  double s = 0.0;
  for (std::size_t i = angle_count_; i < values_.size(); ++i)
    s += values_[i] * values_[i];
  return std::sqrt(s);
}

namespace {

nlohmann::json beta_block(const PolicyParams &p, int sign) {
  using nlohmann::json;
  json rows = json::array();
  switch (p.layout()) {
  case BetaLayout::one_all:
    for (int u = 0; u < p.n(); ++u)
      for (int v = u + 1; v < p.n(); ++v)
        rows.push_back(json::array({u, v, p.beta(0, {u, v}, sign)}));
    break;
  case BetaLayout::all:
    for (int i = 0; i < p.horizon(); ++i)
      rows.push_back(json::array({i, p.beta(i, {0, 1}, sign)}));
    break;
  case BetaLayout::all_all:
    for (int i = 0; i < p.horizon(); ++i)
      for (int u = 0; u < p.n(); ++u)
        for (int v = u + 1; v < p.n(); ++v)
          rows.push_back(json::array({i, u, v, p.beta(i, {u, v}, sign)}));
    break;
  }
  return rows;
}

void read_beta_block(PolicyParams &p, const nlohmann::json &rows, int sign) {
  auto values = p.values();
  for (const auto &row : rows) {
    std::size_t index = 0;
    double value = 0.0;
    switch (p.layout()) {
    case BetaLayout::one_all:
      index = p.beta_index(0, {row.at(0).get<int>(), row.at(1).get<int>()}, sign);
      value = row.at(2).get<double>();
      break;
    case BetaLayout::all:
      index = p.beta_index(row.at(0).get<int>(), {0, 1}, sign);
      value = row.at(1).get<double>();
      break;
    case BetaLayout::all_all:
      index = p.beta_index(row.at(0).get<int>(),
                           {row.at(1).get<int>(), row.at(2).get<int>()}, sign);
      value = row.at(3).get<double>();
      break;
    }
    values[index] = value;
  }
}

} // namespace

nlohmann::json to_json(const PolicyParams &params) {
  nlohmann::json doc;
  doc["kind"] = to_string(params.kind());
  doc["layout"] = to_string(params.layout());
  doc["n"] = params.n();
  doc["horizon"] = params.horizon();
  std::vector<double> alphas, gammas;
  if (params.kind() == PolicyKind::rl_rqaoa) {
    for (int i = 0; i < params.horizon(); ++i) {
      alphas.push_back(params.alpha(i));
      gammas.push_back(params.gamma(i));
    }
  }
  doc["alphas"] = alphas;
  doc["gammas"] = gammas;
  // One-per-iteration layouts still need a valid pair for the lookup; n >= 2
  // is guaranteed whenever the horizon is nonzero.
  if (params.horizon() > 0 && params.n() >= 2) {
    doc["betas"] = beta_block(params, 1);
    if (params.kind() == PolicyKind::rl_rone)
      doc["betas_minus"] = beta_block(params, -1);
  } else {
    doc["betas"] = nlohmann::json::array();
  }
  return doc;
}

PolicyParams params_from_json(const nlohmann::json &doc) {
  try {
    PolicyParams p(parse_policy_kind(doc.at("kind").get<std::string>()),
                   doc.at("n").get<int>(), doc.at("horizon").get<int>(),
                   parse_beta_layout(doc.at("layout").get<std::string>()), 0.0);
    if (p.kind() == PolicyKind::rl_rqaoa) {
      const auto alphas = doc.at("alphas").get<std::vector<double>>();
      const auto gammas = doc.at("gammas").get<std::vector<double>>();
      if (static_cast<int>(alphas.size()) != p.horizon() ||
          static_cast<int>(gammas.size()) != p.horizon())
        throw Error(ErrorKind::parse_error, "angle vectors must match horizon");
      for (int i = 0; i < p.horizon(); ++i)
        p.set_angles(i, {alphas[i], gammas[i]});
    }
    read_beta_block(p, doc.at("betas"), 1);
    if (p.kind() == PolicyKind::rl_rone && doc.contains("betas_minus"))
      read_beta_block(p, doc["betas_minus"], -1);
    return p;
  } catch (const nlohmann::json::exception &ex) {
    throw Error(ErrorKind::parse_error,
                std::string("malformed checkpoint: ") + ex.what());
  }
}

std::size_t ActionDistribution::index_of(const Action &action) const {
  const auto it = std::find(support.begin(), support.end(), action);
  return static_cast<std::size_t>(it - support.begin());
}

std::vector<double> softmax(std::span<const double> logits) {
  std::vector<double> p(logits.begin(), logits.end());
  if (p.empty())
    return p;
  const double shift = *std::max_element(p.begin(), p.end());
  double total = 0.0;
  for (double &x : p) {
    x = std::exp(x - shift);
    total += x;
  }
  for (double &x : p)
    x /= total;
  return p;
}

namespace {

void check_correlations(const IsingInstance &instance,
                        const CorrelationVector &correlations) {
  if (correlations.size() != instance.num_edges())
    throw Error(ErrorKind::invalid_argument,
                "correlations do not match the instance's edge set");
}

SparseGradient merge(SparseGradient g) {
  std::sort(g.begin(), g.end(),
            [](const GradEntry &a, const GradEntry &b) { return a.index < b.index; });
  SparseGradient out;
  for (const auto &e : g) {
    if (!out.empty() && out.back().index == e.index)
      out.back().value += e.value;
    else
      out.push_back(e);
  }
  return out;
}

} // namespace

ActionDistribution policy_rlrqaoa(const IsingInstance &instance,
                                  const CorrelationVector &correlations,
                                  const PolicyParams &params, int iteration) {
  check_correlations(instance, correlations);
  ActionDistribution dist;
  std::vector<double> logits;
  logits.reserve(correlations.size());
  dist.support.reserve(correlations.size());
  for (const auto &c : correlations.entries) {
    logits.push_back(params.beta(iteration, c.edge) * std::abs(c.value));
    dist.support.push_back({c.edge, sign_of(c.value)});
  }
  dist.probs = softmax(logits);
  return dist;
}

ActionDistribution policy_rlrone(const IsingInstance &instance,
                                 const PolicyParams &params, int iteration) {
  ActionDistribution dist;
  std::vector<double> logits;
  for (const auto &we : instance.edges()) {
    for (int b : {1, -1}) {
      logits.push_back(params.beta(iteration, we.edge, b));
      dist.support.push_back({we.edge, b});
    }
  }
  dist.probs = softmax(logits);
  return dist;
}

SparseGradient grad_log_policy(const IsingInstance &instance,
                               const CorrelationVector &correlations,
                               const PolicyParams &params, int iteration,
                               const Action &action) {
  SparseGradient grad;
  if (params.kind() == PolicyKind::rl_rone) {
    const auto dist = policy_rlrone(instance, params, iteration);
    const std::size_t chosen = dist.index_of(action);
    if (chosen == dist.support.size())
      throw Error(ErrorKind::invalid_action, "action is not in the policy support");
    for (std::size_t i = 0; i < dist.support.size(); ++i) {
      const auto &a = dist.support[i];
      grad.push_back({params.beta_index(iteration, a.edge, a.sign),
                      (i == chosen ? 1.0 : 0.0) - dist.probs[i]});
    }
    return merge(std::move(grad));
  }

  const auto dist = policy_rlrqaoa(instance, correlations, params, iteration);
  const std::size_t chosen = dist.index_of(action);
  if (chosen == dist.support.size())
    throw Error(ErrorKind::invalid_action, "action is not in the policy support");
  double d_alpha = 0.0;
  double d_gamma = 0.0;
  for (std::size_t i = 0; i < correlations.size(); ++i) {
    const auto &c = correlations[i];
    const double coeff = (i == chosen ? 1.0 : 0.0) - dist.probs[i];
    const std::size_t bi = params.beta_index(iteration, c.edge);
    grad.push_back({bi, coeff * std::abs(c.value)});
    const double slope = c.value > 0.0 ? 1.0 : (c.value < 0.0 ? -1.0 : 0.0);
    const double scale = coeff * params.values()[bi] * slope;
    d_alpha += scale * c.d_alpha;
    d_gamma += scale * c.d_gamma;
  }
  grad.push_back({params.alpha_index(iteration), d_alpha});
  grad.push_back({params.gamma_index(iteration), d_gamma});
  return merge(std::move(grad));
}

} // namespace rlrqaoa
