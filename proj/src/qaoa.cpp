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

#include "rlrqaoa/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "rlrqaoa/error.hpp"

namespace rlrqaoa {
namespace {

// Value plus partials with respect to (alpha, gamma).
struct Jet {
  double v = 0.0;
  double da = 0.0;
  double dg = 0.0;

  constexpr Jet(double value = 0.0, double d_alpha = 0.0, double d_gamma = 0.0)
      : v(value), da(d_alpha), dg(d_gamma) {}
};

Jet operator+(const Jet &a, const Jet &b) { return {a.v + b.v, a.da + b.da, a.dg + b.dg}; }
Jet operator-(const Jet &a, const Jet &b) { return {a.v - b.v, a.da - b.da, a.dg - b.dg}; }
Jet operator*(const Jet &a, const Jet &b) {
  return {a.v * b.v, a.da * b.v + a.v * b.da, a.dg * b.v + a.v * b.dg};
}
Jet operator*(const Jet &a, double s) { return {a.v * s, a.da * s, a.dg * s}; }
Jet sin(const Jet &x) {
  const double c = std::cos(x.v);
  return {std::sin(x.v), c * x.da, c * x.dg};
}
Jet cos(const Jet &x) {
  const double s = std::sin(x.v);
  return {std::cos(x.v), -s * x.da, -s * x.dg};
}

template <class T>
T zz_expectation(const IsingInstance &g, Edge e, const T &alpha,
                 const T &gamma) {
  using std::cos;
  using std::sin;
  const auto &nu = g.neighbors(e.u);
  const auto &nv = g.neighbors(e.v);
  const double juv = g.weight(e);

  // prod_u: Π_{k≠u,v} c(2J_uk); prod_v likewise; plus/minus: the H_B products
  // over c(2(J_uk ± J_vk)).
  T prod_u(1.0), prod_v(1.0), plus(1.0), minus(1.0);
  auto iu = nu.begin();
  auto iv = nv.begin();
  while (iu != nu.end() || iv != nv.end()) {
    if (iv == nv.end() || (iu != nu.end() && iu->first < iv->first)) {
      if (iu->first != e.v) {
        const T c = cos(gamma * (2.0 * iu->second));
        prod_u = prod_u * c;
        plus = plus * c;
        minus = minus * c;
      }
      ++iu;
    } else if (iu == nu.end() || iv->first < iu->first) {
      if (iv->first != e.u) {
        const T c = cos(gamma * (2.0 * iv->second));
        prod_v = prod_v * c;
        plus = plus * c;
        minus = minus * c;
      }
      ++iv;
    } else {
      const double juk = iu->second;
      const double jvk = iv->second;
      prod_u = prod_u * cos(gamma * (2.0 * juk));
      prod_v = prod_v * cos(gamma * (2.0 * jvk));
      plus = plus * cos(gamma * (2.0 * (juk + jvk)));
      minus = minus * cos(gamma * (2.0 * (juk - jvk)));
      ++iu;
      ++iv;
    }
  }

  const double hu = g.field(e.u);
  const double hv = g.field(e.v);
  const T ha = sin(alpha * 4.0) * 0.5 * sin(gamma * (2.0 * juv)) *
               (cos(gamma * (2.0 * hu)) * prod_u +
                cos(gamma * (2.0 * hv)) * prod_v);
  const T s2a = sin(alpha * 2.0);
  // Sign of the bracket matches the state exp(-i a H_b) exp(-i g H_n)|+>.
  const T hb = s2a * s2a * 0.5 *
               (cos(gamma * (2.0 * (hu - hv))) * minus -
                cos(gamma * (2.0 * (hu + hv))) * plus);
  return ha + hb;
}

// Field-free compact form used by the gamma grid search. Per edge e = (u, v),
// <Z_u Z_v> = sin(4a)/2 · A_e + sin^2(2a)/2 · B_e with A_e, B_e depending on
// gamma only; the energy is then offset + Σ J_e (...).
class FieldFreeModel {
public:
  explicit FieldFreeModel(const IsingInstance &g) : offset_(g.offset()) {
    const auto edges = g.edges();
    weights_.reserve(edges.size());
    std::map<Edge, int> index;
    for (const auto &[e, w] : edges) {
      index[e] = static_cast<int>(weights_.size());
      weights_.push_back(w);
    }
    terms_.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge e = edges[i].edge;
      auto &t = terms_[i];
      const auto &nu = g.neighbors(e.u);
      const auto &nv = g.neighbors(e.v);
      for (const auto &[k, w] : nu) {
        if (k == e.v)
          continue;
        const int ek = index.at(make_edge(e.u, k));
        if (nv.contains(k))
          t.common.push_back({ek, index.at(make_edge(e.v, k)), w, nv.at(k)});
        else
          t.u_only.push_back(ek);
      }
      for (const auto &[k, w] : nv)
        if (k != e.u && !nu.contains(k))
          t.v_only.push_back(index.at(make_edge(e.v, k)));
    }
    cos_.resize(weights_.size());
  }

  bool empty() const { return weights_.empty(); }
  double offset() const { return offset_; }

  /// Σ J_e A_e and Σ J_e B_e at gamma.
  std::pair<double, double> sums(double gamma) {
    for (std::size_t i = 0; i < weights_.size(); ++i)
      cos_[i] = std::cos(2.0 * gamma * weights_[i]);
    double sum_a = 0.0;
    double sum_b = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      const auto &t = terms_[i];
      double u_only = 1.0;
      for (int k : t.u_only)
        u_only *= cos_[k];
      double v_only = 1.0;
      for (int k : t.v_only)
        v_only *= cos_[k];
      double common_u = 1.0;
      double common_v = 1.0;
      double plus = 1.0;
      double minus = 1.0;
      for (const auto &c : t.common) {
        common_u *= cos_[c.edge_u];
        common_v *= cos_[c.edge_v];
        plus *= std::cos(2.0 * gamma * (c.j_u + c.j_v));
        minus *= std::cos(2.0 * gamma * (c.j_u - c.j_v));
      }
      const double w = weights_[i];
      const double a = std::sin(2.0 * gamma * w) *
                       (u_only * common_u + v_only * common_v);
      const double b =
          t.common.empty() ? 0.0 : u_only * v_only * (minus - plus);
      sum_a += w * a;
      sum_b += w * b;
    }
    return {sum_a, sum_b};
  }

  double energy(double alpha, double sum_a, double sum_b) const {
    const double s2a = std::sin(2.0 * alpha);
    return offset_ + 0.5 * std::sin(4.0 * alpha) * sum_a +
           0.5 * s2a * s2a * sum_b;
  }

  PQRFit fit(double gamma) {
    const auto [sa, sb] = sums(gamma);
    constexpr double eighth = std::numbers::pi / 8.0;
    const double e_plus = energy(eighth, sa, sb);
    const double e_minus = energy(-eighth, sa, sb);
    const double e_zero = energy(0.0, sa, sb);
    PQRFit f;
    f.gamma = gamma;
    f.r = 0.5 * (e_plus + e_minus);
    f.q = 0.5 * (e_plus - e_minus);
    f.p = e_zero - f.r;
    return f;
  }

private:
  struct Common {
    int edge_u;
    int edge_v;
    double j_u;
    double j_v;
  };
  struct Terms {
    std::vector<int> u_only;
    std::vector<int> v_only;
    std::vector<Common> common;
  };

  double offset_;
  std::vector<double> weights_;
  std::vector<Terms> terms_;
  std::vector<double> cos_;
};

void require_field_free(const IsingInstance &g, const char *what) {
  if (g.has_fields())
    throw Error(ErrorKind::unsupported_fields,
                std::string(what) + " requires an instance without fields");
}

AngleOptimum refine(FieldFreeModel &model, double lo, double hi) {
  auto negated = [&](double gamma) {
    return -optimal_alpha(model.fit(gamma)).energy;
  };
  // 26 bits of a value up to 2π gives an absolute tolerance well below 1e-6.
  const auto [gamma, neg] =
      boost::math::tools::brent_find_minima(negated, lo, hi, 26);
  const auto best = optimal_alpha(model.fit(gamma));
  (void)neg;
  return {{best.alpha, gamma}, best.energy};
}

} // namespace

std::size_t CorrelationVector::index_of(Edge edge) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), edge,
      [](const Correlation &c, const Edge &e) { return c.edge < e; });
  if (it == entries.end() || it->edge != edge)
    return entries.size();
  return static_cast<std::size_t>(it - entries.begin());
}

double expectation_z(const IsingInstance &instance, Angles angles, Vertex u) {
  if (!instance.alive(u))
    throw Error(ErrorKind::invalid_vertex,
                "vertex " + std::to_string(u) + " is not alive");
  double prod = 1.0;
  for (const auto &[k, w] : instance.neighbors(u))
    prod *= std::cos(2.0 * angles.gamma * w);
  return std::sin(2.0 * angles.alpha) *
         std::sin(2.0 * angles.gamma * instance.field(u)) * prod;
}

double expectation_zz(const IsingInstance &instance, Angles angles, Edge edge) {
  if (!instance.has_edge(edge))
    throw Error(ErrorKind::invalid_edge,
                "(" + std::to_string(edge.u) + ", " + std::to_string(edge.v) +
                    ") is not an edge");
  return zz_expectation<double>(instance, edge, angles.alpha, angles.gamma);
}

CorrelationVector all_correlations(const IsingInstance &instance,
                                   Angles angles) {
  CorrelationVector out;
  out.entries.reserve(instance.num_edges());
  for (const auto &we : instance.edges())
    out.entries.push_back(
        {we.edge,
         zz_expectation<double>(instance, we.edge, angles.alpha, angles.gamma),
         0.0, 0.0});
  return out;
}

CorrelationVector all_correlations_with_gradient(const IsingInstance &instance,
                                                 Angles angles) {
  CorrelationVector out;
  out.entries.reserve(instance.num_edges());
  const Jet alpha(angles.alpha, 1.0, 0.0);
  const Jet gamma(angles.gamma, 0.0, 1.0);
  for (const auto &we : instance.edges()) {
    const Jet m = zz_expectation<Jet>(instance, we.edge, alpha, gamma);
    out.entries.push_back({we.edge, m.v, m.da, m.dg});
  }
  return out;
}

double energy_expectation(const IsingInstance &instance, Angles angles) {
  double total = instance.offset();
  for (Vertex u : instance.vertices())
    if (instance.field(u) != 0.0)
      total += instance.field(u) * expectation_z(instance, angles, u);
  for (const auto &[e, w] : instance.edges())
    total += w * zz_expectation<double>(instance, e, angles.alpha,
                                        angles.gamma);
  return total;
}

double PQRFit::energy_at(double alpha) const {
  return p * std::cos(4.0 * alpha) + q * std::sin(4.0 * alpha) + r;
}

PQRFit fit_pqr(const IsingInstance &instance, double gamma) {
  require_field_free(instance, "fit_pqr");
  FieldFreeModel model(instance);
  return model.fit(gamma);
}

AlphaOptimum optimal_alpha(const PQRFit &fit) {
  if (fit.p == 0.0 && fit.q == 0.0)
    return {0.0, fit.r};
  return {0.25 * std::atan2(fit.q, fit.p), fit.r + std::hypot(fit.p, fit.q)};
}

AngleOptimum optimize_angles(const IsingInstance &instance, int grid_n) {
  if (grid_n < 3)
    throw Error(ErrorKind::invalid_argument, "grid_n must be at least 3");
  require_field_free(instance, "optimize_angles");
  if (instance.empty_edges())
    return {{0.0, 0.0}, instance.offset()};

  FieldFreeModel model(instance);
  const double step = 2.0 * std::numbers::pi / (grid_n - 1);
  int best_k = 0;
  AngleOptimum best{{0.0, 0.0}, -std::numeric_limits<double>::infinity()};
  for (int k = 0; k < grid_n; ++k) {
    const double gamma = step * k;
    const auto opt = optimal_alpha(model.fit(gamma));
    if (opt.energy > best.energy) {
      best = {{opt.alpha, gamma}, opt.energy};
      best_k = k;
    }
  }
  const double lo = step * std::max(best_k - 1, 0);
  const double hi = step * std::min(best_k + 1, grid_n - 1);
  const auto refined = refine(model, lo, hi);
  return refined.energy > best.energy ? refined : best;
}

AngleOptimum optimize_angles_in(const IsingInstance &instance, double gamma_lo,
                                double gamma_hi) {
  require_field_free(instance, "optimize_angles_in");
  if (!(gamma_lo < gamma_hi))
    throw Error(ErrorKind::invalid_argument, "empty gamma interval");
  if (instance.empty_edges())
    return {{0.0, 0.0}, instance.offset()};
  FieldFreeModel model(instance);
  return refine(model, gamma_lo, gamma_hi);
}

std::vector<LandscapePoint> energy_landscape(const IsingInstance &instance,
                                             int alpha_points,
                                             int gamma_points) {
  if (alpha_points < 1 || gamma_points < 1)
    throw Error(ErrorKind::invalid_argument, "landscape needs >= 1 point per axis");
  std::vector<LandscapePoint> out;
  out.reserve(static_cast<std::size_t>(alpha_points) * gamma_points);
  for (int j = 0; j < gamma_points; ++j) {
    const double gamma = 2.0 * std::numbers::pi * j / gamma_points;
    for (int i = 0; i < alpha_points; ++i) {
      const double alpha = std::numbers::pi * i / alpha_points;
      out.push_back(
          {alpha, gamma, energy_expectation(instance, {alpha, gamma})});
    }
  }
  return out;
}

} // namespace rlrqaoa
