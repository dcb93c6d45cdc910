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

#include "rlrqaoa/ising.hpp"

#include <algorithm>
#include <string>

#include "rlrqaoa/error.hpp"

namespace rlrqaoa {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::invalid_argument: return "invalid-argument";
  case ErrorKind::invalid_assignment: return "invalid-assignment";
  case ErrorKind::invalid_action: return "invalid-action";
  case ErrorKind::corrupt_map: return "corrupt-map";
  case ErrorKind::invalid_vertex: return "invalid-vertex";
  case ErrorKind::invalid_edge: return "invalid-edge";
  case ErrorKind::unsupported_fields: return "unsupported-fields";
  case ErrorKind::size_limit: return "size-limit";
  case ErrorKind::no_action: return "no-action";
  case ErrorKind::invalid_budget: return "invalid-budget";
  case ErrorKind::parameter_coverage: return "parameter-coverage";
  case ErrorKind::invalid_batch: return "invalid-batch";
  case ErrorKind::infeasible_parameters: return "infeasible-parameters";
  case ErrorKind::not_available: return "not-available";
  case ErrorKind::parse_error: return "parse-error";
  case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

Edge make_edge(Vertex a, Vertex b) {
  if (a == b)
    throw Error(ErrorKind::invalid_edge,
                "self-loop on vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

IsingInstance::IsingInstance(int n_original) {
  if (n_original < 0)
    throw Error(ErrorKind::invalid_argument, "negative vertex count");
  adj_.resize(n_original);
  fields_.assign(n_original, 0.0);
  alive_.assign(n_original, 1);
  alive_count_ = n_original;
}

IsingInstance IsingInstance::from_edges(int n_original,
                                        std::span<const WeightedEdge> edges) {
  IsingInstance g(n_original);
  for (const auto &we : edges)
    g.add_edge(we.edge.u, we.edge.v, we.weight);
  return g;
}

void IsingInstance::check_vertex(Vertex u) const {
  if (u < 0 || u >= n_original() || !alive_[u])
    throw Error(ErrorKind::invalid_vertex,
                "vertex " + std::to_string(u) + " is not alive");
}

void IsingInstance::add_edge(Vertex a, Vertex b, double weight) {
  const Edge e = make_edge(a, b);
  check_vertex(e.u);
  check_vertex(e.v);
  if (weight == 0.0)
    throw Error(ErrorKind::invalid_edge, "zero-weight edge (" +
                                             std::to_string(e.u) + ", " +
                                             std::to_string(e.v) + ")");
  if (adj_[e.u].contains(e.v))
    throw Error(ErrorKind::invalid_edge, "duplicate edge (" +
                                             std::to_string(e.u) + ", " +
                                             std::to_string(e.v) + ")");
  adj_[e.u][e.v] = weight;
  adj_[e.v][e.u] = weight;
  ++edge_count_;
}

void IsingInstance::set_field(Vertex u, double h) {
  check_vertex(u);
  fields_[u] = h;
}

void IsingInstance::remove_isolated_vertex(Vertex u) {
  check_vertex(u);
  if (!adj_[u].empty() || fields_[u] != 0.0)
    throw Error(ErrorKind::invalid_vertex,
                "vertex " + std::to_string(u) + " is not isolated");
  alive_[u] = 0;
  --alive_count_;
}

bool IsingInstance::alive(Vertex u) const {
  return u >= 0 && u < n_original() && alive_[u];
}

std::vector<Vertex> IsingInstance::vertices() const {
  std::vector<Vertex> out;
  out.reserve(alive_count_);
  for (Vertex u = 0; u < n_original(); ++u)
    if (alive_[u])
      out.push_back(u);
  return out;
}

std::vector<WeightedEdge> IsingInstance::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_original(); ++u) {
    if (!alive_[u])
      continue;
    for (auto it = adj_[u].upper_bound(u); it != adj_[u].end(); ++it)
      out.push_back({{u, it->first}, it->second});
  }
  return out;
}

bool IsingInstance::has_edge(Edge e) const {
  return alive(e.u) && alive(e.v) && adj_[e.u].contains(e.v);
}

double IsingInstance::weight(Edge e) const {
  if (!has_edge(e))
    throw Error(ErrorKind::invalid_edge, "no edge (" + std::to_string(e.u) +
                                             ", " + std::to_string(e.v) + ")");
  return adj_[e.u].at(e.v);
}

const std::map<Vertex, double> &IsingInstance::neighbors(Vertex u) const {
  check_vertex(u);
  return adj_[u];
}

int IsingInstance::degree(Vertex u) const {
  return static_cast<int>(neighbors(u).size());
}

double IsingInstance::field(Vertex u) const {
  check_vertex(u);
  return fields_[u];
}

bool IsingInstance::has_fields() const {
  for (Vertex u = 0; u < n_original(); ++u)
    if (alive_[u] && fields_[u] != 0.0)
      return true;
  return false;
}

void ReconstructionMap::append(const ContractionRecord &record) {
  if (record.eliminated == record.anchor ||
      (record.sign != 1 && record.sign != -1))
    throw Error(ErrorKind::corrupt_map, "malformed contraction record");
  for (const auto &r : records_) {
    if (r.eliminated == record.eliminated)
      throw Error(ErrorKind::corrupt_map,
                  "vertex " + std::to_string(record.eliminated) +
                      " eliminated twice");
    if (r.eliminated == record.anchor)
      throw Error(ErrorKind::corrupt_map,
                  "anchor " + std::to_string(record.anchor) +
                      " was already eliminated");
  }
  records_.push_back(record);
}

double energy(const IsingInstance &instance, const Assignment &x) {
  if (static_cast<int>(x.size()) != instance.n_original())
    throw Error(ErrorKind::invalid_assignment,
                "assignment has " + std::to_string(x.size()) +
                    " entries, expected " +
                    std::to_string(instance.n_original()));
  double total = instance.offset();
  for (Vertex u : instance.vertices()) {
    if (x[u] != 1 && x[u] != -1)
      throw Error(ErrorKind::invalid_assignment,
                  "vertex " + std::to_string(u) + " is unassigned");
    total += instance.field(u) * x[u];
  }
  for (const auto &[e, w] : instance.edges())
    total += w * x[e.u] * x[e.v];
  return total;
}

// Grants the free contraction functions access to the adjacency storage.
struct Contraction {
  static ContractionRecord apply(IsingInstance &g, Edge edge, int sign) {
    if (sign != 1 && sign != -1)
      throw Error(ErrorKind::invalid_action, "contraction sign must be ±1");
    if (!g.has_edge(edge))
      throw Error(ErrorKind::invalid_action,
                  "cannot contract absent edge (" + std::to_string(edge.u) +
                      ", " + std::to_string(edge.v) + ")");
    const Vertex u = edge.u;
    const Vertex v = edge.v;
    auto &adj = g.adj_;

    g.offset_ += sign * adj[u][v];
    adj[u].erase(v);
    adj[v].erase(u);
    --g.edge_count_;

    for (const auto &[w, jvw] : adj[v]) {
      adj[w].erase(v);
      --g.edge_count_;
      const double add = sign * jvw;
      auto it = adj[u].find(w);
      if (it == adj[u].end()) {
        adj[u][w] = add;
        adj[w][u] = add;
        ++g.edge_count_;
        continue;
      }
      const double merged = it->second + add;
      if (merged == 0.0) {
        adj[u].erase(it);
        adj[w].erase(u);
        --g.edge_count_;
      } else {
        it->second = merged;
        adj[w][u] = merged;
      }
    }
    adj[v].clear();

    g.fields_[u] += sign * g.fields_[v];
    g.fields_[v] = 0.0;
    g.alive_[v] = 0;
    --g.alive_count_;
    return {v, u, sign};
  }
};

ContractionRecord contract_in_place(IsingInstance &instance, Edge edge,
                                    int sign) {
  return Contraction::apply(instance, edge, sign);
}

std::pair<IsingInstance, ContractionRecord>
contract(const IsingInstance &instance, Edge edge, int sign) {
  IsingInstance out = instance;
  const auto record = contract_in_place(out, edge, sign);
  return {std::move(out), record};
}

Assignment reconstruct(const ReconstructionMap &map, Assignment x) {
  const auto &records = map.records();
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    const auto idx_e = static_cast<std::size_t>(it->eliminated);
    const auto idx_a = static_cast<std::size_t>(it->anchor);
    if (it->eliminated < 0 || it->anchor < 0 || idx_e >= x.size() ||
        idx_a >= x.size())
      throw Error(ErrorKind::corrupt_map, "record label out of range");
    if (x[idx_a] != 1 && x[idx_a] != -1)
      throw Error(ErrorKind::corrupt_map,
                  "anchor " + std::to_string(it->anchor) + " is unassigned");
    x[idx_e] = static_cast<Spin>(it->sign * x[idx_a]);
  }
  return x;
}

} // namespace rlrqaoa
