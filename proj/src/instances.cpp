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

#include "rlrqaoa/instances.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <iostream>
#include <set>

#include "rlrqaoa/error.hpp"
#include "rlrqaoa/exact.hpp"
#include "rlrqaoa/parallel.hpp"

namespace rlrqaoa {

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n, 0);
  for (const auto &e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

namespace {

Graph finish(int n, std::set<Edge> edges) {
  return Graph{n, std::vector<Edge>(edges.begin(), edges.end())};
}

bool suitable(const std::set<Edge> &edges, const std::map<int, int> &potential) {
  if (potential.empty())
    return true;
  for (auto a = potential.begin(); a != potential.end(); ++a)
    for (auto b = std::next(a); b != potential.end(); ++b)
      if (!edges.contains(make_edge(a->first, b->first)))
        return true;
  return false;
}

std::optional<std::set<Edge>> try_pairing(int n, int d, Rng &rng) {
  std::set<Edge> edges;
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int k = 0; k < d; ++k)
    for (int v = 0; v < n; ++v)
      stubs.push_back(v);

  while (!stubs.empty()) {
    std::map<int, int> potential;
    shuffle(stubs, rng);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const int a = stubs[i], b = stubs[i + 1];
      if (a != b && !edges.contains(make_edge(a, b))) {
        edges.insert(make_edge(a, b));
      } else {
        ++potential[a];
        ++potential[b];
      }
    }
    if (!suitable(edges, potential))
      return std::nullopt;
    stubs.clear();
    for (const auto &[v, count] : potential)
      for (int k = 0; k < count; ++k)
        stubs.push_back(v);
  }
  return edges;
}

} // namespace

Graph gen_random_regular(int n, int d, Rng &rng) {
  if (n < 1 || d < 1 || d >= n || (static_cast<long>(n) * d) % 2 != 0)
    throw Error(ErrorKind::infeasible_parameters,
                "no simple " + std::to_string(d) + "-regular graph on " +
                    std::to_string(n) + " vertices");
  if (d == n - 1) {
    std::set<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        edges.insert(Edge{u, v});
    return finish(n, std::move(edges));
  }
  for (int attempt = 0; attempt < 100000; ++attempt)
    if (auto edges = try_pairing(n, d, rng))
      return finish(n, std::move(*edges));
  throw Error(ErrorKind::infeasible_parameters,
              "pairing model did not produce a simple graph");
}

int girth(const Graph &graph) {
  std::vector<std::vector<int>> adj(graph.n);
  for (const auto &e : graph.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int best = 0;
  std::vector<int> dist(graph.n), parent(graph.n);
  for (int s = 0; s < graph.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (w != parent[u]) {
          const int cycle = dist[u] + dist[w] + 1;
          if (best == 0 || cycle < best)
            best = cycle;
        }
      }
    }
  }
  return best;
}

bool is_simple(const Graph &graph) {
  std::set<Edge> seen;
  for (const auto &e : graph.edges) {
    if (e.u == e.v || e.u < 0 || e.v >= graph.n || e.u > e.v)
      return false;
    if (!seen.insert(e).second)
      return false;
  }
  return true;
}

bool is_regular(const Graph &graph, int d) {
  const auto deg = graph.degrees();
  return std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
}

const char *to_string(WeightModel model) {
  return model == WeightModel::gaussian ? "gaussian" : "bimodal";
}

WeightModel parse_weight_model(const std::string &text) {
  if (text == "gaussian") return WeightModel::gaussian;
  if (text == "bimodal") return WeightModel::bimodal;
  throw Error(ErrorKind::invalid_argument, "unknown weight model '" + text + "'");
}

IsingInstance assign_weights(const Graph &graph, WeightModel model, Rng &rng) {
  std::vector<WeightedEdge> weighted;
  weighted.reserve(graph.edges.size());
  for (;;) {
    weighted.clear();
    for (const auto &e : graph.edges) {
      double w = 0.0;
      if (model == WeightModel::bimodal) {
        w = (rng() >> 63) ? 1.0 : -1.0;
      } else {
        do
          w = standard_normal(rng);
        while (w == 0.0);
      }
      weighted.push_back({e, w});
    }
    if (model == WeightModel::bimodal)
      break;
    std::vector<double> sorted;
    for (const auto &we : weighted)
      sorted.push_back(we.weight);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
      break;
    std::clog << "note: repeated gaussian weight, redrawing all weights\n";
  }
  auto instance = IsingInstance::from_edges(graph.n, weighted);
  instance.metadata.weight_model = to_string(model);
  return instance;
}

namespace {

Graph from_lcf(int n, const std::vector<int> &pattern) {
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.insert(make_edge(i, (i + 1) % n));
    const int jump = pattern[i % pattern.size()];
    edges.insert(make_edge(i, ((i + jump) % n + n) % n));
  }
  return finish(n, std::move(edges));
}

Graph from_list(int n, std::initializer_list<std::pair<int, int>> list) {
  std::set<Edge> edges;
  for (auto [a, b] : list)
    edges.insert(make_edge(a, b));
  return finish(n, std::move(edges));
}

} // namespace

Graph cage(int d, int g) {
  Graph graph;
  if (d == 3 && g == 3) {
    graph = from_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  } else if (d == 3 && g == 4) {
    graph = from_list(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                          {2, 3}, {2, 4}, {2, 5}});
  } else if (d == 3 && g == 5) {
    graph = from_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  } else if (d == 3 && g == 6) {
    graph = from_lcf(14, {5, -5});
  } else if (d == 3 && g == 7) {
    graph = from_lcf(24, {12, 7, -7});
  } else if (d == 3 && g == 8) {
    graph = from_lcf(30, {-13, -9, 7, -7, 9, 13});
  } else {
    throw Error(ErrorKind::not_available,
                "(" + std::to_string(d) + "," + std::to_string(g) +
                    ")-cage is not catalogued; write it as an instance file "
                    "and pass it with --instance");
  }
  if (!is_simple(graph) || !is_regular(graph, d) || girth(graph) != g)
    throw Error(ErrorKind::corrupt_map, "catalogued cage failed verification");
  return graph;
}

EnsembleMember make_member(int n, int d, WeightModel model, std::uint64_t seed,
                           std::uint64_t index, std::string id) {
  Rng rng = make_stream(seed, index);
  EnsembleMember m;
  m.id = std::move(id);
  m.n = n;
  m.d = d;
  m.model = model;
  m.instance = assign_weights(gen_random_regular(n, d, rng), model, rng);
  m.instance.metadata.seed = derive_seed(seed, index);
  m.instance.metadata.name = m.id;
  return m;
}

std::vector<EnsembleMember> generate_ensemble(const EnsembleSpec &spec) {
  if (spec.n_min < 1 || spec.n_max < spec.n_min || spec.d_min < 1 ||
      spec.d_max < spec.d_min || spec.count_per_cell < 0)
    throw Error(ErrorKind::invalid_argument, "malformed ensemble ranges");
  std::vector<EnsembleMember> out;
  std::uint64_t index = 0;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    for (int d = spec.d_min; d <= spec.d_max; ++d) {
      if (d >= n || (n * d) % 2 != 0)
        continue;
      for (WeightModel model : spec.models) {
        for (int i = 0; i < spec.count_per_cell; ++i) {
          if (spec.limit && static_cast<int>(out.size()) >= *spec.limit)
            return out;
          std::string id = "n" + std::to_string(n) + "_d" + std::to_string(d) +
                           "_" + to_string(model) + "_" + std::to_string(i);
          auto m = make_member(n, d, model, spec.seed, index, std::move(id));
          out.push_back(std::move(m));
          ++index;
        }
      }
    }
  }
  return out;
}

namespace {

MineResult mine_hard_from(const std::vector<EnsembleMember> &members,
                          const MineConfig &config, std::uint64_t first_index) {
  if (config.run_budget < 1)
    throw Error(ErrorKind::invalid_budget, "run budget must be at least 1");
  for (const auto &m : members)
    if (m.instance.num_vertices() > kExactMaxVertices)
      throw Error(ErrorKind::size_limit,
                  m.id + " is too large for the exact solver");

  std::vector<std::optional<HardInstanceRecord>> found(members.size());
  std::vector<char> nonpositive(members.size(), 0);
  std::mutex log_mutex;
  auto log = [&](const std::string &line) {
    if (!config.log)
      return;
    std::lock_guard lock(log_mutex);
    config.log(line);
  };

  parallel_for(0, members.size(), config.jobs, [&](std::size_t i) {
    const auto &m = members[i];
    const double exact = brute_force_exact(m.instance).energy;
    if (!(exact > 0.0)) {
      nonpositive[i] = 1;
      log(m.id + ": exact optimum " + std::to_string(exact) + " is not positive, skipped");
      return;
    }
    RqaoaConfig rc = config.rqaoa;
    rc.seed = derive_seed(config.rqaoa.seed, first_index + i);
    BestOfOptions options;
    options.exact_energy = exact;
    options.cache = config.cache;
    if (config.early_stop)
      options.stop_above = config.threshold * exact;
    const int budget = m.model == WeightModel::bimodal ? config.run_budget : 1;
    const auto best = best_of_runs(m.instance, rc, budget, options);
    const double ratio = best.best.energy / exact;
    log(m.id + ": ratio " + std::to_string(ratio) + " after " +
        std::to_string(best.runs_used) + " runs");
    if (ratio <= config.threshold) {
      found[i] = HardInstanceRecord{m.id, m.n, m.d, m.model, m.instance,
                                    exact, best.best.energy, ratio, best.runs_used};
    }
  });

  MineResult result;
  result.scanned = static_cast<int>(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    result.skipped_nonpositive += nonpositive[i];
    if (found[i])
      result.records.push_back(std::move(*found[i]));
  }
  return result;
}

} // namespace

MineResult mine_hard(const std::vector<EnsembleMember> &members,
                     const MineConfig &config) {
  return mine_hard_from(members, config, 0);
}

MineResult find_hard(const std::function<EnsembleMember(std::uint64_t)> &make,
                     int wanted, int max_scan, const MineConfig &config) {
  MineResult result;
  const int chunk = std::max(config.jobs, 1) * 2;
  std::uint64_t next = 0;
  while (static_cast<int>(result.records.size()) < wanted &&
         result.scanned < max_scan) {
    const int take = std::min(chunk, max_scan - result.scanned);
    std::vector<EnsembleMember> members;
    for (int i = 0; i < take; ++i)
      members.push_back(make(next++));
    MineConfig part = config;
    // Keep per-member seeds tied to the global index, not the chunk index.
    auto mined = mine_hard_from(members, part, next - take);
    result.scanned += mined.scanned;
    result.skipped_nonpositive += mined.skipped_nonpositive;
    for (auto &r : mined.records)
      if (static_cast<int>(result.records.size()) < wanted)
        result.records.push_back(std::move(r));
  }
  return result;
}

} // namespace rlrqaoa
