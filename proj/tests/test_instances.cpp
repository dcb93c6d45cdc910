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

#include <doctest.h>

#include <cmath>
#include <queue>
#include <set>

#include "rlrqaoa/error.hpp"
#include "rlrqaoa/instances.hpp"
#include "support.hpp"

using namespace rlrqaoa;

namespace {

/// Shortest cycle through each edge: distance between its endpoints with the
/// edge removed, plus one.
int girth_by_edge_removal(const Graph &g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto &e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int best = 0;
  for (const auto &e : g.edges) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[e.u] = 0;
    q.push(e.u);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if ((x == e.u && y == e.v) || (x == e.v && y == e.u) || dist[y] >= 0)
          continue;
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
    if (dist[e.v] > 0 && (best == 0 || dist[e.v] + 1 < best))
      best = dist[e.v] + 1;
  }
  return best;
}

bool simple_and_regular(const Graph &g, int d) {
  std::set<std::pair<int, int>> seen;
  std::vector<int> deg(g.n, 0);
  for (const auto &e : g.edges) {
    if (e.u == e.v || !seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
      return false;
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int x : deg)
    if (x != d)
      return false;
  return true;
}

} // namespace

TEST_CASE("K4 is the only 3-regular graph on four vertices") {
  Rng rng(1);
  const auto g = gen_random_regular(4, 3, rng);
  CHECK(g.edges.size() == 6);
  CHECK(simple_and_regular(g, 3));
}

TEST_CASE("infeasible regular parameters") {
  Rng rng(2);
  CHECK_THROWS_AS(gen_random_regular(15, 3, rng), Error);
  CHECK_THROWS_AS(gen_random_regular(4, 4, rng), Error);
  CHECK_THROWS_AS(gen_random_regular(4, 0, rng), Error);
  try {
    gen_random_regular(15, 3, rng);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::infeasible_parameters);
  }
}

TEST_CASE("random regular graphs are simple and regular") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    CHECK(simple_and_regular(gen_random_regular(20, 3, rng), 3));
  }
  for (int d = 1; d <= 7; ++d) {
    Rng rng(d);
    const int n = d % 2 ? 16 : 13;
    const auto g = gen_random_regular(n, d, rng);
    CHECK(simple_and_regular(g, d));
    CHECK(is_regular(g, d));
    CHECK(is_simple(g));
  }
}

TEST_CASE("generation is seed-deterministic") {
  Rng a(9), b(9);
  CHECK(gen_random_regular(18, 3, a).edges == gen_random_regular(18, 3, b).edges);
  Rng c(10), d(10);
  const auto g = gen_random_regular(18, 3, c);
  CHECK(assign_weights(g, WeightModel::gaussian, c) ==
        [&] {
          auto h = gen_random_regular(18, 3, d);
          return assign_weights(h, WeightModel::gaussian, d);
        }());
}

TEST_CASE("weight models") {
  Rng rng(3);
  const auto g = gen_random_regular(30, 3, rng);
  const auto bimodal = assign_weights(g, WeightModel::bimodal, rng);
  for (const auto &we : bimodal.edges())
    CHECK(std::abs(we.weight) == 1.0);
  CHECK_FALSE(bimodal.has_fields());
  CHECK(bimodal.offset() == 0.0);

  // 10^4 Gaussian draws through a dense graph.
  Graph dense{142, {}};
  for (int u = 0; u < dense.n && dense.edges.size() < 10000; ++u)
    for (int v = u + 1; v < dense.n && dense.edges.size() < 10000; ++v)
      dense.edges.push_back({u, v});
  const auto gauss = assign_weights(dense, WeightModel::gaussian, rng);
  double sum = 0.0, sq = 0.0;
  std::set<double> distinct;
  for (const auto &we : gauss.edges()) {
    sum += we.weight;
    sq += we.weight * we.weight;
    distinct.insert(we.weight);
  }
  const double n = static_cast<double>(gauss.num_edges());
  CHECK(n == 10000);
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(std::abs(sq / n - (sum / n) * (sum / n) - 1.0) < 0.1);
  CHECK(distinct.size() == gauss.num_edges());
}

TEST_CASE("cage catalog") {
  struct Expect {
    int g, n, m;
  };
  for (auto [g, n, m] : {Expect{3, 4, 6}, Expect{4, 6, 9}, Expect{5, 10, 15}, Expect{6, 14, 21},
                         Expect{7, 24, 36}, Expect{8, 30, 45}}) {
    const auto c = cage(3, g);
    CHECK(c.n == n);
    CHECK(c.edges.size() == static_cast<std::size_t>(m));
    CHECK(simple_and_regular(c, 3));
    CHECK(girth_by_edge_removal(c) == g);
    CHECK(girth(c) == g);
  }
  try {
    cage(3, 9);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::not_available);
    CHECK(std::string(e.what()).find("instance") != std::string::npos);
  }
}

TEST_CASE("girth of forests and random graphs") {
  CHECK(girth(Graph{4, {{0, 1}, {1, 2}, {1, 3}}}) == 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto g = gen_random_regular(16, 3, rng);
    CHECK(girth(g) == girth_by_edge_removal(g));
  }
}

TEST_CASE("ensembles skip infeasible cells and respect limits") {
  EnsembleSpec spec;
  spec.n_min = 5;
  spec.n_max = 8;
  spec.d_min = 3;
  spec.d_max = 4;
  spec.models = {WeightModel::bimodal, WeightModel::gaussian};
  spec.count_per_cell = 2;
  spec.seed = 5;
  const auto members = generate_ensemble(spec);
  // Feasible cells: (5,4) (6,3) (6,4) (7,4) (8,3) (8,4).
  CHECK(members.size() == 6 * 2 * 2);
  for (const auto &m : members) {
    CHECK((m.n * m.d) % 2 == 0);
    CHECK(m.instance.num_edges() == static_cast<std::size_t>(m.n * m.d / 2));
  }
  const auto again = generate_ensemble(spec);
  for (std::size_t i = 0; i < members.size(); ++i)
    CHECK(again[i].instance == members[i].instance);
  spec.limit = 5;
  CHECK(generate_ensemble(spec).size() == 5);
}

TEST_CASE("mining thresholds") {
  EnsembleSpec spec;
  spec.n_min = 8;
  spec.n_max = 10;
  spec.models = {WeightModel::bimodal, WeightModel::gaussian};
  spec.count_per_cell = 3;
  spec.seed = 11;
  const auto members = generate_ensemble(spec);
  MineConfig cfg;
  cfg.run_budget = 5;
  cfg.rqaoa.n_c = 4;
  cfg.rqaoa.grid_n = 200;
  cfg.threshold = 1.0;
  cfg.early_stop = false;
  const auto all = mine_hard(members, cfg);
  CHECK(all.scanned == static_cast<int>(members.size()));
  CHECK(all.records.size() + all.skipped_nonpositive == members.size());
  for (const auto &r : all.records) {
    CHECK(r.ratio == doctest::Approx(r.rqaoa_best_energy / r.exact_energy));
    CHECK(r.exact_energy > 0.0);
    CHECK(r.runs_used == (r.model == WeightModel::bimodal ? 5 : 1));
  }
  cfg.threshold = 0.0;
  CHECK(mine_hard(members, cfg).records.empty());

  cfg.threshold = 0.97;
  const auto full = mine_hard(members, cfg);
  cfg.early_stop = true;
  cfg.jobs = 3;
  const auto fast = mine_hard(members, cfg);
  REQUIRE(full.records.size() == fast.records.size());
  for (std::size_t i = 0; i < full.records.size(); ++i) {
    CHECK(full.records[i].id == fast.records[i].id);
    CHECK(full.records[i].ratio == fast.records[i].ratio);
  }
}

TEST_CASE("incremental mining keeps index order") {
  auto make = [](std::uint64_t j) {
    return make_member(10, 3, WeightModel::bimodal, 21, j, "m" + std::to_string(j));
  };
  MineConfig cfg;
  cfg.run_budget = 3;
  cfg.threshold = 0.99;
  cfg.rqaoa.n_c = 4;
  cfg.rqaoa.grid_n = 200;
  const auto a = find_hard(make, 2, 40, cfg);
  cfg.jobs = 4;
  const auto b = find_hard(make, 2, 40, cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i)
    CHECK(a.records[i].id == b.records[i].id);
}
