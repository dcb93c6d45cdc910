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
#include <string>
#include <vector>

#include "rlrqaoa/ising.hpp"
#include "rlrqaoa/random.hpp"
#include "rlrqaoa/rqaoa.hpp"

namespace rlrqaoa {

struct Graph {
  int n = 0;
  std::vector<Edge> edges; // canonical, sorted

  std::vector<int> degrees() const;
};

/// Simple d-regular graph from the pairing model: stubs are shuffled and
/// paired, colliding pairs are re-paired among themselves, and the attempt
/// restarts when no valid pair remains.
Graph gen_random_regular(int n, int d, Rng &rng);

/// Length of the shortest cycle, or 0 for a forest.
int girth(const Graph &graph);
bool is_simple(const Graph &graph);
bool is_regular(const Graph &graph, int d);

enum class WeightModel { gaussian, bimodal };

const char *to_string(WeightModel model);
WeightModel parse_weight_model(const std::string &text);

/// Independent per-edge weights; fields and offset are zero. Gaussian draws
/// with a repeated weight are redrawn as a whole.
IsingInstance assign_weights(const Graph &graph, WeightModel model, Rng &rng);

/// Catalogued (d, g)-cages: (3,3) K4, (3,4) K33, (3,5) Petersen,
/// (3,6) Heawood, (3,7) McGee, (3,8) Tutte-Coxeter. Degree and girth are
/// checked before returning.
Graph cage(int d, int g);

struct EnsembleSpec {
  int n_min = 8;
  int n_max = 8;
  int d_min = 3;
  int d_max = 3;
  std::vector<WeightModel> models{WeightModel::bimodal};
  int count_per_cell = 1;
  std::uint64_t seed = 0;
  /// Stop after this many instances in total.
  std::optional<int> limit;
};

struct EnsembleMember {
  std::string id;
  int n = 0;
  int d = 0;
  WeightModel model = WeightModel::bimodal;
  IsingInstance instance;
};

/// One ensemble member drawn from make_stream(seed, index).
EnsembleMember make_member(int n, int d, WeightModel model, std::uint64_t seed,
                           std::uint64_t index, std::string id);

/// Cells are visited in (n, d, model) order; infeasible cells (odd n*d or
/// d >= n) are skipped. Member i uses the stream make_stream(seed, i).
std::vector<EnsembleMember> generate_ensemble(const EnsembleSpec &spec);

struct HardInstanceRecord {
  std::string id;
  int n = 0;
  int d = 0;
  WeightModel model = WeightModel::bimodal;
  IsingInstance instance;
  double exact_energy = 0.0;
  double rqaoa_best_energy = 0.0;
  double ratio = 0.0;
  int runs_used = 0;
};

struct MineConfig {
  int run_budget = 1400;
  double threshold = 0.95;
  RqaoaConfig rqaoa;
  int jobs = 1;
  /// Stop an instance's runs once one exceeds the threshold; the keep/drop
  /// decision is unchanged, only runs_used shrinks.
  bool early_stop = true;
  AngleCache *cache = nullptr;
  std::function<void(const std::string &)> log;
};

struct MineResult {
  std::vector<HardInstanceRecord> records;
  int scanned = 0;
  int skipped_nonpositive = 0;
};

/// Keeps members whose RQAOA ratio is <= threshold. Bimodal members get the
/// best of run_budget runs, gaussian members a single run. Member i runs
/// with seed derive_seed(config.rqaoa.seed, i).
MineResult mine_hard(const std::vector<EnsembleMember> &members,
                     const MineConfig &config);

/// Mines members make(0), make(1), ... in chunks until `wanted` records are
/// found or `max_scan` members were scanned. Records are the first `wanted`
/// hard members in index order, whatever the chunk size.
MineResult find_hard(const std::function<EnsembleMember(std::uint64_t)> &make,
                     int wanted, int max_scan, const MineConfig &config);

} // namespace rlrqaoa
