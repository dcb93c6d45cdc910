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

#include "rlrqaoa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>

#include "rlrqaoa/csv.hpp"
#include "rlrqaoa/error.hpp"
#include "rlrqaoa/instance_io.hpp"
#include "rlrqaoa/parallel.hpp"

namespace rlrqaoa {

namespace fs = std::filesystem;

std::vector<TimedRun> timed_runs(const IsingInstance &instance,
                                 const RqaoaConfig &config, int k, int jobs,
                                 bool timing, const RunOptions &options) {
  if (k < 1)
    throw Error(ErrorKind::invalid_budget, "run count must be at least 1");
  std::vector<TimedRun> out(k);
  parallel_for(0, k, jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    out[i].result = run_rqaoa_indexed(instance, config, i, options);
    if (timing)
      out[i].runtime_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  });
  return out;
}

namespace {

int ties_total(const RunResult &r) {
  int total = 0;
  for (int t : r.tie_counts)
    total += t;
  return total;
}

void ensure_dir(const fs::path &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw Error(ErrorKind::io_error, "cannot create " + dir.string());
}

} // namespace

void write_runs_csv(const fs::path &path, const std::string &id,
                    const std::vector<TimedRun> &runs,
                    std::optional<double> exact_energy, bool append) {
  std::optional<CsvWriter> fresh;
  std::ofstream appended;
  if (!append) {
    fresh.emplace(path, kRunsColumns);
  } else {
    appended.open(path, std::ios::binary | std::ios::app);
    if (!appended)
      throw Error(ErrorKind::io_error, "cannot append to " + path.string());
  }
  for (const auto &run : runs) {
    const auto &r = run.result;
    std::vector<std::string> cells{id,
                                   std::to_string(r.seed),
                                   format_number(r.energy),
                                   format_number(exact_energy),
                                   format_number(approximation_ratio(r.energy, exact_energy)),
                                   std::to_string(ties_total(r)),
                                   format_number(run.runtime_ms)};
    if (fresh) {
      fresh->row(cells);
    } else {
      for (std::size_t i = 0; i < cells.size(); ++i)
        appended << (i ? "," : "") << cells[i];
      appended << '\n';
    }
  }
}

void write_ties_csv(const fs::path &path, const std::string &id,
                    const std::vector<TimedRun> &runs) {
  CsvWriter csv(path, kTiesColumns);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto &ties = runs[r].result.tie_counts;
    for (std::size_t it = 0; it < ties.size(); ++it)
      csv.row({id, std::to_string(r), std::to_string(it), std::to_string(ties[it])});
  }
}

void write_learning_curve(const fs::path &path, const std::vector<CurvePoint> &curve) {
  CsvWriter csv(path, kCurveColumns);
  for (const auto &p : curve)
    csv.row({std::to_string(p.episode), format_number(p.energy),
             format_number(p.best_so_far), format_number(p.ratio)});
}

void write_hard_index(const fs::path &path,
                      const std::vector<HardInstanceRecord> &records) {
  CsvWriter csv(path, kHardIndexColumns);
  for (const auto &r : records)
    csv.row({r.id, std::to_string(r.n), std::to_string(r.d), to_string(r.model),
             format_number(r.exact_energy), format_number(r.rqaoa_best_energy),
             format_number(r.ratio)});
}

TieSummary summarize_runs(const std::vector<TimedRun> &runs, double exact_energy) {
  TieSummary s;
  if (runs.empty())
    return s;
  const double k = static_cast<double>(runs.size());
  const bool ratio_defined = exact_energy > 0.0;
  double sum = 0.0, sum_sq = 0.0;
  long iterations = 0, tied = 0, ties = 0;
  int hits = 0;
  for (const auto &run : runs) {
    const auto &r = run.result;
    const double ratio = ratio_defined ? r.energy / exact_energy
                                       : std::numeric_limits<double>::quiet_NaN();
    sum += ratio;
    sum_sq += ratio * ratio;
    if (r.energy >= exact_energy - 1e-9 * std::max(1.0, std::abs(exact_energy)))
      ++hits;
    for (int t : r.tie_counts) {
      ++iterations;
      tied += t > 0;
      ties += t;
    }
  }
  s.mean_ratio = sum / k;
  s.std_ratio = runs.size() > 1
                    ? std::sqrt(std::max(0.0, (sum_sq - k * s.mean_ratio * s.mean_ratio) / (k - 1)))
                    : 0.0;
  s.ground_state_probability = hits / k;
  if (iterations > 0) {
    s.tie_fraction = static_cast<double>(tied) / iterations;
    s.mean_ties_per_iteration = static_cast<double>(ties) / iterations;
  }
  return s;
}

CageTiesReport bench_cage_ties(const CageTiesConfig &config, AngleCache *cache) {
  if (config.weight_seeds < 1)
    throw Error(ErrorKind::invalid_argument, "need at least one weight seed");
  const Graph graph = cage(3, 8);
  CageTiesReport report;
  for (int k = 0; k < config.weight_seeds; ++k) {
    CageTiesInstance fi;
    fi.id = "cage3_8_w" + std::to_string(k);
    Rng rng = make_stream(config.seed, k);
    fi.instance = assign_weights(graph, WeightModel::bimodal, rng);
    fi.instance.metadata.seed = derive_seed(config.seed, k);
    fi.instance.metadata.name = fi.id;
    fi.exact = brute_force_exact(fi.instance);

    RqaoaConfig rc = config.rqaoa;
    rc.seed = derive_seed(config.seed, 1000 + k);
    RunOptions options{fi.exact.energy, cache};
    fi.runs = timed_runs(fi.instance, rc, config.runs, config.jobs, config.timing, options);
    fi.summary = summarize_runs(fi.runs, fi.exact.energy);
    if (fi.summary.mean_ratio >= 0.91 && fi.summary.mean_ratio <= 1.0 &&
        fi.summary.tie_fraction >= 0.70)
      report.seed_in_band = true;
    report.instances.push_back(std::move(fi));
  }

  double ratio_sum = 0.0, hits = 0.0, tied = 0.0, ties = 0.0, count = 0.0;
  double its_total = 0.0;
  for (const auto &fi : report.instances) {
    const double k = static_cast<double>(fi.runs.size());
    const double its = k * static_cast<double>(fi.runs.front().result.tie_counts.size());
    ratio_sum += fi.summary.mean_ratio * k;
    hits += fi.summary.ground_state_probability * k;
    tied += fi.summary.tie_fraction * its;
    ties += fi.summary.mean_ties_per_iteration * its;
    count += k;
    its_total += its;
  }
  report.overall.mean_ratio = ratio_sum / count;
  report.overall.ground_state_probability = hits / count;
  report.overall.tie_fraction = its_total > 0 ? tied / its_total : 0.0;
  report.overall.mean_ties_per_iteration = its_total > 0 ? ties / its_total : 0.0;
  double sq = 0.0;
  for (const auto &fi : report.instances)
    for (const auto &run : fi.runs) {
      const double dev = run.result.energy / fi.exact.energy - report.overall.mean_ratio;
      sq += dev * dev;
    }
  report.overall.std_ratio = count > 1 ? std::sqrt(sq / (count - 1)) : 0.0;
  return report;
}

namespace {

std::vector<std::string> summary_cells(const std::string &id, double exact,
                                       std::uint64_t degeneracy, const TieSummary &s) {
  return {id,
          format_number(exact),
          std::to_string(degeneracy),
          format_number(s.mean_ratio),
          format_number(s.std_ratio),
          format_number(s.ground_state_probability),
          format_number(s.tie_fraction),
          format_number(s.mean_ties_per_iteration)};
}

} // namespace

void write_cage_ties(const CageTiesReport &report, const fs::path &dir) {
  ensure_dir(dir / "instances");
  CsvWriter runs(dir / "runs.csv", kRunsColumns);
  CsvWriter ties(dir / "ties.csv", kTiesColumns);
  CsvWriter summary(dir / "summary.csv",
                    {"instance_id", "exact_energy", "degeneracy", "mean_ratio",
                     "std_ratio", "ground_state_probability", "tie_fraction",
                     "mean_ties_per_iteration"});
  for (const auto &fi : report.instances) {
    save_instance(fi.instance, dir / "instances" / (fi.id + ".json"));
    for (std::size_t r = 0; r < fi.runs.size(); ++r) {
      const auto &res = fi.runs[r].result;
      runs.row({fi.id, std::to_string(res.seed), format_number(res.energy),
                format_number(fi.exact.energy),
                format_number(approximation_ratio(res.energy, fi.exact.energy)),
                std::to_string(ties_total(res)), format_number(fi.runs[r].runtime_ms)});
      for (std::size_t it = 0; it < res.tie_counts.size(); ++it)
        ties.row({fi.id, std::to_string(r), std::to_string(it),
                  std::to_string(res.tie_counts[it])});
    }
    summary.row(summary_cells(fi.id, fi.exact.energy, fi.exact.degeneracy, fi.summary));
  }
  auto all = summary_cells("all", std::numeric_limits<double>::quiet_NaN(), 0, report.overall);
  all[1] = "NA";
  all[2] = "NA";
  summary.row(all);

  CsvWriter checks(dir / "thresholds.csv", {"check", "value", "threshold", "pass"});
  const auto &o = report.overall;
  checks.row({"mean_ratio", format_number(o.mean_ratio), "0.9", o.mean_ratio >= 0.90 ? "1" : "0"});
  checks.row({"ground_state_probability", format_number(o.ground_state_probability), "0.1",
              o.ground_state_probability >= 0.10 ? "1" : "0"});
  checks.row({"tie_fraction", format_number(o.tie_fraction), "0.5",
              o.tie_fraction >= 0.50 ? "1" : "0"});
  checks.row({"seed_in_band", report.seed_in_band ? "1" : "0", "1",
              report.seed_in_band ? "1" : "0"});
}

MineResult mine_hard_mixed(int wanted, int n_min, int n_max, int max_scan,
                           std::uint64_t seed, const MineConfig &config) {
  struct Cell {
    int n, d;
    WeightModel model;
  };
  std::vector<Cell> cells;
  for (int n = std::max(n_min, 4); n <= n_max; ++n)
    for (int d = 3; d < n; ++d)
      if ((n * d) % 2 == 0)
        for (auto model : {WeightModel::bimodal, WeightModel::gaussian})
          cells.push_back({n, d, model});
  if (cells.empty())
    throw Error(ErrorKind::infeasible_parameters, "no feasible (n, d) in the requested range");
  auto make = [&](std::uint64_t j) {
    const auto &c = cells[j % cells.size()];
    return make_member(c.n, c.d, c.model, seed, j,
                       "hard_n" + std::to_string(c.n) + "_d" + std::to_string(c.d) + "_" +
                           to_string(c.model) + "_" + std::to_string(j));
  };
  return find_hard(make, wanted, max_scan, config);
}

HardBenchReport bench_hard_instances(const std::vector<HardBenchInstance> &instances,
                      const HardBenchConfig &config, AngleCache *cache) {
  if (config.rl_runs < 1)
    throw Error(ErrorKind::invalid_argument, "need at least one RL run");
  HardBenchReport report;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto &fi = instances[k];
    if (!(fi.exact_energy > 0.0))
      throw Error(ErrorKind::invalid_argument, fi.id + ": exact optimum must be positive");
    HardBenchRow row;
    row.id = fi.id;
    row.n = fi.instance.num_vertices();
    row.exact_energy = fi.exact_energy;
    if (fi.rqaoa_best) {
      row.rqaoa_best = *fi.rqaoa_best;
    } else {
      RqaoaConfig rc = config.rqaoa;
      rc.seed = derive_seed(derive_seed(config.seed, k), 1u << 20);
      BestOfOptions options;
      options.jobs = config.jobs;
      options.cache = cache;
      row.rqaoa_best = best_of_runs(fi.instance, rc, config.rqaoa_runs, options).best.energy;
    }
    row.rqaoa_ratio = row.rqaoa_best / fi.exact_energy;

    std::vector<TrainingResult> results(config.rl_runs);
    parallel_for(0, config.rl_runs, config.jobs, [&](std::size_t r) {
      TrainerConfig tc = config.trainer;
      tc.seed = derive_seed(derive_seed(config.seed, k), r);
      tc.jobs = 1;
      TrainOptions options;
      options.exact_energy = fi.exact_energy;
      options.episode.cache = cache;
      results[r] = train(fi.instance, PolicyKind::rl_rqaoa, tc, config.rqaoa, options);
    });
    row.rl_best = -std::numeric_limits<double>::infinity();
    std::vector<std::vector<CurvePoint>> curves;
    double ratio_sum = 0.0;
    for (auto &res : results) {
      if (res.best) {
        row.rl_best = std::max(row.rl_best, res.best->energy);
        ratio_sum += res.best->energy / fi.exact_energy;
      }
      curves.push_back(std::move(res.curve));
    }
    row.rl_ratio = row.rl_best / fi.exact_energy;
    row.rl_mean_ratio = ratio_sum / config.rl_runs;
    row.improved = row.rl_ratio > row.rqaoa_ratio;
    report.rows.push_back(row);
    report.curves.push_back(std::move(curves));
  }
  return report;
}

void write_hard_instances(const HardBenchReport &report, const fs::path &dir) {
  ensure_dir(dir);
  CsvWriter summary(dir / "summary.csv",
                    {"instance_id", "n", "exact_energy", "rqaoa_best", "rqaoa_ratio",
                     "rlrqaoa_best", "rlrqaoa_ratio", "rlrqaoa_mean_ratio", "improved"});
  for (const auto &r : report.rows)
    summary.row({r.id, std::to_string(r.n), format_number(r.exact_energy),
                 format_number(r.rqaoa_best), format_number(r.rqaoa_ratio),
                 format_number(r.rl_best), format_number(r.rl_ratio), format_number(r.rl_mean_ratio),
                 r.improved ? "1" : "0"});
  CsvWriter curves(dir / "curves.csv",
                   {"instance_id", "run", "episode", "energy", "best_so_far", "ratio"});
  for (std::size_t k = 0; k < report.rows.size(); ++k)
    for (std::size_t r = 0; r < report.curves[k].size(); ++r)
      for (const auto &p : report.curves[k][r])
        curves.row({report.rows[k].id, std::to_string(r), std::to_string(p.episode),
                    format_number(p.energy), format_number(p.best_so_far),
                    format_number(p.ratio)});
}

MeanCurve mean_curve(const std::vector<std::vector<CurvePoint>> &runs) {
  MeanCurve out;
  if (runs.empty())
    return out;
  std::size_t len = runs.front().size();
  for (const auto &r : runs)
    len = std::min(len, r.size());
  const double k = static_cast<double>(runs.size());
  double t = 0.0;
  if (runs.size() > 1) {
    boost::math::students_t dist(k - 1);
    t = boost::math::quantile(boost::math::complement(dist, 0.025));
  }
  for (std::size_t i = 0; i < len; ++i) {
    double sum = 0.0;
    for (const auto &r : runs)
      sum += r[i].best_so_far;
    const double mean = sum / k;
    double sq = 0.0;
    for (const auto &r : runs)
      sq += (r[i].best_so_far - mean) * (r[i].best_so_far - mean);
    const double half = runs.size() > 1 ? t * std::sqrt(sq / (k - 1)) / std::sqrt(k) : 0.0;
    out.mean.push_back(mean);
    out.ci_low.push_back(mean - half);
    out.ci_high.push_back(mean + half);
  }
  return out;
}

double SeparationReport::mean_at_checkpoint(std::size_t instance, int policy) const {
  const auto &mean = instances.at(instance).curves[policy].mean;
  if (mean.empty())
    return std::numeric_limits<double>::quiet_NaN();
  return mean[std::min<std::size_t>(checkpoint, mean.size() - 1)];
}

SeparationReport bench_separation(const SeparationConfig &config, AngleCache *cache) {
  if (config.runs < 1 || config.episodes < 1 || config.instances < 1)
    throw Error(ErrorKind::invalid_argument, "instances, runs and episodes must be positive");
  SeparationReport report;
  report.checkpoint = config.episodes - 1;
  for (int k = 0; k < config.instances; ++k) {
    SeparationInstance fi;
    fi.id = "n" + std::to_string(config.n) + "_d3_bimodal_" + std::to_string(k);
    fi.instance = make_member(config.n, 3, WeightModel::bimodal, config.seed, k, fi.id).instance;
    if (config.exact && fi.instance.num_vertices() <= kExactMaxVertices)
      fi.exact_energy = brute_force_exact(fi.instance).energy;

    for (int policy = 0; policy < 2; ++policy) {
      const PolicyKind kind = policy == 0 ? PolicyKind::rl_rqaoa : PolicyKind::rl_rone;
      std::vector<TrainingResult> results(config.runs);
      parallel_for(0, config.runs, config.jobs, [&](std::size_t r) {
        TrainerConfig tc = config.trainer;
        tc.total_episodes = config.episodes;
        tc.seed = derive_seed(derive_seed(config.seed, 100 + k), r);
        tc.jobs = 1;
        TrainOptions options;
        options.exact_energy = fi.exact_energy;
        options.episode.cache = cache;
        results[r] = train(fi.instance, kind, tc, config.rqaoa, options);
      });
      for (auto &res : results)
        fi.runs[policy].push_back(std::move(res.curve));
      fi.curves[policy] = mean_curve(fi.runs[policy]);
    }
    report.instances.push_back(std::move(fi));
  }
  return report;
}

void write_separation(const SeparationReport &report, const fs::path &dir) {
  ensure_dir(dir / "instances");
  static const char *names[2] = {"rl-rqaoa", "rl-rone"};
  CsvWriter curves(dir / "curves.csv",
                   {"instance_id", "policy", "episode", "mean_best_so_far", "ci_low", "ci_high"});
  CsvWriter runs(dir / "runs.csv",
                 {"instance_id", "policy", "run", "episode", "energy", "best_so_far", "ratio"});
  CsvWriter summary(dir / "summary.csv",
                    {"instance_id", "exact_energy", "episode", "rlrqaoa_mean_best",
                     "rlrone_mean_best", "rlrqaoa_ahead"});
  for (std::size_t k = 0; k < report.instances.size(); ++k) {
    const auto &fi = report.instances[k];
    save_instance(fi.instance, dir / "instances" / (fi.id + ".json"));
    for (int policy = 0; policy < 2; ++policy) {
      const auto &c = fi.curves[policy];
      for (std::size_t e = 0; e < c.mean.size(); ++e)
        curves.row({fi.id, names[policy], std::to_string(e), format_number(c.mean[e]),
                    format_number(c.ci_low[e]), format_number(c.ci_high[e])});
      for (std::size_t r = 0; r < fi.runs[policy].size(); ++r)
        for (const auto &p : fi.runs[policy][r])
          runs.row({fi.id, names[policy], std::to_string(r), std::to_string(p.episode),
                    format_number(p.energy), format_number(p.best_so_far),
                    format_number(p.ratio)});
    }
    const double a = report.mean_at_checkpoint(k, 0);
    const double b = report.mean_at_checkpoint(k, 1);
    summary.row({fi.id, format_number(fi.exact_energy), std::to_string(report.checkpoint),
                 format_number(a), format_number(b), a >= b ? "1" : "0"});
  }
}

} // namespace rlrqaoa
