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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rlrqaoa/bench.hpp"
#include "rlrqaoa/csv.hpp"
#include "rlrqaoa/error.hpp"
#include "rlrqaoa/exact.hpp"
#include "rlrqaoa/instance_io.hpp"
#include "rlrqaoa/instances.hpp"
#include "rlrqaoa/manifest.hpp"
#include "rlrqaoa/parallel.hpp"
#include "rlrqaoa/qaoa.hpp"
#include "rlrqaoa/rqaoa.hpp"
#include "rlrqaoa/trainer.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace rlrqaoa;

namespace {

constexpr int kUsageExit = 2;
constexpr const char *kOutEnv = "RLRQAOA_OUT";

struct Common {
  std::string out;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct Solver {
  std::string instance;
  int n_c = 8;
  int grid = 2000;
  double tie_tolerance = 1e-8;
  bool warm_start = false;
  bool no_exact = false;
};

struct Rl {
  int episodes = 1400;
  int runs = 1;
  int batch = 10;
  double discount = 0.99;
  double lr_angles = 0.001;
  double lr_betas = 0.5;
  double beta_init = 25.0;
  std::string angle_init = "energy-optimal";
  std::string layout = "beta-one-all";
  bool freeze_angles = false;
  bool baseline = false;
};

void add_common(CLI::App *sub, Common &c) {
  const char *env = std::getenv(kOutEnv);
  c.out = env && *env ? env : "out";
  sub->add_option("--out", c.out, std::string("output directory (default $") + kOutEnv + " or ./out)")
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "master seed")->capture_default_str();
  sub->add_option("--jobs", c.jobs, "worker threads; 1 is the reproducible reference")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_solver(CLI::App *sub, Solver &s, bool with_instance = true) {
  if (with_instance)
    sub->add_option("--instance", s.instance, "instance file")->required();
  sub->add_option("--nc", s.n_c, "recursion cutoff")->capture_default_str();
  sub->add_option("--grid", s.grid, "gamma grid points")->capture_default_str();
  sub->add_option("--tie-tol", s.tie_tolerance, "tie tolerance on |M|")->capture_default_str();
  sub->add_flag("--warm-start", s.warm_start, "refine gamma near the previous optimum only");
  sub->add_flag("--no-exact", s.no_exact, "skip the exact solve (ratios become NA)");
}

void add_rl(CLI::App *sub, Rl &r) {
  sub->add_option("--episodes", r.episodes)->capture_default_str();
  sub->add_option("--batch", r.batch, "episodes per update")->capture_default_str();
  sub->add_option("--discount", r.discount)->capture_default_str();
  sub->add_option("--lr-angles", r.lr_angles)->capture_default_str();
  sub->add_option("--lr-betas", r.lr_betas)->capture_default_str();
  sub->add_option("--beta-init", r.beta_init)->capture_default_str();
  sub->add_option("--angle-init", r.angle_init, "energy-optimal or random")->capture_default_str();
  sub->add_option("--layout", r.layout, "beta-one-all, beta-all or beta-all-all")
      ->capture_default_str();
  sub->add_flag("--freeze-angles", r.freeze_angles, "do not train the angles");
  sub->add_flag("--baseline", r.baseline, "subtract the batch-mean reward");
}

RqaoaConfig rqaoa_config(const Solver &s, std::uint64_t seed) {
  RqaoaConfig c;
  c.n_c = s.n_c;
  c.grid_n = s.grid;
  c.tie_tolerance = s.tie_tolerance;
  c.warm_start = s.warm_start;
  c.seed = seed;
  return c;
}

TrainerConfig trainer_config(const Rl &r, std::uint64_t seed, int jobs) {
  TrainerConfig c;
  c.total_episodes = r.episodes;
  c.batch_size = r.batch;
  c.discount = r.discount;
  c.lr_angles = r.lr_angles;
  c.lr_betas = r.lr_betas;
  c.beta_init = r.beta_init;
  c.angle_init = parse_angle_init(r.angle_init);
  c.layout = parse_beta_layout(r.layout);
  c.train_angles = !r.freeze_angles;
  c.baseline = r.baseline;
  c.seed = seed;
  c.jobs = jobs;
  return c;
}

json options_echo(const CLI::App *sub) {
  json j = json::object();
  for (const CLI::Option *opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->get_name().empty())
      continue;
    std::string key = opt->get_name();
    key.erase(0, key.find_first_not_of('-'));
    if (opt->count() > 0) {
      const auto &res = opt->results();
      j[key] = res.size() == 1 ? json(res.front()) : json(res);
    } else if (opt->get_type_size() == 0) {
      j[key] = false;
    } else {
      j[key] = opt->get_default_str();
    }
  }
  return j;
}

fs::path prepare_out(const std::string &out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw Error(ErrorKind::io_error, "cannot create output directory " + out);
  return dir;
}

std::optional<double> maybe_exact(const IsingInstance &instance, bool skip) {
  if (skip || instance.num_vertices() > kExactMaxVertices)
    return std::nullopt;
  return brute_force_exact(instance).energy;
}

json run_record(const RunResult &r) {
  json trajectory = json::array();
  for (const auto &step : r.trajectory)
    trajectory.push_back({{"edge", {step.edge.u, step.edge.v}},
                          {"sign", step.sign},
                          {"abs_correlation", step.abs_correlation}});
  return {{"energy", r.energy},
          {"ratio", r.approx_ratio ? json(*r.approx_ratio) : json(nullptr)},
          {"seed", r.seed},
          {"assignment", to_json(r.assignment)},
          {"trajectory", trajectory}};
}

void write_json(const fs::path &path, const json &j) {
  std::ofstream out(path, std::ios::binary);
  out << j.dump(2) << '\n';
  if (!out)
    throw Error(ErrorKind::io_error, "cannot write " + path.string());
}

void print_line(const std::string &line) { std::cout << line << '\n'; }

std::string fmt(double x) { return format_number(x); }

int run_cli(std::vector<std::string> args);

struct Invocation {
  std::string command;
  std::vector<std::string> argv;
  json config;
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
  fs::path out;
};

void write_invocation_manifest(const Invocation &inv, const std::string &started) {
  ExperimentManifest m;
  m.command = inv.command;
  m.argv = inv.argv;
  m.config = inv.config;
  m.version = code_version();
  m.master_seed = inv.seed;
  m.started = started;
  m.finished = utc_timestamp();
  for (const auto &path : inv.inputs)
    m.inputs.push_back({path, sha256_file(path)});
  write_manifest(inv.out / "manifest.json", m);
}

int run_cli(std::vector<std::string> args) {
  CLI::App app{"Recursive QAOA solvers, reinforcement-learned variants and benchmarks", "rlrqaoa"};
  app.set_version_flag("--version", code_version());
  app.require_subcommand(1);

  Common common;
  Solver solver;
  Rl rl;

  // generate
  auto *generate = app.add_subcommand("generate", "write random regular or cage instances");
  add_common(generate, common);
  std::string gen_kind = "regular", weights = "bimodal";
  int gen_n = 16, gen_d = 3, gen_g = 8, gen_count = 1;
  generate->add_option("--kind", gen_kind, "regular or cage")
      ->check(CLI::IsMember({"regular", "cage"}))
      ->capture_default_str();
  generate->add_option("--n", gen_n)->capture_default_str();
  generate->add_option("--d", gen_d)->capture_default_str();
  generate->add_option("--g", gen_g, "cage girth")->capture_default_str();
  generate->add_option("--weights", weights, "gaussian or bimodal")->capture_default_str();
  generate->add_option("--count", gen_count)->capture_default_str();

  // exact
  auto *exact = app.add_subcommand("exact", "exhaustive maximum of an instance");
  add_common(exact, common);
  std::string exact_instance;
  exact->add_option("--instance", exact_instance, "instance file")->required();

  // rqaoa
  auto *rqaoa = app.add_subcommand("rqaoa", "greedy recursive QAOA runs");
  add_common(rqaoa, common);
  add_solver(rqaoa, solver);
  int rqaoa_runs = 1;
  bool timing = false;
  rqaoa->add_option("--runs", rqaoa_runs)->capture_default_str();
  rqaoa->add_flag("--timing", timing, "record per-run wall time (output no longer reproducible)");

  // rl-rqaoa / rl-rone
  auto *rl_rqaoa = app.add_subcommand("rl-rqaoa", "train the RL-RQAOA policy");
  auto *rl_rone = app.add_subcommand("rl-rone", "train the classical RL-RONE policy");
  for (auto *sub : {rl_rqaoa, rl_rone}) {
    add_common(sub, common);
    add_solver(sub, solver);
    add_rl(sub, rl);
    sub->add_option("--runs", rl.runs, "independent training runs")->capture_default_str();
  }

  // mine
  auto *mine = app.add_subcommand("mine", "search a random ensemble for instances RQAOA solves poorly");
  add_common(mine, common);
  add_solver(mine, solver, false);
  EnsembleSpec spec;
  std::vector<std::string> models{"bimodal"};
  int limit = 0;
  MineConfig mine_config;
  bool no_early_stop = false;
  mine->add_option("--n-min", spec.n_min)->capture_default_str();
  mine->add_option("--n-max", spec.n_max)->capture_default_str();
  mine->add_option("--d-min", spec.d_min)->capture_default_str();
  mine->add_option("--d-max", spec.d_max)->capture_default_str();
  mine->add_option("--weights", models, "weight models")->capture_default_str();
  mine->add_option("--count", spec.count_per_cell, "instances per (n, d, model) cell")
      ->capture_default_str();
  mine->add_option("--limit", limit, "stop after this many instances (0 = no limit)")
      ->capture_default_str();
  mine->add_option("--budget", mine_config.run_budget, "RQAOA runs per bimodal instance")
      ->capture_default_str();
  mine->add_option("--threshold", mine_config.threshold)->capture_default_str();
  mine->add_flag("--no-early-stop", no_early_stop, "always spend the full run budget");

  // bench-fig3
  auto *ties_cmd = app.add_subcommand("bench-fig3", "ties and ratios on weighted (3,8)-cages");
  add_common(ties_cmd, common);
  add_solver(ties_cmd, solver, false);
  CageTiesConfig ties_config;
  ties_cmd->add_option("--weight-seeds", ties_config.weight_seeds)->capture_default_str();
  ties_cmd->add_option("--runs", ties_config.runs)->capture_default_str();
  ties_cmd->add_flag("--timing", ties_config.timing, "record per-run wall time");

  // bench-fig5
  auto *hard_cmd = app.add_subcommand("bench-fig5", "RL-RQAOA against RQAOA on hard instances");
  add_common(hard_cmd, common);
  add_solver(hard_cmd, solver, false);
  Rl hard_rl;
  hard_rl.angle_init = "random";
  add_rl(hard_cmd, hard_rl);
  HardBenchConfig hard_config;
  std::vector<std::string> hard_inputs;
  int hard_count = 3, hard_n_min = 14, hard_n_max = 20, hard_max_scan = 2000;
  hard_cmd->add_option("--instances", hard_inputs, "instance files (mined when omitted)");
  hard_cmd->add_option("--count", hard_count, "hard instances to mine")->capture_default_str();
  hard_cmd->add_option("--n-min", hard_n_min)->capture_default_str();
  hard_cmd->add_option("--n-max", hard_n_max)->capture_default_str();
  hard_cmd->add_option("--max-scan", hard_max_scan)->capture_default_str();
  hard_cmd->add_option("--threshold", mine_config.threshold)->capture_default_str();
  hard_cmd->add_option("--rqaoa-runs", hard_config.rqaoa_runs)->capture_default_str();
  hard_cmd->add_option("--rl-runs", hard_config.rl_runs)->capture_default_str();

  // bench-fig6
  auto *sep_cmd = app.add_subcommand("bench-fig6", "RL-RQAOA against RL-RONE learning curves");
  add_common(sep_cmd, common);
  add_solver(sep_cmd, solver, false);
  Rl sep_rl;
  sep_rl.episodes = 1000;
  add_rl(sep_cmd, sep_rl);
  SeparationConfig sep_config;
  sep_cmd->add_option("--instances", sep_config.instances)->capture_default_str();
  sep_cmd->add_option("--n", sep_config.n)->capture_default_str();
  sep_cmd->add_option("--runs", sep_config.runs)->capture_default_str();

  // landscape
  auto *landscape = app.add_subcommand("landscape", "depth-1 energy over an (alpha, gamma) grid");
  add_common(landscape, common);
  std::string land_instance;
  int alpha_points = 100, gamma_points = 100;
  landscape->add_option("--instance", land_instance, "instance file")->required();
  landscape->add_option("--alpha-points", alpha_points)->capture_default_str();
  landscape->add_option("--gamma-points", gamma_points)->capture_default_str();

  // replay
  auto *replay = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  std::string manifest_path, replay_out;
  replay->add_option("--manifest", manifest_path, "manifest.json")->required();
  replay->add_option("--out", replay_out, "output directory (default: the recorded one)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsageExit;
  }

  if (replay->parsed()) {
    const auto m = read_manifest(manifest_path);
    for (const auto &input : m.inputs) {
      if (sha256_file(input.path) != input.sha256)
        throw Error(ErrorKind::io_error, input.path + " changed since the manifest was written");
    }
    std::vector<std::string> again = m.argv;
    if (!replay_out.empty()) {
      for (std::size_t i = 0; i < again.size(); ++i) {
        if (again[i] == "--out" && i + 1 < again.size()) {
          again.erase(again.begin() + i, again.begin() + i + 2);
          break;
        }
        if (again[i].rfind("--out=", 0) == 0) {
          again.erase(again.begin() + i);
          break;
        }
      }
      again.push_back("--out");
      again.push_back(replay_out);
    }
    return run_cli(again);
  }

  CLI::App *sub = app.get_subcommands().front();
  Invocation inv;
  inv.command = sub->get_name();
  inv.argv = args;
  inv.config = options_echo(sub);
  inv.seed = common.seed;
  inv.out = prepare_out(common.out);
  const std::string started = utc_timestamp();

  if (sub == generate) {
    fs::create_directories(inv.out / "instances");
    const WeightModel model = parse_weight_model(weights);
    for (int i = 0; i < gen_count; ++i) {
      IsingInstance instance;
      std::string id;
      if (gen_kind == "regular") {
        id = "n" + std::to_string(gen_n) + "_d" + std::to_string(gen_d) + "_" + weights + "_" +
             std::to_string(i);
        instance = make_member(gen_n, gen_d, model, common.seed, i, id).instance;
      } else {
        id = "cage" + std::to_string(gen_d) + "_" + std::to_string(gen_g) + "_" + weights + "_" +
             std::to_string(i);
        Rng rng = make_stream(common.seed, i);
        instance = assign_weights(cage(gen_d, gen_g), model, rng);
        instance.metadata.seed = derive_seed(common.seed, i);
        instance.metadata.name = id;
      }
      const fs::path path = inv.out / "instances" / (id + ".json");
      save_instance(instance, path);
      print_line(path.string());
    }
  } else if (sub == exact) {
    inv.inputs.push_back(exact_instance);
    const auto instance = load_instance(exact_instance);
    const auto sol = brute_force_exact(instance);
    print_line("energy " + fmt(sol.energy));
    print_line("assignment " + to_json(sol.assignment).dump());
    print_line("degeneracy " + std::to_string(sol.degeneracy));
    write_json(inv.out / "exact.json", {{"energy", sol.energy},
                                        {"assignment", to_json(sol.assignment)},
                                        {"degeneracy", sol.degeneracy}});
  } else if (sub == rqaoa) {
    inv.inputs.push_back(solver.instance);
    const auto instance = load_instance(solver.instance);
    const auto exact_energy = maybe_exact(instance, solver.no_exact);
    AngleCache cache;
    const auto runs = timed_runs(instance, rqaoa_config(solver, common.seed), rqaoa_runs,
                                 common.jobs, timing, RunOptions{exact_energy, &cache});
    const std::string id = instance.metadata.name.empty()
                               ? fs::path(solver.instance).stem().string()
                               : instance.metadata.name;
    write_runs_csv(inv.out / "runs.csv", id, runs, exact_energy);
    write_ties_csv(inv.out / "ties.csv", id, runs);
    std::size_t best = 0;
    for (std::size_t i = 1; i < runs.size(); ++i)
      if (runs[i].result.energy > runs[best].result.energy)
        best = i;
    write_json(inv.out / "best.json", run_record(runs[best].result));
    if (exact_energy) {
      const auto s = summarize_runs(runs, *exact_energy);
      CsvWriter csv(inv.out / "summary.csv",
                    {"instance_id", "runs", "exact_energy", "best_energy", "mean_ratio",
                     "std_ratio", "ground_state_probability", "tie_fraction",
                     "mean_ties_per_iteration"});
      csv.row({id, std::to_string(runs.size()), fmt(*exact_energy),
               fmt(runs[best].result.energy), format_number(s.mean_ratio),
               format_number(s.std_ratio), fmt(s.ground_state_probability),
               fmt(s.tie_fraction), fmt(s.mean_ties_per_iteration)});
      print_line("mean ratio " + fmt(s.mean_ratio) + ", ground-state probability " +
                 fmt(s.ground_state_probability) + ", tie fraction " + fmt(s.tie_fraction));
    }
    print_line("best energy " + fmt(runs[best].result.energy));
  } else if (sub == rl_rqaoa || sub == rl_rone) {
    inv.inputs.push_back(solver.instance);
    const auto instance = load_instance(solver.instance);
    const PolicyKind kind = sub == rl_rqaoa ? PolicyKind::rl_rqaoa : PolicyKind::rl_rone;
    const auto exact_energy = maybe_exact(instance, solver.no_exact);
    const auto tc = trainer_config(rl, common.seed, 1);
    inv.config["trainer"] = to_json(tc);
    if (rl.runs < 1)
      throw Error(ErrorKind::invalid_argument, "--runs must be at least 1");
    AngleCache cache;
    std::vector<TrainingResult> results(rl.runs);
    parallel_for(0, rl.runs, common.jobs, [&](std::size_t r) {
      TrainerConfig run_config = tc;
      run_config.seed = derive_seed(common.seed, r);
      TrainOptions options;
      options.exact_energy = exact_energy;
      options.episode.grid_n = solver.grid;
      options.episode.cache = &cache;
      results[r] = train(instance, kind, run_config, rqaoa_config(solver, run_config.seed),
                         options);
    });
    std::optional<RunResult> best;
    for (int r = 0; r < rl.runs; ++r) {
      write_learning_curve(inv.out / ("curve_" + std::to_string(r) + ".csv"), results[r].curve);
      write_json(inv.out / ("checkpoint_" + std::to_string(r) + ".json"),
                 to_json(results[r].final_params));
      if (results[r].best && (!best || results[r].best->energy > best->energy))
        best = results[r].best;
    }
    if (best) {
      write_json(inv.out / "best.json", run_record(*best));
      print_line("best energy " + fmt(best->energy) +
                 (best->approx_ratio ? ", ratio " + fmt(*best->approx_ratio) : std::string()));
    }
  } else if (sub == mine) {
    spec.models.clear();
    for (const auto &m : models)
      spec.models.push_back(parse_weight_model(m));
    spec.seed = common.seed;
    if (limit > 0)
      spec.limit = limit;
    mine_config.rqaoa = rqaoa_config(solver, derive_seed(common.seed, 1u << 30));
    mine_config.jobs = common.jobs;
    mine_config.early_stop = !no_early_stop;
    AngleCache cache;
    mine_config.cache = &cache;
    std::ofstream log(inv.out / "mine_log.txt", std::ios::binary);
    mine_config.log = [&](const std::string &line) {
      log << line << '\n';
      std::cerr << line << '\n';
    };
    const auto members = generate_ensemble(spec);
    const auto result = mine_hard(members, mine_config);
    fs::create_directories(inv.out / "instances");
    for (const auto &r : result.records)
      save_instance(r.instance, inv.out / "instances" / (r.id + ".json"));
    write_hard_index(inv.out / "index.csv", result.records);
    print_line("scanned " + std::to_string(result.scanned) + ", kept " +
               std::to_string(result.records.size()) + ", skipped (non-positive optimum) " +
               std::to_string(result.skipped_nonpositive));
  } else if (sub == ties_cmd) {
    ties_config.rqaoa = rqaoa_config(solver, 0);
    ties_config.seed = common.seed;
    ties_config.jobs = common.jobs;
    AngleCache cache;
    const auto report = bench_cage_ties(ties_config, &cache);
    write_cage_ties(report, inv.out);
    const auto &o = report.overall;
    print_line("mean ratio " + fmt(o.mean_ratio) + ", ground-state probability " +
               fmt(o.ground_state_probability) + ", tie fraction " + fmt(o.tie_fraction) +
               ", mean ties per iteration " + fmt(o.mean_ties_per_iteration));
  } else if (sub == hard_cmd) {
    hard_config.rqaoa = rqaoa_config(solver, 0);
    hard_config.trainer = trainer_config(hard_rl, 0, 1);
    hard_config.seed = common.seed;
    hard_config.jobs = common.jobs;
    inv.config["trainer"] = to_json(hard_config.trainer);
    AngleCache cache;
    std::vector<HardBenchInstance> inputs;
    if (!hard_inputs.empty()) {
      for (const auto &path : hard_inputs) {
        inv.inputs.push_back(path);
        HardBenchInstance fi;
        fi.instance = load_instance(path);
        fi.id = fi.instance.metadata.name.empty() ? fs::path(path).stem().string()
                                                  : fi.instance.metadata.name;
        fi.exact_energy = brute_force_exact(fi.instance).energy;
        inputs.push_back(std::move(fi));
      }
    } else {
      mine_config.rqaoa = rqaoa_config(solver, derive_seed(common.seed, 1u << 30));
      mine_config.run_budget = hard_config.rqaoa_runs;
      mine_config.jobs = common.jobs;
      mine_config.cache = &cache;
      const auto mined = mine_hard_mixed(hard_count, hard_n_min, hard_n_max, hard_max_scan,
                                             common.seed, mine_config);
      fs::create_directories(inv.out / "instances");
      write_hard_index(inv.out / "hard_index.csv", mined.records);
      for (const auto &r : mined.records) {
        save_instance(r.instance, inv.out / "instances" / (r.id + ".json"));
        inputs.push_back({r.id, r.instance, r.exact_energy, r.rqaoa_best_energy});
      }
      print_line("mined " + std::to_string(mined.records.size()) + " hard instances from " +
                 std::to_string(mined.scanned));
    }
    const auto report = bench_hard_instances(inputs, hard_config, &cache);
    write_hard_instances(report, inv.out);
    for (const auto &row : report.rows)
      print_line(row.id + ": rqaoa " + fmt(row.rqaoa_ratio) + ", rl-rqaoa " + fmt(row.rl_ratio));
  } else if (sub == sep_cmd) {
    sep_config.rqaoa = rqaoa_config(solver, 0);
    sep_config.trainer = trainer_config(sep_rl, 0, 1);
    sep_config.episodes = sep_rl.episodes;
    sep_config.seed = common.seed;
    sep_config.jobs = common.jobs;
    sep_config.exact = !solver.no_exact;
    inv.config["trainer"] = to_json(sep_config.trainer);
    AngleCache cache;
    const auto report = bench_separation(sep_config, &cache);
    write_separation(report, inv.out);
    for (std::size_t k = 0; k < report.instances.size(); ++k)
      print_line(report.instances[k].id + ": rl-rqaoa " + fmt(report.mean_at_checkpoint(k, 0)) +
                 ", rl-rone " + fmt(report.mean_at_checkpoint(k, 1)));
  } else if (sub == landscape) {
    inv.inputs.push_back(land_instance);
    const auto instance = load_instance(land_instance);
    CsvWriter csv(inv.out / "landscape.csv", {"alpha", "gamma", "energy"});
    for (const auto &p : energy_landscape(instance, alpha_points, gamma_points))
      csv.row({fmt(p.alpha), fmt(p.gamma), fmt(p.energy)});
  }

  write_invocation_manifest(inv, started);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run_cli(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const Error &e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
