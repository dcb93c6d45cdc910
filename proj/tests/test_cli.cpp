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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rlrqaoa/bench.hpp"
#include "rlrqaoa/csv.hpp"
#include "rlrqaoa/error.hpp"
#include "rlrqaoa/instance_io.hpp"
#include "rlrqaoa/instances.hpp"
#include "rlrqaoa/manifest.hpp"

using namespace rlrqaoa;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
  const auto dir = fs::temp_directory_path() / ("rlrqaoa_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome cli(const std::string &args, const std::string &env = "") {
  const auto log = fs::temp_directory_path() / "rlrqaoa_cli_test_stdout.txt";
  const std::string cmd = env + " " RLRQAOA_CLI " " + args + " > " + log.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Outcome o;
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  o.out = ss.str();
  return o;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_k2(const fs::path &dir) {
  IsingInstance k2(2);
  k2.add_edge(0, 1, 1.0);
  const auto path = dir / "k2.json";
  save_instance(k2, path);
  return path;
}

void check_columns(const fs::path &csv, const std::vector<std::string> &expected) {
  const auto table = read_csv(csv);
  CHECK(table.header == expected);
}

} // namespace

TEST_CASE("csv writer and reader agree") {
  const auto dir = scratch("csv");
  {
    CsvWriter w(dir / "a.csv", {"x", "y"});
    w.row({"1", format_number(0.1)});
    w.row({"2", format_number(std::nullopt)});
    CHECK_THROWS_AS(w.row({"3"}), Error);
  }
  const auto t = read_csv(dir / "a.csv");
  CHECK(t.header == std::vector<std::string>{"x", "y"});
  REQUIRE(t.rows.size() == 2);
  CHECK(std::stod(t.rows[0][1]) == 0.1);
  CHECK(t.rows[1][1] == "NA");
  CHECK(t.column("y") == 1);
  CHECK(t.column("z") == 2);
}

TEST_CASE("sha256 and manifests") {
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  ExperimentManifest m;
  m.command = "rqaoa";
  m.argv = {"rqaoa", "--seed", "3"};
  m.config = {{"nc", "8"}};
  m.version = code_version();
  m.master_seed = 3;
  m.started = utc_timestamp();
  m.inputs.push_back({"x.json", sha256_hex("x")});
  const auto dir = scratch("manifest");
  write_manifest(dir / "m.json", m);
  const auto back = read_manifest(dir / "m.json");
  CHECK(back.argv == m.argv);
  CHECK(back.master_seed == 3);
  CHECK(back.inputs.front().sha256 == m.inputs.front().sha256);
  CHECK(to_json(back) == to_json(m));
}

TEST_CASE("exact on K2") {
  const auto dir = scratch("exact");
  const auto k2 = write_k2(dir);
  const auto o = cli("exact --instance " + k2.string() + " --out " + (dir / "out").string());
  CHECK(o.code == 0);
  CHECK(o.out.find("energy 1\n") != std::string::npos);
  CHECK(o.out.find("assignment [1,1]") != std::string::npos);
  CHECK(fs::exists(dir / "out" / "manifest.json"));
}

TEST_CASE("distinct exit codes") {
  const auto dir = scratch("codes");
  const auto k2 = write_k2(dir);
  const std::string out = " --out " + (dir / "out").string();
  CHECK(cli("exact --instance " + k2.string() + " --bogus" + out).code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("").code == 2);
  {
    std::ofstream bad(dir / "bad.json");
    bad << "{\"n\": 2, \"edges\": [[0, 1]]}";
  }
  CHECK(cli("exact --instance " + (dir / "bad.json").string() + out).code ==
        static_cast<int>(ErrorKind::parse_error));
  CHECK(cli("exact --instance " + (dir / "missing.json").string() + out).code ==
        static_cast<int>(ErrorKind::io_error));
  CHECK(cli("generate --n 15 --d 3" + out).code ==
        static_cast<int>(ErrorKind::infeasible_parameters));
  CHECK(cli("generate --kind cage --d 3 --g 11" + out).code ==
        static_cast<int>(ErrorKind::not_available));
  CHECK(cli("rqaoa --instance " + k2.string() + " --nc 3" + out).code ==
        static_cast<int>(ErrorKind::invalid_argument));
  CHECK(cli("--help").code == 0);
}

TEST_CASE("output directory defaults to the environment") {
  const auto dir = scratch("env");
  const auto k2 = write_k2(dir);
  CHECK(cli("exact --instance " + k2.string(), "RLRQAOA_OUT=" + (dir / "envout").string()).code == 0);
  CHECK(fs::exists(dir / "envout" / "exact.json"));
}

TEST_CASE("generate writes loadable instances") {
  const auto dir = scratch("generate");
  CHECK(cli("generate --n 12 --d 3 --count 3 --weights gaussian --seed 4 --out " + dir.string()).code == 0);
  int files = 0;
  for (const auto &entry : fs::directory_iterator(dir / "instances")) {
    const auto inst = load_instance(entry.path());
    CHECK(inst.num_edges() == 18);
    CHECK(inst.metadata.weight_model == "gaussian");
    ++files;
  }
  CHECK(files == 3);
  CHECK(cli("generate --kind cage --d 3 --g 8 --out " + dir.string()).code == 0);
  CHECK(load_instance(dir / "instances" / "cage3_8_bimodal_0.json").num_edges() == 45);
}

TEST_CASE("rqaoa runs CSV on the (3,8)-cage") {
  const auto dir = scratch("rqaoa");
  REQUIRE(cli("generate --kind cage --d 3 --g 8 --seed 7 --out " + dir.string()).code == 0);
  const auto inst = dir / "instances" / "cage3_8_bimodal_0.json";
  const auto out = dir / "run";
  const auto o = cli("rqaoa --nc 8 --runs 200 --seed 7 --instance " + inst.string() + " --out " + out.string());
  REQUIRE(o.code == 0);
  CHECK(o.out.find("tie fraction") != std::string::npos);
  const auto runs = read_csv(out / "runs.csv");
  CHECK(runs.header == kRunsColumns);
  CHECK(runs.rows.size() == 200);
  for (const auto &row : runs.rows) {
    CHECK(row[runs.column("runtime_ms")] == "NA");
    CHECK(std::stod(row[runs.column("ratio")]) <= 1.0);
  }
  const auto ties = read_csv(out / "ties.csv");
  CHECK(ties.header == kTiesColumns);
  CHECK(ties.rows.size() == 200 * 22);
  check_columns(out / "summary.csv",
                {"instance_id", "runs", "exact_energy", "best_energy", "mean_ratio", "std_ratio",
                 "ground_state_probability", "tie_fraction", "mean_ties_per_iteration"});
  CHECK(fs::exists(out / "best.json"));
}

TEST_CASE("rl-rqaoa writes one learning curve per run") {
  const auto dir = scratch("rl");
  REQUIRE(cli("generate --n 12 --d 3 --seed 2 --out " + dir.string()).code == 0);
  const auto inst = dir / "instances" / "n12_d3_bimodal_0.json";
  const auto out = dir / "train";
  REQUIRE(cli("rl-rqaoa --episodes 1400 --runs 15 --nc 6 --seed 1 --instance " + inst.string() +
              " --out " + out.string())
              .code == 0);
  for (int r = 0; r < 15; ++r) {
    const auto curve = read_csv(out / ("curve_" + std::to_string(r) + ".csv"));
    CHECK(curve.header == kCurveColumns);
    CHECK(curve.rows.size() == 1400);
    CHECK(fs::exists(out / ("checkpoint_" + std::to_string(r) + ".json")));
  }
  const auto best = nlohmann::json::parse(slurp(out / "best.json"));
  CHECK(best.contains("assignment"));
  const auto manifest = read_manifest(out / "manifest.json");
  CHECK(manifest.config["trainer"]["lr_angles"] == 0.001);
  CHECK(manifest.inputs.size() == 1);

  const auto rone = dir / "rone";
  REQUIRE(cli("rl-rone --episodes 30 --nc 6 --instance " + inst.string() + " --out " + rone.string())
              .code == 0);
  CHECK(read_csv(rone / "curve_0.csv").rows.size() == 30);
}

TEST_CASE("mine and landscape outputs") {
  const auto dir = scratch("mine");
  REQUIRE(cli("mine --n-min 8 --n-max 10 --count 3 --budget 3 --threshold 1 --nc 4 --grid 100 --out " +
              dir.string())
              .code == 0);
  const auto index = read_csv(dir / "index.csv");
  CHECK(index.header == kHardIndexColumns);
  for (const auto &row : index.rows)
    CHECK(fs::exists(dir / "instances" / (row[0] + ".json")));

  const auto k2 = write_k2(dir);
  REQUIRE(cli("landscape --instance " + k2.string() + " --alpha-points 5 --gamma-points 7 --out " +
              dir.string())
              .code == 0);
  const auto land = read_csv(dir / "landscape.csv");
  CHECK(land.header == std::vector<std::string>{"alpha", "gamma", "energy"});
  CHECK(land.rows.size() == 35);
}

TEST_CASE("bench outputs follow their schemas") {
  const auto dir = scratch("bench");
  const auto fig3 = dir / "ties";
  REQUIRE(cli("bench-fig3 --weight-seeds 2 --runs 4 --out " + fig3.string()).code == 0);
  check_columns(fig3 / "runs.csv", kRunsColumns);
  check_columns(fig3 / "ties.csv", kTiesColumns);
  check_columns(fig3 / "summary.csv",
                {"instance_id", "exact_energy", "degeneracy", "mean_ratio", "std_ratio",
                 "ground_state_probability", "tie_fraction", "mean_ties_per_iteration"});
  check_columns(fig3 / "thresholds.csv", {"check", "value", "threshold", "pass"});
  CHECK(read_csv(fig3 / "runs.csv").rows.size() == 8);
  CHECK(read_csv(fig3 / "summary.csv").rows.size() == 3);

  REQUIRE(cli("generate --n 10 --d 3 --count 2 --seed 3 --out " + dir.string()).code == 0);
  const auto fig5 = dir / "hard";
  REQUIRE(cli("bench-fig5 --instances " + (dir / "instances" / "n10_d3_bimodal_0.json").string() + " " +
              (dir / "instances" / "n10_d3_bimodal_1.json").string() +
              " --rqaoa-runs 5 --rl-runs 2 --episodes 20 --nc 4 --out " + fig5.string())
              .code == 0);
  check_columns(fig5 / "summary.csv", {"instance_id", "n", "exact_energy", "rqaoa_best", "rqaoa_ratio",
                                       "rlrqaoa_best", "rlrqaoa_ratio", "rlrqaoa_mean_ratio", "improved"});
  check_columns(fig5 / "curves.csv",
                {"instance_id", "run", "episode", "energy", "best_so_far", "ratio"});
  CHECK(read_csv(fig5 / "curves.csv").rows.size() == 2 * 2 * 20);

  const auto fig6 = dir / "sep";
  REQUIRE(cli("bench-fig6 --instances 2 --n 12 --runs 2 --episodes 15 --nc 6 --out " + fig6.string())
              .code == 0);
  check_columns(fig6 / "curves.csv",
                {"instance_id", "policy", "episode", "mean_best_so_far", "ci_low", "ci_high"});
  check_columns(fig6 / "runs.csv",
                {"instance_id", "policy", "run", "episode", "energy", "best_so_far", "ratio"});
  check_columns(fig6 / "summary.csv", {"instance_id", "exact_energy", "episode", "rlrqaoa_mean_best",
                                       "rlrone_mean_best", "rlrqaoa_ahead"});
  CHECK(read_csv(fig6 / "curves.csv").rows.size() == 2 * 2 * 15);
}

TEST_CASE("replay reproduces CSVs byte for byte") {
  const auto dir = scratch("replay");
  const auto first = dir / "first";
  REQUIRE(cli("bench-fig3 --weight-seeds 1 --runs 6 --seed 5 --out " + first.string()).code == 0);
  REQUIRE(cli("replay --manifest " + (first / "manifest.json").string() + " --out " +
              (dir / "second").string())
              .code == 0);
  for (const char *name : {"runs.csv", "ties.csv", "summary.csv", "thresholds.csv"})
    CHECK(slurp(first / name) == slurp(dir / "second" / name));
  const auto m = read_manifest(dir / "second" / "manifest.json");
  CHECK(m.command == "bench-fig3");

  REQUIRE(cli("bench-fig3 --weight-seeds 1 --runs 6 --seed 5 --jobs 3 --out " +
              (dir / "threads").string())
              .code == 0);
  CHECK(slurp(first / "runs.csv") == slurp(dir / "threads" / "runs.csv"));
}
