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
#include <filesystem>

#include "rlrqaoa/error.hpp"
#include "rlrqaoa/exact.hpp"
#include "rlrqaoa/instance_io.hpp"
#include "rlrqaoa/ising.hpp"
#include "support.hpp"

using namespace rlrqaoa;
using testing::naive_energy;

namespace {

IsingInstance triangle(double w = 1.0) {
  IsingInstance t(3);
  t.add_edge(0, 1, w);
  t.add_edge(0, 2, w);
  t.add_edge(1, 2, w);
  return t;
}

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::invalid_argument;
}

} // namespace

TEST_CASE("energy of K2") {
  IsingInstance k2(2);
  k2.add_edge(0, 1, 1.0);
  CHECK(energy(k2, {1, 1}) == 1.0);
  CHECK(energy(k2, {1, -1}) == -1.0);
  CHECK(kind_of([&] { energy(k2, {1, 0}); }) == ErrorKind::invalid_assignment);
  CHECK(kind_of([&] { energy(k2, {1}); }) == ErrorKind::invalid_assignment);
}

TEST_CASE("energy agrees with term-by-term summation") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto inst = testing::random_instance({8, 0.5, true, trial % 2 == 0, 0.3}, rng);
    for (int k = 0; k < 20; ++k) {
      auto x = testing::assignment_from_bits(inst, rng());
      CHECK(energy(inst, x) == doctest::Approx(naive_energy(inst, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("instance invariants are enforced") {
  IsingInstance inst(3);
  inst.add_edge(0, 1, 1.0);
  CHECK(kind_of([&] { inst.add_edge(1, 0, 2.0); }) == ErrorKind::invalid_edge);
  CHECK(kind_of([&] { inst.add_edge(1, 1, 2.0); }) == ErrorKind::invalid_edge);
  CHECK(kind_of([&] { inst.add_edge(1, 2, 0.0); }) == ErrorKind::invalid_edge);
  CHECK(kind_of([&] { inst.add_edge(1, 3, 1.0); }) == ErrorKind::invalid_vertex);
  CHECK(inst.num_edges() == 1);
}

TEST_CASE("triangle contraction with sign +1 merges the parallel edge") {
  auto [out, rec] = contract(triangle(), Edge{0, 1}, +1);
  CHECK(out.vertices() == std::vector<Vertex>{0, 2});
  REQUIRE(out.num_edges() == 1);
  CHECK(out.weight(Edge{0, 2}) == 2.0);
  CHECK(out.offset() == 1.0);
  CHECK(rec == ContractionRecord{1, 0, 1});
}

TEST_CASE("triangle contraction with sign -1 cancels to an empty edge set") {
  auto [out, rec] = contract(triangle(), Edge{0, 1}, -1);
  CHECK(out.vertices() == std::vector<Vertex>{0, 2});
  CHECK(out.empty_edges());
  CHECK(out.offset() == -1.0);
  CHECK(rec.sign == -1);
}

TEST_CASE("contraction rejects missing edges and bad signs") {
  IsingInstance path(3);
  path.add_edge(0, 1, 1.0);
  path.add_edge(1, 2, 1.0);
  CHECK(kind_of([&] { contract(path, Edge{0, 2}, 1); }) == ErrorKind::invalid_action);
  CHECK(kind_of([&] { contract(path, Edge{0, 1}, 0); }) == ErrorKind::invalid_action);
}

TEST_CASE("contraction folds fields into the anchor") {
  IsingInstance inst(3);
  inst.add_edge(0, 2, 1.5);
  inst.set_field(0, 0.25);
  inst.set_field(2, -0.5);
  auto [out, rec] = contract(inst, Edge{0, 2}, -1);
  CHECK(out.field(0) == doctest::Approx(0.75));
  CHECK(out.offset() == doctest::Approx(-1.5));
  CHECK(out.vertices() == std::vector<Vertex>{0, 1});
}

TEST_CASE("contraction conserves energy on small random instances") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(uniform_index(rng, 7));
    auto inst = testing::random_instance({n, 0.6, trial % 3 != 0, trial % 2 == 1, 0.0}, rng);
    for (const auto &we : inst.edges()) {
      for (int sign : {-1, 1}) {
        auto [out, rec] = contract(inst, we.edge, sign);
        CHECK(out.num_vertices() == inst.num_vertices() - 1);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << out.num_vertices()); ++b) {
          auto x = testing::assignment_from_bits(out, b);
          auto lifted = x;
          lifted[rec.eliminated] = static_cast<Spin>(sign * x[rec.anchor]);
          CHECK(naive_energy(out, x) == doctest::Approx(naive_energy(inst, lifted)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("reconstruction applies records in reverse order") {
  CHECK(reconstruct({}, {1, -1}) == Assignment{1, -1});

  ReconstructionMap single;
  single.append({1, 0, -1});
  CHECK(reconstruct(single, {1, 0}) == Assignment{1, -1});

  // Chained records on the triangle reproduce the tracked energy.
  IsingInstance tri(3);
  tri.add_edge(0, 1, 1.0);
  tri.add_edge(0, 2, 2.0);
  tri.add_edge(1, 2, 3.0);
  tri.set_field(2, 0.5);
  ReconstructionMap map;
  IsingInstance cur = tri;
  map.append(contract_in_place(cur, Edge{1, 2}, -1));
  map.append(contract_in_place(cur, Edge{0, 1}, 1));
  Assignment x(3, 0);
  x[0] = -1;
  const auto full = reconstruct(map, x);
  CHECK(full == Assignment{-1, -1, 1});
  CHECK(energy(tri, full) == doctest::Approx(energy(cur, x)));
}

TEST_CASE("reconstruction detects corrupt maps") {
  ReconstructionMap map;
  map.append({2, 1, 1});
  CHECK(kind_of([&] { map.append({2, 0, 1}); }) == ErrorKind::corrupt_map);
  CHECK(kind_of([&] { map.append({0, 2, 1}); }) == ErrorKind::corrupt_map);
  CHECK(kind_of([&] { reconstruct(map, {1, 0, 0}); }) == ErrorKind::corrupt_map);
}

TEST_CASE("exact solver on small closed cases") {
  IsingInstance k2(2);
  k2.add_edge(0, 1, 1.0);
  auto s = brute_force_exact(k2);
  CHECK(s.energy == 1.0);
  CHECK(s.degeneracy == 2);

  auto anti = triangle(-1.0);
  s = brute_force_exact(anti);
  CHECK(s.energy == 1.0);
  CHECK(s.degeneracy == 6);
  CHECK(energy(anti, s.assignment) == 1.0);

  IsingInstance empty(3);
  empty.set_offset(2.5);
  s = brute_force_exact(empty);
  CHECK(s.energy == 2.5);
  CHECK(s.degeneracy == 8);
}

TEST_CASE("exact solver matches full enumeration") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 12));
    auto inst = testing::random_instance(
        {n, 0.5, trial % 2 == 0, trial % 3 == 0, trial % 4 == 0 ? -1.5 : 0.0}, rng);
    const auto naive = testing::naive_maximum(inst);
    const auto s = brute_force_exact(inst);
    CHECK(s.energy == doctest::Approx(naive.energy).epsilon(1e-12));
    CHECK(energy(inst, s.assignment) == doctest::Approx(naive.energy).epsilon(1e-12));
    CHECK(s.degeneracy == naive.count);
  }
}

TEST_CASE("exact solver ignores eliminated vertices") {
  Rng rng(23);
  auto inst = testing::random_instance({9, 0.7, true, false, 0.0}, rng);
  contract_in_place(inst, inst.edges().front().edge, 1);
  const auto s = brute_force_exact(inst);
  CHECK(s.energy == doctest::Approx(testing::naive_maximum(inst).energy));
  int unassigned = 0;
  for (Spin x : s.assignment)
    unassigned += x == 0;
  CHECK(unassigned == 1);
}

TEST_CASE("exact solver size guard") {
  IsingInstance big(kExactMaxVertices + 1);
  big.add_edge(0, 1, 1.0);
  CHECK(kind_of([&] { brute_force_exact(big); }) == ErrorKind::size_limit);
}

TEST_CASE("instance files round-trip exactly") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 10));
    auto inst = testing::random_instance({n, 0.5, true, trial % 2 == 0, standard_normal(rng)}, rng);
    inst.metadata = {"gaussian", rng(), "case" + std::to_string(trial)};
    if (inst.num_edges() > 0 && trial % 3 == 0)
      contract_in_place(inst, inst.edges().back().edge, -1);
    const auto text = serialize_instance(inst);
    const auto back = parse_instance(text);
    CHECK(back == inst);
    CHECK(serialize_instance(back) == text);
  }
}

TEST_CASE("malformed instance files are parse errors") {
  CHECK(kind_of([] { parse_instance("{"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_instance(R"({"n": 2, "edges": [[0, 1]]})"); }) ==
        ErrorKind::parse_error);
  CHECK(kind_of([] { parse_instance(R"({"n": 2, "edges": [[0, 0, 1.0]]})"); }) ==
        ErrorKind::parse_error);
  CHECK(kind_of([] { parse_instance(R"({"n": 2, "edges": [[0, 1, 1.0], [1, 0, 2.0]]})"); }) ==
        ErrorKind::parse_error);
  CHECK(kind_of([] { load_instance("/nonexistent/instance.json"); }) == ErrorKind::io_error);
}
