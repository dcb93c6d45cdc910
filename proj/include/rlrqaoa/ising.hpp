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

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rlrqaoa {

/// Vertex label of the root problem. Labels never change under contraction.
using Vertex = int;

/// ±1 spin; 0 marks an unassigned vertex.
using Spin = std::int8_t;

/// Spin per original label (index = label).
using Assignment = std::vector<Spin>;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Normalizes (a, b) to u < v; throws invalid_edge on a self-loop.
Edge make_edge(Vertex a, Vertex b);

struct WeightedEdge {
  Edge edge;
  double weight = 0.0;

  friend bool operator==(const WeightedEdge &, const WeightedEdge &) = default;
};

/// sign(x) with sign(0) = +1.
inline int sign_of(double x) { return x < 0.0 ? -1 : 1; }

struct InstanceMetadata {
  std::string weight_model; // "gaussian", "bimodal", or free text
  std::uint64_t seed = 0;
  std::string name;

  friend bool operator==(const InstanceMetadata &,
                         const InstanceMetadata &) = default;
};

/// Ising cost function  offset + Σ h_u x_u + Σ J_uv x_u x_v  to be maximized.
///
/// Value type. Surviving vertices keep their original labels; every stored
/// coupling is nonzero and there are no self-loops.
class IsingInstance {
public:
  IsingInstance() = default;
  explicit IsingInstance(int n_original);

  /// Builds an instance from an edge list. Duplicate pairs, self-loops,
  /// zero weights and out-of-range labels are rejected.
  static IsingInstance from_edges(int n_original,
                                  std::span<const WeightedEdge> edges);

  void add_edge(Vertex a, Vertex b, double weight);
  void set_field(Vertex u, double h);
  void set_offset(double offset) { offset_ = offset; }
  /// Drops an isolated, field-free vertex (used when loading contracted
  /// instances); throws invalid_vertex otherwise.
  void remove_isolated_vertex(Vertex u);

  int n_original() const { return static_cast<int>(alive_.size()); }
  int num_vertices() const { return alive_count_; }
  std::size_t num_edges() const { return edge_count_; }
  bool empty_edges() const { return edge_count_ == 0; }

  bool alive(Vertex u) const;
  std::vector<Vertex> vertices() const;

  /// Edges in canonical (u, v) lexicographic order.
  std::vector<WeightedEdge> edges() const;

  bool has_edge(Edge e) const;
  /// Throws invalid_edge when absent.
  double weight(Edge e) const;

  /// Neighbor label → coupling, sorted by label.
  const std::map<Vertex, double> &neighbors(Vertex u) const;
  int degree(Vertex u) const;

  double field(Vertex u) const;
  bool has_fields() const;
  double offset() const { return offset_; }

  InstanceMetadata metadata;

  friend bool operator==(const IsingInstance &, const IsingInstance &) = default;

private:
  friend struct Contraction;
  void check_vertex(Vertex u) const;

  std::vector<std::map<Vertex, double>> adj_;
  std::vector<double> fields_;
  std::vector<char> alive_;
  double offset_ = 0.0;
  int alive_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// Substitution x_eliminated := sign · x_anchor.
struct ContractionRecord {
  Vertex eliminated = 0;
  Vertex anchor = 0;
  int sign = 1;

  friend bool operator==(const ContractionRecord &,
                         const ContractionRecord &) = default;
};

/// Contraction records in elimination order.
class ReconstructionMap {
public:
  /// Rejects a record whose vertex was already eliminated or whose anchor is
  /// no longer alive (corrupt_map).
  void append(const ContractionRecord &record);

  const std::vector<ContractionRecord> &records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

private:
  std::vector<ContractionRecord> records_;
};

/// offset + Σ h_u x_u + Σ J_uv x_u x_v over surviving vertices.
double energy(const IsingInstance &instance, const Assignment &x);

/// Imposes x_v = sign · x_u for edge (u, v) with u < v and eliminates v.
std::pair<IsingInstance, ContractionRecord>
contract(const IsingInstance &instance, Edge edge, int sign);

/// In-place variant used on hot paths.
ContractionRecord contract_in_place(IsingInstance &instance, Edge edge,
                                    int sign);

/// Lifts an assignment of the surviving vertices back to all original labels
/// by applying the records in reverse elimination order.
Assignment reconstruct(const ReconstructionMap &map, Assignment x);

} // namespace rlrqaoa
