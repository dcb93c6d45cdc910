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

#include "rlrqaoa/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rlrqaoa/error.hpp"

namespace rlrqaoa {

using nlohmann::json;

json to_json(const IsingInstance &instance) {
  json doc;
  doc["n"] = instance.n_original();
  json edges = json::array();
  for (const auto &[e, w] : instance.edges())
    edges.push_back(json::array({e.u, e.v, w}));
  doc["edges"] = std::move(edges);
  if (instance.has_fields()) {
    json fields = json::array();
    for (Vertex u : instance.vertices())
      if (instance.field(u) != 0.0)
        fields.push_back(json::array({u, instance.field(u)}));
    doc["fields"] = std::move(fields);
  }
  if (instance.offset() != 0.0)
    doc["offset"] = instance.offset();
  if (instance.num_vertices() != instance.n_original())
    doc["vertices"] = instance.vertices();
  doc["metadata"] = {{"weight_model", instance.metadata.weight_model},
                     {"seed", instance.metadata.seed},
                     {"name", instance.metadata.name}};
  return doc;
}

IsingInstance instance_from_json(const json &doc) {
  try {
    const int n = doc.at("n").get<int>();
    if (n < 0)
      throw Error(ErrorKind::parse_error, "negative vertex count");
    IsingInstance g(n);

    if (doc.contains("vertices")) {
      const std::set<Vertex> keep(doc["vertices"].begin(),
                                  doc["vertices"].end());
      for (Vertex u = 0; u < n; ++u)
        if (!keep.contains(u))
          g.remove_isolated_vertex(u);
    }
    for (const auto &row : doc.at("edges")) {
      if (!row.is_array() || row.size() != 3)
        throw Error(ErrorKind::parse_error, "edge rows must be [u, v, weight]");
      g.add_edge(row[0].get<Vertex>(), row[1].get<Vertex>(),
                 row[2].get<double>());
    }
    if (doc.contains("fields")) {
      for (const auto &row : doc["fields"]) {
        if (!row.is_array() || row.size() != 2)
          throw Error(ErrorKind::parse_error, "field rows must be [u, h]");
        g.set_field(row[0].get<Vertex>(), row[1].get<double>());
      }
    }
    if (doc.contains("offset"))
      g.set_offset(doc["offset"].get<double>());
    if (doc.contains("metadata")) {
      const auto &meta = doc["metadata"];
      g.metadata.weight_model = meta.value("weight_model", std::string{});
      g.metadata.seed = meta.value("seed", std::uint64_t{0});
      g.metadata.name = meta.value("name", std::string{});
    }
    return g;
  } catch (const json::exception &ex) {
    throw Error(ErrorKind::parse_error,
                std::string("malformed instance document: ") + ex.what());
  } catch (const Error &ex) {
    if (ex.kind() == ErrorKind::parse_error)
      throw;
    throw Error(ErrorKind::parse_error,
                std::string("invalid instance: ") + ex.what());
  }
}

std::string serialize_instance(const IsingInstance &instance) {
  return to_json(instance).dump() + "\n";
}

IsingInstance parse_instance(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &ex) {
    throw Error(ErrorKind::parse_error,
                std::string("instance is not valid JSON: ") + ex.what());
  }
  return instance_from_json(doc);
}

void save_instance(const IsingInstance &instance,
                   const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::io_error, "cannot write " + path.string());
  out << serialize_instance(instance);
}

IsingInstance load_instance(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::io_error, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

json to_json(const Assignment &x) {
  json out = json::array();
  for (Spin s : x)
    out.push_back(static_cast<int>(s));
  return out;
}

} // namespace rlrqaoa
