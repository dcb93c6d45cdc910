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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "rlrqaoa/ising.hpp"

namespace rlrqaoa {

// Instance files are JSON documents:
//
//   {"n": 4,
//    "edges": [[0, 1, 1.0], [1, 2, -1.0], ...],
//    "fields": [[0, 0.5], ...],            optional, nonzero entries only
//    "offset": 0.0,                        optional
//    "vertices": [0, 1, 2],                optional, surviving labels
//    "metadata": {"weight_model": "bimodal", "seed": 7, "name": "..."}}
//
// Doubles are written in shortest round-trip form, so save/load is exact.

nlohmann::json to_json(const IsingInstance &instance);
IsingInstance instance_from_json(const nlohmann::json &doc);

std::string serialize_instance(const IsingInstance &instance);
IsingInstance parse_instance(const std::string &text);

void save_instance(const IsingInstance &instance,
                   const std::filesystem::path &path);
IsingInstance load_instance(const std::filesystem::path &path);

nlohmann::json to_json(const Assignment &x);

} // namespace rlrqaoa
