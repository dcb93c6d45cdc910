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
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace rlrqaoa {

struct InputDigest {
  std::string path;
  std::string sha256;
};

struct ExperimentManifest {
  std::string command;
  std::vector<std::string> argv; // without the program name
  nlohmann::json config = nlohmann::json::object();
  std::string version;
  std::uint64_t master_seed = 0;
  std::string started;  // UTC, ISO 8601
  std::string finished; // UTC, ISO 8601
  std::vector<InputDigest> inputs;
};

std::string sha256_hex(const std::string &bytes);
std::string sha256_file(const std::filesystem::path &path);
std::string utc_timestamp();
const char *code_version();

nlohmann::json to_json(const ExperimentManifest &manifest);
ExperimentManifest manifest_from_json(const nlohmann::json &j);

void write_manifest(const std::filesystem::path &path,
                    const ExperimentManifest &manifest);
ExperimentManifest read_manifest(const std::filesystem::path &path);

} // namespace rlrqaoa
