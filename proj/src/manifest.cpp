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

#include "rlrqaoa/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iterator>
#include <memory>

#include <openssl/evp.h>

#include "rlrqaoa/error.hpp"

#ifndef RLRQAOA_VERSION
#define RLRQAOA_VERSION "unknown"
#endif

namespace rlrqaoa {

std::string sha256_hex(const std::string &bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                               EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1)
    throw Error(ErrorKind::io_error, "SHA-256 computation failed");
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string sha256_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::io_error, "cannot read " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return sha256_hex(bytes);
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const char *code_version() { return RLRQAOA_VERSION; }

nlohmann::json to_json(const ExperimentManifest &m) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto &d : m.inputs)
    inputs.push_back({{"path", d.path}, {"sha256", d.sha256}});
  return {{"command", m.command}, {"argv", m.argv},
          {"config", m.config},   {"version", m.version},
          {"master_seed", m.master_seed},
          {"started", m.started}, {"finished", m.finished},
          {"inputs", inputs}};
}

ExperimentManifest manifest_from_json(const nlohmann::json &j) {
  try {
    ExperimentManifest m;
    m.command = j.at("command").get<std::string>();
    m.argv = j.at("argv").get<std::vector<std::string>>();
    m.config = j.value("config", nlohmann::json::object());
    m.version = j.value("version", "");
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.started = j.value("started", "");
    m.finished = j.value("finished", "");
    for (const auto &d : j.value("inputs", nlohmann::json::array()))
      m.inputs.push_back({d.at("path").get<std::string>(),
                          d.at("sha256").get<std::string>()});
    return m;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::parse_error, std::string("manifest: ") + e.what());
  }
}

void write_manifest(const std::filesystem::path &path,
                    const ExperimentManifest &manifest) {
  std::ofstream out(path, std::ios::binary);
  out << to_json(manifest).dump(2) << '\n';
  if (!out)
    throw Error(ErrorKind::io_error, "cannot write " + path.string());
}

ExperimentManifest read_manifest(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::io_error, "cannot read " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::parse_error, path.string() + ": " + e.what());
  }
  return manifest_from_json(j);
}

} // namespace rlrqaoa
