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

#include <stdexcept>
#include <string>

namespace rlrqaoa {

// Values double as CLI exit codes.
enum class ErrorKind {
  invalid_argument = 2,
  invalid_assignment = 3,
  invalid_action = 4,
  corrupt_map = 5,
  invalid_vertex = 6,
  invalid_edge = 7,
  unsupported_fields = 8,
  size_limit = 9,
  no_action = 10,
  invalid_budget = 11,
  parameter_coverage = 12,
  invalid_batch = 13,
  infeasible_parameters = 14,
  not_available = 15,
  parse_error = 16,
  io_error = 17,
};

const char *to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace rlrqaoa
