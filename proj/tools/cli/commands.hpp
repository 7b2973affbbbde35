// Copyright 2026 The kernelframe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace kernelframe::cli {

struct Settings {
  double tol = 1e-10;
  std::uint64_t seed = 20260101;
};

struct Output {
  nlohmann::json result;
  std::optional<std::string> csv;    // set when the result has a tabular form
  std::optional<std::string> table;  // human-readable override
  int exit_code = 0;
};

// `params` holds the already-parsed option values for the subcommand.
// Throws kernelframe::Error on invalid input or numerical failure.
Output run_command(const std::string& command, const nlohmann::json& params, const Settings& settings);

// JSON value from an option string: inline JSON, or @path to a JSON file.
nlohmann::json parse_json_arg(const std::string& text, const std::string& what);

}  // namespace kernelframe::cli
