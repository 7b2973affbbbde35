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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kernelframe::repro {

struct CheckRow {
  std::string quantity;
  nlohmann::json expected;
  nlohmann::json computed;
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckResult {
  std::string name;
  int criterion = 0;
  std::string title;
  std::vector<CheckRow> rows;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0.0;
  double budget_seconds = 0.0;

  bool pass() const;
};

// Every check, in criterion order.
const std::vector<std::string>& check_names();

// Throws Error(kValidation) for an unknown name.
CheckResult run_check(const std::string& name, std::uint64_t seed);

nlohmann::json to_json(const CheckResult& r);

// Fixed-width pass/fail table.
std::string format_table(const std::vector<CheckResult>& results);

}  // namespace kernelframe::repro
