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

// Runs every acceptance check and prints one PASS/FAIL line per criterion.
// Set KERNELFRAME_ACCEPTANCE_VERBOSE=1 for the per-row table.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <vector>

#include "checks.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20260101;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  const bool verbose = std::getenv("KERNELFRAME_ACCEPTANCE_VERBOSE") != nullptr;

  int failures = 0;
  std::vector<kernelframe::repro::CheckResult> results;
  for (const auto& name : kernelframe::repro::check_names()) {
    try {
      auto r = kernelframe::repro::run_check(name, seed);
      std::printf("%s criterion %2d (%s): %s [%.3fs / %.0fs]\n", r.pass() ? "PASS" : "FAIL", r.criterion,
                  r.name.c_str(), r.title.c_str(), r.seconds, r.budget_seconds);
      if (!r.pass()) {
        ++failures;
        for (const auto& row : r.rows) {
          if (!row.pass) {
            std::printf("     failed: %s expected %s computed %s tol %g\n", row.quantity.c_str(),
                        row.expected.dump().c_str(), row.computed.dump().c_str(), row.tolerance);
          }
        }
      }
      results.push_back(std::move(r));
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL check %s threw: %s\n", name.c_str(), e.what());
    }
  }
  if (verbose) std::cout << "\n" << kernelframe::repro::format_table(results);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kernelframe::repro::check_names().size()) - failures,
              kernelframe::repro::check_names().size());
  return failures == 0 ? 0 : 1;
}
