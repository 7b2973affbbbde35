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

#include <stdexcept>
#include <string>
#include <string_view>

namespace kernelframe {

enum class ErrorCode {
  kDomain,          // argument outside the domain of the operation
  kNumeric,         // pole proximity or other floating-point breakdown
  kConditioning,    // working truncation or conditioning insufficient
  kNotAFrame,       // frame operator singular
  kDegenerateRoot,  // multiple boundary root in Clark root finding
  kRootFinding,     // root polish failed or root off the circle
  kValidation,      // malformed input (shape, length, schema)
  kIo,              // file not found / unreadable
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kernelframe
