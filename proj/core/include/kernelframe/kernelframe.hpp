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

#include "kernelframe/blaschke.hpp"
#include "kernelframe/error.hpp"
#include "kernelframe/frames.hpp"
#include "kernelframe/hardy.hpp"
#include "kernelframe/json_io.hpp"
#include "kernelframe/linalg.hpp"
#include "kernelframe/modelspace.hpp"
#include "kernelframe/rkhs.hpp"
#include "kernelframe/toeplitz.hpp"
#include "kernelframe/types.hpp"

namespace kernelframe {

inline constexpr const char* kVersion = KERNELFRAME_VERSION;

}  // namespace kernelframe
