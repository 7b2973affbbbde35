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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace kernelframe {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

// Points closer than this to the unit circle are rejected as interior points.
inline constexpr double kBoundaryEps = 1e-12;

// Default absolute tolerance for complex equality checks.
inline constexpr double kDefaultTol = 1e-10;

// Distance below which 1 - conj(a) z is treated as a pole.
inline constexpr double kPoleEps = 1e-14;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace kernelframe
