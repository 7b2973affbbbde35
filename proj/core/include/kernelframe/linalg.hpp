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

#include "kernelframe/types.hpp"

namespace kernelframe::linalg {

// Eigenvalues of the Hermitian part of `m`, ascending.
RVector hermitian_eigenvalues(const CMatrix& m);

// Singular values, descending.
RVector singular_values(const CMatrix& m);

double spectral_norm(const CMatrix& m);

// Smallest singular value over min(rows, cols) values; 0 for empty input.
double min_singular_value(const CMatrix& m);

// Number of singular values above rel_cutoff * sigma_max.
Eigen::Index numerical_rank(const CMatrix& m, double rel_cutoff = 1e-12);

// Orthonormal basis (as columns) for the range of `m`.
CMatrix range_basis(const CMatrix& m, double rel_cutoff = 1e-12);

// Largest absolute deviation from Hermitian symmetry.
double hermitian_defect(const CMatrix& m);

inline CMatrix hermitian_part(const CMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

}  // namespace kernelframe::linalg
