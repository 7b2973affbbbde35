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

#include <optional>
#include <vector>

#include "kernelframe/types.hpp"

// Finite frame toolkit. A family {f_n} in C^d is stored as its synthesis
// matrix (d x m, f_n as columns). Inner products are linear in the first
// argument: <f, g> = sum_k f_k conj(g_k).

namespace kernelframe::frames {

class VectorFamily {
 public:
  // Throws Error(kValidation) if vectors is empty or a length differs from dim.
  VectorFamily(std::size_t dim, const std::vector<CVector>& vectors);

  // Columns of `synthesis` are the family members. Throws Error(kValidation)
  // for a matrix with no columns.
  explicit VectorFamily(CMatrix synthesis);

  std::size_t dim() const { return static_cast<std::size_t>(synthesis_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(synthesis_.cols()); }
  const CMatrix& synthesis() const { return synthesis_; }
  CVector vector(std::size_t n) const { return synthesis_.col(static_cast<Eigen::Index>(n)); }

 private:
  CMatrix synthesis_;
};

struct Transforms {
  CMatrix analysis;   // m x d, f -> (<f, f_n>)_n
  CMatrix synthesis;  // d x m, c -> sum c_n f_n
  CMatrix frame_op;   // d x d, S = T T*
};

Transforms frame_transforms(const VectorFamily& family);

struct FrameReport {
  double lower = 0.0;
  double upper = 0.0;
  bool is_frame = false;     // lower > tol * upper
  bool is_tight = false;     // |lower - upper| < tol * upper
  bool is_parseval = false;  // tight and |lower - 1| < tol
  bool is_riesz = false;     // frame with m = rank = d
};

// Extremal eigenvalues of the frame operator.
FrameReport frame_bounds(const VectorFamily& family, double tol = kDefaultTol);

// sum_n |<f, f_n>|^2.
double analysis_energy(const VectorFamily& family, const CVector& f);

// {S^{-1} f_n}. Throws Error(kNotAFrame) when S is singular.
VectorFamily canonical_dual(const VectorFamily& family);

struct GramianResult {
  CMatrix matrix;  // G(m, n) = <f_m, f_n>
  double min_eig = 0.0;
  bool riesz = false;
};

GramianResult gramian(const VectorFamily& family, double tol = kDefaultTol);

// K(i, j) = <f_i, S^{-1} f_j>. Throws Error(kNotAFrame) when S is singular.
CMatrix kernel_matrix(const VectorFamily& family);

// Moore-Penrose pseudoinverse by SVD, discarding singular values below
// rel_cutoff * sigma_max.
CMatrix pinv(const CMatrix& m, double rel_cutoff = 1e-12);

struct DouglasResult {
  bool included = false;        // range(S) within range(T)
  double residual = 0.0;        // ||(I - T T^+) S||
  double alpha_min = 0.0;       // +inf when not included
  std::optional<CMatrix> lift;  // L = T^+ S with S = T L
};

// Range inclusion, majorization constant and factorization for S (d x p)
// and T (d x q). Throws Error(kValidation) when row counts differ.
DouglasResult douglas_factor(const CMatrix& s, const CMatrix& t);

}  // namespace kernelframe::frames
