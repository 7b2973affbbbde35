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

#include "kernelframe/linalg.hpp"

#include <algorithm>

namespace kernelframe::linalg {

RVector hermitian_eigenvalues(const CMatrix& m) {
  if (m.size() == 0) return RVector{};
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m),
                                                Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

RVector singular_values(const CMatrix& m) {
  if (m.size() == 0) return RVector{};
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

double spectral_norm(const CMatrix& m) {
  const RVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(0);
}

double min_singular_value(const CMatrix& m) {
  const RVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(s.size() - 1);
}

Eigen::Index numerical_rank(const CMatrix& m, double rel_cutoff) {
  const RVector s = singular_values(m);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = rel_cutoff * s(0);
  return static_cast<Eigen::Index>(std::count_if(
      s.data(), s.data() + s.size(), [cut](double v) { return v > cut; }));
}

CMatrix range_basis(const CMatrix& m, double rel_cutoff) {
  if (m.size() == 0) return CMatrix(m.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  const RVector& s = svd.singularValues();
  Eigen::Index r = 0;
  if (s(0) > 0.0) {
    while (r < s.size() && s(r) > rel_cutoff * s(0)) ++r;
  }
  return svd.matrixU().leftCols(r);
}

double hermitian_defect(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace kernelframe::linalg
