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

#include "kernelframe/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kernelframe/error.hpp"
#include "kernelframe/linalg.hpp"

namespace kernelframe::frames {
namespace {

CMatrix checked_inverse_frame_op(const VectorFamily& family) {
  const FrameReport report = frame_bounds(family);
  if (!report.is_frame) {
    std::ostringstream msg;
    msg << "frame operator is singular (lower bound " << report.lower
        << ", upper bound " << report.upper << ")";
    throw Error(ErrorCode::kNotAFrame, msg.str());
  }
  const CMatrix s = frame_transforms(family).frame_op;
  return s.llt().solve(CMatrix::Identity(s.rows(), s.cols()));
}

}  // namespace

VectorFamily::VectorFamily(std::size_t dim, const std::vector<CVector>& vectors) {
  if (vectors.empty()) {
    throw Error(ErrorCode::kValidation, "vector family must contain at least one vector");
  }
  synthesis_.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t n = 0; n < vectors.size(); ++n) {
    if (static_cast<std::size_t>(vectors[n].size()) != dim) {
      std::ostringstream msg;
      msg << "vector " << n << " has length " << vectors[n].size() << ", expected " << dim;
      throw Error(ErrorCode::kValidation, msg.str());
    }
    synthesis_.col(static_cast<Eigen::Index>(n)) = vectors[n];
  }
}

VectorFamily::VectorFamily(CMatrix synthesis) : synthesis_(std::move(synthesis)) {
  if (synthesis_.cols() == 0 || synthesis_.rows() == 0) {
    throw Error(ErrorCode::kValidation, "vector family must be nonempty with positive dimension");
  }
}

Transforms frame_transforms(const VectorFamily& family) {
  Transforms t;
  t.synthesis = family.synthesis();
  t.analysis = t.synthesis.adjoint();
  t.frame_op = t.synthesis * t.analysis;
  return t;
}

FrameReport frame_bounds(const VectorFamily& family, double tol) {
  const RVector ev = linalg::hermitian_eigenvalues(frame_transforms(family).frame_op);
  FrameReport r;
  r.lower = std::max(0.0, ev(0));
  r.upper = std::max(0.0, ev(ev.size() - 1));
  r.is_frame = r.upper > 0.0 && r.lower > tol * r.upper;
  r.is_tight = r.is_frame && std::abs(r.lower - r.upper) < tol * r.upper;
  r.is_parseval = r.is_tight && std::abs(r.lower - 1.0) < tol;
  r.is_riesz = r.is_frame && family.size() == family.dim();
  return r;
}

double analysis_energy(const VectorFamily& family, const CVector& f) {
  return (family.synthesis().adjoint() * f).squaredNorm();
}

VectorFamily canonical_dual(const VectorFamily& family) {
  return VectorFamily(checked_inverse_frame_op(family) * family.synthesis());
}

GramianResult gramian(const VectorFamily& family, double tol) {
  const CMatrix& f = family.synthesis();
  GramianResult g;
  // <f_m, f_n> = f_n^H f_m, i.e. the transpose of F^H F.
  g.matrix = (f.adjoint() * f).transpose();
  const RVector ev = linalg::hermitian_eigenvalues(g.matrix);
  g.min_eig = ev(0);
  const double scale = std::max(1.0, ev(ev.size() - 1));
  g.riesz = g.min_eig > tol * scale && frame_bounds(family, tol).is_frame;
  return g;
}

CMatrix kernel_matrix(const VectorFamily& family) {
  const CMatrix& f = family.synthesis();
  // K(i, j) = <f_i, S^{-1} f_j> = f_j^H S^{-1} f_i.
  return (f.adjoint() * checked_inverse_frame_op(family) * f).transpose();
}

CMatrix pinv(const CMatrix& m, double rel_cutoff) {
  if (m.size() == 0) return CMatrix(m.cols(), m.rows());
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& s = svd.singularValues();
  const double cut = rel_cutoff * s(0);
  RVector inv = RVector::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut && s(i) > 0.0) inv(i) = 1.0 / s(i);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

DouglasResult douglas_factor(const CMatrix& s, const CMatrix& t) {
  if (s.rows() != t.rows()) {
    throw Error(ErrorCode::kValidation, "Douglas factorization needs S and T with equal row counts");
  }
  const Eigen::Index d = s.rows();
  const CMatrix t_pinv = pinv(t);
  const CMatrix range_proj = t * t_pinv;
  DouglasResult r;
  r.residual = linalg::spectral_norm((CMatrix::Identity(d, d) - range_proj) * s);
  r.included = r.residual < 1e-9 * std::max(1.0, linalg::spectral_norm(s));
  if (!r.included) {
    r.alpha_min = std::numeric_limits<double>::infinity();
    return r;
  }
  // Largest generalized Rayleigh quotient <S S* x, x> / <T T* x, x> over
  // range(T): whiten S by the singular pairs of T.
  if (t.size() > 0 && s.size() > 0) {
    Eigen::JacobiSVD<CMatrix> svd(t, Eigen::ComputeThinU);
    const RVector& sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > 1e-12 * sv(0) && sv(rank) > 0.0) ++rank;
    if (rank > 0) {
      const CMatrix whitened = sv.head(rank).cwiseInverse().asDiagonal() *
                               svd.matrixU().leftCols(rank).adjoint() * s;
      const double n = linalg::spectral_norm(whitened);
      r.alpha_min = n * n;
    }
  }
  r.lift = t_pinv * s;
  return r;
}

}  // namespace kernelframe::frames
