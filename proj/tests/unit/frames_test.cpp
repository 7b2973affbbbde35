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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kernelframe/error.hpp"
#include "kernelframe/frames.hpp"
#include "kernelframe/linalg.hpp"
#include "test_util.hpp"

namespace kf = kernelframe;
using kf::CMatrix;
using kf::Complex;
using kf::CVector;
using kf::frames::VectorFamily;

namespace {

VectorFamily mercedes() {
  const double s = std::sqrt(3.0) / 2.0;
  CMatrix f(2, 3);
  f << 0.0, -s, s, 1.0, -0.5, -0.5;
  return VectorFamily(f);
}

}  // namespace

TEST(Frames, MercedesFrameOperatorAndBounds) {
  const auto fam = mercedes();
  const auto t = kf::frames::frame_transforms(fam);
  EXPECT_LT(kftest::max_abs(t.frame_op - 1.5 * CMatrix::Identity(2, 2)), 1e-15);
  const auto r = kf::frames::frame_bounds(fam);
  EXPECT_NEAR(r.lower, 1.5, 1e-14);
  EXPECT_NEAR(r.upper, 1.5, 1e-14);
  EXPECT_TRUE(r.is_frame);
  EXPECT_TRUE(r.is_tight);
  EXPECT_FALSE(r.is_parseval);
  EXPECT_FALSE(r.is_riesz);
}

TEST(Frames, MercedesDualAndKernel) {
  const auto fam = mercedes();
  const auto dual = kf::frames::canonical_dual(fam);
  CMatrix expected(2, 3);
  expected << 0.0, -1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0;
  EXPECT_LT(kftest::max_abs(dual.synthesis() - expected), 1e-15);
  CMatrix k(3, 3);
  k << 2.0 / 3, -1.0 / 3, -1.0 / 3, -1.0 / 3, 2.0 / 3, -1.0 / 3, -1.0 / 3, -1.0 / 3, 2.0 / 3;
  EXPECT_LT(kftest::max_abs(kf::frames::kernel_matrix(fam) - k), 1e-15);
  EXPECT_LT(kftest::max_abs(kf::frames::kernel_matrix(dual) - k), 1e-12);
}

TEST(Frames, OrthonormalBasisIsParsevalRiesz) {
  const auto r = kf::frames::frame_bounds(VectorFamily(CMatrix::Identity(3, 3)));
  EXPECT_TRUE(r.is_parseval);
  EXPECT_TRUE(r.is_riesz);
}

TEST(Frames, NonSpanningFamilyIsNotAFrame) {
  CMatrix f(2, 2);
  f << 1.0, 2.0, 0.0, 0.0;
  VectorFamily fam(f);
  const auto r = kf::frames::frame_bounds(fam);
  EXPECT_FALSE(r.is_frame);
  EXPECT_NEAR(r.lower, 0.0, 1e-14);
  try {
    kf::frames::canonical_dual(fam);
    FAIL();
  } catch (const kf::Error& e) {
    EXPECT_EQ(e.code(), kf::ErrorCode::kNotAFrame);
  }
}

TEST(Frames, FrameInequalityAndReconstructionProperty) {
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    const int d = 1 + t % 5, m = d + t % 4;
    VectorFamily fam(kftest::random_matrix(rng, d, m));
    const auto r = kf::frames::frame_bounds(fam);
    ASSERT_TRUE(r.is_frame);
    const auto dual = kf::frames::canonical_dual(fam);
    for (int s = 0; s < 5; ++s) {
      const CVector f = kftest::random_vector(rng, d);
      const double e = kf::frames::analysis_energy(fam, f);
      EXPECT_GE(e, r.lower * f.squaredNorm() * (1 - 1e-10));
      EXPECT_LE(e, r.upper * f.squaredNorm() * (1 + 1e-10));
      // f = sum <f, dual_n> f_n
      const CVector coeffs = dual.synthesis().adjoint() * f;
      EXPECT_LT((fam.synthesis() * coeffs - f).norm(), 1e-9 * f.norm());
    }
    // Kernel matrix is an orthogonal projection of rank d.
    const CMatrix k = kf::frames::kernel_matrix(fam);
    EXPECT_LT(kftest::max_abs(k * k - k), 1e-9);
    EXPECT_NEAR(k.trace().real(), d, 1e-9);
  }
}

TEST(Frames, GramianMatchesDefinition) {
  std::mt19937 rng(6);
  const CMatrix f = kftest::random_matrix(rng, 3, 4);
  const auto g = kf::frames::gramian(VectorFamily(f));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // <f_i, f_j> = sum_k f_i[k] conj(f_j[k])
      Complex s{};
      for (int k = 0; k < 3; ++k) s += f(k, i) * std::conj(f(k, j));
      EXPECT_NEAR(std::abs(g.matrix(i, j) - s), 0.0, 1e-12);
    }
  EXPECT_FALSE(g.riesz);  // 4 vectors in C^3
  const auto b = kf::frames::gramian(VectorFamily(f.leftCols(3)));
  EXPECT_TRUE(b.riesz);
}

TEST(Frames, PseudoinversePenroseIdentities) {
  std::mt19937 rng(77);
  for (int t = 0; t < 100; ++t) {
    const int r = 1 + t % 8, c = 1 + (t / 8) % 8, rank = 1 + t % std::min(r, c);
    const CMatrix a = kftest::random_matrix(rng, r, rank) * kftest::random_matrix(rng, rank, c);
    const CMatrix p = kf::frames::pinv(a);
    const double s = 1.0 + kf::linalg::spectral_norm(a);
    EXPECT_LT(kftest::max_abs(a * p * a - a), 1e-10 * s * s);
    EXPECT_LT(kftest::max_abs(p * a * p - p), 1e-10 * (1.0 + kf::linalg::spectral_norm(p)));
    EXPECT_LT(kftest::max_abs((a * p).adjoint() - a * p), 1e-10);
    EXPECT_LT(kftest::max_abs((p * a).adjoint() - p * a), 1e-10);
  }
}

TEST(Frames, DouglasFactorAgreesWithRankTest) {
  std::mt19937 rng(123);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 6;
    const int rt = 1 + t % (n - 1);
    const CMatrix t_mat = kftest::random_matrix(rng, n, rt) * kftest::random_matrix(rng, rt, n);
    CMatrix s;
    if (t % 2 == 0) {
      s = t_mat * kftest::random_matrix(rng, n, n);  // range inside range(T)
    } else {
      s = kftest::random_matrix(rng, n, n);          // generic, not inside
    }
    CMatrix both(n, 2 * n);
    both << t_mat, s;
    const bool truth = kf::linalg::numerical_rank(both, 1e-9) == kf::linalg::numerical_rank(t_mat, 1e-9);
    const auto d = kf::frames::douglas_factor(s, t_mat);
    EXPECT_EQ(d.included, truth) << "trial " << t;
    if (d.included) {
      ASSERT_TRUE(d.lift.has_value());
      EXPECT_LT(kf::linalg::spectral_norm(s - t_mat * *d.lift), 1e-9 * (1 + kf::linalg::spectral_norm(s)));
      const CMatrix gap = (d.alpha_min + 1e-9) * t_mat * t_mat.adjoint() - s * s.adjoint();
      for (int k = 0; k < 5; ++k) {
        const CVector x = kftest::random_vector(rng, n);
        EXPECT_GE(x.dot(gap * x).real(), -1e-8 * x.squaredNorm() * (1 + d.alpha_min));
      }
      EXPECT_NEAR(d.alpha_min, std::pow(kf::linalg::spectral_norm(*d.lift), 2), 1e-8 * (1 + d.alpha_min));
    } else {
      EXPECT_TRUE(std::isinf(d.alpha_min));
    }
  }
}

TEST(Frames, RejectsEmptyFamily) {
  EXPECT_THROW(VectorFamily(2, {}), kf::Error);
  EXPECT_THROW(VectorFamily(2, {CVector::Zero(3)}), kf::Error);
}
