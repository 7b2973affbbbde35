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
#include "kernelframe/linalg.hpp"
#include "kernelframe/toeplitz.hpp"
#include "test_util.hpp"

namespace kf = kernelframe;
using kf::CMatrix;
using kf::Complex;
using kf::CVector;
using kf::blaschke::FiniteBlaschkeProduct;
using kf::modelspace::ModelSpace;
using kf::toeplitz::SymbolCoefficients;

namespace {

SymbolCoefficients random_analytic(std::mt19937& rng, int degree) {
  std::map<int, Complex> c;
  const CVector v = kftest::random_vector(rng, degree + 1);
  for (int k = 0; k <= degree; ++k) c[k] = v(k);
  return SymbolCoefficients(c);
}

}  // namespace

TEST(Toeplitz, ConstantSymbolIsIdentity) {
  const auto t = kf::toeplitz::toeplitz_truncation(SymbolCoefficients::constant(1.0), 4);
  EXPECT_EQ(t.matrix, CMatrix::Identity(4, 4));
}

TEST(Toeplitz, ShiftSymbolIsLowerShift) {
  const auto t = kf::toeplitz::toeplitz_truncation(SymbolCoefficients::monomial(1), 5).matrix;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) EXPECT_EQ(t(i, j), Complex(i - j == 1 ? 1.0 : 0.0));
}

TEST(Toeplitz, CosineSymbolEigenvalues) {
  const auto phi = SymbolCoefficients::monomial(1) + SymbolCoefficients::monomial(-1);
  for (int n : {1, 2, 5, 12}) {
    const auto ev = kf::linalg::hermitian_eigenvalues(kf::toeplitz::toeplitz_truncation(phi, n).matrix);
    std::vector<double> expected;
    for (int k = 1; k <= n; ++k) expected.push_back(2.0 * std::cos(k * kf::kPi / (n + 1)));
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < n; ++k) EXPECT_NEAR(ev(k), expected[k], 1e-12);
    EXPECT_LT(ev.maxCoeff(), 2.0);
  }
}

TEST(Toeplitz, NormMonotoneAndBoundedBySupNorm) {
  std::mt19937 rng(19);
  for (int t = 0; t < 10; ++t) {
    std::map<int, Complex> c;
    const CVector v = kftest::random_vector(rng, 5);
    for (int k = -2; k <= 2; ++k) c[k] = v(k + 2);
    SymbolCoefficients phi(c);
    const auto sup = phi.sup_norm();
    double prev = 0.0;
    for (int n = 1; n <= 30; ++n) {
      const auto m = kf::toeplitz::toeplitz_truncation(phi, n).matrix;
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) EXPECT_EQ(m(i, j), m(i - 1, j - 1));
      const double nrm = kf::linalg::spectral_norm(m);
      EXPECT_GE(nrm, prev - 1e-12);
      EXPECT_LE(nrm, sup.value + sup.mesh_error + 1e-6);
      prev = nrm;
    }
  }
}

TEST(Toeplitz, SymbolAlgebra) {
  const auto a = SymbolCoefficients::from_polynomial({1.0, 2.0});
  const auto b = SymbolCoefficients::monomial(-1, 3.0);
  const auto p = a * b;
  EXPECT_EQ(p.coeff(-1), Complex(3.0));
  EXPECT_EQ(p.coeff(0), Complex(6.0));
  EXPECT_FALSE(p.is_analytic());
  EXPECT_TRUE(a.is_analytic());
  const auto c = SymbolCoefficients::monomial(2, Complex(0, 1)).conjugate();
  EXPECT_EQ(c.coeff(-2), Complex(0, -1));
  const Complex w = std::polar(1.0, 0.3);
  EXPECT_NEAR(std::abs(c(w) - std::conj(Complex(0, 1) * w * w)), 0.0, 1e-15);
}

TEST(Toeplitz, LaurentWindowShiftsIndices) {
  const auto phi = SymbolCoefficients::from_polynomial({1.0, 2.0, 3.0});
  const CMatrix w = kf::toeplitz::laurent_window(phi, -2, 5);
  // Bilateral matrices are Toeplitz too, so every window equals the truncation.
  EXPECT_EQ(w, kf::toeplitz::toeplitz_truncation(phi, 5).matrix);
}

TEST(Toeplitz, ModelCompressionOfZIsCompressedShiftExactly) {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    ModelSpace m(FiniteBlaschkeProduct(kftest::random_zeros(rng, 1 + t % 5, 0.8)));
    const CMatrix a = kf::toeplitz::model_compression(m, SymbolCoefficients::monomial(1));
    EXPECT_EQ(a, kf::modelspace::compressed_shift(m));
  }
}

TEST(Toeplitz, ModelCompressionOnMonomialSpace) {
  ModelSpace m(FiniteBlaschkeProduct::monomial(3));
  CMatrix s = CMatrix::Zero(3, 3);
  s(1, 0) = 1.0;
  s(2, 1) = 1.0;
  EXPECT_LT(kftest::max_abs(kf::toeplitz::model_compression(m, SymbolCoefficients::monomial(2)) - s * s), 1e-15);
  EXPECT_LT(kftest::max_abs(kf::toeplitz::model_compression(m, SymbolCoefficients::constant(1.0)) -
                            CMatrix::Identity(3, 3)),
            1e-15);
}

TEST(Toeplitz, ModelCompressionIsMultiplicative) {
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    ModelSpace m(FiniteBlaschkeProduct(kftest::random_zeros(rng, 2 + t % 4, 0.8)));
    const auto phi = random_analytic(rng, 1 + t % 3), psi = random_analytic(rng, 2);
    const CMatrix lhs = kf::toeplitz::model_compression(m, phi * psi);
    const CMatrix rhs = kf::toeplitz::model_compression(m, phi) * kf::toeplitz::model_compression(m, psi);
    EXPECT_LT(kftest::max_abs(lhs - rhs), 1e-8);
  }
}

TEST(Toeplitz, HilbertSmallCases) {
  const auto h1 = kf::toeplitz::hilbert_gramian(1);
  EXPECT_EQ(h1.max_eig, 1.0);
  const auto h2 = kf::toeplitz::hilbert_gramian(2);
  EXPECT_NEAR(h2.max_eig, 2.0 / 3.0 + std::sqrt(13.0) / 6.0, 1e-14);
  EXPECT_EQ(h2.matrix(1, 1), 1.0 / 3.0);
  EXPECT_THROW(kf::toeplitz::hilbert_gramian(0), kf::Error);
}

TEST(Toeplitz, HilbertSpectrum) {
  // High-precision reference values for the largest eigenvalue.
  const std::pair<int, double> ref[] = {{5, 1.56705069109823}, {10, 1.75191967026518}, {50, 2.07629668313116}};
  for (auto [n, v] : ref) EXPECT_NEAR(kf::toeplitz::hilbert_gramian(n).max_eig, v, 1e-12);
  double prev = 0.0;
  for (int n : {1, 2, 5, 10, 50, 200}) {
    const auto h = kf::toeplitz::hilbert_gramian(n);
    EXPECT_TRUE(h.below_pi);
    EXPECT_GT(h.max_eig, prev);
    prev = h.max_eig;
  }
  EXPECT_GT(prev, 2.27);
  EXPECT_LT(kf::toeplitz::hilbert_gramian(30).min_eig, 1e-8);
}

TEST(Toeplitz, FrameImageScalarCases) {
  std::mt19937 rng(23);
  const kf::frames::VectorFamily f(kftest::random_matrix(rng, 4, 6));
  const auto one = kf::toeplitz::frame_image_report(f, SymbolCoefficients::constant(1.0));
  EXPECT_NEAR(one.bounds_after.lower, one.bounds_before.lower, 1e-12);
  EXPECT_NEAR(one.bounds_after.upper, one.bounds_before.upper, 1e-12);
  const auto two = kf::toeplitz::frame_image_report(f, SymbolCoefficients::constant(2.0));
  EXPECT_NEAR(two.bounds_after.lower, 4 * two.bounds_before.lower, 1e-10);
  EXPECT_TRUE(two.sup_norm_bound_holds);
  EXPECT_TRUE(two.pinv_bound_holds);
}

TEST(Toeplitz, FrameImageOfOrthonormalBasis) {
  const kf::frames::VectorFamily f(CMatrix::Identity(5, 5));
  const auto r = kf::toeplitz::frame_image_report(f, SymbolCoefficients::from_polynomial({1.0, 0.5}));
  EXPECT_NEAR(r.sigma_min, 0.5948915118984841, 1e-12);
  EXPECT_NEAR(r.bounds_after.lower, r.sigma_min * r.sigma_min, 1e-12);
  EXPECT_TRUE(r.pinv_bound_holds);
  EXPECT_NEAR(r.sup_norm_bound, 1.0 / 2.25, 1e-6);
  EXPECT_TRUE(r.bounds_after.is_frame);
}

TEST(Toeplitz, FrameImagePreservesFrames) {
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    const kf::frames::VectorFamily f(kftest::random_matrix(rng, 5, 7));
    auto phi = random_analytic(rng, 2);
    const auto r = kf::toeplitz::frame_image_report(f, phi);
    EXPECT_TRUE(r.bounds_after.is_frame);
    EXPECT_TRUE(r.pinv_bound_holds);
  }
}

TEST(Toeplitz, ClarkConditionTrivialSymbols) {
  ModelSpace m(FiniteBlaschkeProduct({0.3, -0.4}));
  const auto one = kf::toeplitz::clark_frame_condition(m, SymbolCoefficients::constant(1.0));
  EXPECT_NEAR(one.delta, 1.0, 1e-15);
  EXPECT_NEAR(one.delta_t, 0.0, 1e-20);
  EXPECT_NEAR(one.observed_lower, 1.0, 1e-12);
  const auto two = kf::toeplitz::clark_frame_condition(m, SymbolCoefficients::constant(Complex(0, 2)));
  EXPECT_NEAR(two.delta, 2.0, 1e-15);
  EXPECT_NEAR(two.observed_lower, 2.0, 1e-12);
}

TEST(Toeplitz, ClarkConditionExample) {
  ModelSpace m(FiniteBlaschkeProduct({0.3, -0.4}));
  const auto r = kf::toeplitz::clark_frame_condition(m, SymbolCoefficients::from_polynomial({1.0, 0.25}));
  EXPECT_NEAR(r.delta, 0.9, 1e-15);
  // Values from a dense-series computation in tests/oracles.
  EXPECT_NEAR(r.delta_t, 0.0784, 1e-8);
  EXPECT_NEAR(r.observed_lower, 0.8535290634903437, 1e-10);
  EXPECT_TRUE(r.condition_holds);
  EXPECT_TRUE(r.literal_condition_holds);
  EXPECT_TRUE(r.implication_ok);
  EXPECT_THROW(kf::toeplitz::clark_frame_condition(m, SymbolCoefficients::monomial(-1)), kf::Error);
}
