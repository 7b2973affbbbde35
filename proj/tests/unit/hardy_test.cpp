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

#include <random>

#include "kernelframe/error.hpp"
#include "kernelframe/hardy.hpp"
#include "test_util.hpp"

namespace kf = kernelframe;
using kf::Complex;
using kf::CVector;
using kf::hardy::AnalyticPolynomial;
using kf::hardy::DiskPoint;

TEST(Hardy, InnerProductOfSamePolynomial) {
  AnalyticPolynomial f{1.0, 2.0, 3.0};
  EXPECT_NEAR(std::abs(kf::hardy::h2_inner(f, f) - Complex(14.0)), 0.0, 1e-15);
  EXPECT_NEAR(f.norm_sq(), 14.0, 1e-15);
}

TEST(Hardy, InnerProductIsConjugateLinearInSecondSlot) {
  AnalyticPolynomial f{Complex(1, 1), 2.0};
  AnalyticPolynomial g{Complex(0, 1), Complex(1, -1)};
  // sum f_k conj(g_k) computed by hand
  const Complex expected = Complex(1, 1) * Complex(0, -1) + 2.0 * Complex(1, 1);
  EXPECT_NEAR(std::abs(kf::hardy::h2_inner(f, g) - expected), 0.0, 1e-15);
}

TEST(Hardy, EvaluationBound) {
  AnalyticPolynomial f{1.0, 2.0, 3.0};
  auto r = kf::hardy::eval_and_bound(f, DiskPoint(0.5));
  EXPECT_NEAR(r.value.real(), 2.75, 1e-15);
  EXPECT_NEAR(r.bound, 4.320493798938574, 1e-12);
  EXPECT_TRUE(r.satisfied);
}

TEST(Hardy, EvaluationBoundPropertyRandom) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const CVector c = kftest::random_vector(rng, 1 + trial % 9);
    AnalyticPolynomial f(std::vector<Complex>(c.data(), c.data() + c.size()));
    auto r = kf::hardy::eval_and_bound(f, DiskPoint(kftest::random_disk_point(rng, 0.99)));
    EXPECT_TRUE(r.satisfied);
  }
}

TEST(Hardy, DiskPointRejectsBoundary) {
  EXPECT_THROW(DiskPoint(1.0), kf::Error);
  EXPECT_THROW(DiskPoint(Complex(0.6, 0.8)), kf::Error);
  EXPECT_NO_THROW(DiskPoint(0.999));
  try {
    DiskPoint p(2.0);
  } catch (const kf::Error& e) {
    EXPECT_EQ(e.code(), kf::ErrorCode::kDomain);
  }
}

TEST(Hardy, SzegoKernelValues) {
  EXPECT_NEAR(std::abs(kf::hardy::szego_kernel(DiskPoint(0.5), DiskPoint(0.5)) - Complex(4.0 / 3.0)),
              0.0, 1e-15);
  const Complex k = kf::hardy::szego_kernel(DiskPoint(0.0, 0.5), DiskPoint(0.5));
  EXPECT_NEAR(k.real(), 0.9411764705882353, 1e-15);
  EXPECT_NEAR(k.imag(), -0.23529411764705882, 1e-15);
}

TEST(Hardy, SzegoTruncationReproducesValues) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Complex lam = kftest::random_disk_point(rng, 0.8);
    const CVector c = kftest::random_vector(rng, 6);
    AnalyticPolynomial f(std::vector<Complex>(c.data(), c.data() + c.size()));
    const auto k = kf::hardy::szego_truncation(DiskPoint(lam), 5);
    EXPECT_NEAR(std::abs(kf::hardy::h2_inner(f, k) - f(lam)), 0.0, 1e-12);
  }
}

TEST(Hardy, ShiftsAreAdjoint) {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const CVector a = kftest::random_vector(rng, 5), b = kftest::random_vector(rng, 6);
    AnalyticPolynomial f(std::vector<Complex>(a.data(), a.data() + a.size()));
    AnalyticPolynomial g(std::vector<Complex>(b.data(), b.data() + b.size()));
    const auto sf = kf::hardy::shift(f, kf::hardy::ShiftDirection::kForward);
    const auto bg = kf::hardy::shift(g, kf::hardy::ShiftDirection::kBackward);
    EXPECT_NEAR(std::abs(kf::hardy::h2_inner(sf, g) - kf::hardy::h2_inner(f, bg)), 0.0, 1e-12);
    EXPECT_NEAR(sf.norm_sq(), f.norm_sq(), 1e-12);
  }
}

TEST(Hardy, ShiftExamples) {
  AnalyticPolynomial f{1.0, 2.0};
  auto s = kf::hardy::shift(f, kf::hardy::ShiftDirection::kForward);
  EXPECT_EQ(s[0], Complex(0.0));
  EXPECT_EQ(s[1], Complex(1.0));
  EXPECT_EQ(s[2], Complex(2.0));
  auto b = kf::hardy::shift(f, kf::hardy::ShiftDirection::kBackward);
  EXPECT_EQ(b[0], Complex(2.0));
  EXPECT_EQ(b.degree(), 0u);
}

TEST(Hardy, SeriesMultiplyTruncates) {
  auto c = kf::hardy::series_multiply({1.0, 1.0}, {1.0, -1.0}, 5);
  ASSERT_GE(c.size(), 3u);
  EXPECT_EQ(c[0], Complex(1.0));
  EXPECT_EQ(c[1], Complex(0.0));
  EXPECT_EQ(c[2], Complex(-1.0));
}
