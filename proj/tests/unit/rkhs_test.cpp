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
#include "kernelframe/rkhs.hpp"
#include "test_util.hpp"

namespace kf = kernelframe;
using kf::CMatrix;
using kf::Complex;
using kf::CVector;
using kf::blaschke::FiniteBlaschkeProduct;
using kf::hardy::DiskPoint;
using kf::modelspace::ModelSpace;
using kf::rkhs::Point;
using kf::rkhs::scalar_point;

namespace {

std::vector<Point> real_grid(double lo, double hi, int n) {
  std::vector<Point> g;
  for (int i = 0; i < n; ++i) g.push_back(scalar_point(lo + (hi - lo) * i / (n - 1)));
  return g;
}

}  // namespace

TEST(Rkhs, SzegoKernelDomainChecked) {
  const auto k = kf::rkhs::szego();
  EXPECT_NEAR(std::abs(k(Complex(0.5), Complex(0.5)) - Complex(4.0 / 3.0)), 0.0, 1e-15);
  try {
    k(Complex(1.0), Complex(0.0));
    FAIL();
  } catch (const kf::Error& e) {
    EXPECT_EQ(e.code(), kf::ErrorCode::kDomain);
  }
}

TEST(Rkhs, PullbackOfSzegoIsPsd) {
  const auto map = kf::rkhs::PointMap::scalar_affine(kf::rkhs::Domain::interval(-1, 1), 0.5, 0.0);
  const auto k = kf::rkhs::pullback_kernel(kf::rkhs::szego(), map);
  EXPECT_NEAR(std::abs(k(Complex(0.4), Complex(-0.6)) - Complex(1.0 / (1.0 + 0.06))), 0.0, 1e-15);
  const auto r = kf::rkhs::psd_check(k, real_grid(-1, 1, 6));
  EXPECT_TRUE(r.psd);
  EXPECT_NEAR(r.min_eig, 5.960863895245156e-06, 1e-12);
}

TEST(Rkhs, BrownianBridgeMatchesClosedForm) {
  const auto k = kf::rkhs::brownian_bridge(10000);
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) {
      const double y = i / 10.0, z = j / 10.0;
      EXPECT_NEAR(k(Complex(y), Complex(z)).real(), std::min(y, z) - y * z, 1e-4);
    }
  EXPECT_NEAR(k(Complex(0.5), Complex(0.5)).real(), 0.249989867882, 1e-11);
  EXPECT_TRUE(kf::rkhs::psd_check(k, real_grid(0, 1, 11)).psd);
  EXPECT_THROW(k(Complex(1.5), Complex(0.5)), kf::Error);
}

TEST(Rkhs, BrownianBridgeVanishesOnBoundary) {
  const auto k = kf::rkhs::brownian_bridge(37);
  for (double z : {0.0, 0.2, 0.5, 1.0}) {
    EXPECT_NEAR(std::abs(k(Complex(0.0), Complex(z))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(k(Complex(1.0), Complex(z))), 0.0, 1e-14);
  }
}

TEST(Rkhs, SineFamilyOrthonormalInDerivativeInnerProduct) {
  // f_n = sqrt(2) sin(n pi x) / (n pi); <f, g> = int_0^1 f'(x) g'(x) dx by composite Simpson.
  const int steps = 2000;
  const double h = 1.0 / steps;
  auto deriv = [](int n, double x) { return std::sqrt(2.0) * std::cos(n * kf::kPi * x); };
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 8; ++m) {
      double s = 0.0;
      for (int i = 0; i <= steps; ++i) {
        const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        s += w * deriv(n, i * h) * deriv(m, i * h);
      }
      EXPECT_NEAR(s * h / 3.0, n == m ? 1.0 : 0.0, 1e-9);
    }
}

TEST(Rkhs, SincKernelPsdWithKnownSpectrum) {
  const auto k = kf::rkhs::sinc(kf::kPi);
  EXPECT_NEAR(k(Complex(0.0), Complex(0.0)).real(), 1.0, 1e-15);
  EXPECT_NEAR(k(Complex(0.0), Complex(1.0)).real(), 0.0, 1e-15);
  const auto r = kf::rkhs::psd_check(k, real_grid(0, 3, 7));
  EXPECT_TRUE(r.psd);
  EXPECT_NEAR(r.min_eig, 1.73056396e-04, 1e-11);
  EXPECT_NEAR(r.max_eig, 1.99982694, 1e-8);
}

TEST(Rkhs, GramKernelOnVectors) {
  const auto k = kf::rkhs::gram(2);
  Point y(2), z(2);
  y << Complex(1, 1), 2.0;
  z << Complex(0, 1), 1.0;
  // Conjugate-linear in the first argument, like the Szego kernel.
  const Complex expected = Complex(0, 1) * Complex(1, -1) + 2.0;
  EXPECT_NEAR(std::abs(k(y, z) - expected), 0.0, 1e-15);
  EXPECT_THROW(k(scalar_point(1.0), z), kf::Error);
}

TEST(Rkhs, RandomKernelMatricesArePsd) {
  std::mt19937 rng(55);
  const auto model = kf::rkhs::model(FiniteBlaschkeProduct({0.2, Complex(0.1, 0.5), -0.6}));
  for (int t = 0; t < 20; ++t) {
    std::vector<Point> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(scalar_point(kftest::random_disk_point(rng, 0.95)));
    auto r = kf::rkhs::psd_check(model, pts);
    EXPECT_TRUE(r.psd);
    EXPECT_LT(r.max_asymmetry, 1e-12);
    EXPECT_TRUE(kf::rkhs::psd_check(kf::rkhs::szego(), pts).psd);
  }
}

TEST(Rkhs, SpanKernelAtZerosIsModelKernel) {
  std::vector<Complex> zeros{0.3, Complex(0, -0.4), 0.7};
  FiniteBlaschkeProduct b(zeros);
  ModelSpace m(b);
  std::vector<DiskPoint> pts;
  for (auto z : zeros) pts.emplace_back(z);
  const auto s = kf::rkhs::span_kernel(m, pts);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const Complex y = std::polar(0.2 * i, 1.1 * j), z = std::polar(0.18 * j, -0.7 * i);
      const Complex closed = (1.0 - std::conj(b(y)) * b(z)) / (1.0 - std::conj(y) * z);
      EXPECT_NEAR(std::abs(s(y, z) - closed), 0.0, 1e-10);
    }
}

TEST(Rkhs, SpanKernelReproducesOnSubspace) {
  std::mt19937 rng(71);
  ModelSpace m(FiniteBlaschkeProduct(kftest::random_zeros(rng, 5, 0.8)));
  std::vector<DiskPoint> pts{DiskPoint(0.1), DiskPoint(0.0, 0.3)};
  const auto s = kf::rkhs::span_kernel(m, pts);
  const CMatrix p = s.projector();
  EXPECT_LT(kftest::max_abs(p * p - p), 1e-10);
  EXPECT_NEAR(p.trace().real(), 2.0, 1e-10);
  for (int t = 0; t < 20; ++t) {
    const kf::modelspace::ModelVector f(m, s.family() * kftest::random_vector(rng, 2));
    const Complex z = kftest::random_disk_point(rng, 0.9);
    EXPECT_NEAR(std::abs(kf::modelspace::inner(f, s.element_at(z)) - f(z)), 0.0, 1e-9);
  }
}

TEST(Rkhs, RepresenterWithDuplicatedPoints) {
  CMatrix x(2, 2);
  x << 1.0, 1.0, 0.0, 0.0;
  const auto sol = kf::rkhs::representer_solve(x, CVector{{2.0, 2.0}});
  EXPECT_NEAR(std::abs(sol.weights(0) - Complex(1.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(sol.weights(1) - Complex(1.0)), 0.0, 1e-12);
  EXPECT_LT(sol.residual, 1e-12);
}

TEST(Rkhs, RepresenterInterpolatesGenericData) {
  std::mt19937 rng(72);
  for (int t = 0; t < 20; ++t) {
    const CMatrix x = kftest::random_matrix(rng, 5, 3);
    const CVector y = kftest::random_vector(rng, 3);
    const auto sol = kf::rkhs::representer_solve(x, y);
    // <x_i, w> = y_i with w = sum conj(weights_i) x_i
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(std::abs(sol.w.dot(x.col(i)) - y(i)), 0.0, 1e-9);
    }
  }
}

TEST(Rkhs, NamedEvaluation) {
  EXPECT_NEAR(std::abs(kf::rkhs::named_kernel_eval("szego", {}, 0.5, 0.5) - Complex(4.0 / 3.0)), 0.0, 1e-15);
  EXPECT_THROW(kf::rkhs::named_kernel_eval("nope", {}, 0.5, 0.5), kf::Error);
}
