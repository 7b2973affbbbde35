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

#include "kernelframe/blaschke.hpp"
#include "kernelframe/error.hpp"
#include "test_util.hpp"

namespace kf = kernelframe;
using kf::Complex;
using kf::blaschke::DiskSequence;
using kf::blaschke::FiniteBlaschkeProduct;
using kf::hardy::DiskPoint;

namespace {

// Direct product of the factors, used as an oracle.
Complex naive_product(const std::vector<Complex>& zeros, Complex front, Complex z) {
  Complex v = front;
  for (const Complex& l : zeros) {
    const Complex c = l == Complex{} ? Complex(-1.0) : std::abs(l) / l;
    v *= c * (l - z) / (1.0 - std::conj(l) * z);
  }
  return v;
}

}  // namespace

TEST(Blaschke, MonomialIsZPower) {
  auto b = FiniteBlaschkeProduct::monomial(2);
  EXPECT_NEAR(std::abs(b(Complex(0.5)) - Complex(0.25)), 0.0, 1e-15);
  auto e = kf::blaschke::eval_product(b, Complex(1.0), true);
  ASSERT_TRUE(e.derivative.has_value());
  EXPECT_NEAR(std::abs(*e.derivative - Complex(2.0)), 0.0, 1e-14);
}

TEST(Blaschke, FactorVanishesAtZeroAndUnimodularOnCircle) {
  auto b = FiniteBlaschkeProduct({Complex(0.5)});
  EXPECT_NEAR(std::abs(b(Complex(0.5))), 0.0, 1e-15);
  for (int k = 0; k < 16; ++k) {
    EXPECT_NEAR(std::abs(b(std::polar(1.0, 0.4 * k))), 1.0, 1e-14);
  }
  EXPECT_GT(b(Complex(0.0)).real(), 0.0);
}

TEST(Blaschke, RejectsZeroOnCircleAndBadFront) {
  EXPECT_THROW(FiniteBlaschkeProduct({Complex(1.0)}), kf::Error);
  EXPECT_THROW(FiniteBlaschkeProduct({Complex(0.5)}, Complex(2.0)), kf::Error);
}

TEST(Blaschke, RandomProductsMatchNaiveProductAndAreInner) {
  std::mt19937 rng(21);
  for (int t = 0; t < 100; ++t) {
    auto zeros = kftest::random_zeros(rng, 1 + t % 8, 0.95);
    const Complex front = std::polar(1.0, 0.1 * t);
    FiniteBlaschkeProduct b(zeros, front);
    for (int s = 0; s < 5; ++s) {
      const Complex z = kftest::random_disk_point(rng, 0.99);
      EXPECT_NEAR(std::abs(b(z) - naive_product(zeros, front, z)), 0.0, 1e-12);
      EXPECT_LE(std::abs(b(z)), 1.0 + 1e-12);
      const Complex w = std::polar(1.0, 0.7 * s + t);
      EXPECT_NEAR(std::abs(b(w)), 1.0, 1e-12);
    }
  }
}

TEST(Blaschke, DerivativeMatchesCentralDifference) {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    FiniteBlaschkeProduct b(kftest::random_zeros(rng, 1 + t % 5, 0.8));
    const Complex z = kftest::random_disk_point(rng, 0.9);
    const double h = 1e-6;
    const Complex fd = (b(z + h) - b(z - h)) / (2.0 * h);
    auto e = kf::blaschke::eval_product(b, z, true);
    EXPECT_NEAR(std::abs(*e.derivative - fd), 0.0, 1e-6 * (1.0 + std::abs(fd)));
  }
}

TEST(Blaschke, DerivativeAtAZero) {
  // B(z) = z * b_{0.5}(z): B'(0) = b_{0.5}(0) = 0.5
  FiniteBlaschkeProduct b({Complex(0.0), Complex(0.5)});
  auto e = kf::blaschke::eval_product(b, Complex(0.0), true);
  EXPECT_NEAR(std::abs(*e.derivative - Complex(0.5)), 0.0, 1e-14);
}

TEST(Blaschke, TaylorCoefficientsMatchSeriesOracle) {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    auto zeros = kftest::random_zeros(rng, 1 + t % 4, 0.7);
    FiniteBlaschkeProduct b(zeros);
    const auto c = b.taylor(120);
    const Complex z = kftest::random_disk_point(rng, 0.5);
    Complex s{}, p{1.0};
    for (const Complex& ck : c) {
      s += ck * p;
      p *= z;
    }
    EXPECT_NEAR(std::abs(s - b(z)), 0.0, 1e-12);
    double energy = 0.0;
    for (const Complex& ck : c) energy += std::norm(ck);
    EXPECT_NEAR(energy, 1.0, 1e-10);  // inner functions have unit H^2 norm
  }
}

TEST(Blaschke, FingerprintIsStableAndDistinguishes) {
  FiniteBlaschkeProduct a({Complex(0.3), Complex(0.0, -0.4)});
  FiniteBlaschkeProduct b({Complex(0.3), Complex(0.0, -0.4)});
  FiniteBlaschkeProduct c({Complex(0.3), Complex(0.0, 0.4)});
  EXPECT_EQ(a.fingerprint(), b.fingerprint());
  EXPECT_NE(a.fingerprint(), c.fingerprint());
  EXPECT_EQ(a.fingerprint().size(), 16u);
}

TEST(Blaschke, Pseudohyperbolic) {
  EXPECT_NEAR(kf::blaschke::pseudohyperbolic(DiskPoint(0.5), DiskPoint(-0.5)), 0.8, 1e-15);
  EXPECT_NEAR(kf::blaschke::pseudohyperbolic(DiskPoint(0.3), DiskPoint(0.3)), 0.0, 1e-15);
}

TEST(Blaschke, PseudohyperbolicIsMobiusInvariant) {
  std::mt19937 rng(12);
  for (int t = 0; t < 100; ++t) {
    const Complex a = kftest::random_disk_point(rng, 0.9);
    const Complex l = kftest::random_disk_point(rng, 0.9);
    const Complex m = kftest::random_disk_point(rng, 0.9);
    auto phi = [&](Complex z) { return (a - z) / (1.0 - std::conj(a) * z); };
    EXPECT_NEAR(kf::blaschke::pseudohyperbolic(DiskPoint(l), DiskPoint(m)),
                kf::blaschke::pseudohyperbolic(DiskPoint(phi(l)), DiskPoint(phi(m))), 1e-10);
  }
}

TEST(Blaschke, SequenceDiagnosticsPartialSumsBounded) {
  std::vector<Complex> pts;
  for (int n = 2; n < 2000; ++n) pts.emplace_back(1.0 - 1.0 / (double(n) * n));
  DiskSequence seq(pts, "1-1/n^2");
  auto r = kf::blaschke::sequence_diagnostics(seq, FiniteBlaschkeProduct({Complex(0.5)}));
  EXPECT_NEAR(r.blaschke_partial, 0.6444339418273892, 1e-9);
  EXPECT_LT(r.blaschke_partial, kf::kPi * kf::kPi / 6.0);
  EXPECT_LE(r.sup_theta, 1.0);
}

TEST(Blaschke, BesselBoundForZerosOfTheta) {
  // theta vanishes on the sequence, so the Bessel sum equals the inverse-gap sum.
  std::vector<Complex> pts{0.2, Complex(0, 0.5), -0.6};
  auto r = kf::blaschke::sequence_diagnostics(DiskSequence(pts), FiniteBlaschkeProduct(pts));
  EXPECT_NEAR(r.bessel_bound, r.inverse_gap_partial, 1e-12);
  EXPECT_NEAR(r.sup_theta, 0.0, 1e-14);
}

TEST(Blaschke, PerturbationTransfer) {
  std::vector<Complex> lam, mu;
  for (int n = 2; n <= 50; ++n) {
    const double l = 1.0 - 1.0 / (double(n) * n);
    lam.emplace_back(l);
    mu.emplace_back(l + 0.1 * (1.0 - l));
  }
  auto r = kf::blaschke::perturbation_transfer(DiskSequence(lam), DiskSequence(mu), 0.2);
  EXPECT_NEAR(r.alpha, 1.5, 1e-15);
  EXPECT_TRUE(r.hypothesis_ok);
  EXPECT_TRUE(r.holds);
  for (std::size_t i = 0; i < r.lhs.size(); ++i) {
    // oracle ratio computed independently: max lhs/rhs = 0.3704
    EXPECT_LE(r.lhs[i] / r.rhs[i], 0.3704);
  }
}

TEST(Blaschke, PerturbationHypothesisFailureIsReported) {
  auto r = kf::blaschke::perturbation_transfer(DiskSequence({0.0}), DiskSequence({0.9}), 0.2);
  EXPECT_FALSE(r.hypothesis_ok);
  EXPECT_FALSE(r.per_index_ok[0]);
}
