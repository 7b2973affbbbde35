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

#include <vector>

#include "kernelframe/types.hpp"

// Truncated Hardy-space numerics on the unit disk. Elements of H^2 are
// represented by their power-series coefficients; the inner product is
// the coefficient dot product.

namespace kernelframe::hardy {

/// Power series a_0 + a_1 z + ... + a_D z^D.
class AnalyticPolynomial {
 public:
  AnalyticPolynomial() : coeffs_{Complex{0.0, 0.0}} {}
  explicit AnalyticPolynomial(std::vector<Complex> coeffs);
  AnalyticPolynomial(std::initializer_list<Complex> coeffs)
      : AnalyticPolynomial(std::vector<Complex>(coeffs)) {}

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  Complex operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }

  // Degree after trimming trailing zeros (0 for the zero polynomial).
  std::size_t degree() const;

  // Copy with trailing exact zeros removed; keeps at least one coefficient.
  AnalyticPolynomial trimmed() const;

  double norm_sq() const;
  double norm() const;

  // Horner evaluation.
  Complex operator()(Complex z) const;

 private:
  std::vector<Complex> coeffs_;
};

/// A point of the open unit disk, kept at least kBoundaryEps from the circle.
class DiskPoint {
 public:
  // Throws Error(kDomain) when |value| >= 1 - kBoundaryEps.
  explicit DiskPoint(Complex value);
  DiskPoint(double re, double im = 0.0) : DiskPoint(Complex{re, im}) {}

  Complex value() const { return value_; }
  double abs() const { return std::abs(value_); }

  static bool is_interior(Complex value) {
    return std::abs(value) < 1.0 - kBoundaryEps;
  }

 private:
  Complex value_;
};

enum class ShiftDirection { kForward, kBackward };

// sum_k a_k conj(b_k), shorter list zero-padded.
Complex h2_inner(const AnalyticPolynomial& f, const AnalyticPolynomial& g);

struct EvalBound {
  Complex value;
  double bound;     // ||f|| / sqrt(1 - |lambda|^2)
  bool satisfied;   // |value| <= bound + 1e-10
};

EvalBound eval_and_bound(const AnalyticPolynomial& f, const DiskPoint& lambda);

// Cauchy-Szego kernel 1 / (1 - conj(lambda) z).
Complex szego_kernel(const DiskPoint& lambda, const DiskPoint& z);

// Taylor coefficients of the Szego kernel at lambda up to z^degree.
AnalyticPolynomial szego_truncation(const DiskPoint& lambda,
                                    std::size_t degree);

// Forward: z f. Backward: (f - f(0)) / z.
AnalyticPolynomial shift(const AnalyticPolynomial& f, ShiftDirection direction);

// Coefficient-wise series product truncated to `max_degree`.
std::vector<Complex> series_multiply(const std::vector<Complex>& a,
                                     const std::vector<Complex>& b,
                                     std::size_t max_degree);

}  // namespace kernelframe::hardy
