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
#include <string>
#include <vector>

#include "kernelframe/hardy.hpp"
#include "kernelframe/types.hpp"

namespace kernelframe::blaschke {

using hardy::DiskPoint;

/// front * prod_j b_{lambda_j}(z) with
///   b_lambda(z) = (|lambda| / lambda) (lambda - z) / (1 - conj(lambda) z),
///   b_0(z) = z.
/// Zeros may repeat; the empty product is the constant `front`.
class FiniteBlaschkeProduct {
 public:
  FiniteBlaschkeProduct() = default;

  // Throws Error(kDomain) for a zero outside the open disk or a front
  // constant that is not unimodular within 1e-10.
  explicit FiniteBlaschkeProduct(std::vector<Complex> zeros,
                                 Complex front = Complex{1.0, 0.0});

  // z^n.
  static FiniteBlaschkeProduct monomial(std::size_t n);

  const std::vector<Complex>& zeros() const { return zeros_; }
  Complex front() const { return front_; }
  std::size_t degree() const { return zeros_.size(); }
  double max_zero_modulus() const;

  Complex operator()(Complex z) const;

  // Unimodular constant c with b_lambda(z) = c (lambda - z) / (1 - conj(lambda) z);
  // c = -1 at lambda = 0 so that b_0(z) = z.
  static Complex factor_constant(Complex lambda);
  static Complex factor(Complex lambda, Complex z);
  static Complex factor_derivative(Complex lambda, Complex z);

  // B = p / q with p = front * prod c_j (lambda_j - z), q = prod (1 - conj(lambda_j) z).
  // Coefficients ascending in z.
  std::vector<Complex> numerator() const;
  std::vector<Complex> denominator() const;

  // Taylor coefficients of B at the origin through z^max_degree.
  std::vector<Complex> taylor(std::size_t max_degree) const;

  // Stable 64-bit FNV-1a digest of (front, zeros) as 16 hex characters.
  std::string fingerprint() const;

 private:
  std::vector<Complex> zeros_;
  Complex front_{1.0, 0.0};
};

struct ProductEval {
  Complex value;
  std::optional<Complex> derivative;
};

// Throws Error(kNumeric) when |1 - conj(lambda_j) z| < kPoleEps for some zero.
ProductEval eval_product(const FiniteBlaschkeProduct& b, Complex z,
                         bool with_derivative);

// |(mu - lambda) / (1 - conj(mu) lambda)|.
double pseudohyperbolic(const DiskPoint& lambda, const DiskPoint& mu);

/// Finite truncation of a sequence in the disk.
struct DiskSequence {
  DiskSequence() = default;
  // Throws Error(kDomain) if any point is not interior.
  explicit DiskSequence(std::vector<Complex> pts, std::string label = {});

  std::vector<Complex> points;
  std::string label;
};

struct SequenceReport {
  double blaschke_partial = 0.0;     // sum (1 - |lambda_n|)
  double inverse_gap_partial = 0.0;  // sum 1 / (1 - |lambda_n|^2)
  double bessel_bound = 0.0;         // sum (1 - |theta(lambda_n)|^2) / (1 - |lambda_n|^2)
  double sup_theta = 0.0;            // max |theta(lambda_n)|
};

// Throws Error(kValidation) for an empty sequence.
SequenceReport sequence_diagnostics(const DiskSequence& seq,
                                    const FiniteBlaschkeProduct& theta);

struct PerturbationReport {
  bool holds = false;                // 1/(1-|mu_n|^2) <= 2 alpha/(1-|lambda_n|^2) + 1e-10 for all n
  double alpha = 0.0;                // (1 + eps) / (1 - eps)
  std::vector<bool> per_index_ok;    // pseudohyperbolic(lambda_n, mu_n) < eps
  bool hypothesis_ok = false;        // all of per_index_ok
  std::vector<double> lhs;           // 1 / (1 - |mu_n|^2)
  std::vector<double> rhs;           // 2 alpha / (1 - |lambda_n|^2)
  double mu_blaschke_partial = 0.0;  // sum (1 - |mu_n|)
  double transfer_bound = 0.0;       // 2 alpha sum 1 / (1 - |lambda_n|^2)
};

// Throws Error(kValidation) on length mismatch and Error(kDomain) unless 0 < eps < 1.
PerturbationReport perturbation_transfer(const DiskSequence& lambda_seq,
                                         const DiskSequence& mu_seq,
                                         double eps);

}  // namespace kernelframe::blaschke
