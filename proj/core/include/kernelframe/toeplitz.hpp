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

#include <map>
#include <vector>

#include "kernelframe/frames.hpp"
#include "kernelframe/hardy.hpp"
#include "kernelframe/modelspace.hpp"
#include "kernelframe/types.hpp"

namespace kernelframe::toeplitz {

/// Trigonometric polynomial phi(z) = sum_k a_k z^k with finite support.
class SymbolCoefficients {
 public:
  SymbolCoefficients() = default;
  explicit SymbolCoefficients(std::map<int, Complex> coeffs);

  static SymbolCoefficients constant(Complex c);
  static SymbolCoefficients monomial(int k, Complex a = Complex{1.0, 0.0});
  static SymbolCoefficients from_polynomial(const hardy::AnalyticPolynomial& p);

  const std::map<int, Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int k) const;
  bool is_analytic() const;
  int min_index() const;
  int max_index() const;

  // Evaluation on the circle; for analytic symbols valid anywhere.
  Complex operator()(Complex z) const;

  // Boundary conjugate: coefficient conj(a_k) at index -k.
  SymbolCoefficients conjugate() const;

  SymbolCoefficients operator*(const SymbolCoefficients& other) const;
  SymbolCoefficients operator+(const SymbolCoefficients& other) const;

  struct SupNorm {
    double value = 0.0;
    std::size_t mesh = 0;
    // |phi'|_inf * pi / mesh bounds how far the sampled max can sit below the true sup.
    double mesh_error = 0.0;
  };
  SupNorm sup_norm(std::size_t samples = 2048) const;

 private:
  std::map<int, Complex> coeffs_;
};

struct ToeplitzTruncation {
  std::size_t n = 0;
  CMatrix matrix;  // T(i, j) = a_{i - j}
};

ToeplitzTruncation toeplitz_truncation(const SymbolCoefficients& phi, std::size_t n);

// Window of the bilateral Laurent matrix of M_phi on indices first..first+n-1.
// Laurent entries depend only on i - j, so the window equals the unilateral
// truncation; `first` only labels the window.
CMatrix laurent_window(const SymbolCoefficients& phi, int first, std::size_t n);

// Matrix of f -> P_B(phi f) in the Takenaka-Malmquist basis of m.
// Throws Error(kConditioning) when the basis tail makes the projection
// error exceed 1e-10.
CMatrix model_compression(const modelspace::ModelSpace& m, const SymbolCoefficients& phi);

struct HilbertReport {
  std::size_t n = 0;
  RMatrix matrix;  // 1 / (i + j + 1)
  double max_eig = 0.0;
  double min_eig = 0.0;
  bool below_pi = false;
};

// Throws Error(kValidation) for n = 0.
HilbertReport hilbert_gramian(std::size_t n);

struct FrameImageReport {
  frames::FrameReport bounds_before;
  frames::FrameReport bounds_after;
  double sup_norm = 0.0;      // sampled ||phi||_inf
  double sigma_min = 0.0;     // smallest singular value of T_phi
  double sup_norm_bound = 0.0;   // A / ||phi||_inf^2
  double pinv_bound = 0.0;    // A sigma_min^2
  bool pinv_bound_holds = false;   // after.lower >= pinv_bound - 1e-9
  bool sup_norm_bound_holds = false;  // after.lower >= sup_norm_bound - 1e-9
};

// The family lives in C^{N+1} = degree-N polynomial coefficients; phi acts
// through toeplitz_truncation(phi, N + 1).
FrameImageReport frame_image_report(const frames::VectorFamily& family,
                                    const SymbolCoefficients& phi);

struct ClarkConditionReport {
  double delta = 0.0;           // min_n |phi(l_n)| over the zeros of B
  double delta_t = 0.0;         // sum_n ||A_conj(phi) e_n - conj(phi(l_n)) e_n||^2
  bool condition_holds = false;        // delta > sqrt(delta_t)
  bool literal_condition_holds = false;  // delta > delta_t
  double observed_lower = 0.0;  // sigma_min of f -> A_conj(phi) f = phi(M*) f
  double guaranteed_lower = 0.0;  // delta - sqrt(delta_t)
  bool implication_ok = true;   // observed_lower >= guaranteed_lower - 1e-8 when condition holds
  std::vector<Complex> clark_roots;
};

// Throws Error(kDomain) for a symbol with negative-index coefficients.
ClarkConditionReport clark_frame_condition(const modelspace::ModelSpace& m,
                                           const SymbolCoefficients& phi,
                                           Complex zeta = Complex{1.0, 0.0});

}  // namespace kernelframe::toeplitz
