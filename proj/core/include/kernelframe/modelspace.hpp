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

#include <memory>
#include <vector>

#include "kernelframe/blaschke.hpp"
#include "kernelframe/hardy.hpp"
#include "kernelframe/types.hpp"

// The model space K_B = H^2 (-) B H^2 of a finite Blaschke product B,
// coordinatized by the Takenaka-Malmquist orthonormal basis
//
//   e_k(z) = sqrt(1 - |l_k|^2) / (1 - conj(l_k) z) * prod_{j<k} b_{l_j}(z).
//
// For B = z^n this is the monomial basis {1, z, ..., z^{n-1}}. Every
// element of K_B is stored as its coordinate vector in this basis, so the
// K_B inner product is the Euclidean one on coordinates.

namespace kernelframe::modelspace {

using blaschke::FiniteBlaschkeProduct;
using hardy::AnalyticPolynomial;
using hardy::DiskPoint;

/// Immutable, cheap-to-copy handle. The basis cache (Taylor coefficients
/// of each e_k through the working truncation) is built eagerly.
class ModelSpace {
 public:
  // Truncation chosen by suggested_truncation(b).
  explicit ModelSpace(FiniteBlaschkeProduct b);

  // Throws Error(kConditioning) when trunc_degree < 4 * degree(b), and
  // Error(kValidation) for a constant B.
  ModelSpace(FiniteBlaschkeProduct b, std::size_t trunc_degree);

  // Smallest T >= 4n whose coefficient tail bound is below 1e-17.
  // Throws Error(kConditioning) if zeros crowd the circle so much that no
  // T <= 65536 works.
  static std::size_t suggested_truncation(const FiniteBlaschkeProduct& b);

  const FiniteBlaschkeProduct& blaschke() const { return impl_->b; }
  std::size_t dim() const { return impl_->b.degree(); }
  std::size_t truncation() const { return impl_->trunc; }

  // Upper estimate for the l^2 norm of any basis element's Taylor tail
  // beyond the working truncation.
  double tail_estimate() const { return impl_->tail; }

  const std::string& fingerprint() const { return impl_->fingerprint; }

  // e_k(z) for |z| <= 1 by the closed rational form.
  Complex basis_value(std::size_t k, Complex z) const;
  CVector basis_values(Complex z) const;

  // Row k holds the Taylor coefficients of e_k through z^truncation.
  const CMatrix& basis_series() const { return impl_->series; }

  // Taylor coefficients of e_k through z^max_degree (recomputed when
  // max_degree exceeds the cached truncation).
  CMatrix basis_series(std::size_t max_degree) const;

  // Gram matrix of the truncated series under the H^2 inner product.
  CMatrix basis_gram() const;

  bool operator==(const ModelSpace& other) const {
    return impl_ == other.impl_ || fingerprint() == other.fingerprint();
  }

 private:
  struct Impl {
    FiniteBlaschkeProduct b;
    std::size_t trunc = 0;
    double tail = 0.0;
    CMatrix series;
    std::string fingerprint;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Element of K_B by its Takenaka-Malmquist coordinates.
class ModelVector {
 public:
  // Throws Error(kValidation) when coeffs.size() != space.dim().
  ModelVector(ModelSpace space, CVector coeffs);

  const ModelSpace& space() const { return space_; }
  const CVector& coeffs() const { return coeffs_; }

  double norm_sq() const { return coeffs_.squaredNorm(); }
  double norm() const { return coeffs_.norm(); }

  // Value of the represented function at z, |z| <= 1.
  Complex operator()(Complex z) const;

  // Taylor coefficients through z^max_degree.
  AnalyticPolynomial series(std::size_t max_degree) const;

 private:
  ModelSpace space_;
  CVector coeffs_;
};

// <v, w> in K_B. Throws Error(kValidation) for vectors of different spaces.
Complex inner(const ModelVector& v, const ModelVector& w);

ModelSpace tm_basis(const FiniteBlaschkeProduct& b, std::size_t trunc_degree);

// (1 - conj(B(lambda)) B(z)) / (1 - conj(lambda) z).
Complex model_kernel(const FiniteBlaschkeProduct& b, Complex lambda, Complex z);

// Coordinates conj(e_k(lambda)); <v, kernel_vector(lambda)> = v(lambda).
ModelVector kernel_vector(const ModelSpace& m, const DiskPoint& lambda);

// (1 - |B(lambda)|^2) / (1 - |lambda|^2).
double kernel_norm_sq(const ModelSpace& m, const DiskPoint& lambda);

// Orthogonal projection of an H^2 polynomial onto K_B.
ModelVector project(const AnalyticPolynomial& f, const ModelSpace& m);

// Matrix of f -> P_B(z^l f) in the Takenaka-Malmquist basis; for l < 0 the
// multiplier is conj(z)^{|l|} on the circle. Entries are correlations of
// the cached basis series.
CMatrix monomial_compression(const ModelSpace& m, int l);

// Matrix of f -> P_B(z f) in the Takenaka-Malmquist basis.
CMatrix compressed_shift(const ModelSpace& m);

// Backward-shift orbit S*^k B, k = 1..n, as coordinate columns.
CMatrix shift_orbit(const ModelSpace& m, std::size_t n);

struct OrbitReport {
  double norm_sq = 0.0;     // ||g||^2
  double partial = 0.0;     // sum_{k<=N} |<g, S*^k B>|^2
  double defect = 0.0;      // | ||g||^2 - partial |
  double tail_bound = 0.0;  // ||g||^2 sum_{k>N} ||S*^k B||^2 (upper estimate)
  bool inconclusive = false;  // tail_bound > ||g||^2
  bool consistent = false;    // defect <= tail_bound + 1e-9
};

// Throws Error(kValidation) for N = 0 or a vector from another space.
OrbitReport shift_orbit_parseval(const ModelSpace& m, const ModelVector& g,
                                 std::size_t n);

struct ClarkBasis {
  Complex zeta;
  std::vector<Complex> roots;            // solutions of B(xi) = zeta on the circle
  std::vector<double> derivative_moduli; // |B'(xi_j)|
  std::vector<ModelVector> vectors;      // normalized boundary kernels
  bool origin_is_zero = false;           // B(0) = 0
};

// Orthonormal basis of normalized boundary kernels
//   exp_j(z) = e^{i(arg zeta - arg xi_j)/2} / sqrt|B'(xi_j)| * (1 - conj(zeta) B(z)) / (1 - conj(xi_j) z).
// Throws Error(kDomain) if zeta is not unimodular within 1e-12,
// Error(kDegenerateRoot) if |B'(xi_j)| < 1e-10 and Error(kRootFinding) if a
// root sits off the circle by more than 1e-8.
ClarkBasis clark_basis(const ModelSpace& m, Complex zeta);

}  // namespace kernelframe::modelspace
