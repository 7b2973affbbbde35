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

#include "kernelframe/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kernelframe/error.hpp"
#include "kernelframe/linalg.hpp"

namespace kernelframe::toeplitz {

SymbolCoefficients::SymbolCoefficients(std::map<int, Complex> coeffs) {
  for (const auto& [k, a] : coeffs) {
    if (a != Complex{}) coeffs_.emplace(k, a);
  }
}

SymbolCoefficients SymbolCoefficients::constant(Complex c) {
  return SymbolCoefficients({{0, c}});
}

SymbolCoefficients SymbolCoefficients::monomial(int k, Complex a) {
  return SymbolCoefficients({{k, a}});
}

SymbolCoefficients SymbolCoefficients::from_polynomial(const hardy::AnalyticPolynomial& p) {
  std::map<int, Complex> c;
  for (std::size_t k = 0; k < p.size(); ++k) c[static_cast<int>(k)] = p[k];
  return SymbolCoefficients(std::move(c));
}

Complex SymbolCoefficients::coeff(int k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex{} : it->second;
}

bool SymbolCoefficients::is_analytic() const { return coeffs_.empty() || coeffs_.begin()->first >= 0; }

int SymbolCoefficients::min_index() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

int SymbolCoefficients::max_index() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

Complex SymbolCoefficients::operator()(Complex z) const {
  Complex acc{};
  for (const auto& [k, a] : coeffs_) acc += a * std::pow(z, k);
  return acc;
}

SymbolCoefficients SymbolCoefficients::conjugate() const {
  std::map<int, Complex> c;
  for (const auto& [k, a] : coeffs_) c[-k] = std::conj(a);
  return SymbolCoefficients(std::move(c));
}

SymbolCoefficients SymbolCoefficients::operator*(const SymbolCoefficients& other) const {
  std::map<int, Complex> c;
  for (const auto& [k, a] : coeffs_)
    for (const auto& [l, b] : other.coeffs_) c[k + l] += a * b;
  return SymbolCoefficients(std::move(c));
}

SymbolCoefficients SymbolCoefficients::operator+(const SymbolCoefficients& other) const {
  std::map<int, Complex> c = coeffs_;
  for (const auto& [k, a] : other.coeffs_) c[k] += a;
  return SymbolCoefficients(std::move(c));
}

SymbolCoefficients::SupNorm SymbolCoefficients::sup_norm(std::size_t samples) const {
  SupNorm out;
  out.mesh = std::max<std::size_t>(samples, 1);
  for (std::size_t j = 0; j < out.mesh; ++j) {
    const Complex z = std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(out.mesh));
    out.value = std::max(out.value, std::abs((*this)(z)));
  }
  double lipschitz = 0.0;
  for (const auto& [k, a] : coeffs_) lipschitz += std::abs(k) * std::abs(a);
  out.mesh_error = lipschitz * kPi / static_cast<double>(out.mesh);
  return out;
}

ToeplitzTruncation toeplitz_truncation(const SymbolCoefficients& phi, std::size_t n) {
  ToeplitzTruncation t;
  t.n = n;
  const auto size = static_cast<Eigen::Index>(n);
  t.matrix = CMatrix::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) t.matrix(i, j) = phi.coeff(static_cast<int>(i - j));
  return t;
}

CMatrix laurent_window(const SymbolCoefficients& phi, int /*first*/, std::size_t n) {
  return toeplitz_truncation(phi, n).matrix;
}

CMatrix model_compression(const modelspace::ModelSpace& m, const SymbolCoefficients& phi) {
  double weight = 0.0;
  for (const auto& [k, a] : phi.coeffs()) weight += std::abs(a);
  if (m.tail_estimate() * weight > 1e-10) {
    std::ostringstream msg;
    msg << "working truncation " << m.truncation() << " leaves a projection tail of "
        << m.tail_estimate() * weight << "; use at least degree "
        << modelspace::ModelSpace::suggested_truncation(m.blaschke());
    throw Error(ErrorCode::kConditioning, msg.str());
  }
  const auto n = static_cast<Eigen::Index>(m.dim());
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& [k, a] : phi.coeffs()) out += a * modelspace::monomial_compression(m, k);
  return out;
}

HilbertReport hilbert_gramian(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kValidation, "Hilbert matrix order must be positive");
  HilbertReport r;
  r.n = n;
  const auto size = static_cast<Eigen::Index>(n);
  r.matrix.resize(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) r.matrix(i, j) = 1.0 / static_cast<double>(i + j + 1);
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(r.matrix, Eigen::EigenvaluesOnly);
  r.min_eig = solver.eigenvalues()(0);
  r.max_eig = solver.eigenvalues()(size - 1);
  r.below_pi = r.max_eig < kPi;
  return r;
}

FrameImageReport frame_image_report(const frames::VectorFamily& family,
                                    const SymbolCoefficients& phi) {
  FrameImageReport r;
  const CMatrix t = toeplitz_truncation(phi, family.dim()).matrix;
  r.bounds_before = frames::frame_bounds(family);
  r.bounds_after = frames::frame_bounds(frames::VectorFamily(t * family.synthesis()));
  r.sup_norm = phi.sup_norm().value;
  r.sigma_min = linalg::min_singular_value(t);
  const double a = r.bounds_before.lower;
  r.sup_norm_bound = r.sup_norm > 0.0 ? a / (r.sup_norm * r.sup_norm) : 0.0;
  r.pinv_bound = a * r.sigma_min * r.sigma_min;
  r.pinv_bound_holds = r.bounds_after.lower >= r.pinv_bound - 1e-9;
  r.sup_norm_bound_holds = r.bounds_after.lower >= r.sup_norm_bound - 1e-9;
  return r;
}

ClarkConditionReport clark_frame_condition(const modelspace::ModelSpace& m,
                                           const SymbolCoefficients& phi, Complex zeta) {
  if (!phi.is_analytic()) {
    throw Error(ErrorCode::kDomain, "Clark frame condition needs an analytic symbol");
  }
  ClarkConditionReport r;
  const auto& zeros = m.blaschke().zeros();
  r.delta = std::numeric_limits<double>::infinity();
  for (const Complex& l : zeros) r.delta = std::min(r.delta, std::abs(phi(l)));

  const modelspace::ClarkBasis clark = modelspace::clark_basis(m, zeta);
  r.clark_roots = clark.roots;
  // A_conj(phi) = phi(M)^* acts on K_B as the co-analytic Toeplitz operator.
  const CMatrix a = model_compression(m, phi.conjugate());
  for (std::size_t n = 0; n < zeros.size(); ++n) {
    const CVector& e = clark.vectors[n].coeffs();
    r.delta_t += (a * e - std::conj(phi(zeros[n])) * e).squaredNorm();
  }
  const double root = std::sqrt(r.delta_t);
  r.condition_holds = r.delta > root;
  r.literal_condition_holds = r.delta > r.delta_t;
  r.guaranteed_lower = r.delta - root;
  r.observed_lower = linalg::min_singular_value(a);
  r.implication_ok = !r.condition_holds || r.observed_lower >= r.guaranteed_lower - 1e-8;
  return r;
}

}  // namespace kernelframe::toeplitz
