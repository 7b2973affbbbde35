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

#include "kernelframe/hardy.hpp"

#include <cmath>
#include <sstream>

#include "kernelframe/error.hpp"

namespace kernelframe::hardy {

AnalyticPolynomial::AnalyticPolynomial(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
}

std::size_t AnalyticPolynomial::degree() const {
  std::size_t d = coeffs_.size();
  while (d > 1 && coeffs_[d - 1] == Complex{}) --d;
  return d - 1;
}

AnalyticPolynomial AnalyticPolynomial::trimmed() const {
  return AnalyticPolynomial(
      std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + degree() + 1));
}

double AnalyticPolynomial::norm_sq() const {
  double s = 0.0;
  for (const Complex& a : coeffs_) s += std::norm(a);
  return s;
}

double AnalyticPolynomial::norm() const { return std::sqrt(norm_sq()); }

Complex AnalyticPolynomial::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

DiskPoint::DiskPoint(Complex value) : value_(value) {
  if (!is_interior(value)) {
    std::ostringstream msg;
    msg << "point (" << value.real() << ", " << value.imag()
        << ") is not strictly inside the unit disk (|z| = " << std::abs(value)
        << ")";
    throw Error(ErrorCode::kDomain, msg.str());
  }
}

Complex h2_inner(const AnalyticPolynomial& f, const AnalyticPolynomial& g) {
  const std::size_t n = std::min(f.size(), g.size());
  Complex acc{};
  for (std::size_t k = 0; k < n; ++k) acc += f[k] * std::conj(g[k]);
  return acc;
}

EvalBound eval_and_bound(const AnalyticPolynomial& f, const DiskPoint& lambda) {
  EvalBound out;
  out.value = f(lambda.value());
  out.bound = f.norm() / std::sqrt(1.0 - std::norm(lambda.value()));
  out.satisfied = std::abs(out.value) <= out.bound + 1e-10;
  return out;
}

Complex szego_kernel(const DiskPoint& lambda, const DiskPoint& z) {
  return 1.0 / (1.0 - std::conj(lambda.value()) * z.value());
}

AnalyticPolynomial szego_truncation(const DiskPoint& lambda, std::size_t degree) {
  std::vector<Complex> c(degree + 1);
  const Complex r = std::conj(lambda.value());
  Complex p{1.0, 0.0};
  for (auto& a : c) {
    a = p;
    p *= r;
  }
  return AnalyticPolynomial(std::move(c));
}

AnalyticPolynomial shift(const AnalyticPolynomial& f, ShiftDirection direction) {
  const auto& a = f.coeffs();
  if (direction == ShiftDirection::kForward) {
    std::vector<Complex> c;
    c.reserve(a.size() + 1);
    c.push_back(Complex{});
    c.insert(c.end(), a.begin(), a.end());
    return AnalyticPolynomial(std::move(c));
  }
  if (a.size() <= 1) return AnalyticPolynomial{};
  return AnalyticPolynomial(std::vector<Complex>(a.begin() + 1, a.end()));
}

std::vector<Complex> series_multiply(const std::vector<Complex>& a,
                                     const std::vector<Complex>& b,
                                     std::size_t max_degree) {
  std::vector<Complex> out(max_degree + 1);
  for (std::size_t i = 0; i < a.size() && i <= max_degree; ++i) {
    if (a[i] == Complex{}) continue;
    const std::size_t jmax = std::min(b.size(), max_degree + 1 - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace kernelframe::hardy
