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

#include "kernelframe/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <sstream>

#include "kernelframe/error.hpp"

namespace kernelframe::blaschke {
namespace {

// Below this factor modulus the logarithmic derivative loses accuracy and
// the product rule is used instead.
constexpr double kLogDerivativeFloor = 1e-8;

std::vector<Complex> poly_mul(const std::vector<Complex>& a,
                              const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void fnv_mix(std::uint64_t& h, double v) {
  std::uint64_t bits = 0;
  if (v == 0.0) v = 0.0;  // fold -0 into +0
  std::memcpy(&bits, &v, sizeof bits);
  for (int i = 0; i < 8; ++i) {
    h ^= (bits >> (8 * i)) & 0xffu;
    h *= 0x100000001b3ull;
  }
}

}  // namespace

FiniteBlaschkeProduct::FiniteBlaschkeProduct(std::vector<Complex> zeros,
                                             Complex front)
    : zeros_(std::move(zeros)), front_(front) {
  for (const Complex& z : zeros_) {
    if (!DiskPoint::is_interior(z)) {
      std::ostringstream msg;
      msg << "Blaschke zero (" << z.real() << ", " << z.imag()
          << ") is not strictly inside the unit disk";
      throw Error(ErrorCode::kDomain, msg.str());
    }
  }
  if (std::abs(std::abs(front_) - 1.0) > 1e-10) {
    throw Error(ErrorCode::kDomain, "Blaschke front constant must be unimodular");
  }
}

FiniteBlaschkeProduct FiniteBlaschkeProduct::monomial(std::size_t n) {
  return FiniteBlaschkeProduct(std::vector<Complex>(n, Complex{}));
}

double FiniteBlaschkeProduct::max_zero_modulus() const {
  double r = 0.0;
  for (const Complex& z : zeros_) r = std::max(r, std::abs(z));
  return r;
}

Complex FiniteBlaschkeProduct::factor_constant(Complex lambda) {
  const double r = std::abs(lambda);
  if (r == 0.0) return Complex{-1.0, 0.0};
  return r / lambda;
}

Complex FiniteBlaschkeProduct::factor(Complex lambda, Complex z) {
  return factor_constant(lambda) * (lambda - z) / (1.0 - std::conj(lambda) * z);
}

Complex FiniteBlaschkeProduct::factor_derivative(Complex lambda, Complex z) {
  const Complex den = 1.0 - std::conj(lambda) * z;
  return factor_constant(lambda) * (std::norm(lambda) - 1.0) / (den * den);
}

Complex FiniteBlaschkeProduct::operator()(Complex z) const {
  return eval_product(*this, z, false).value;
}

std::vector<Complex> FiniteBlaschkeProduct::numerator() const {
  std::vector<Complex> p{front_};
  for (const Complex& l : zeros_) {
    const Complex c = factor_constant(l);
    p = poly_mul(p, {c * l, -c});
  }
  return p;
}

std::vector<Complex> FiniteBlaschkeProduct::denominator() const {
  std::vector<Complex> q{Complex{1.0, 0.0}};
  for (const Complex& l : zeros_) q = poly_mul(q, {Complex{1.0, 0.0}, -std::conj(l)});
  return q;
}

std::vector<Complex> FiniteBlaschkeProduct::taylor(std::size_t max_degree) const {
  // q * b = p with q(0) = 1; the recurrence is stable because the roots of
  // the reversed denominator are the conj(zeros), all inside the disk.
  const std::vector<Complex> p = numerator();
  const std::vector<Complex> q = denominator();
  std::vector<Complex> b(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Complex acc = k < p.size() ? p[k] : Complex{};
    const std::size_t jmax = std::min(k, q.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) acc -= q[j] * b[k - j];
    b[k] = acc;
  }
  return b;
}

std::string FiniteBlaschkeProduct::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  fnv_mix(h, front_.real());
  fnv_mix(h, front_.imag());
  for (const Complex& z : zeros_) {
    fnv_mix(h, z.real());
    fnv_mix(h, z.imag());
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

ProductEval eval_product(const FiniteBlaschkeProduct& b, Complex z,
                         bool with_derivative) {
  const auto& zeros = b.zeros();
  const std::size_t n = zeros.size();
  std::vector<Complex> factors(n);
  Complex value = b.front();
  double smallest = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex den = 1.0 - std::conj(zeros[j]) * z;
    if (std::abs(den) < kPoleEps) {
      throw Error(ErrorCode::kNumeric,
                  "evaluation point is at a pole of the Blaschke product");
    }
    factors[j] = FiniteBlaschkeProduct::factor_constant(zeros[j]) * (zeros[j] - z) / den;
    smallest = std::min(smallest, std::abs(factors[j]));
    value *= factors[j];
  }
  ProductEval out{value, std::nullopt};
  if (!with_derivative) return out;

  if (smallest > kLogDerivativeFloor) {
    // B'/B = sum_j (|l_j|^2 - 1) / ((l_j - z)(1 - conj(l_j) z)).
    Complex log_deriv{};
    for (const Complex& l : zeros) {
      log_deriv += (std::norm(l) - 1.0) / ((l - z) * (1.0 - std::conj(l) * z));
    }
    out.derivative = value * log_deriv;
    return out;
  }

  // Near a zero: product rule with prefix/suffix products.
  std::vector<Complex> prefix(n + 1, Complex{1.0, 0.0});
  std::vector<Complex> suffix(n + 1, Complex{1.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] * factors[j];
  for (std::size_t j = n; j > 0; --j) suffix[j - 1] = suffix[j] * factors[j - 1];
  Complex d{};
  for (std::size_t j = 0; j < n; ++j) {
    d += prefix[j] * FiniteBlaschkeProduct::factor_derivative(zeros[j], z) * suffix[j + 1];
  }
  out.derivative = b.front() * d;
  return out;
}

double pseudohyperbolic(const DiskPoint& lambda, const DiskPoint& mu) {
  const Complex l = lambda.value();
  const Complex m = mu.value();
  return std::abs((m - l) / (1.0 - std::conj(m) * l));
}

DiskSequence::DiskSequence(std::vector<Complex> pts, std::string lbl)
    : points(std::move(pts)), label(std::move(lbl)) {
  for (const Complex& p : points) DiskPoint{p};
}

SequenceReport sequence_diagnostics(const DiskSequence& seq,
                                    const FiniteBlaschkeProduct& theta) {
  if (seq.points.empty()) {
    throw Error(ErrorCode::kValidation, "sequence diagnostics need a nonempty sequence");
  }
  SequenceReport r;
  for (const Complex& l : seq.points) {
    const double a = std::abs(l);
    const double gap = 1.0 - a * a;
    const double t = std::abs(theta(l));
    r.blaschke_partial += 1.0 - a;
    r.inverse_gap_partial += 1.0 / gap;
    r.bessel_bound += (1.0 - t * t) / gap;
    r.sup_theta = std::max(r.sup_theta, t);
  }
  return r;
}

PerturbationReport perturbation_transfer(const DiskSequence& lambda_seq,
                                         const DiskSequence& mu_seq, double eps) {
  if (lambda_seq.points.size() != mu_seq.points.size()) {
    throw Error(ErrorCode::kValidation, "perturbation sequences differ in length");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::kDomain, "perturbation radius must satisfy 0 < eps < 1");
  }
  PerturbationReport r;
  r.alpha = (1.0 + eps) / (1.0 - eps);
  r.holds = true;
  r.hypothesis_ok = true;
  const std::size_t n = lambda_seq.points.size();
  r.per_index_ok.reserve(n);
  r.lhs.reserve(n);
  r.rhs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex l = lambda_seq.points[i];
    const Complex m = mu_seq.points[i];
    const bool close = pseudohyperbolic(DiskPoint{l}, DiskPoint{m}) < eps;
    const double lhs = 1.0 / (1.0 - std::norm(m));
    const double inv_gap = 1.0 / (1.0 - std::norm(l));
    const double rhs = 2.0 * r.alpha * inv_gap;
    r.per_index_ok.push_back(close);
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
    r.hypothesis_ok = r.hypothesis_ok && close;
    r.holds = r.holds && lhs <= rhs + 1e-10;
    r.mu_blaschke_partial += 1.0 - std::abs(m);
    r.transfer_bound += rhs;
  }
  return r;
}

}  // namespace kernelframe::blaschke
