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

#include "kernelframe/modelspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kernelframe/error.hpp"
#include "kernelframe/linalg.hpp"

namespace kernelframe::modelspace {
namespace {

using blaschke::FiniteBlaschkeProduct;

constexpr double kTailTarget = 1e-17;
constexpr std::size_t kMaxTruncation = 65536;

// Upper estimate of the l^2 Taylor tail beyond z^trunc of any basis element:
// each of the n rational factors has coefficients bounded by rho^{j-1}, so
// coefficient j of a product is at most C(j + n - 1, n - 1) rho^{j - n}.
double tail_bound(std::size_t n, double rho, std::size_t trunc) {
  if (rho == 0.0) return trunc + 1 >= n ? 0.0 : 1.0;
  const double nn = static_cast<double>(n);
  const double t = static_cast<double>(trunc);
  const double log_binom =
      std::lgamma(t + nn + 1.0) - std::lgamma(nn) - std::lgamma(t + 2.0);
  const double log_tail =
      log_binom + (t + 1.0 - nn) * std::log(rho) - nn * std::log1p(-rho);
  return std::min(1.0, std::exp(log_tail));
}

// y = x / (1 - a z) as truncated series.
void divide_geometric(std::vector<Complex>& x, Complex a) {
  for (std::size_t m = 1; m < x.size(); ++m) x[m] += a * x[m - 1];
}

// Rows: Taylor coefficients of e_k through z^max_degree.
CMatrix build_series(const FiniteBlaschkeProduct& b, std::size_t max_degree) {
  const auto& zeros = b.zeros();
  const std::size_t n = zeros.size();
  const std::size_t len = max_degree + 1;
  CMatrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(len));
  std::vector<Complex> running(len, Complex{});
  running[0] = Complex{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const Complex l = zeros[k];
    const double scale = std::sqrt(1.0 - std::norm(l));
    std::vector<Complex> ek = running;
    for (auto& c : ek) c *= scale;
    divide_geometric(ek, std::conj(l));
    for (std::size_t m = 0; m < len; ++m) out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m)) = ek[m];

    // running *= b_l = c (l - z) / (1 - conj(l) z)
    const Complex c = FiniteBlaschkeProduct::factor_constant(l);
    std::vector<Complex> next(len);
    for (std::size_t m = 0; m < len; ++m) {
      next[m] = c * (l * running[m] - (m > 0 ? running[m - 1] : Complex{}));
    }
    divide_geometric(next, std::conj(l));
    running = std::move(next);
  }
  return out;
}

void require_same_space(const ModelSpace& a, const ModelSpace& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kValidation, "model vectors belong to different model spaces");
  }
}

}  // namespace

ModelSpace::ModelSpace(FiniteBlaschkeProduct b)
    : ModelSpace(b, suggested_truncation(b)) {}

ModelSpace::ModelSpace(FiniteBlaschkeProduct b, std::size_t trunc_degree) {
  const std::size_t n = b.degree();
  if (n == 0) {
    throw Error(ErrorCode::kValidation,
                "model space of a constant Blaschke product is trivial");
  }
  if (trunc_degree < 4 * n) {
    std::ostringstream msg;
    msg << "working truncation " << trunc_degree << " is below 4 * dim = " << 4 * n
        << "; suggested truncation degree is " << suggested_truncation(b);
    throw Error(ErrorCode::kConditioning, msg.str());
  }
  auto impl = std::make_shared<Impl>();
  impl->trunc = trunc_degree;
  impl->tail = tail_bound(n, b.max_zero_modulus(), trunc_degree);
  impl->series = build_series(b, trunc_degree);
  impl->fingerprint = b.fingerprint();
  impl->b = std::move(b);
  impl_ = std::move(impl);
}

std::size_t ModelSpace::suggested_truncation(const FiniteBlaschkeProduct& b) {
  const std::size_t n = b.degree();
  const double rho = b.max_zero_modulus();
  std::size_t t = std::max<std::size_t>(4 * n, 8);
  while (tail_bound(n, rho, t) > kTailTarget) {
    t += std::max<std::size_t>(8, t / 8);
    if (t > kMaxTruncation) {
      std::ostringstream msg;
      msg << "zeros too close to the unit circle (max modulus " << rho
          << "): no working truncation up to " << kMaxTruncation << " suffices";
      throw Error(ErrorCode::kConditioning, msg.str());
    }
  }
  return t;
}

Complex ModelSpace::basis_value(std::size_t k, Complex z) const {
  return basis_values(z)(static_cast<Eigen::Index>(k));
}

CVector ModelSpace::basis_values(Complex z) const {
  const auto& zeros = impl_->b.zeros();
  CVector out(static_cast<Eigen::Index>(zeros.size()));
  Complex running{1.0, 0.0};
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const Complex l = zeros[k];
    const Complex den = 1.0 - std::conj(l) * z;
    if (std::abs(den) < kPoleEps) {
      throw Error(ErrorCode::kNumeric, "basis evaluation at a pole");
    }
    out(static_cast<Eigen::Index>(k)) = std::sqrt(1.0 - std::norm(l)) / den * running;
    running *= FiniteBlaschkeProduct::factor_constant(l) * (l - z) / den;
  }
  return out;
}

CMatrix ModelSpace::basis_series(std::size_t max_degree) const {
  if (max_degree <= impl_->trunc) {
    return impl_->series.leftCols(static_cast<Eigen::Index>(max_degree + 1));
  }
  return build_series(impl_->b, max_degree);
}

CMatrix ModelSpace::basis_gram() const {
  // G(i, j) = <e_i, e_j> = sum_m e_i[m] conj(e_j[m])
  const CMatrix& s = impl_->series;
  return s * s.adjoint();
}

ModelVector::ModelVector(ModelSpace space, CVector coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (static_cast<std::size_t>(coeffs_.size()) != space_.dim()) {
    std::ostringstream msg;
    msg << "model vector has " << coeffs_.size() << " coordinates, space has dimension "
        << space_.dim();
    throw Error(ErrorCode::kValidation, msg.str());
  }
}

Complex ModelVector::operator()(Complex z) const {
  return space_.basis_values(z).transpose() * coeffs_;
}

AnalyticPolynomial ModelVector::series(std::size_t max_degree) const {
  const CVector c = space_.basis_series(max_degree).transpose() * coeffs_;
  return AnalyticPolynomial(std::vector<Complex>(c.data(), c.data() + c.size()));
}

Complex inner(const ModelVector& v, const ModelVector& w) {
  require_same_space(v.space(), w.space());
  return w.coeffs().dot(v.coeffs());
}

ModelSpace tm_basis(const FiniteBlaschkeProduct& b, std::size_t trunc_degree) {
  return ModelSpace(b, trunc_degree);
}

Complex model_kernel(const FiniteBlaschkeProduct& b, Complex lambda, Complex z) {
  const Complex den = 1.0 - std::conj(lambda) * z;
  if (std::abs(den) < kPoleEps) {
    throw Error(ErrorCode::kNumeric, "model kernel evaluated at its singularity");
  }
  return (1.0 - std::conj(b(lambda)) * b(z)) / den;
}

ModelVector kernel_vector(const ModelSpace& m, const DiskPoint& lambda) {
  return ModelVector(m, m.basis_values(lambda.value()).conjugate());
}

double kernel_norm_sq(const ModelSpace& m, const DiskPoint& lambda) {
  const Complex l = lambda.value();
  return (1.0 - std::norm(m.blaschke()(l))) / (1.0 - std::norm(l));
}

ModelVector project(const AnalyticPolynomial& f, const ModelSpace& m) {
  const std::size_t deg = f.size() - 1;
  const CMatrix s = m.basis_series(std::max(deg, m.truncation()));
  CVector a = CVector::Zero(s.cols());
  for (std::size_t j = 0; j < f.size(); ++j) a(static_cast<Eigen::Index>(j)) = f[j];
  // coeffs[k] = sum_j a_j conj(e_k[j])
  return ModelVector(m, s.conjugate() * a);
}

CMatrix monomial_compression(const ModelSpace& m, int l) {
  const CMatrix& s = m.basis_series();
  const Eigen::Index len = s.cols();
  const Eigen::Index shift = std::abs(l);
  const Eigen::Index n = static_cast<Eigen::Index>(m.dim());
  if (shift >= len) return CMatrix::Zero(n, n);
  const Eigen::Index overlap = len - shift;
  // C(i, j) = sum_m e_j[m] conj(e_i[m + l]) over indices inside the cache.
  if (l >= 0) {
    return s.rightCols(overlap).conjugate() * s.leftCols(overlap).transpose();
  }
  return s.leftCols(overlap).conjugate() * s.rightCols(overlap).transpose();
}

CMatrix compressed_shift(const ModelSpace& m) { return monomial_compression(m, 1); }

CMatrix shift_orbit(const ModelSpace& m, std::size_t n) {
  const std::size_t trunc = m.truncation();
  // S* B = (B - B(0)) / z, truncated at the working degree.
  const std::vector<Complex> t = m.blaschke().taylor(trunc + 1);
  const AnalyticPolynomial backward(std::vector<Complex>(t.begin() + 1, t.end()));
  const CVector first = project(backward, m).coeffs();
  const CMatrix adj = compressed_shift(m).adjoint();
  CMatrix out(static_cast<Eigen::Index>(m.dim()), static_cast<Eigen::Index>(n));
  CVector v = first;
  for (std::size_t k = 0; k < n; ++k) {
    out.col(static_cast<Eigen::Index>(k)) = v;
    v = adj * v;
  }
  return out;
}

OrbitReport shift_orbit_parseval(const ModelSpace& m, const ModelVector& g,
                                 std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kValidation, "orbit length must be at least 1");
  require_same_space(m, g.space());

  const CMatrix orbit = shift_orbit(m, n + 1);
  const CMatrix head = orbit.leftCols(static_cast<Eigen::Index>(n));
  OrbitReport r;
  r.norm_sq = g.norm_sq();
  r.partial = (head.adjoint() * g.coeffs()).squaredNorm();
  r.defect = std::abs(r.norm_sq - r.partial);

  // sum_{k>N} ||S*^k B||^2 = sum_{j>=0} ||A^j v||^2 with A = M*, v = S*^{N+1} B.
  // With q = ||A^p|| < 1: sum <= sum_{r<p} ||A^r v||^2 / (1 - q^2).
  const CMatrix adj = compressed_shift(m).adjoint();
  const CVector v = orbit.col(static_cast<Eigen::Index>(n));
  constexpr std::size_t kMaxPower = 4096;
  CMatrix power = CMatrix::Identity(adj.rows(), adj.cols());
  CVector w = v;
  double head_sum = 0.0;
  double q = 1.0;
  for (std::size_t p = 1; p <= kMaxPower; ++p) {
    head_sum += w.squaredNorm();
    w = adj * w;
    power = adj * power;
    q = linalg::spectral_norm(power);
    if (q <= 0.5 || (p == kMaxPower && q < 1.0)) break;
  }
  const double tail_sum = q < 1.0 ? head_sum / (1.0 - q * q)
                                  : std::numeric_limits<double>::infinity();
  r.tail_bound = r.norm_sq * tail_sum;
  r.inconclusive = r.tail_bound > r.norm_sq;
  r.consistent = r.defect <= r.tail_bound + 1e-9;
  return r;
}

namespace {

// Newton on the circle for arg(B(e^{it}) conj(zeta)) = 0; the argument of a
// finite Blaschke product increases with speed |B'(e^{it})|.
Complex polish_on_circle(const FiniteBlaschkeProduct& b, Complex zeta, Complex xi) {
  double t = std::arg(xi);
  for (int it = 0; it < 60; ++it) {
    const Complex x = std::polar(1.0, t);
    const double phase = std::arg(b(x) * std::conj(zeta));
    double speed = 0.0;
    for (const Complex& l : b.zeros()) speed += (1.0 - std::norm(l)) / std::norm(x - l);
    const double step = phase / speed;
    t -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return std::polar(1.0, t);
}

std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs) {
  // Companion matrix of the monic normalization.
  const std::size_t n = coeffs.size() - 1;
  const Complex lead = coeffs.back();
  CMatrix companion = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -coeffs[i] / lead;
  }
  Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
  const CVector ev = solver.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

Complex horner(const std::vector<Complex>& c, Complex z, Complex* deriv) {
  Complex v{}, d{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  if (deriv) *deriv = d;
  return v;
}

}  // namespace

ClarkBasis clark_basis(const ModelSpace& m, Complex zeta) {
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12) {
    throw Error(ErrorCode::kDomain, "Clark parameter zeta must lie on the unit circle");
  }
  const FiniteBlaschkeProduct& b = m.blaschke();
  const std::vector<Complex> p = b.numerator();
  const std::vector<Complex> q = b.denominator();
  std::vector<Complex> r(p.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p[i] - zeta * (i < q.size() ? q[i] : Complex{});

  std::vector<Complex> roots = polynomial_roots(r);
  for (Complex& xi : roots) {
    // Newton on the polynomial first, then refine on the circle.
    for (int it = 0; it < 20; ++it) {
      Complex d;
      const Complex v = horner(r, xi, &d);
      if (d == Complex{}) break;
      const Complex step = v / d;
      xi -= step;
      if (std::abs(step) < 1e-15) break;
    }
    if (std::abs(std::abs(xi) - 1.0) > 1e-8) {
      std::ostringstream msg;
      msg << "Clark root finding failed: root at modulus " << std::abs(xi);
      throw Error(ErrorCode::kRootFinding, msg.str());
    }
    xi = polish_on_circle(b, zeta, xi / std::abs(xi));
    if (std::abs(b(xi) - zeta) > 1e-10) {
      throw Error(ErrorCode::kRootFinding, "Clark root polish did not converge");
    }
  }
  auto angle = [](Complex z) {
    const double a = std::arg(z);
    return a < 0.0 ? a + 2.0 * kPi : a;
  };
  std::sort(roots.begin(), roots.end(),
            [&](Complex a, Complex c) { return angle(a) < angle(c); });

  ClarkBasis out;
  out.zeta = zeta;
  out.roots = roots;
  out.origin_is_zero = std::abs(b(Complex{})) < 1e-12;
  for (const Complex& xi : roots) {
    const auto ev = blaschke::eval_product(b, xi, true);
    const double dmod = std::abs(*ev.derivative);
    if (dmod < 1e-10) {
      throw Error(ErrorCode::kDegenerateRoot, "multiple boundary root in Clark basis");
    }
    out.derivative_moduli.push_back(dmod);
    const Complex phase =
        std::polar(1.0 / std::sqrt(dmod), 0.5 * (std::arg(zeta) - std::arg(xi)));
    // <k_xi, e_k> = conj(e_k(xi)) for the boundary kernel k_xi.
    out.vectors.emplace_back(m, phase * m.basis_values(xi).conjugate());
  }
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i] - roots[i - 1]) < 1e-10) {
      throw Error(ErrorCode::kDegenerateRoot, "coincident Clark roots");
    }
  }
  return out;
}

}  // namespace kernelframe::modelspace
