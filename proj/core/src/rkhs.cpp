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

#include "kernelframe/rkhs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kernelframe/error.hpp"
#include "kernelframe/json_io.hpp"
#include "kernelframe/linalg.hpp"

namespace kernelframe::rkhs {
namespace {

bool is_real(Complex z) { return z.imag() == 0.0; }

std::string describe_point(const Point& p) {
  std::ostringstream out;
  out << "[";
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i) out << ", ";
    out << "(" << p(i).real() << ", " << p(i).imag() << ")";
  }
  out << "]";
  return out.str();
}

}  // namespace

bool Domain::contains(const Point& p) const {
  switch (kind) {
    case Kind::kDisk:
      return p.size() == 1 && hardy::DiskPoint::is_interior(p(0));
    case Kind::kInterval:
      return p.size() == 1 && is_real(p(0)) && p(0).real() >= lo && p(0).real() <= hi;
    case Kind::kRealLine:
      return p.size() == 1 && is_real(p(0)) && std::isfinite(p(0).real());
    case Kind::kComplexVector:
      return static_cast<std::size_t>(p.size()) == dim;
  }
  return false;
}

std::string Domain::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kDisk: out << "open unit disk"; break;
    case Kind::kInterval: out << "real interval [" << lo << ", " << hi << "]"; break;
    case Kind::kRealLine: out << "real line"; break;
    case Kind::kComplexVector: out << "C^" << dim; break;
  }
  return out.str();
}

KernelEvaluator::KernelEvaluator(std::string kind, nlohmann::json params, Domain domain,
                                 Fn fn, bool serializable)
    : kind_(std::move(kind)),
      params_(std::move(params)),
      domain_(domain),
      fn_(std::move(fn)),
      serializable_(serializable) {}

Complex KernelEvaluator::operator()(const Point& y, const Point& z) const {
  for (const Point* p : {&y, &z}) {
    if (!domain_.contains(*p)) {
      throw Error(ErrorCode::kDomain, "kernel '" + kind_ + "': point " + describe_point(*p) +
                                          " outside " + domain_.describe());
    }
  }
  return fn_(y, z);
}

KernelEvaluator szego() {
  return KernelEvaluator("szego", nlohmann::json::object(), Domain::disk(),
                         [](const Point& y, const Point& z) {
                           return 1.0 / (1.0 - std::conj(y(0)) * z(0));
                         });
}

KernelEvaluator model(const blaschke::FiniteBlaschkeProduct& b) {
  return KernelEvaluator("model", {{"blaschke", io::to_json(b)}}, Domain::disk(),
                         [b](const Point& y, const Point& z) {
                           return modelspace::model_kernel(b, y(0), z(0));
                         });
}

KernelEvaluator brownian_bridge(std::size_t terms) {
  if (terms == 0) throw Error(ErrorCode::kDomain, "Brownian-bridge series needs at least one term");
  return KernelEvaluator(
      "brownian_bridge", {{"terms", terms}}, Domain::interval(0.0, 1.0),
      [terms](const Point& y, const Point& z) {
        const double a = y(0).real();
        const double b = z(0).real();
        double sum = 0.0;
        // Summed from the smallest terms up.
        for (std::size_t n = terms; n >= 1; --n) {
          const double nn = static_cast<double>(n);
          sum += 2.0 / (nn * nn * kPi * kPi) * std::sin(nn * kPi * a) * std::sin(nn * kPi * b);
        }
        return Complex{sum, 0.0};
      });
}

KernelEvaluator sinc(double bandwidth) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw Error(ErrorCode::kDomain, "sinc bandwidth must be positive");
  }
  return KernelEvaluator("sinc", {{"bandwidth", bandwidth}}, Domain::real_line(),
                         [bandwidth](const Point& y, const Point& z) {
                           const double t = bandwidth * (y(0).real() - z(0).real());
                           if (std::abs(t) < 1e-8) return Complex{1.0 - t * t / 6.0, 0.0};
                           return Complex{std::sin(t) / t, 0.0};
                         });
}

KernelEvaluator gram(std::size_t dim) {
  return KernelEvaluator("gram", {{"dim", dim}}, Domain::vectors(dim),
                         [](const Point& y, const Point& z) { return y.dot(z); });
}

PointMap PointMap::affine(Domain source, CMatrix linear, CVector offset) {
  if (linear.rows() != offset.size()) {
    throw Error(ErrorCode::kValidation, "affine map: offset length must match output dimension");
  }
  PointMap m;
  m.source = source;
  m.linear = std::move(linear);
  m.offset = std::move(offset);
  return m;
}

PointMap PointMap::scalar_affine(Domain source, Complex scale, Complex shift) {
  CMatrix a(1, 1);
  a(0, 0) = scale;
  CVector b(1);
  b(0) = shift;
  return affine(source, std::move(a), std::move(b));
}

PointMap PointMap::callable(Domain source, std::function<Point(const Point&)> fn) {
  PointMap m;
  m.source = source;
  m.custom = std::move(fn);
  return m;
}

Point PointMap::operator()(const Point& x) const {
  if (custom) return custom(x);
  if (linear.cols() != x.size()) {
    throw Error(ErrorCode::kDomain, "affine map: input dimension mismatch");
  }
  return linear * x + offset;
}

KernelEvaluator pullback_kernel(const KernelEvaluator& inner, const PointMap& map) {
  const bool serializable = inner.serializable() && !map.custom;
  nlohmann::json params = {{"inner", {{"kind", inner.kind()}, {"params", inner.params()}}}};
  if (!map.custom) {
    params["map"] = {{"source", io::to_json(map.source)},
                     {"linear", io::to_json(map.linear)},
                     {"offset", io::to_json(map.offset)}};
  }
  return KernelEvaluator("pullback", std::move(params), map.source,
                         [inner, map](const Point& y, const Point& z) {
                           return inner(map(y), map(z));
                         },
                         serializable);
}

SpanKernel::SpanKernel(modelspace::ModelSpace m, const std::vector<hardy::DiskPoint>& points)
    : space_(std::move(m)) {
  if (points.empty()) throw Error(ErrorCode::kValidation, "span kernel needs at least one point");
  family_.resize(static_cast<Eigen::Index>(space_.dim()), static_cast<Eigen::Index>(points.size()));
  for (std::size_t n = 0; n < points.size(); ++n) {
    family_.col(static_cast<Eigen::Index>(n)) = space_.basis_values(points[n].value()).conjugate();
    points_.push_back(points[n].value());
  }
  dual_ = frames::pinv(family_ * family_.adjoint()) * family_;
}

SpanKernel::SpanKernel(modelspace::ModelSpace m, CMatrix family)
    : space_(std::move(m)), family_(std::move(family)) {
  if (static_cast<std::size_t>(family_.rows()) != space_.dim() || family_.cols() == 0) {
    throw Error(ErrorCode::kValidation, "span kernel family must be dim x N with N >= 1");
  }
  dual_ = frames::pinv(family_ * family_.adjoint()) * family_;
}

Complex SpanKernel::operator()(Complex y, Complex z) const {
  const CVector dual_at_y = dual_.transpose() * space_.basis_values(y);
  const CVector frame_at_z = family_.transpose() * space_.basis_values(z);
  return dual_at_y.dot(frame_at_z);
}

modelspace::ModelVector SpanKernel::element_at(Complex z) const {
  const CVector frame_at_z = family_.transpose() * space_.basis_values(z);
  return modelspace::ModelVector(space_, dual_ * frame_at_z.conjugate());
}

KernelEvaluator SpanKernel::evaluator() const {
  nlohmann::json params = {{"blaschke", io::to_json(space_.blaschke())}};
  nlohmann::json pts = nlohmann::json::array();
  for (const Complex& p : points_) pts.push_back(io::to_json(p));
  params["points"] = pts;
  const SpanKernel self = *this;
  return KernelEvaluator("span", std::move(params), Domain::disk(),
                         [self](const Point& y, const Point& z) { return self(y(0), z(0)); },
                         !points_.empty());
}

SpanKernel span_kernel(const modelspace::ModelSpace& m,
                       const std::vector<hardy::DiskPoint>& points) {
  return SpanKernel(m, points);
}

Complex named_kernel_eval(const std::string& kind, const nlohmann::json& params, Complex y,
                          Complex z) {
  const KernelEvaluator k = io::kernel_from_json({{"kind", kind}, {"params", params}});
  return k(y, z);
}

CMatrix sample_matrix(const KernelEvaluator& k, const std::vector<Point>& sample) {
  const auto n = static_cast<Eigen::Index>(sample.size());
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = k(sample[static_cast<std::size_t>(i)], sample[static_cast<std::size_t>(j)]);
  return out;
}

PsdReport psd_check(const KernelEvaluator& k, const std::vector<Point>& sample) {
  if (sample.empty()) throw Error(ErrorCode::kValidation, "PSD check needs a nonempty sample");
  const CMatrix m = sample_matrix(k, sample);
  PsdReport r;
  r.max_asymmetry = linalg::hermitian_defect(m);
  const RVector ev = linalg::hermitian_eigenvalues(m);
  r.min_eig = ev(0);
  r.max_eig = ev(ev.size() - 1);
  r.psd = r.min_eig > -1e-9 * std::max(1.0, r.max_eig);
  return r;
}

RepresenterSolution representer_solve(const CMatrix& points, const CVector& targets) {
  if (targets.size() != points.cols()) {
    throw Error(ErrorCode::kValidation, "representer: one target per point required");
  }
  const CMatrix q = (points.adjoint() * points).transpose();
  const CMatrix q_pinv = frames::pinv(q);
  RepresenterSolution s;
  s.weights = q_pinv * targets;
  s.w = points * s.weights.conjugate();
  s.residual = (q * s.weights - q * q_pinv * targets).norm();
  return s;
}

}  // namespace kernelframe::rkhs
