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

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kernelframe/blaschke.hpp"
#include "kernelframe/frames.hpp"
#include "kernelframe/modelspace.hpp"
#include "kernelframe/types.hpp"

namespace kernelframe::rkhs {

// Scalar domains use length-1 points.
using Point = CVector;

inline Point scalar_point(Complex z) {
  Point p(1);
  p(0) = z;
  return p;
}

struct Domain {
  enum class Kind { kDisk, kInterval, kRealLine, kComplexVector };

  Kind kind = Kind::kDisk;
  double lo = 0.0;  // kInterval only
  double hi = 1.0;
  std::size_t dim = 1;

  static Domain disk() { return {Kind::kDisk, 0.0, 0.0, 1}; }
  static Domain interval(double lo, double hi) { return {Kind::kInterval, lo, hi, 1}; }
  static Domain real_line() { return {Kind::kRealLine, 0.0, 0.0, 1}; }
  static Domain vectors(std::size_t d) { return {Kind::kComplexVector, 0.0, 0.0, d}; }

  bool contains(const Point& p) const;
  std::string describe() const;
};

/// Named Hermitian kernel with a domain tag. Evaluation outside the domain
/// throws Error(kDomain).
class KernelEvaluator {
 public:
  using Fn = std::function<Complex(const Point&, const Point&)>;

  KernelEvaluator(std::string kind, nlohmann::json params, Domain domain, Fn fn,
                  bool serializable = true);

  Complex operator()(const Point& y, const Point& z) const;
  Complex operator()(Complex y, Complex z) const {
    return (*this)(scalar_point(y), scalar_point(z));
  }

  const std::string& kind() const { return kind_; }
  const nlohmann::json& params() const { return params_; }
  const Domain& domain() const { return domain_; }
  bool serializable() const { return serializable_; }

 private:
  std::string kind_;
  nlohmann::json params_;
  Domain domain_;
  Fn fn_;
  bool serializable_;
};

// 1 / (1 - conj(y) z) on the disk.
KernelEvaluator szego();

// (1 - conj(B(y)) B(z)) / (1 - conj(y) z) on the disk.
KernelEvaluator model(const blaschke::FiniteBlaschkeProduct& b);

// sum_{n=1..terms} 2 / (n^2 pi^2) sin(n pi y) sin(n pi z) on [0, 1].
// Throws Error(kDomain) for terms = 0.
KernelEvaluator brownian_bridge(std::size_t terms);

// sin(R (t1 - t2)) / (R (t1 - t2)) on the real line, 1 on the diagonal.
// Throws Error(kDomain) unless bandwidth > 0.
KernelEvaluator sinc(double bandwidth);

// <x, y> on C^d.
KernelEvaluator gram(std::size_t dim);

/// Affine point map x -> A x + b from `source` into the inner kernel's
/// domain, or an arbitrary callable (not serializable).
struct PointMap {
  Domain source;
  CMatrix linear;
  CVector offset;
  std::function<Point(const Point&)> custom;

  static PointMap affine(Domain source, CMatrix linear, CVector offset);
  static PointMap scalar_affine(Domain source, Complex scale, Complex shift);
  static PointMap callable(Domain source, std::function<Point(const Point&)> fn);

  Point operator()(const Point& x) const;
};

// (x1, x2) -> K(map(x1), map(x2)).
KernelEvaluator pullback_kernel(const KernelEvaluator& inner, const PointMap& map);

/// Kernel of H = span{k_{l_n}} inside K_B built from the kernel frame and
/// its canonical dual within H (dual via the pseudoinverse of the
/// span-restricted frame operator):
///   K(y, z) = sum_n conj(dual_n(y)) k_{l_n}(z).
class SpanKernel {
 public:
  // Kernel vectors at `points` form the frame.
  SpanKernel(modelspace::ModelSpace m, const std::vector<hardy::DiskPoint>& points);

  // Arbitrary family of K_B coordinate columns.
  SpanKernel(modelspace::ModelSpace m, CMatrix family);

  const modelspace::ModelSpace& space() const { return space_; }
  const CMatrix& family() const { return family_; }  // dim x N
  const CMatrix& dual() const { return dual_; }      // dim x N
  const std::vector<Complex>& points() const { return points_; }

  Complex operator()(Complex y, Complex z) const;

  // Element h_z of H with <f, h_z> = f(z) for f in H.
  modelspace::ModelVector element_at(Complex z) const;

  // Orthogonal projector onto H in K_B coordinates.
  CMatrix projector() const { return family_ * dual_.adjoint(); }

  KernelEvaluator evaluator() const;

 private:
  modelspace::ModelSpace space_;
  CMatrix family_;
  CMatrix dual_;
  std::vector<Complex> points_;
};

SpanKernel span_kernel(const modelspace::ModelSpace& m,
                       const std::vector<hardy::DiskPoint>& points);

// Builds a named kernel from {kind, params} and evaluates it once.
Complex named_kernel_eval(const std::string& kind, const nlohmann::json& params,
                          Complex y, Complex z);

// Entry (i, j) = K(x_i, x_j).
CMatrix sample_matrix(const KernelEvaluator& k, const std::vector<Point>& sample);

struct PsdReport {
  bool psd = false;
  double min_eig = 0.0;
  double max_eig = 0.0;
  double max_asymmetry = 0.0;
};

// psd <=> min eigenvalue of the symmetrized sample matrix > -1e-9 * max(1, max eig).
// Throws Error(kValidation) for an empty sample.
PsdReport psd_check(const KernelEvaluator& k, const std::vector<Point>& sample);

struct RepresenterSolution {
  CVector weights;   // pinv(Q) y
  CVector w;         // sum_i conj(weights_i) x_i, so that <x_i, w> = (Q weights)_i
  double residual = 0.0;  // ||Q weights - P y||, P the projector onto range(Q)
};

// Points are the columns of `points`; Q(i, j) = <x_i, x_j>.
// Throws Error(kValidation) when targets.size() != points.cols().
RepresenterSolution representer_solve(const CMatrix& points, const CVector& targets);

}  // namespace kernelframe::rkhs
