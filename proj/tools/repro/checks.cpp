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

#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "kernelframe/kernelframe.hpp"

namespace kernelframe::repro {
namespace {

using blaschke::FiniteBlaschkeProduct;
using hardy::DiskPoint;
using modelspace::ModelSpace;
using modelspace::ModelVector;
using nlohmann::json;
using toeplitz::SymbolCoefficients;

constexpr double kEps = std::numeric_limits<double>::epsilon();

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  double normal() { return std::normal_distribution<double>()(gen_); }
  std::size_t integer(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
  }

  // Uniform in the disk of the given radius.
  Complex disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * kPi));
  }

  Complex unimodular() { return std::polar(1.0, uniform(0.0, 2.0 * kPi)); }

  CVector vector(Eigen::Index n) {
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex{normal(), normal()};
    return v;
  }

  CMatrix matrix(Eigen::Index r, Eigen::Index c) {
    CMatrix m(r, c);
    for (Eigen::Index j = 0; j < c; ++j) m.col(j) = vector(r);
    return m;
  }

  // Zeros with pairwise pseudohyperbolic distance at least `sep`.
  std::vector<Complex> separated_zeros(std::size_t n, double radius, double sep) {
    std::vector<Complex> z;
    while (z.size() < n) {
      const Complex c = disk(radius);
      bool ok = true;
      for (const Complex& w : z) {
        ok = ok && std::abs((c - w) / (1.0 - std::conj(w) * c)) >= sep;
      }
      if (ok) z.push_back(c);
    }
    return z;
  }

 private:
  std::mt19937_64 gen_;
};

class Builder {
 public:
  Builder(CheckResult& r) : r_(r) {}

  // computed <= tol
  void at_most(const std::string& q, double computed, double tol, json expected = "<= tol") {
    r_.rows.push_back({q, std::move(expected), computed, tol, computed <= tol});
  }
  // |computed - expected| <= tol
  void near(const std::string& q, double expected, double computed, double tol) {
    r_.rows.push_back({q, expected, computed, tol, std::abs(computed - expected) <= tol});
  }
  void flag(const std::string& q, bool expected, bool computed) {
    r_.rows.push_back({q, expected, computed, 0.0, expected == computed});
  }
  void count(const std::string& q, std::size_t expected, std::size_t computed) {
    r_.rows.push_back({q, expected, computed, 0.0, expected == computed});
  }

 private:
  CheckResult& r_;
};

std::vector<double> unimodular_mesh(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
  return t;
}

void mercedes(CheckResult& r, Rng&) {
  Builder b(r);
  const double s = std::sqrt(3.0) / 2.0;
  CMatrix f(2, 3);
  f << 0.0, -s, s, 1.0, -0.5, -0.5;
  const frames::VectorFamily fam(f);
  const auto t = frames::frame_transforms(fam);
  const auto bounds = frames::frame_bounds(fam);
  const auto dual = frames::canonical_dual(fam);
  const CMatrix k = frames::kernel_matrix(fam);
  const CMatrix kd = frames::kernel_matrix(dual);

  CMatrix dual_expected(2, 3);
  dual_expected << 0.0, -1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0;
  CMatrix k_expected(3, 3);
  k_expected << 2.0 / 3, -1.0 / 3, -1.0 / 3, -1.0 / 3, 2.0 / 3, -1.0 / 3, -1.0 / 3, -1.0 / 3, 2.0 / 3;

  b.at_most("max |S - diag(3/2, 3/2)|", max_abs(t.frame_op - 1.5 * CMatrix::Identity(2, 2)), 1e-12);
  b.near("lower frame bound A", 1.5, bounds.lower, 1e-12);
  b.near("upper frame bound B", 1.5, bounds.upper, 1e-12);
  b.at_most("max |dual - {(0,2/3), (-1/sqrt3,-1/3), (1/sqrt3,-1/3)}|", max_abs(dual.synthesis() - dual_expected), 1e-12);
  b.at_most("max |K - [[2/3,-1/3,-1/3],...]|", max_abs(k - k_expected), 1e-12);
  b.at_most("max |K - K'| (K' from the dual)", max_abs(k - kd), 1e-12);
  r.details = {{"K", io::to_json(k)}, {"K_dual", io::to_json(kd)}, {"dual", io::to_json(dual)}};
}

void szego_coefficients(CheckResult& r, Rng& rng) {
  Builder b(r);
  double coeff_dev = 0.0, norm_dev = 0.0, sup_ratio = 0.0;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const ModelSpace m(FiniteBlaschkeProduct::monomial(n));
    for (int t = 0; t < 20; ++t, ++cases) {
      const Complex lam = rng.disk(0.95);
      const ModelVector k = modelspace::kernel_vector(m, DiskPoint(lam));
      Complex p{1.0};
      for (std::size_t j = 0; j < n; ++j) {
        coeff_dev = std::max(coeff_dev, std::abs(k.coeffs()(static_cast<Eigen::Index>(j)) - p));
        p *= std::conj(lam);
      }
      const double a = std::norm(lam);
      const double closed = (1.0 - std::pow(a, static_cast<double>(n))) / (1.0 - a);
      norm_dev = std::max(norm_dev, std::abs(modelspace::kernel_norm_sq(m, DiskPoint(lam)) - closed));
      const double cap = 2.0 / (1.0 - std::abs(lam));
      for (double th : unimodular_mesh(256)) {
        sup_ratio = std::max(sup_ratio, std::abs(k(std::polar(1.0, th))) / cap);
      }
    }
  }
  b.at_most("max |coeff_j - conj(lambda)^j| over n <= 10, 20 lambda each", coeff_dev, 0.0, "exact");
  b.at_most("max | ||k||^2 - (1-|l|^2n)/(1-|l|^2) |", norm_dev, 1e-12);
  b.at_most("max sampled |k(z)| / (2/(1-|l|))", sup_ratio, 1.0);

  const ModelSpace m4(FiniteBlaschkeProduct::monomial(4));
  const CVector k4 = modelspace::kernel_vector(m4, DiskPoint(0.3)).coeffs();
  const CVector expected{{1.0, 0.3, 0.09, 0.027}};
  b.at_most("theta = z^4, lambda = 0.3: max |coeffs - (1, 0.3, 0.09, 0.027)|", (k4 - expected).cwiseAbs().maxCoeff(), 1e-15);
  r.details = {{"cases", cases}, {"z4_kernel_0.3", io::to_json(k4)}};
}

void parseval_orbit(CheckResult& r, Rng& rng) {
  Builder b(r);
  const ModelSpace z3(FiniteBlaschkeProduct::monomial(3));
  const ModelVector g3(z3, CVector{{1.0, 2.0, 3.0}});
  const auto exact = modelspace::shift_orbit_parseval(z3, g3, 3);
  b.near("B = z^3, g = (1,2,3): partial sum at N = 3", 14.0, exact.partial, 0.0);
  b.at_most("B = z^3: Parseval defect at N = 3", exact.defect, 0.0, 0.0);

  // Rounding in the partial sum is O(eps ||g||^2), so it is allowed on top of the tail bound.
  double worst_excess = -std::numeric_limits<double>::infinity(), worst_tail = 0.0, worst_defect = 0.0;
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = rng.integer(1, 4);
    std::vector<Complex> zeros;
    for (std::size_t j = 0; j < n; ++j) zeros.push_back(rng.disk(0.7));
    const ModelSpace m{FiniteBlaschkeProduct(zeros)};
    for (int s = 0; s < 20; ++s) {
      const ModelVector g(m, rng.vector(static_cast<Eigen::Index>(n)));
      const auto rep = modelspace::shift_orbit_parseval(m, g, 80);
      const double slack = 64.0 * kEps * rep.norm_sq;
      worst_excess = std::max(worst_excess, (rep.defect - rep.tail_bound - slack) / rep.norm_sq);
      worst_tail = std::max(worst_tail, rep.tail_bound);
      worst_defect = std::max(worst_defect, rep.defect);
    }
  }
  b.at_most("max (defect - tail_bound - 64 eps ||g||^2) / ||g||^2, N = 80", worst_excess, 0.0);
  b.at_most("max tail_bound, N = 80", worst_tail, 1e-8);
  r.details = {{"max_defect", worst_defect}};
}

void zeros_frame(CheckResult& r, Rng& rng) {
  Builder b(r);
  double min_lower = std::numeric_limits<double>::infinity();
  double worst_upper_excess = -std::numeric_limits<double>::infinity();
  json cases = json::array();
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = rng.integer(1, 6);
    const auto zeros = rng.separated_zeros(n, 0.9, 0.05);
    const ModelSpace m{FiniteBlaschkeProduct(zeros)};
    std::vector<CVector> vecs;
    double bessel = 0.0;
    for (const Complex& l : zeros) {
      vecs.push_back(modelspace::kernel_vector(m, DiskPoint(l)).coeffs());
      bessel += 1.0 / (1.0 - std::norm(l));
    }
    const auto rep = frames::frame_bounds(frames::VectorFamily(n, vecs));
    min_lower = std::min(min_lower, rep.lower);
    worst_upper_excess = std::max(worst_upper_excess, rep.upper - bessel);
    cases.push_back({{"degree", n}, {"lower", rep.lower}, {"upper", rep.upper}, {"sum_inverse_gap", bessel}});
  }
  r.rows.push_back({"min lower frame bound of {k(l_j)} at the zeros", "> 0", min_lower, 0.0, min_lower > 0.0});
  b.at_most("max (upper bound - sum 1/(1-|l_j|^2))", worst_upper_excess, 1e-9);
  r.details = {{"cases", cases}};
}

void clark_bases(CheckResult& r, Rng& rng) {
  Builder b(r);
  const ModelSpace z2(FiniteBlaschkeProduct::monomial(2));
  const auto c = modelspace::clark_basis(z2, 1.0);
  const double h = 1.0 / std::sqrt(2.0);
  const CVector expected[2] = {CVector{{h, h}}, CVector{{h, -h}}};
  double dev = 0.0;
  for (const CVector& e : expected) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : c.vectors) {
      const Complex inner_product = e.dot(v.coeffs());
      const Complex phase = std::abs(inner_product) > 0 ? inner_product / std::abs(inner_product) : 1.0;
      best = std::min(best, (v.coeffs() - phase * e).cwiseAbs().maxCoeff());
    }
    dev = std::max(dev, best);
  }
  b.at_most("B = z^2, zeta = 1: coefficient deviation from (1 +- z)/sqrt2 up to phase", dev, 1e-10);

  double gram_dev = 0.0, parseval_dev = 0.0;
  json cases = json::array();
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = rng.integer(1, 5);
    std::vector<Complex> zeros;
    for (std::size_t j = 0; j < n; ++j) zeros.push_back(rng.disk(0.9));
    const ModelSpace m{FiniteBlaschkeProduct(zeros)};
    const Complex zeta = rng.unimodular();
    const auto cb = modelspace::clark_basis(m, zeta);
    // Gram from the Taylor series of each vector.
    const std::size_t deg = m.truncation();
    std::vector<std::vector<Complex>> series;
    for (const auto& v : cb.vectors) series.push_back(v.series(deg).coeffs());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Complex s{};
        for (std::size_t k = 0; k <= deg; ++k) s += series[i][k] * std::conj(series[j][k]);
        gram_dev = std::max(gram_dev, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    for (int s = 0; s < 5; ++s) {
      const ModelVector f(m, rng.vector(static_cast<Eigen::Index>(n)));
      double total = 0.0;
      for (const auto& v : cb.vectors) total += std::norm(modelspace::inner(f, v));
      parseval_dev = std::max(parseval_dev, std::abs(total - f.norm_sq()) / f.norm_sq());
    }
    cases.push_back({{"degree", n}, {"zeta", io::to_json(zeta)}, {"origin_is_zero", cb.origin_is_zero}});
  }
  b.at_most("max |Gram - I| over 10 random (B, zeta)", gram_dev, 1e-8);
  b.at_most("max relative Parseval defect", parseval_dev, 1e-8);
  r.details = {{"z2_roots", io::to_json(CVector(CVector::Map(c.roots.data(), 2)))}, {"cases", cases}};
}

void hilbert(CheckResult& r, Rng&) {
  Builder b(r);
  json rows = json::array();
  double prev = 0.0;
  bool increasing = true, below = true;
  double last = 0.0;
  for (std::size_t n : {1, 2, 5, 10, 50, 200}) {
    const auto h = toeplitz::hilbert_gramian(n);
    increasing = increasing && h.max_eig > prev;
    below = below && h.below_pi;
    prev = last = h.max_eig;
    rows.push_back({{"n", n}, {"max_eig", h.max_eig}, {"pi_minus_max_eig", kPi - h.max_eig}});
  }
  b.flag("max_eig(N) < pi for N in {1,2,5,10,50,200}", true, below);
  b.flag("max_eig(N) strictly increasing", true, increasing);
  b.at_most("pi - max_eig(200)", kPi - last, 0.05);
  const double min30 = toeplitz::hilbert_gramian(30).min_eig;
  b.at_most("min_eig(30)", min30, 1e-8);
  r.details = {{"rows", rows}, {"min_eig_30", min30}};
}

void brownian(CheckResult& r, Rng& rng) {
  Builder b(r);
  const auto k = rkhs::brownian_bridge(10000);
  double dev = 0.0;
  std::vector<rkhs::Point> grid;
  for (int i = 0; i <= 10; ++i) {
    grid.push_back(rkhs::scalar_point(i / 10.0));
    for (int j = 0; j <= 10; ++j) {
      const double y = i / 10.0, z = j / 10.0;
      dev = std::max(dev, std::abs(k(Complex(y), Complex(z)) - Complex(std::min(y, z) - y * z)));
    }
  }
  b.at_most("max |K_N(y,z) - (min(y,z) - yz)| on 11x11 grid, N = 1e4", dev, 1e-4);
  const auto grid_report = rkhs::psd_check(k, grid);
  b.flag("kernel matrix on the grid is PSD", true, grid_report.psd);
  bool all_psd = true;
  double min_eig = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 5; ++t) {
    std::vector<rkhs::Point> pts;
    for (int i = 0; i < 12; ++i) pts.push_back(rkhs::scalar_point(rng.uniform(0.0, 1.0)));
    const auto rep = rkhs::psd_check(k, pts);
    all_psd = all_psd && rep.psd;
    min_eig = std::min(min_eig, rep.min_eig);
  }
  b.flag("kernel matrices at 5 random samples are PSD", true, all_psd);
  r.details = {{"grid_min_eig", grid_report.min_eig}, {"sample_min_eig", min_eig}};
}

void pinv_douglas(CheckResult& r, Rng& rng) {
  Builder b(r);
  double penrose[4] = {0, 0, 0, 0};
  for (int t = 0; t < 100; ++t) {
    const auto rows = static_cast<Eigen::Index>(rng.integer(1, 8));
    const auto cols = static_cast<Eigen::Index>(rng.integer(1, 8));
    const auto rank = static_cast<Eigen::Index>(rng.integer(1, static_cast<std::size_t>(std::min(rows, cols))));
    const CMatrix a = rng.matrix(rows, rank) * rng.matrix(rank, cols) / std::sqrt(double(rank));
    const CMatrix p = frames::pinv(a);
    penrose[0] = std::max(penrose[0], max_abs(a * p * a - a));
    penrose[1] = std::max(penrose[1], max_abs(p * a * p - p));
    penrose[2] = std::max(penrose[2], max_abs((a * p).adjoint() - a * p));
    penrose[3] = std::max(penrose[3], max_abs((p * a).adjoint() - p * a));
  }
  b.at_most("max |A A+ A - A|", penrose[0], 1e-10);
  b.at_most("max |A+ A A+ - A+|", penrose[1], 1e-10);
  b.at_most("max |(A A+)* - A A+|", penrose[2], 1e-10);
  b.at_most("max |(A+ A)* - A+ A|", penrose[3], 1e-10);

  std::size_t agree = 0, included = 0;
  double lift_res = 0.0, order_violation = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<Eigen::Index>(rng.integer(2, 8));
    const auto rt = static_cast<Eigen::Index>(rng.integer(1, static_cast<std::size_t>(n)));
    const auto cs = static_cast<Eigen::Index>(rng.integer(1, 8));
    const CMatrix tm = rng.matrix(n, rt) * rng.matrix(rt, n);
    const CMatrix s = (t % 2 == 0) ? CMatrix(tm * rng.matrix(n, cs)) : rng.matrix(n, cs);
    CMatrix both(n, n + cs);
    both << tm, s;
    const bool truth = linalg::numerical_rank(both, 1e-9) == linalg::numerical_rank(tm, 1e-9);
    const auto d = frames::douglas_factor(s, tm);
    if (d.included == truth) ++agree;
    if (!d.included || !d.lift) continue;
    ++included;
    lift_res = std::max(lift_res, linalg::spectral_norm(s - tm * *d.lift));
    const CMatrix gap = (d.alpha_min + 1e-9) * tm * tm.adjoint() - s * s.adjoint();
    for (int k = 0; k < 10; ++k) {
      CVector x = rng.vector(n);
      x.normalize();
      order_violation = std::max(order_violation, -x.dot(gap * x).real());
    }
  }
  b.count("Douglas decisions matching rank([T S]) == rank(T), of 100", 100, agree);
  b.at_most("max ||S - T L|| when included", lift_res, 1e-9);
  b.at_most("max -<((alpha_min + 1e-9) TT* - SS*) x, x> over unit samples", order_violation, 0.0);
  r.details = {{"included_pairs", included}};
}

void span_kernel_check(CheckResult& r, Rng& rng) {
  Builder b(r);
  double kernel_dev = 0.0, repro_dev = 0.0;
  for (int t = 0; t < 5; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t);
    const auto zeros = rng.separated_zeros(n, 0.85, 0.1);
    const FiniteBlaschkeProduct bp(zeros);
    const ModelSpace m(bp);
    std::vector<DiskPoint> pts(zeros.begin(), zeros.end());
    const auto s = rkhs::span_kernel(m, pts);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const Complex y{-0.8 + 0.4 * i, 0.3 * (j - 2)};
        const Complex z{0.3 * (i - 2), -0.8 + 0.4 * j};
        const Complex closed = (1.0 - std::conj(bp(y)) * bp(z)) / (1.0 - std::conj(y) * z);
        kernel_dev = std::max(kernel_dev, std::abs(s(y, z) - closed));
      }
    // A proper subspace from the first zero and one interior point.
    const auto sub = rkhs::span_kernel(m, {pts.front(), DiskPoint(rng.disk(0.5))});
    for (int k = 0; k < 4; ++k) {
      const ModelVector f(m, sub.family() * rng.vector(2));
      const Complex z = rng.disk(0.9);
      repro_dev = std::max(repro_dev, std::abs(modelspace::inner(f, sub.element_at(z)) - f(z)) /
                                          std::max(1.0, f.norm()));
    }
  }
  b.at_most("max |K_span(y,z) - (1 - conj(B(y)) B(z))/(1 - conj(y) z)| on 5x5 grids", kernel_dev, 1e-8);
  b.at_most("max |<f, h_z> - f(z)| / max(1, ||f||) over 20 span elements", repro_dev, 1e-8);
}

void compressions(CheckResult& r, Rng& rng) {
  Builder b(r);
  double shift_dev = 0.0, mult_dev = 0.0;
  for (int t = 0; t < 10; ++t) {
    const ModelSpace m{FiniteBlaschkeProduct(rng.separated_zeros(rng.integer(1, 5), 0.85, 0.0))};
    shift_dev = std::max(shift_dev, max_abs(toeplitz::model_compression(m, SymbolCoefficients::monomial(1)) -
                                            modelspace::compressed_shift(m)));
    auto random_symbol = [&](int deg) {
      std::map<int, Complex> c;
      const CVector v = rng.vector(deg + 1);
      for (int k = 0; k <= deg; ++k) c[k] = v(k);
      return SymbolCoefficients(c);
    };
    const auto phi = random_symbol(2), psi = random_symbol(3);
    mult_dev = std::max(mult_dev, max_abs(toeplitz::model_compression(m, phi * psi) -
                                          toeplitz::model_compression(m, phi) * toeplitz::model_compression(m, psi)));
  }
  b.at_most("max |model_compression(z) - compressed_shift|", shift_dev, 0.0, "exact");
  b.at_most("max |A_{phi psi} - A_phi A_psi|", mult_dev, 1e-8);

  double worst = -std::numeric_limits<double>::infinity();
  std::size_t sup_norm_holds = 0;
  json cases = json::array();
  for (int t = 0; t < 10; ++t) {
    const auto dim = static_cast<Eigen::Index>(rng.integer(3, 8));
    const frames::VectorFamily fam(rng.matrix(dim, dim + static_cast<Eigen::Index>(rng.integer(0, 4))));
    std::map<int, Complex> c;
    // a_0 away from zero keeps the triangular truncation invertible.
    c[0] = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * kPi));
    const int deg = static_cast<int>(rng.integer(1, 3));
    for (int k = 1; k <= deg; ++k) c[k] = Complex{rng.normal(), rng.normal()} * 0.7;
    const SymbolCoefficients phi(c);
    const auto rep = toeplitz::frame_image_report(fam, phi);
    worst = std::max(worst, rep.pinv_bound - 1e-9 - rep.bounds_after.lower);
    if (rep.sup_norm_bound_holds) ++sup_norm_holds;
    cases.push_back(io::to_json(rep));
  }
  b.at_most("max (A sigma_min^2 - 1e-9 - image lower bound) over 10 symbols", worst, 0.0);
  r.details = {{"sup_norm_bound_holds_count", sup_norm_holds}, {"cases", cases}};
}

struct Entry {
  std::string name;
  int criterion;
  std::string title;
  double budget;
  std::function<void(CheckResult&, Rng&)> fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"remark-2.11", 1, "Mercedes frame, dual and kernel matrix", 1.0, mercedes},
      {"example-1.2", 2, "Model-space kernels for theta = z^n", 1.0, szego_coefficients},
      {"lemma-2.3", 3, "Parseval orbit of the backward shift", 5.0, parseval_orbit},
      {"zeros-frame", 4, "Kernels at the zeros of B form a frame", 2.0, zeros_frame},
      {"clark-example", 5, "Clark orthonormal bases", 3.0, clark_bases},
      {"example-2.12", 6, "Hilbert matrix spectrum", 5.0, hilbert},
      {"brownian-bridge", 7, "Brownian bridge kernel series", 5.0, brownian},
      {"pinv-douglas", 8, "Moore-Penrose identities and Douglas factorization", 5.0, pinv_douglas},
      {"span-kernel", 9, "Reproducing kernel of a span of kernels", 2.0, span_kernel_check},
      {"compressions", 10, "Model compressions and Toeplitz frame images", 5.0, compressions},
  };
  return entries;
}

}  // namespace

bool CheckResult::pass() const {
  if (seconds > budget_seconds) return false;
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& row) { return row.pass; });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

CheckResult run_check(const std::string& name, std::uint64_t seed) {
  for (const auto& e : registry()) {
    if (e.name != name) continue;
    CheckResult r;
    r.name = e.name;
    r.criterion = e.criterion;
    r.title = e.title;
    r.budget_seconds = e.budget;
    Rng rng(seed);
    const auto start = std::chrono::steady_clock::now();
    e.fn(r, rng);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw Error(ErrorCode::kValidation, "unknown repro check '" + name + "'");
}

json to_json(const CheckResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"quantity", row.quantity},
                    {"expected", row.expected},
                    {"computed", row.computed},
                    {"tolerance", row.tolerance},
                    {"pass", row.pass}});
  }
  return {{"name", r.name},       {"criterion", r.criterion},
          {"title", r.title},     {"pass", r.pass()},
          {"rows", rows},         {"details", r.details},
          {"budget_seconds", r.budget_seconds}};
}

std::string format_table(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << std::left;
  for (const auto& r : results) {
    os << (r.pass() ? "PASS" : "FAIL") << "  [" << r.criterion << "] " << r.name << ": " << r.title << "\n";
    for (const auto& row : r.rows) {
      os << "    " << (row.pass ? "ok  " : "BAD ") << std::setw(72) << row.quantity
         << " expected " << row.expected.dump() << "  computed " << row.computed.dump()
         << "  tol " << row.tolerance << "\n";
    }
    os << "    " << std::setw(76) << "runtime (s)" << std::setprecision(3) << r.seconds
       << " / budget " << r.budget_seconds << std::setprecision(6) << "\n";
  }
  return os.str();
}

}  // namespace kernelframe::repro
