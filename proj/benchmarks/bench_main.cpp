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

#include <benchmark/benchmark.h>

#include <random>

#include "kernelframe/kernelframe.hpp"

namespace {

namespace kf = kernelframe;

std::vector<kf::Complex> zeros(std::size_t n, double radius) {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<kf::Complex> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::polar(radius * std::sqrt(u(gen)), 2.0 * kf::kPi * u(gen)));
  return out;
}

void BM_ModelSpace(benchmark::State& state) {
  const kf::blaschke::FiniteBlaschkeProduct b(zeros(static_cast<std::size_t>(state.range(0)), 0.9));
  for (auto _ : state) {
    kf::modelspace::ModelSpace m(b);
    benchmark::DoNotOptimize(m.basis_series().data());
  }
}
BENCHMARK(BM_ModelSpace)->Arg(2)->Arg(8)->Arg(32);

void BM_ClarkBasis(benchmark::State& state) {
  const kf::modelspace::ModelSpace m(kf::blaschke::FiniteBlaschkeProduct(zeros(static_cast<std::size_t>(state.range(0)), 0.9)));
  for (auto _ : state) benchmark::DoNotOptimize(kf::modelspace::clark_basis(m, kf::Complex{0.6, 0.8}).roots.data());
}
BENCHMARK(BM_ClarkBasis)->Arg(2)->Arg(8)->Arg(32);

void BM_FrameBounds(benchmark::State& state) {
  const auto d = state.range(0);
  std::mt19937_64 gen(7);
  std::normal_distribution<double> g;
  kf::CMatrix f(d, 2 * d);
  for (Eigen::Index i = 0; i < f.size(); ++i) f.data()[i] = kf::Complex{g(gen), g(gen)};
  const kf::frames::VectorFamily fam(f);
  for (auto _ : state) benchmark::DoNotOptimize(kf::frames::frame_bounds(fam).lower);
}
BENCHMARK(BM_FrameBounds)->Arg(8)->Arg(64)->Arg(256);

void BM_Hilbert(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kf::toeplitz::hilbert_gramian(static_cast<std::size_t>(state.range(0))).max_eig);
}
BENCHMARK(BM_Hilbert)->Arg(50)->Arg(200);

void BM_OrbitParseval(benchmark::State& state) {
  const kf::modelspace::ModelSpace m(kf::blaschke::FiniteBlaschkeProduct(zeros(4, 0.7)));
  const kf::modelspace::ModelVector g(m, kf::CVector::Ones(4));
  for (auto _ : state) benchmark::DoNotOptimize(kf::modelspace::shift_orbit_parseval(m, g, 80).tail_bound);
}
BENCHMARK(BM_OrbitParseval);

}  // namespace

BENCHMARK_MAIN();
