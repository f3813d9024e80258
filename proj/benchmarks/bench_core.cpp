// Copyright 2026 The quditcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <quditcorr/quditcorr.hpp>

#include <numbers>

namespace qc = quditcorr;

namespace {

qc::DensityMatrix bell_state() {
  qc::ComplexMatrix r = qc::ComplexMatrix::Zero(4, 4);
  r(0, 0) = r(0, 3) = r(3, 0) = r(3, 3) = 0.5;
  return qc::DensityMatrix::from(r);
}

void BM_ChshValue(benchmark::State& state) {
  const qc::DensityMatrix rho = bell_state();
  qc::Engine engine = qc::make_engine(1);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::array<double, 12> x{};
  for (double& v : x) v = angle(engine);
  const qc::ChshSetting s = qc::ChshSetting::from_angles(x);
  for (auto _ : state) benchmark::DoNotOptimize(qc::chsh_value(rho, s));
}
BENCHMARK(BM_ChshValue);

void BM_OptimizeChsh(benchmark::State& state) {
  const qc::DensityMatrix rho = bell_state();
  qc::ChshOptions opts;
  opts.restarts = static_cast<int>(state.range(0));
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qc::optimize_chsh(rho, opts).best_B);
}
BENCHMARK(BM_OptimizeChsh)->Args({1, 1})->Args({32, 1})->Args({32, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_HermitianEig(benchmark::State& state) {
  const qc::DensityMatrix rho = qc::random_density(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(qc::hermitian_eig(rho.matrix()).eigenvalues(0));
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(8)->Arg(16);

void BM_Subadditivity(benchmark::State& state) {
  const qc::DensityMatrix rho = qc::random_density(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(qc::check_subadditivity(rho).margin);
}
BENCHMARK(BM_Subadditivity)->DenseRange(3, 8);

void BM_Monotonicity(benchmark::State& state) {
  const qc::DensityMatrix rho = qc::random_density(4, 4);
  const qc::DensityMatrix sigma = qc::random_density(4, 5);
  const qc::Reduction r = qc::Reduction::qudit32();
  for (auto _ : state) benchmark::DoNotOptimize(qc::check_monotonicity(rho, sigma, r).margin);
}
BENCHMARK(BM_Monotonicity);

void BM_NoSignaling(benchmark::State& state) {
  const qc::DensityMatrix rho = qc::random_density(8, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(qc::no_signaling_check(rho, {2, 2, 2}, 10, 7).rhs);
}
BENCHMARK(BM_NoSignaling);

}  // namespace

BENCHMARK_MAIN();
