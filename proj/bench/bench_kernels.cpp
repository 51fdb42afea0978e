/* Copyright 2026 The ambec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

// Serial reference kernels against their OpenMP counterparts. Set
// OMP_NUM_THREADS to control the parallel width.

#include <benchmark/benchmark.h>

#include <random>

#include "ambec/ansatz.hpp"
#include "ambec/consistency.hpp"
#include "ambec/dynamics.hpp"
#include "ambec/kernels.hpp"
#include "ambec/wigner.hpp"

namespace {

using namespace ambec;

ComplexField random_field(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 0.3);
  ComplexField f(n);
  for (auto& v : f) v = {d(rng), d(rng)};
  return f;
}

ExecPolicy policy_of(const benchmark::State& s) { return s.range(1) ? ExecPolicy::parallel : ExecPolicy::serial; }

void BM_NonlinearRK4(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const kernels::LocalCoupling c{-5.0, 1.0, -2.41, 0.16, -0.25};
  ComplexField a = random_field(n, 1), m = random_field(n, 2);
  for (auto _ : state) {
    kernels::nonlinear_rk4(policy_of(state), a, m, c, 1e-6);
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_PhaseMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ComplexField a = random_field(n, 3);
  ComplexField phase(n);
  for (std::size_t i = 0; i < n; ++i) phase[i] = std::polar(1.0, 1e-3 * static_cast<double>(i));
  for (auto _ : state) {
    kernels::phase_multiply(policy_of(state), a, phase);
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_PropagatorStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = solve_family_I(3.0, -2.8, 2.0, 0.5);
  FieldPair f = sample_fields(r, default_grid(r.beta, n), 0.0).fields;
  const Propagator prop(f.grid, r.couplings, 1e-3, policy_of(state));
  for (auto _ : state) prop.step(f);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_WignerRows(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Profile psi = [](double x) { return cplx(superposed_profile(Superposition::bright_even, 1.0, 6.219, x)); };
  const Grid g = default_grid(1.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_transform(psi, g, 0, policy_of(state)).norm);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

void BM_ScanLattice(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const CouplingParams p{-5.0, 1.0, -2.41, 0.16, 0.0};
  const auto ranges = default_scan_ranges(Family::II, p.alpha);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_scan_seed(p, Family::II, ranges[0], ranges[1], n, policy_of(state)).size());
  }
}

// Second argument: 0 serial, 1 OpenMP.
BENCHMARK(BM_NonlinearRK4)->ArgsProduct({{2048, 1 << 16}, {0, 1}});
BENCHMARK(BM_PhaseMultiply)->ArgsProduct({{2048, 1 << 16}, {0, 1}});
BENCHMARK(BM_PropagatorStep)->ArgsProduct({{2048}, {0, 1}});
BENCHMARK(BM_WignerRows)->ArgsProduct({{256, 512}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanLattice)->ArgsProduct({{100, 200}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
