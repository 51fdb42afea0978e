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

#pragma once

#include <cstddef>
#include <cstdint>

#include "ambec/core.hpp"

// Data-parallel inner loops. Every kernel exists twice: a plain loop in
// `serial` (the reference used by tests) and an OpenMP loop in `parallel`.
// Both apply the same per-element arithmetic, so results agree bit for bit.
namespace ambec::kernels {

// Local coupling step i d/dt (a, m) = N(a, m), integrated with one
// classical RK4 step per grid point.
struct LocalCoupling {
  double g_a, g_m, g_am, alpha, epsilon;
};

inline LocalCoupling local_coupling(const CouplingParams& p) {
  return {p.g_a, p.g_m, p.g_am, p.alpha, p.epsilon};
}

void rk4_point(const LocalCoupling& c, double dt, cplx& a, cplx& m) noexcept;

namespace serial {

template <class Fn>
void for_each_index(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

void nonlinear_rk4(ComplexField& psi_a, ComplexField& psi_m, const LocalCoupling& c, double dt);
void phase_multiply(ComplexField& psi, const ComplexField& phase);

}  // namespace serial

namespace parallel {

template <class Fn>
void for_each_index(std::size_t n, Fn&& fn) {
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

void nonlinear_rk4(ComplexField& psi_a, ComplexField& psi_m, const LocalCoupling& c, double dt);
void phase_multiply(ComplexField& psi, const ComplexField& phase);

}  // namespace parallel

inline void nonlinear_rk4(ExecPolicy policy, ComplexField& a, ComplexField& m, const LocalCoupling& c, double dt) {
  policy == ExecPolicy::parallel ? parallel::nonlinear_rk4(a, m, c, dt) : serial::nonlinear_rk4(a, m, c, dt);
}

inline void phase_multiply(ExecPolicy policy, ComplexField& psi, const ComplexField& phase) {
  policy == ExecPolicy::parallel ? parallel::phase_multiply(psi, phase) : serial::phase_multiply(psi, phase);
}

template <class Fn>
void for_each_index(ExecPolicy policy, std::size_t n, Fn&& fn) {
  if (policy == ExecPolicy::parallel) {
    parallel::for_each_index(n, fn);
  } else {
    serial::for_each_index(n, fn);
  }
}

}  // namespace ambec::kernels
