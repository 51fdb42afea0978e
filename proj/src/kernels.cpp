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

#include "ambec/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace ambec::kernels {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
const cplx kMinusI{0.0, -1.0};

inline void rhs(const LocalCoupling& c, cplx a, cplx m, cplx& da, cplx& dm) noexcept {
  const double na = std::norm(a), nm = std::norm(m);
  da = kMinusI * ((c.g_a * na + c.g_am * nm) * a + kSqrt2 * c.alpha * m * std::conj(a));
  dm = kMinusI * ((c.epsilon + c.g_m * nm + c.g_am * na) * m + (c.alpha / kSqrt2) * a * a);
}

}  // namespace

void rk4_point(const LocalCoupling& c, double dt, cplx& a, cplx& m) noexcept {
  cplx ka1, km1, ka2, km2, ka3, km3, ka4, km4;
  const double h = 0.5 * dt;
  rhs(c, a, m, ka1, km1);
  rhs(c, a + h * ka1, m + h * km1, ka2, km2);
  rhs(c, a + h * ka2, m + h * km2, ka3, km3);
  rhs(c, a + dt * ka3, m + dt * km3, ka4, km4);
  const double w = dt / 6.0;
  a += w * (ka1 + 2.0 * ka2 + 2.0 * ka3 + ka4);
  m += w * (km1 + 2.0 * km2 + 2.0 * km3 + km4);
}

namespace serial {

void nonlinear_rk4(ComplexField& psi_a, ComplexField& psi_m, const LocalCoupling& c, double dt) {
  const std::size_t n = psi_a.size();
  for (std::size_t i = 0; i < n; ++i) rk4_point(c, dt, psi_a[i], psi_m[i]);
}

void phase_multiply(ComplexField& psi, const ComplexField& phase) {
  const std::size_t n = psi.size();
  for (std::size_t i = 0; i < n; ++i) psi[i] *= phase[i];
}

}  // namespace serial

namespace parallel {

void nonlinear_rk4(ComplexField& psi_a, ComplexField& psi_m, const LocalCoupling& c, double dt) {
  const auto n = static_cast<std::int64_t>(psi_a.size());
  cplx* a = psi_a.data();
  cplx* m = psi_m.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) rk4_point(c, dt, a[i], m[i]);
}

void phase_multiply(ComplexField& psi, const ComplexField& phase) {
  const auto n = static_cast<std::int64_t>(psi.size());
  cplx* p = psi.data();
  const cplx* q = phase.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) p[i] *= q[i];
}

}  // namespace parallel

}  // namespace ambec::kernels
