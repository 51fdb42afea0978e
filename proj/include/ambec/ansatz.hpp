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

#include "ambec/core.hpp"

namespace ambec {

/// Upper edge of the droplet window, mu0 = -(4/9) alpha^2 / (g_a + g_am).
/// Throws ErrorKind::singular when g_a + g_am = 0.
double mu_critical(const CouplingParams& params);

/// Closed-form atomic profile of a family at t = 0:
///   I:   amp / (B + cosh^2(beta x))
///   II:  amp cosh(beta x) / (B + cosh^2(beta x))
///   III: amp sinh(beta x) / (B + cosh^2(beta x))
/// The molecular profile of every family is rational_profile(Family::I, D, ...).
/// Evaluated through e^{-2|beta x|} so it neither overflows nor loses the tail.
double rational_profile(Family family, double amp, double B, double beta, double x);

/// sinh^2(beta x) / (B + cosh^2(beta x)) in the same overflow-free form.
/// Used by the molecular potential, where phi_a^2 / phi_m reduces to it.
double sinh2_ratio(double B, double beta, double x);
double cosh2_ratio(double B, double beta, double x);

enum class Superposition { kink_pair, bright_even, bright_odd };

/// Kink/antikink and displaced bright-soliton forms:
///   kink_pair:   [tanh(bx + d) - tanh(bx - d)] / sinh(2d)
///   bright_even: [sech(bx + d) + sech(bx - d)] / (2 cosh d)
///   bright_odd:  [sech(bx - d) - sech(bx + d)] / (2 sinh d)
/// With B = sinh^2(d) they coincide with the rational forms of families
/// I, II and III at unit amplitude.
double superposed_profile(Superposition kind, double beta, double delta, double x);

/// Petrov-style parametrization of a family-I droplet. The square roots of
/// the peak-density scales are kept signed, since D < 0 for this family.
struct PetrovParams {
  double sqrt_n_a = 0.0;
  double sqrt_n_m = 0.0;
  double mu = 0.0;
  double mu0 = 0.0;

  double ratio() const noexcept { return mu / mu0; }
  double n_a() const noexcept { return sqrt_n_a * sqrt_n_a; }
  double n_m() const noexcept { return sqrt_n_m * sqrt_n_m; }
};

PetrovParams petrov_params(double A, double D, double B, double beta);
PetrovParams petrov_params(const SolutionRecord& record);

enum class Component { atomic, molecular };

/// sqrt(n) (mu/mu0) / [1 + sqrt(1 - mu/mu0) cosh(k x)] with k = 2 beta,
/// beta = sqrt(-mu/2). Throws ErrorKind::domain unless 0 < mu/mu0 < 1.
double petrov_profile(const PetrovParams& p, double x, Component c = Component::atomic);

/// Half-width at which the Petrov profile falls to `fraction` of its peak.
double petrov_half_width(const PetrovParams& p, double fraction = 0.99);

/// Atomic / molecular t = 0 profiles of a record, phi_a(x) and phi_m(x).
double atomic_profile(const SolutionRecord& r, double x);
double molecular_profile(const SolutionRecord& r, double x);

/// Boundary-to-peak amplitude ratio above which a grid is too narrow.
inline constexpr double kGridAdequacy = 1e-12;

struct SampledFields {
  FieldPair fields;
  double boundary_ratio = 0.0;  // max over components of |edge| / peak
  bool truncated = false;       // boundary_ratio >= kGridAdequacy
};

/// psi_a = phi_a(x) e^{-i mu t}, psi_m = phi_m(x) e^{-2 i mu t} on the grid.
/// A too-narrow grid is reported through `truncated`, not thrown.
SampledFields sample_fields(const SolutionRecord& record, const Grid& grid, double t);

/// max over grid edges of |profile| / max |profile| for both components.
double boundary_ratio(const SolutionRecord& record, const Grid& grid);

}  // namespace ambec
