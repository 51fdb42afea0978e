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

#include <cstdint>
#include <vector>

#include "ambec/core.hpp"
#include "ambec/kernels.hpp"
#include "ambec/spectral.hpp"

namespace ambec {

/// Periodic grid on [-L, L). n must be a power of two, at least 8.
Grid make_grid(double L, std::size_t n);

/// L = 40 / beta. Every in-scope profile has decayed below 1e-12 of its
/// peak at |beta x| = 40, while the tails stay far above the smallest
/// double, so potentials built from them remain finite.
Grid default_grid(double beta, std::size_t n = 2048);

struct PropagatorConfig {
  double dt = 1e-3;  // negative runs the equations backwards in time
  double T = 10.0;
  int record_every = 100;
  double tol_drift = 1e-6;
  ExecPolicy policy = ExecPolicy::parallel;
};

/// Throws ErrorKind::config unless dt != 0, T >= 0, record_every >= 1 and
/// |dt| k_max^2 / 2 < pi on the grid.
void validate_config(const PropagatorConfig& cfg, const Grid& grid);

struct NumberSplit {
  double N = 0.0;
  double N_a = 0.0;
  double N_m = 0.0;
};

/// N_a, N_m by the trapezoid rule on the periodic grid, N = N_a + 2 N_m.
NumberSplit conserved_number(const FieldPair& fields);

/// E = int [ |psi_a'|^2/2 + |psi_m'|^2/4 + eps |psi_m|^2 + g_a/2 |psi_a|^4
///         + g_m/2 |psi_m|^4 + g_am |psi_a|^2 |psi_m|^2
///         + alpha/sqrt2 (psi_m^* psi_a^2 + c.c.) ] dx
double mean_field_energy(const FieldPair& fields, const CouplingParams& params);

/// Right-hand sides H_a psi, H_m psi of the evolution equations, i.e.
/// i d/dt psi = rhs. These equal dE / d psi^* pointwise.
std::pair<ComplexField, ComplexField> mean_field_rhs(const FieldPair& fields, const CouplingParams& params);

/// Strang splitting: half kinetic step in Fourier space, full local
/// coupling step by pointwise RK4, half kinetic step.
class Propagator {
 public:
  Propagator(const Grid& grid, const CouplingParams& params, double dt, ExecPolicy policy = ExecPolicy::parallel);

  void step(FieldPair& f) const;
  double dt() const noexcept { return dt_; }

 private:
  void kinetic_half(ComplexField& psi, const ComplexField& phase) const;

  Spectral fft_;
  kernels::LocalCoupling coupling_;
  double dt_;
  ExecPolicy policy_;
  ComplexField half_a_, half_m_;
};

struct TrajectorySample {
  double t = 0.0;
  double N = 0.0;
  double N_a = 0.0;
  double N_m = 0.0;
  double E = 0.0;
  double drift_a = 0.0;  // max_x | |psi_a(x,t)| - |psi_a(x,0)| |
  double drift_m = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  FieldPair final_state;
  std::int64_t steps = 0;

  double max_drift() const noexcept;
  double max_relative_number_drift() const noexcept;
  double max_relative_energy_drift() const noexcept;
};

/// Runs round(T / |dt|) steps, sampling at step 0, every record_every
/// steps and at the end. Throws blow_up on a non-finite value and
/// instability when the relative number drift exceeds 100 tol_drift.
Trajectory evolve(const FieldPair& fields, const CouplingParams& params, const PropagatorConfig& cfg);

/// Multiplies every sample by (1 + rel xi), xi standard normal, drawn
/// from mt19937_64 with the given seed.
void add_amplitude_noise(FieldPair& fields, double rel, std::uint64_t seed);

}  // namespace ambec
