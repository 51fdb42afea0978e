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

#include "ambec/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace ambec {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

bool all_finite(const ComplexField& f) {
  for (const cplx& v : f) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

double amplitude_drift(const ComplexField& now, const ComplexField& ref) {
  double m = 0.0;
  for (std::size_t i = 0; i < now.size(); ++i) m = std::max(m, std::abs(std::abs(now[i]) - std::abs(ref[i])));
  return m;
}

void check_shape(const FieldPair& f) {
  if (f.psi_a.size() != f.grid.n || f.psi_m.size() != f.grid.n) {
    throw Error(ErrorKind::precondition, "field arrays must match the grid length");
  }
}

}  // namespace

Grid make_grid(double L, std::size_t n) {
  if (!(L > 0.0) || !std::isfinite(L)) throw Error(ErrorKind::config, "grid half-width L must be positive");
  if (n < 8 || !is_power_of_two(n)) {
    throw Error(ErrorKind::config, "grid size n = " + std::to_string(n) + " must be a power of two and >= 8");
  }
  return Grid{-L, L, n};
}

Grid default_grid(double beta, std::size_t n) {
  if (!(beta > 0.0)) throw Error(ErrorKind::domain, "beta must be positive");
  return make_grid(40.0 / beta, n);
}

void validate_config(const PropagatorConfig& cfg, const Grid& grid) {
  if (!(cfg.dt != 0.0) || !std::isfinite(cfg.dt)) throw Error(ErrorKind::config, "dt must be finite and nonzero");
  if (!(cfg.T >= 0.0) || !std::isfinite(cfg.T)) throw Error(ErrorKind::config, "T must be finite and >= 0");
  if (cfg.record_every < 1) throw Error(ErrorKind::config, "record_every must be >= 1");
  if (!(cfg.tol_drift > 0.0)) throw Error(ErrorKind::config, "tol_drift must be positive");
  const double kmax = std::numbers::pi / grid.dx();
  const double phase = std::abs(cfg.dt) * kmax * kmax / 2.0;
  if (!(phase < std::numbers::pi)) {
    std::ostringstream os;
    os << "|dt| k_max^2 / 2 = " << phase << " >= pi; reduce dt below "
       << 2.0 * std::numbers::pi / (kmax * kmax) << " or coarsen the grid";
    throw Error(ErrorKind::config, os.str());
  }
}

NumberSplit conserved_number(const FieldPair& f) {
  check_shape(f);
  NumberSplit s;
  for (std::size_t i = 0; i < f.grid.n; ++i) {
    s.N_a += std::norm(f.psi_a[i]);
    s.N_m += std::norm(f.psi_m[i]);
  }
  const double dx = f.grid.n > 0 ? f.grid.dx() : 0.0;
  s.N_a *= dx;
  s.N_m *= dx;
  s.N = s.N_a + 2.0 * s.N_m;
  return s;
}

double mean_field_energy(const FieldPair& f, const CouplingParams& p) {
  check_shape(f);
  const Spectral fft(f.grid);
  const ComplexField da = fft.derivative(f.psi_a, 1);
  const ComplexField dm = fft.derivative(f.psi_m, 1);
  double e = 0.0;
  for (std::size_t i = 0; i < f.grid.n; ++i) {
    const cplx a = f.psi_a[i], m = f.psi_m[i];
    const double na = std::norm(a), nm = std::norm(m);
    e += 0.5 * std::norm(da[i]) + 0.25 * std::norm(dm[i]) + p.epsilon * nm + 0.5 * p.g_a * na * na +
         0.5 * p.g_m * nm * nm + p.g_am * na * nm + kSqrt2 * p.alpha * (std::conj(m) * a * a).real();
  }
  return e * f.grid.dx();
}

std::pair<ComplexField, ComplexField> mean_field_rhs(const FieldPair& f, const CouplingParams& p) {
  check_shape(f);
  const Spectral fft(f.grid);
  ComplexField ha = fft.derivative(f.psi_a, 2);
  ComplexField hm = fft.derivative(f.psi_m, 2);
  for (std::size_t i = 0; i < f.grid.n; ++i) {
    const cplx a = f.psi_a[i], m = f.psi_m[i];
    const double na = std::norm(a), nm = std::norm(m);
    ha[i] = -0.5 * ha[i] + (p.g_a * na + p.g_am * nm) * a + kSqrt2 * p.alpha * m * std::conj(a);
    hm[i] = -0.25 * hm[i] + (p.epsilon + p.g_m * nm + p.g_am * na) * m + (p.alpha / kSqrt2) * a * a;
  }
  return {std::move(ha), std::move(hm)};
}

Propagator::Propagator(const Grid& grid, const CouplingParams& params, double dt, ExecPolicy policy)
    : fft_(grid), coupling_(kernels::local_coupling(params)), dt_(dt), policy_(policy),
      half_a_(grid.n), half_m_(grid.n) {
  const auto& k = fft_.k();
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double k2 = k[j] * k[j];
    half_a_[j] = std::polar(1.0, -k2 * dt / 4.0);
    half_m_[j] = std::polar(1.0, -k2 * dt / 8.0);
  }
}

void Propagator::kinetic_half(ComplexField& psi, const ComplexField& phase) const {
  fft_.forward(psi.data());
  kernels::phase_multiply(policy_, psi, phase);
  fft_.backward(psi.data());
}

void Propagator::step(FieldPair& f) const {
  kinetic_half(f.psi_a, half_a_);
  kinetic_half(f.psi_m, half_m_);
  kernels::nonlinear_rk4(policy_, f.psi_a, f.psi_m, coupling_, dt_);
  kinetic_half(f.psi_a, half_a_);
  kinetic_half(f.psi_m, half_m_);
  f.t += dt_;
}

double Trajectory::max_drift() const noexcept {
  double m = 0.0;
  for (const auto& s : samples) m = std::max({m, s.drift_a, s.drift_m});
  return m;
}

double Trajectory::max_relative_number_drift() const noexcept {
  if (samples.empty() || samples.front().N == 0.0) return 0.0;
  double m = 0.0;
  for (const auto& s : samples) m = std::max(m, std::abs(s.N - samples.front().N) / samples.front().N);
  return m;
}

double Trajectory::max_relative_energy_drift() const noexcept {
  if (samples.empty() || samples.front().E == 0.0) return 0.0;
  double m = 0.0;
  const double e0 = samples.front().E;
  for (const auto& s : samples) m = std::max(m, std::abs(s.E - e0) / std::abs(e0));
  return m;
}

Trajectory evolve(const FieldPair& fields, const CouplingParams& params, const PropagatorConfig& cfg) {
  check_shape(fields);
  validate_config(cfg, fields.grid);
  if (!all_finite(fields.psi_a) || !all_finite(fields.psi_m)) {
    throw Error(ErrorKind::precondition, "initial fields contain non-finite values");
  }
  const Propagator prop(fields.grid, params, cfg.dt, cfg.policy);
  const auto nsteps = static_cast<std::int64_t>(std::llround(cfg.T / std::abs(cfg.dt)));

  Trajectory tr;
  tr.final_state = fields;
  FieldPair& f = tr.final_state;
  auto sample = [&]() {
    const NumberSplit ns = conserved_number(f);
    tr.samples.push_back({f.t, ns.N, ns.N_a, ns.N_m, mean_field_energy(f, params),
                          amplitude_drift(f.psi_a, fields.psi_a), amplitude_drift(f.psi_m, fields.psi_m)});
  };
  sample();
  const double N0 = tr.samples.front().N;

  for (std::int64_t s = 1; s <= nsteps; ++s) {
    prop.step(f);
    if (!all_finite(f.psi_a) || !all_finite(f.psi_m)) {
      throw Error(ErrorKind::blow_up, "non-finite field value at step " + std::to_string(s));
    }
    if (s % cfg.record_every == 0 || s == nsteps) {
      sample();
      const double drift = N0 > 0.0 ? std::abs(tr.samples.back().N - N0) / N0 : 0.0;
      if (drift > 100.0 * cfg.tol_drift) {
        std::ostringstream os;
        os << "relative number drift " << drift << " at step " << s << " exceeds 100 x tol_drift";
        throw Error(ErrorKind::instability, os.str());
      }
    }
  }
  tr.steps = nsteps;
  return tr;
}

void add_amplitude_noise(FieldPair& fields, double rel, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> xi(0.0, 1.0);
  for (auto* psi : {&fields.psi_a, &fields.psi_m}) {
    for (cplx& v : *psi) v *= 1.0 + rel * xi(rng);
  }
}

}  // namespace ambec
