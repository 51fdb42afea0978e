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

#include "ambec/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ambec {

namespace {

// With w = e^{-2|z|}:  4 w (B + cosh^2 z) = 1 + (4B + 2) w + w^2.
struct Scaled {
  double e1;        // e^{-|z|}
  double w;         // e^{-2|z|}
  double one_m_w;   // 1 - w, without cancellation near z = 0
  double denom;     // 1 + (4B+2) w + w^2
};

Scaled scaled(double B, double z) {
  const double az = std::abs(z);
  Scaled s;
  s.e1 = std::exp(-az);
  s.w = s.e1 * s.e1;
  s.one_m_w = -std::expm1(-2.0 * az);
  s.denom = 1.0 + (4.0 * B + 2.0) * s.w + s.w * s.w;
  return s;
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw Error(ErrorKind::domain, std::string(what) + " must be finite");
}

}  // namespace

double mu_critical(const CouplingParams& p) {
  const double s = p.g_a + p.g_am;
  if (s == 0.0) {
    throw Error(ErrorKind::singular, "critical chemical potential undefined: g_a + g_am = 0");
  }
  return -(4.0 / 9.0) * p.alpha * p.alpha / s;
}

double rational_profile(Family family, double amp, double B, double beta, double x) {
  require_finite(x, "x");
  const double z = beta * x;
  const Scaled s = scaled(B, z);
  switch (family) {
    case Family::I:
      return amp * 4.0 * s.w / s.denom;
    case Family::II:
      return amp * 2.0 * s.e1 * (1.0 + s.w) / s.denom;
    case Family::III: {
      const double v = amp * 2.0 * s.e1 * s.one_m_w / s.denom;
      return z < 0.0 ? -v : v;
    }
  }
  return 0.0;
}

double sinh2_ratio(double B, double beta, double x) {
  const Scaled s = scaled(B, beta * x);
  return s.one_m_w * s.one_m_w / s.denom;
}

double cosh2_ratio(double B, double beta, double x) {
  const Scaled s = scaled(B, beta * x);
  return (1.0 + s.w) * (1.0 + s.w) / s.denom;
}

double superposed_profile(Superposition kind, double beta, double delta, double x) {
  require_finite(x, "x");
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorKind::domain, "displacement delta must be positive");
  }
  const double z = beta * x;
  auto sech = [](double u) { return 1.0 / std::cosh(u); };
  switch (kind) {
    case Superposition::kink_pair:
      if (delta == 0.0) throw Error(ErrorKind::domain, "kink pair with delta = 0 divides by sinh(0)");
      return (std::tanh(z + delta) - std::tanh(z - delta)) / std::sinh(2.0 * delta);
    case Superposition::bright_even:
      return (sech(z + delta) + sech(z - delta)) / (2.0 * std::cosh(delta));
    case Superposition::bright_odd:
      if (delta == 0.0) throw Error(ErrorKind::domain, "odd bright pair with delta = 0 divides by sinh(0)");
      return (sech(z - delta) - sech(z + delta)) / (2.0 * std::sinh(delta));
  }
  return 0.0;
}

PetrovParams petrov_params(double A, double D, double B, double beta) {
  if (!(B > 0.0)) throw Error(ErrorKind::domain, "Petrov form needs B > 0");
  if (!(beta > 0.0)) throw Error(ErrorKind::domain, "Petrov form needs beta > 0");
  const double twoB1 = 2.0 * B + 1.0;
  const double bb1 = B * (B + 1.0);
  PetrovParams p;
  p.sqrt_n_a = A * twoB1 / (2.0 * bb1);
  p.sqrt_n_m = D * twoB1 / (2.0 * bb1);
  p.mu = -2.0 * beta * beta;
  const double ratio = 4.0 * bb1 / (twoB1 * twoB1);
  p.mu0 = p.mu / ratio;
  return p;
}

PetrovParams petrov_params(const SolutionRecord& r) {
  if (r.family != Family::I) throw Error(ErrorKind::precondition, "Petrov form applies to family I only");
  return petrov_params(r.A, r.D, r.B, r.beta);
}

double petrov_profile(const PetrovParams& p, double x, Component c) {
  require_finite(x, "x");
  const double r = p.ratio();
  if (!(r > 0.0 && r < 1.0)) {
    std::ostringstream os;
    os << "mu/mu0 = " << r << " outside (0, 1): no droplet";
    throw Error(ErrorKind::domain, os.str());
  }
  const double k = 2.0 * std::sqrt(-p.mu / 2.0);
  const double amp = (c == Component::atomic ? p.sqrt_n_a : p.sqrt_n_m) * r;
  return amp / (1.0 + std::sqrt(1.0 - r) * std::cosh(k * x));
}

double petrov_half_width(const PetrovParams& p, double fraction) {
  const double r = p.ratio();
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::domain, "mu/mu0 outside (0, 1)");
  if (!(fraction > 0.0 && fraction <= 1.0)) throw Error(ErrorKind::domain, "fraction must lie in (0, 1]");
  const double s = std::sqrt(1.0 - r);
  const double k = 2.0 * std::sqrt(-p.mu / 2.0);
  const double c = ((1.0 + s) / fraction - 1.0) / s;
  return std::acosh(std::max(1.0, c)) / k;
}

double atomic_profile(const SolutionRecord& r, double x) {
  return rational_profile(r.family, r.A, r.B, r.beta, x);
}

double molecular_profile(const SolutionRecord& r, double x) {
  return rational_profile(Family::I, r.D, r.B, r.beta, x);
}

double boundary_ratio(const SolutionRecord& record, const Grid& grid) {
  double worst = 0.0;
  for (auto profile : {&atomic_profile, &molecular_profile}) {
    double peak = 0.0;
    for (std::size_t i = 0; i < grid.n; ++i) peak = std::max(peak, std::abs(profile(record, grid.x(i))));
    const double edge = std::max(std::abs(profile(record, grid.x(0))), std::abs(profile(record, grid.x(grid.n - 1))));
    if (peak > 0.0) worst = std::max(worst, edge / peak);
  }
  return worst;
}

SampledFields sample_fields(const SolutionRecord& record, const Grid& grid, double t) {
  if (!(record.B > 0.0) || !(record.beta > 0.0)) {
    throw Error(ErrorKind::domain, "record needs B > 0 and beta > 0");
  }
  SampledFields out;
  out.fields.grid = grid;
  out.fields.t = t;
  out.fields.psi_a.resize(grid.n);
  out.fields.psi_m.resize(grid.n);
  const cplx phase_a = std::polar(1.0, -record.mu * t);
  const cplx phase_m = std::polar(1.0, -2.0 * record.mu * t);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    out.fields.psi_a[i] = atomic_profile(record, x) * phase_a;
    out.fields.psi_m[i] = molecular_profile(record, x) * phase_m;
  }
  out.boundary_ratio = boundary_ratio(record, grid);
  out.truncated = !(out.boundary_ratio < kGridAdequacy);
  return out;
}

}  // namespace ambec
