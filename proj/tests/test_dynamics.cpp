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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "ambec/ansatz.hpp"
#include "ambec/consistency.hpp"
#include "ambec/dynamics.hpp"
#include "fixtures.hpp"

using namespace ambec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::config;
}

FieldPair droplet_fields(double beta, std::size_t n, double t = 0.0) {
  const auto r = solve_family_I(3.0, -2.8, 2.0, beta);
  return sample_fields(r, default_grid(beta, n), t).fields;
}

double max_diff(const ComplexField& a, const ComplexField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("grid construction", "[dynamics][grid]") {
  const Grid g = make_grid(20.0, 2048);
  CHECK(g.dx() == 40.0 / 2048);
  CHECK(kind_of([] { make_grid(20.0, 100); }) == ErrorKind::config);
  CHECK(kind_of([] { make_grid(-1.0, 64); }) == ErrorKind::config);
  CHECK(default_grid(0.5).half_width() == 80.0);
  CHECK(default_grid(4.0).half_width() == 10.0);
}

TEST_CASE("propagator configuration checks", "[dynamics][config]") {
  const Grid g = make_grid(80.0, 2048);
  PropagatorConfig cfg;
  CHECK_NOTHROW(validate_config(cfg, g));
  cfg.dt = -1e-3;
  CHECK_NOTHROW(validate_config(cfg, g));
  cfg.dt = 0.0;
  CHECK(kind_of([&] { validate_config(cfg, g); }) == ErrorKind::config);
  cfg.dt = 1e-2;
  CHECK(kind_of([&] { validate_config(cfg, g); }) == ErrorKind::config);
  cfg.dt = 1e-3;
  cfg.record_every = 0;
  CHECK(kind_of([&] { validate_config(cfg, g); }) == ErrorKind::config);
}

TEST_CASE("zero fields carry no number and no energy", "[dynamics]") {
  FieldPair f;
  f.grid = make_grid(10.0, 64);
  f.psi_a.assign(64, 0.0);
  f.psi_m.assign(64, 0.0);
  const auto n = conserved_number(f);
  CHECK(n.N == 0.0);
  CHECK(n.N_a == 0.0);
  CHECK(n.N_m == 0.0);
  CHECK(mean_field_energy(f, {3.0, 2.9, -2.8, 2.0, -3.0}) == 0.0);
}

TEST_CASE("number splits as N_a + 2 N_m", "[dynamics]") {
  const auto f = droplet_fields(1.0, 512);
  const auto n = conserved_number(f);
  CHECK(n.N == n.N_a + 2.0 * n.N_m);
  // 30-digit quadrature of A^2 / (B + cosh^2 x)^2 at beta = 1
  const double exact = 1.74203662624781047053526729387;
  CHECK_THAT(n.N_a, WithinRel(exact, 1e-12));
}

TEST_CASE("the right-hand sides are the functional gradient of the energy", "[dynamics][energy]") {
  const auto& c = testing::kCatCases[1];
  const auto r = solve_family_II(testing::couplings(c), {c.mu, c.eps});
  auto f = sample_fields(r, make_grid(40.0 / r.beta, 1024), 0.7).fields;
  const auto params = r.couplings;
  const auto [ha, hm] = mean_field_rhs(f, params);

  ComplexField eta(f.grid.n);
  for (std::size_t i = 0; i < f.grid.n; ++i) {
    const double x = f.grid.x(i) * r.beta;
    eta[i] = 0.1 * std::exp(-(x - 0.4) * (x - 0.4)) * cplx(1.0, 0.5);
  }
  const double h = 1e-5;
  for (int which = 0; which < 2; ++which) {
    ComplexField& psi = which == 0 ? f.psi_a : f.psi_m;
    const ComplexField& H = which == 0 ? ha : hm;
    const ComplexField saved = psi;
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = saved[i] + h * eta[i];
    const double ep = mean_field_energy(f, params);
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = saved[i] - h * eta[i];
    const double em = mean_field_energy(f, params);
    psi = saved;
    double predicted = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) predicted += 2.0 * (std::conj(H[i]) * eta[i]).real();
    predicted *= f.grid.dx();
    INFO("component " << which);
    CHECK_THAT((ep - em) / (2.0 * h), WithinRel(predicted, 1e-8));
  }
}

TEST_CASE("decoupled atoms conserve their number", "[dynamics]") {
  FieldPair f;
  f.grid = make_grid(20.0, 512);
  f.psi_a.resize(512);
  f.psi_m.assign(512, 0.0);
  for (std::size_t i = 0; i < 512; ++i) f.psi_a[i] = 1.0 / std::cosh(f.grid.x(i));
  PropagatorConfig cfg;
  cfg.T = 2.0;
  const auto tr = evolve(f, {-1.0, 0.0, 0.0, 0.0, 0.0}, cfg);
  CHECK(tr.max_relative_number_drift() < 1e-10);
  for (const auto& s : tr.samples) CHECK(s.N_m == 0.0);
  // sech is the exact bright soliton for g_a = -1
  CHECK(tr.max_drift() < 1e-6);
}

TEST_CASE("a droplet stays put over a short run", "[dynamics]") {
  const auto f = droplet_fields(1.0, 1024);
  PropagatorConfig cfg;
  cfg.T = 1.0;
  const auto tr = evolve(f, solve_family_I(3.0, -2.8, 2.0, 1.0).couplings, cfg);
  CHECK(tr.steps == 1000);
  CHECK(tr.samples.size() == 11);
  CHECK_THAT(tr.samples.back().t, WithinAbs(1.0, 1e-12));
  CHECK(tr.max_drift() < 1e-6);
  CHECK(tr.max_relative_number_drift() < 1e-10);
  CHECK(tr.max_relative_energy_drift() < 1e-8);
  const double mu = -2.0;
  for (std::size_t i = 0; i < f.grid.n; i += 37) {
    CHECK_THAT(std::abs(tr.final_state.psi_a[i] - f.psi_a[i] * std::polar(1.0, -mu)), WithinAbs(0.0, 1e-6));
  }
}

TEST_CASE("running backwards returns to the start", "[dynamics]") {
  const auto r = solve_family_I(3.0, -2.8, 2.0, 1.0);
  const auto f = droplet_fields(1.0, 512);
  PropagatorConfig fwd;
  fwd.T = 1.0;
  const auto there = evolve(f, r.couplings, fwd);
  PropagatorConfig bwd = fwd;
  bwd.dt = -fwd.dt;
  const auto back = evolve(there.final_state, r.couplings, bwd);
  CHECK(max_diff(back.final_state.psi_a, f.psi_a) < 1e-7);
  CHECK(max_diff(back.final_state.psi_m, f.psi_m) < 1e-7);
}

TEST_CASE("serial and parallel propagation agree bit for bit", "[dynamics][kernels]") {
  const auto r = solve_family_I(3.0, -2.8, 2.0, 1.0);
  const auto f = droplet_fields(1.0, 512);
  PropagatorConfig cfg;
  cfg.T = 0.05;
  cfg.policy = ExecPolicy::serial;
  const auto s = evolve(f, r.couplings, cfg);
  cfg.policy = ExecPolicy::parallel;
  const auto p = evolve(f, r.couplings, cfg);
  CHECK(s.final_state.psi_a == p.final_state.psi_a);
  CHECK(s.final_state.psi_m == p.final_state.psi_m);
}

TEST_CASE("noise is reproducible from its seed", "[dynamics]") {
  auto a = droplet_fields(1.0, 256);
  auto b = a;
  auto c = a;
  add_amplitude_noise(a, 0.01, 7);
  add_amplitude_noise(b, 0.01, 7);
  add_amplitude_noise(c, 0.01, 8);
  CHECK(a.psi_a == b.psi_a);
  CHECK(a.psi_m == b.psi_m);
  CHECK(a.psi_a != c.psi_a);
}

TEST_CASE("failures are reported by kind", "[dynamics]") {
  SECTION("blow-up") {
    FieldPair f;
    f.grid = make_grid(10.0, 64);
    f.psi_a.assign(64, 1e10);
    f.psi_m.assign(64, 0.0);
    PropagatorConfig cfg;
    cfg.T = 0.01;
    CHECK(kind_of([&] { evolve(f, {1e300, 0.0, 0.0, 0.0, 0.0}, cfg); }) == ErrorKind::blow_up);
  }
  SECTION("number drift beyond 100 tol_drift") {
    auto f = droplet_fields(1.0, 256);
    add_amplitude_noise(f, 0.05, 3);
    PropagatorConfig cfg;
    cfg.T = 0.2;
    cfg.record_every = 10;
    cfg.tol_drift = 1e-22;
    CHECK(kind_of([&] { evolve(f, solve_family_I(3.0, -2.8, 2.0, 1.0).couplings, cfg); }) ==
          ErrorKind::instability);
  }
  SECTION("mismatched arrays") {
    FieldPair f;
    f.grid = make_grid(10.0, 64);
    f.psi_a.assign(32, 0.0);
    f.psi_m.assign(64, 0.0);
    CHECK(kind_of([&] { conserved_number(f); }) == ErrorKind::precondition);
  }
}
