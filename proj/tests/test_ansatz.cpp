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

double literal(Family f, double amp, double B, double beta, double x) {
  const double c = std::cosh(beta * x);
  const double den = B + c * c;
  switch (f) {
    case Family::I: return amp / den;
    case Family::II: return amp * c / den;
    case Family::III: return amp * std::sinh(beta * x) / den;
  }
  return 0.0;
}

}  // namespace

TEST_CASE("mu_critical", "[ansatz]") {
  CHECK_THAT(mu_critical({3.0, 2.9, -2.8, 2.0, 0.0}), WithinAbs(-80.0 / 9.0, 1e-14));
  CHECK(mu_critical({1.0, 0.0, 1.0, 0.0, 0.0}) == 0.0);
  try {
    mu_critical({3.0, 2.9, -3.0, 2.0, 0.0});
    FAIL("expected a singular error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::singular);
  }
}

TEST_CASE("rational profiles at reference points", "[ansatz]") {
  CHECK(rational_profile(Family::I, 1.0, 1.0, 1.0, 0.0) == 0.5);
  CHECK(rational_profile(Family::III, 2.7, 0.3, 1.4, 0.0) == 0.0);
  CHECK_THAT(rational_profile(Family::II, 1.0, 1.0, 1.0, 1.0), WithinAbs(0.4563844956010042589977, 1e-15));
}

TEST_CASE("stable forms agree with the literal hyperbolic forms", "[ansatz]") {
  for (Family f : {Family::I, Family::II, Family::III}) {
    for (double B : {0.05, 1.0, 840.0}) {
      for (double x = -30.0; x <= 30.0; x += 0.37) {
        const double ref = literal(f, 1.3, B, 0.7, x);
        CHECK_THAT(rational_profile(f, 1.3, B, 0.7, x), WithinAbs(ref, 1e-14 * std::max(1.0, std::abs(ref))));
      }
    }
  }
}

TEST_CASE("profiles stay finite and positive far in the tails", "[ansatz]") {
  // cosh^2(360) overflows a double; the rescaled form keeps the tail.
  const double v = rational_profile(Family::II, 1.0, 1.0, 1.0, 360.0);
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
  CHECK_THAT(std::log(v), WithinRel(std::log(2.0) - 360.0, 1e-12));
  CHECK(std::cosh(360.0) / (1.0 + std::cosh(360.0) * std::cosh(360.0)) == 0.0);
  CHECK(rational_profile(Family::II, 1.0, 1.0, 1.0, -800.0) == 0.0);
  CHECK_THROWS_AS(rational_profile(Family::I, 1.0, 1.0, 1.0, INFINITY), Error);
}

TEST_CASE("parity", "[ansatz]") {
  for (double x = 0.0; x < 12.0; x += 0.41) {
    CHECK(rational_profile(Family::I, 1.0, 0.7, 1.2, x) == rational_profile(Family::I, 1.0, 0.7, 1.2, -x));
    CHECK(rational_profile(Family::II, 1.0, 0.7, 1.2, x) == rational_profile(Family::II, 1.0, 0.7, 1.2, -x));
    CHECK(rational_profile(Family::III, 1.0, 0.7, 1.2, x) == -rational_profile(Family::III, 1.0, 0.7, 1.2, -x));
  }
}

TEST_CASE("potential ratios match their definitions", "[ansatz]") {
  for (double x = -5.0; x <= 5.0; x += 0.5) {
    const double c = std::cosh(0.8 * x);
    const double s = std::sinh(0.8 * x);
    CHECK_THAT(cosh2_ratio(2.0, 0.8, x), WithinAbs(c * c / (2.0 + c * c), 1e-14));
    CHECK_THAT(sinh2_ratio(2.0, 0.8, x), WithinAbs(s * s / (2.0 + c * c), 1e-14));
  }
}

TEST_CASE("superposed forms equal the rational forms", "[ansatz]") {
  Grid g{-30.0, 30.0, 1001};
  const double betas[] = {0.5, 1.0, 2.0, 3.0};
  const double deltas[] = {0.2, 2.0, 8.0};
  for (double beta : betas) {
    for (double delta : deltas) {
      const double B = std::sinh(delta) * std::sinh(delta);
      double worst = 0.0;
      for (std::size_t i = 0; i < g.n; ++i) {
        const double x = -30.0 + 0.06 * static_cast<double>(i);
        worst = std::max(worst, std::abs(superposed_profile(Superposition::kink_pair, beta, delta, x) -
                                         rational_profile(Family::I, 1.0, B, beta, x)));
        worst = std::max(worst, std::abs(superposed_profile(Superposition::bright_even, beta, delta, x) -
                                         rational_profile(Family::II, 1.0, B, beta, x)));
        worst = std::max(worst, std::abs(superposed_profile(Superposition::bright_odd, beta, delta, x) -
                                         rational_profile(Family::III, 1.0, B, beta, x)));
      }
      INFO("beta " << beta << " delta " << delta);
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("superposition reference points", "[ansatz]") {
  const double d = std::asinh(1.0);
  CHECK_THAT(superposed_profile(Superposition::kink_pair, 1.0, d, 0.0), WithinAbs(0.5, 1e-15));
  CHECK(superposed_profile(Superposition::bright_odd, 1.7, 2.3, 0.0) == 0.0);
  const double lo = superposed_profile(Superposition::bright_even, 1.0, 6.219, -6.219);
  const double hi = superposed_profile(Superposition::bright_even, 1.0, 6.219, 6.219);
  CHECK(lo == hi);
  CHECK(lo > superposed_profile(Superposition::bright_even, 1.0, 6.219, 0.0));
}

TEST_CASE("superposition rejects delta = 0 where it divides by zero", "[ansatz]") {
  CHECK_THROWS_AS(superposed_profile(Superposition::kink_pair, 1.0, 0.0, 0.3), Error);
  CHECK_THROWS_AS(superposed_profile(Superposition::bright_odd, 1.0, 0.0, 0.3), Error);
  CHECK_NOTHROW(superposed_profile(Superposition::bright_even, 1.0, 0.0, 0.3));
  CHECK_THROWS_AS(superposed_profile(Superposition::bright_even, 1.0, -1.0, 0.3), Error);
}

TEST_CASE("Petrov form equals the droplet profile", "[ansatz][petrov]") {
  for (double beta : {0.5, 1.0, 2.0}) {
    const auto r = solve_family_I(3.0, -2.8, 2.0, beta);
    const auto pp = petrov_params(r);
    CHECK_THAT(pp.mu0, WithinRel(-80.0 / 9.0, 1e-13));
    CHECK(pp.sqrt_n_m < 0.0);
    for (double x = -8.0; x <= 8.0; x += 0.13) {
      CHECK_THAT(petrov_profile(pp, x), WithinAbs(atomic_profile(r, x), 1e-10));
      CHECK_THAT(petrov_profile(pp, x, Component::molecular), WithinAbs(molecular_profile(r, x), 1e-10));
    }
    const double r0 = pp.ratio();
    const double peak = pp.sqrt_n_a * r0 / (1.0 + std::sqrt(1.0 - r0));
    CHECK_THAT(petrov_profile(pp, 0.0), WithinRel(peak, 1e-14));
  }
}

TEST_CASE("mu/mu0 covers (0, 1) as B runs over (0, inf)", "[ansatz][petrov]") {
  double prev = 0.0;
  for (double B : {1e-6, 1e-3, 0.1, 1.0, 10.0, 1e3, 1e6}) {
    const double r = petrov_params(1.0, -1.0, B, 1.0).ratio();
    CHECK(r > prev);
    CHECK(r < 1.0);
    prev = r;
  }
  CHECK(petrov_params(1.0, -1.0, 1e-8, 1.0).ratio() < 1e-7);
  CHECK(petrov_params(1.0, -1.0, 1e8, 1.0).ratio() > 1.0 - 1e-15);
}

TEST_CASE("99% half-width grows as mu/mu0 approaches 1", "[ansatz][petrov]") {
  double prev = 0.0;
  for (double B : {0.01, 0.1, 1.0, 10.0, 100.0, 1e4}) {
    const auto pp = petrov_params(1.0, -1.0, B, 1.0);
    const double w = petrov_half_width(pp, 0.99);
    CHECK(w > prev);
    CHECK_THAT(petrov_profile(pp, w), WithinRel(0.99 * petrov_profile(pp, 0.0), 1e-12));
    prev = w;
  }
}

TEST_CASE("Petrov parameters outside the window are rejected", "[ansatz][petrov]") {
  CHECK_THROWS_AS(petrov_params(1.0, -1.0, 0.0, 1.0), Error);
  PetrovParams bad;
  bad.sqrt_n_a = 1.0;
  bad.mu = -1.0;
  bad.mu0 = -0.5;
  CHECK_THROWS_AS(petrov_profile(bad, 0.0), Error);
}

TEST_CASE("sampled fields carry the stationary phases", "[ansatz][sample]") {
  const auto r = solve_family_I(3.0, -2.8, 2.0, 1.0);
  const Grid g = make_grid(20.0, 512);
  const auto s0 = sample_fields(r, g, 0.0);
  CHECK_FALSE(s0.truncated);
  for (std::size_t i = 0; i < g.n; ++i) {
    CHECK(s0.fields.psi_a[i].imag() == 0.0);
    CHECK(s0.fields.psi_m[i].imag() == 0.0);
  }
  const auto s1 = sample_fields(r, g, M_PI / r.mu);
  for (std::size_t i = 0; i < g.n; i += 7) {
    CHECK_THAT(std::abs(s1.fields.psi_a[i] + s0.fields.psi_a[i]), WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(s1.fields.psi_m[i] - s0.fields.psi_m[i]), WithinAbs(0.0, 1e-14));
  }
  const double peak = std::norm(s0.fields.psi_a[g.n / 2]);
  CHECK_THAT(peak, WithinRel(testing::kDropPeakDensity, 1e-13));
}

TEST_CASE("narrow grids are flagged, not thrown", "[ansatz][sample]") {
  const auto r = solve_family_I(3.0, -2.8, 2.0, 1.0);
  const auto s = sample_fields(r, make_grid(4.0, 256), 0.0);
  CHECK(s.truncated);
  CHECK(s.boundary_ratio > 1e-12);
}
