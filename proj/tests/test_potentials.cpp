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
#include "ambec/potentials.hpp"
#include "fixtures.hpp"

using namespace ambec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

SolutionRecord cat_record(const testing::CatCase& c) {
  const auto p = testing::couplings(c);
  return c.family == Family::II ? solve_family_II(p, {c.mu, c.eps}) : solve_family_III(p, {c.mu, c.eps});
}

std::vector<double> sample(const Grid& g, double (*f)(double)) {
  std::vector<double> v(g.n);
  for (std::size_t i = 0; i < g.n; ++i) v[i] = f(g.x(i));
  return v;
}

}  // namespace

TEST_CASE("droplet records solve their eigen equations", "[potentials][residual]") {
  for (double beta : {0.5, 1.0, 1.5, 2.0}) {
    const auto r = solve_family_I(3.0, -2.8, 2.0, beta);
    const auto res = eigen_residuals(r, default_grid(beta));
    INFO("beta " << beta);
    CHECK(res.r_a < 1e-8);
    CHECK(res.r_m < 1e-8);
  }
}

TEST_CASE("cat records solve their eigen equations", "[potentials][residual]") {
  for (const auto& c : testing::kCatCases) {
    INFO(c.name);
    const auto r = cat_record(c);
    const auto res = eigen_residuals(r, make_grid(40.0 / r.beta, 2048));
    CHECK(res.r_a < 1e-8);
    CHECK(res.r_m < 1e-8);
  }
}

TEST_CASE("a shifted mu appears one to one in the atomic residual", "[potentials][residual]") {
  const auto r = solve_family_I(3.0, -2.8, 2.0, 1.0);
  const Grid g = default_grid(1.0);
  const double base = eigen_residuals(r, g).r_a;
  for (double d : {1e-6, 1e-3, -2e-2}) {
    auto s = r;
    s.mu += d;
    CHECK_THAT(eigen_residuals(s, g).r_a, WithinAbs(std::abs(d), base + 1e-12));
  }
}

TEST_CASE("residuals converge with grid refinement", "[potentials][residual]") {
  const auto r = solve_family_I(3.0, -2.8, 2.0, 1.0);
  double prev = INFINITY;
  for (std::size_t n : {64u, 128u, 256u, 512u, 1024u}) {
    const double ra = eigen_residuals(r, make_grid(40.0, n)).r_a;
    CHECK(ra < prev);
    prev = ra;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("the five-point fallback also converges", "[potentials][residual]") {
  const auto r = solve_family_I(3.0, -2.8, 2.0, 1.0);
  const Grid coarse{-40.0, 40.0, 1500};
  const Grid fine{-40.0, 40.0, 3000};
  const double a = eigen_residuals(r, coarse).r_a;
  const double b = eigen_residuals(r, fine).r_a;
  CHECK(b < a / 10.0);
  CHECK(b < 1e-5);
}

TEST_CASE("narrow grids are refused", "[potentials][residual]") {
  const auto r = solve_family_I(3.0, -2.8, 2.0, 1.0);
  try {
    eigen_residuals(r, make_grid(5.0, 256));
    FAIL("expected a truncation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::truncation);
  }
}

TEST_CASE("V_m needs a nonzero molecular amplitude", "[potentials]") {
  auto r = solve_family_I(3.0, -2.8, 2.0, 1.0);
  r.D = 0.0;
  CHECK_THROWS_AS(self_consistent_potentials(r, make_grid(20.0, 256)), Error);
}

TEST_CASE("potentials are even and finite", "[potentials]") {
  for (const auto& c : testing::kCatCases) {
    const auto r = cat_record(c);
    const Grid g = make_grid(40.0 / r.beta, 1024);
    const auto p = self_consistent_potentials(r, g);
    for (std::size_t i = 1; i < g.n; ++i) {
      REQUIRE(std::isfinite(p.V_a[i]));
      REQUIRE(std::isfinite(p.V_m[i]));
      CHECK_THAT(p.V_a[i], WithinAbs(p.V_a[g.n - i], 1e-12 * std::max(1.0, std::abs(p.V_a[i]))));
      CHECK_THAT(p.V_m[i], WithinAbs(p.V_m[g.n - i], 1e-12 * std::max(1.0, std::abs(p.V_m[i]))));
    }
  }
}

TEST_CASE("cat records give a symmetric double well for the atoms", "[potentials][shape]") {
  for (const auto& c : testing::kCatCases) {
    INFO(c.name);
    const auto r = cat_record(c);
    const Grid g = make_grid(40.0 / r.beta, 2048);
    const auto p = self_consistent_potentials(r, g);
    const auto w = analyze_well(p.V_a, g, r.beta);
    CHECK(w.symmetric_minima);
    CHECK(w.x_star > 0.0);
    CHECK(w.V_center > w.V_min);
    CHECK(w.shape == WellShape::double_well);
  }
}

TEST_CASE("the first listed coupling set of each cat family has the higher barrier", "[potentials][shape]") {
  auto rel_barrier = [](const testing::CatCase& c) {
    const auto r = cat_record(c);
    const Grid g = make_grid(40.0 / r.beta, 2048);
    const auto w = analyze_well(self_consistent_potentials(r, g).V_a, g, r.beta);
    return w.barrier / w.depth;
  };
  CHECK(rel_barrier(testing::kCatCases[0]) > rel_barrier(testing::kCatCases[1]));
  CHECK(rel_barrier(testing::kCatCases[2]) > rel_barrier(testing::kCatCases[3]));
}

TEST_CASE("small droplets sit in a harmonic well", "[potentials][shape]") {
  const auto r = solve_family_I(3.0, -2.8, 2.0, 0.3);
  REQUIRE(r.B < 0.05);
  const Grid g = default_grid(r.beta);
  const auto p = self_consistent_potentials(r, g);
  const std::size_t ic = g.n / 2;
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = ic + 1; i < g.n && r.beta * g.x(i) < 0.3; ++i) {
    const double k = (p.V_a[i] - p.V_a[ic]) / (g.x(i) * g.x(i));
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  REQUIRE(lo > 0.0);
  CHECK(hi / lo - 1.0 < 0.05);
  CHECK(analyze_well(p.V_a, g, r.beta).shape == WellShape::harmonic);
}

TEST_CASE("flat-top droplets sit in box wells", "[potentials][shape]") {
  // mu/mu0 = 0.99
  const double mu = 0.99 * (-80.0 / 9.0);
  const double beta = std::sqrt(-mu / 2.0);
  const auto r = solve_family_I(3.0, -2.8, 2.0, beta);
  REQUIRE(r.B > 3.0);
  const Grid g = default_grid(beta);
  const auto p = self_consistent_potentials(r, g);
  CHECK(analyze_well(p.V_a, g, beta).shape == WellShape::box);
  CHECK(analyze_well(p.V_m, g, beta).shape == WellShape::box);
}

TEST_CASE("quartic fit recovers exact polynomials", "[potentials][fit]") {
  const Grid g = make_grid(4.0, 512);
  std::vector<double> V(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    const double x = g.x(i);
    V[i] = 1.5 - 0.7 * x * x + 0.3 * x * x * x * x;
  }
  const auto f = fit_well(V, g, 0.5);
  CHECK_THAT(f.c0, WithinAbs(1.5, 1e-10));
  CHECK_THAT(f.c2, WithinAbs(-0.7, 1e-10));
  CHECK_THAT(f.c4, WithinAbs(0.3, 1e-10));
}

TEST_CASE("shape thresholds on model potentials", "[potentials][shape]") {
  const Grid g = make_grid(1.6, 512);
  auto quadratic = [](double x) { return x * x; };
  auto flat = [](double x) { return x * x + x * x * x * x; };
  auto nearly_quadratic = [](double x) { return x * x + 0.1 * x * x * x * x; };
  auto deep_double = [](double x) { return x * x * x * x - 2.0 * x * x; };
  auto shallow_double = [](double x) { return x * x * x * x - 0.05 * x * x; };
  CHECK(analyze_well(sample(g, +quadratic), g, 1.0).shape == WellShape::harmonic);
  CHECK(analyze_well(sample(g, +nearly_quadratic), g, 1.0).shape == WellShape::harmonic);
  CHECK(analyze_well(sample(g, +flat), g, 1.0).shape == WellShape::box);
  CHECK(analyze_well(sample(g, +shallow_double), g, 1.0).shape == WellShape::box);
  const auto w = analyze_well(sample(g, +deep_double), g, 1.0);
  CHECK(w.shape == WellShape::double_well);
  CHECK_THAT(w.x_star, WithinAbs(1.0, g.dx()));
  CHECK_THAT(w.barrier, WithinAbs(1.0, 1e-3));
}

TEST_CASE("large-beta roots keep finite potentials on the default grid", "[potentials][residual]") {
  // alpha = 2 puts this odd-cat root at beta ~ 24, where a fixed-width
  // window would push phi_m below the smallest double.
  const auto& c = testing::kCatCases[2];
  auto p = testing::couplings(c);
  p.alpha = 2.0;
  const auto ranges = default_scan_ranges(c.family, p.alpha);
  const auto r = solve_scanned(p, c.family, ranges[0], ranges[1]);
  REQUIRE(r.beta > 20.0);
  CHECK_THAT(r.B, WithinRel(c.B, 1e-8));
  const auto res = eigen_residuals(r, default_grid(r.beta));
  CHECK(res.r_a < 1e-8);
  CHECK(res.r_m < 1e-8);
}
