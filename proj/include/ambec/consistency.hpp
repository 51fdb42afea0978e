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

#include <array>
#include <string>
#include <vector>

#include "ambec/core.hpp"

namespace ambec {

// One stationarity relation evaluated as LHS - RHS. `scale` is the sum of
// the magnitudes of the individual terms, so residual / scale measures the
// cancellation relative to double-precision roundoff.
struct ResidualEntry {
  std::string id;
  double residual = 0.0;
  double scale = 0.0;

  double normalized() const noexcept;  // residual / max(1, scale)
};

struct ConsistencyResidualVector {
  std::vector<ResidualEntry> entries;

  double max_abs() const noexcept;
  double max_normalized() const noexcept;
  const ResidualEntry& at(const std::string& id) const;
  bool accepted(double tol) const noexcept { return max_normalized() < tol; }
};

// Families II and III: D = Gamma B (+ C for III).
struct GammaIntermediates {
  double Gamma = 0.0;
  double C = 0.0;
};

/// Throws ErrorKind::singular when the shared denominator vanishes to 1e-12
/// relative to its terms. Family I has no intermediates (precondition error).
GammaIntermediates gamma_intermediates(Family family, const CouplingParams& p, double mu);

struct NewtonOptions {
  int max_iter = 100;
  int max_halvings = 30;
  double tol = 1e-12;
  double fd_step = 1e-7;  // relative, times max(1, |v|)
};

/// Consistency tolerance; AMBEC_TOL in the environment overrides 1e-9.
double default_tolerance();

struct SolverOptions {
  NewtonOptions newton;
  double tol_consistency = default_tolerance();
};

/// Droplet solution in closed form. g_m is implied, g_m = (g_a - g_am)/2.
SolutionRecord solve_family_I(double g_a, double g_am, double alpha, double beta,
                              double tol = default_tolerance());

struct Seed {
  double mu = 0.0;
  double eps = 0.0;
};

/// Damped Newton on the two reduced conditions in (mu, eps), followed by
/// reconstruction of B, D, A, beta and a full residual check. params.epsilon
/// is ignored; the returned record carries the root's epsilon.
SolutionRecord solve_family_II(const CouplingParams& params, Seed seed, const SolverOptions& opts = {});
SolutionRecord solve_family_III(const CouplingParams& params, Seed seed, const SolverOptions& opts = {});

/// The two reduced conditions at (mu, eps), each divided by the sum of the
/// magnitudes of its terms. Non-finite where a denominator vanishes.
std::array<double, 2> reduced_conditions(Family family, const CouplingParams& params, double mu, double eps);

/// B at (mu, eps) through each alternative closed form.
/// II: {A15, A16, A17}. III: {A23, the A24 root nearest it, the A25 root
/// nearest it}; NaN entries when a form has no real value.
std::vector<double> alternative_B(Family family, const CouplingParams& params, double mu, double eps);

/// Every stationarity relation of the record's family. g_a, g_m, g_am and
/// alpha come from `params`; mu, beta, A, B, D and epsilon from the record.
ConsistencyResidualVector check_consistency(const SolutionRecord& record, const CouplingParams& params);
ConsistencyResidualVector check_consistency(const SolutionRecord& record);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct SeedCandidate {
  double mu = 0.0;
  double eps = 0.0;
  double score = 0.0;  // smallest |F1| + |F2| among the cell corners
};

/// Lattice of n x n points on asinh-spaced axes (dense near zero, sparse
/// far out). Returns the cells in which both reduced conditions change
/// sign, best first. Throws no_root for an empty list and precondition for
/// family I or for ranges outside the family's sign constraints.
std::vector<SeedCandidate> grid_scan_seed(const CouplingParams& params, Family family, Range mu_range,
                                          Range eps_range, int n = 200,
                                          ExecPolicy policy = ExecPolicy::parallel);

/// Default scan window for a family, scaled by alpha^2.
std::array<Range, 2> default_scan_ranges(Family family, double alpha);

/// grid_scan_seed followed by Newton from each candidate until one yields
/// an accepted record. Rethrows the first candidate's failure otherwise.
SolutionRecord solve_scanned(const CouplingParams& params, Family family, Range mu_range, Range eps_range,
                             int n = 200, const SolverOptions& opts = {});

}  // namespace ambec
