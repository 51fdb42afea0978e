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

#include <string_view>
#include <vector>

#include "ambec/core.hpp"

namespace ambec {

// Effective potentials that turn the stationary equations into linear
// eigenvalue problems for the record's own profiles:
//   mu phi_a          = -1/2 phi_a'' + V_a phi_a
//   (2 mu - eps) phi_m = -1/4 phi_m'' + V_m phi_m
struct PotentialPair {
  Grid grid;
  std::vector<double> V_a, V_m, phi_a, phi_m;
};

/// V_a = g_a phi_a^2 + g_am phi_m^2 + sqrt2 alpha phi_m
/// V_m = g_m phi_m^2 + g_am phi_a^2 + alpha/sqrt2 phi_a^2/phi_m
/// The last ratio is evaluated in closed form, so it stays finite in the
/// tails. Throws ErrorKind::singular if |phi_m| < 1e-300 anywhere.
PotentialPair self_consistent_potentials(const SolutionRecord& record, const Grid& grid);

struct EigenResiduals {
  double r_a = 0.0;
  double r_m = 0.0;
};

/// Relative infinity norms of the two eigen equations. Points in the outer
/// 5% at each edge whose profile is below 1e-12 of its peak are skipped.
/// Second derivatives are spectral (five-point stencil if n is not a power
/// of two). Throws ErrorKind::truncation on an inadequate grid.
EigenResiduals eigen_residuals(const SolutionRecord& record, const Grid& grid);

/// Pointwise residuals behind eigen_residuals, for export.
struct EigenResidualProfile {
  std::vector<double> res_a, res_m;
  EigenResiduals norms;
};
EigenResidualProfile eigen_residual_profile(const SolutionRecord& record, const Grid& grid);

/// Least-squares fit V ~ c0 + c2 x^2 + c4 x^4 on |beta x| < 1.
struct WellFit {
  double c0 = 0.0;
  double c2 = 0.0;
  double c4 = 0.0;
};

WellFit fit_well(const std::vector<double>& V, const Grid& grid, double beta);

enum class WellShape { box, harmonic, double_well };
std::string_view to_string(WellShape s) noexcept;

// Thresholds of the shape classification.
inline constexpr double kDoubleWellBarrier = 0.125;  // barrier / depth
inline constexpr double kBoxFlatness = 0.25;         // c4 / (c2 beta^2)

struct WellAnalysis {
  WellFit fit;
  double flatness = 0.0;   // c4 / (c2 beta^2), dimensionless
  double x_star = 0.0;     // |x| of the global minimum
  double V_center = 0.0;   // V(0)
  double V_min = 0.0;
  double V_edge = 0.0;     // larger of the two boundary values
  double barrier = 0.0;    // V(0) - V_min
  double depth = 0.0;      // V_edge - V_min
  bool symmetric_minima = false;  // minima at +x* and -x*, x* > 0
  WellShape shape = WellShape::harmonic;
};

/// double_well: symmetric off-centre minima with barrier/depth >= 1/8.
/// box: off-centre minima with a lower barrier, or c2 > 0 with
///      flatness >= 1/4.
/// harmonic: anything else.
WellAnalysis analyze_well(const std::vector<double>& V, const Grid& grid, double beta);

}  // namespace ambec
