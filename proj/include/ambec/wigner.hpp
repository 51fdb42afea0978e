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

#include <functional>
#include <string_view>
#include <vector>

#include "ambec/core.hpp"

namespace ambec {

// W(x, p) = (1/pi) int psi^*(x + y) psi(x - y) e^{2 i p y} dy, hbar = 1.
inline constexpr std::string_view kWignerConvention = "wigner-1d-hbar1-v1";

struct WignerGrid {
  std::vector<double> x;
  std::vector<double> p;
  std::vector<double> W;  // row-major, W[i * p.size() + k] = W(x_i, p_k)
  double dx = 0.0;
  double dp = 0.0;
  double norm = 0.0;      // sum W dx dp

  double at(std::size_t i, std::size_t k) const { return W[i * p.size() + k]; }
  std::vector<double> x_marginal() const;  // int W dp
  std::vector<double> p_marginal() const;  // int W dx
};

using Profile = std::function<cplx(double)>;

/// Sampled field on `grid`. The y lattice reuses the grid spacing
/// (dy = dx) over p_count points, so p_k = k pi / (p_count dx) for
/// k = -p_count/2 .. p_count/2 - 1. Samples falling outside the grid
/// count as zero. Throws ErrorKind::truncation when the field is not
/// decayed at the grid edges or the y window clips the correlation.
WignerGrid wigner_transform(const ComplexField& psi, const Grid& grid, std::size_t p_count = 0,
                            ExecPolicy policy = ExecPolicy::parallel);

/// Closed-form profile. Rows sit on `grid`; the y window has the grid's
/// half-width with p_count points, and psi is evaluated exactly at x +- y.
WignerGrid wigner_transform(const Profile& psi, const Grid& grid, std::size_t p_count = 0,
                            ExecPolicy policy = ExecPolicy::parallel);

/// Direct quadrature of one value with the same y lattice, used as the
/// reference for the FFT rows.
double wigner_point_direct(const Profile& psi, double x, double p, double dy, std::size_t y_count);

struct PhaseSpaceMetrics {
  double var_x = 0.0;
  double var_p = 0.0;
  double ratio = 0.0;  // var_x / var_p; a squeezing proxy only
  double min_w = 0.0;
  double min_x = 0.0;
  double min_p = 0.0;
  double negative_volume = 0.0;  // int |min(W, 0)| dx dp
  double w00 = 0.0;              // W at the grid point nearest (0, 0)
  double norm = 0.0;             // before rescaling
};

/// Rescales W to unit norm before computing every quantity.
PhaseSpaceMetrics phase_space_metrics(const WignerGrid& w);

}  // namespace ambec
