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

#include "ambec/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ambec/ansatz.hpp"
#include "ambec/spectral.hpp"

namespace ambec {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

// phi_a^2 / phi_m without forming the quotient of two small numbers.
double ratio_a2_over_m(const SolutionRecord& r, double x) {
  const double s = r.A * r.A / r.D;
  switch (r.family) {
    case Family::I: return s * rational_profile(Family::I, 1.0, r.B, r.beta, x);
    case Family::II: return s * cosh2_ratio(r.B, r.beta, x);
    case Family::III: return s * sinh2_ratio(r.B, r.beta, x);
  }
  return 0.0;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double masked_norm(const std::vector<double>& res, const std::vector<double>& phi) {
  const std::size_t n = phi.size();
  const double peak = max_abs(phi);
  const std::size_t edge = n / 20;
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool outer = i < edge || i >= n - edge;
    if (outer && std::abs(phi[i]) < 1e-12 * peak) continue;
    m = std::max(m, std::abs(res[i]));
  }
  return peak > 0.0 ? m / peak : m;
}

std::size_t center_index(const Grid& g) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < g.n; ++i) {
    if (std::abs(g.x(i)) < std::abs(g.x(best))) best = i;
  }
  return best;
}

}  // namespace

PotentialPair self_consistent_potentials(const SolutionRecord& r, const Grid& grid) {
  if (r.D == 0.0) throw Error(ErrorKind::singular, "molecular amplitude D = 0 makes V_m singular");
  const auto& c = r.couplings;
  PotentialPair out;
  out.grid = grid;
  out.V_a.resize(grid.n);
  out.V_m.resize(grid.n);
  out.phi_a.resize(grid.n);
  out.phi_m.resize(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    const double pa = atomic_profile(r, x);
    const double pm = molecular_profile(r, x);
    if (!(std::abs(pm) >= 1e-300)) {
      std::ostringstream os;
      os << "|phi_m| = " << std::abs(pm) << " at x = " << x << " makes V_m singular";
      throw Error(ErrorKind::singular, os.str());
    }
    out.phi_a[i] = pa;
    out.phi_m[i] = pm;
    out.V_a[i] = c.g_a * pa * pa + c.g_am * pm * pm + kSqrt2 * c.alpha * pm;
    out.V_m[i] = c.g_m * pm * pm + c.g_am * pa * pa + (c.alpha / kSqrt2) * ratio_a2_over_m(r, x);
  }
  return out;
}

EigenResidualProfile eigen_residual_profile(const SolutionRecord& r, const Grid& grid) {
  const double ratio = boundary_ratio(r, grid);
  if (!(ratio < kGridAdequacy)) {
    std::ostringstream os;
    os << "grid too narrow: boundary/peak amplitude " << ratio << " >= " << kGridAdequacy;
    throw Error(ErrorKind::truncation, os.str());
  }
  const PotentialPair p = self_consistent_potentials(r, grid);
  const auto dda = second_derivative(p.phi_a, grid);
  const auto ddm = second_derivative(p.phi_m, grid);
  const double em = 2.0 * r.mu - r.couplings.epsilon;
  EigenResidualProfile out;
  out.res_a.resize(grid.n);
  out.res_m.resize(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    out.res_a[i] = -0.5 * dda[i] + p.V_a[i] * p.phi_a[i] - r.mu * p.phi_a[i];
    out.res_m[i] = -0.25 * ddm[i] + p.V_m[i] * p.phi_m[i] - em * p.phi_m[i];
  }
  out.norms = {masked_norm(out.res_a, p.phi_a), masked_norm(out.res_m, p.phi_m)};
  return out;
}

EigenResiduals eigen_residuals(const SolutionRecord& r, const Grid& grid) {
  return eigen_residual_profile(r, grid).norms;
}

WellFit fit_well(const std::vector<double>& V, const Grid& grid, double beta) {
  if (!(beta > 0.0)) throw Error(ErrorKind::domain, "beta must be positive");
  // Normal equations in u = beta x, which keeps the 3x3 system well scaled.
  double S[5] = {0, 0, 0, 0, 0};  // sums of u^0, u^2, u^4, u^6, u^8
  double T[3] = {0, 0, 0};        // sums of V, V u^2, V u^4
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double u = beta * grid.x(i);
    if (std::abs(u) >= 1.0) continue;
    const double u2 = u * u;
    double pw = 1.0;
    for (double& s : S) {
      s += pw;
      pw *= u2;
    }
    T[0] += V[i];
    T[1] += V[i] * u2;
    T[2] += V[i] * u2 * u2;
  }
  double M[3][4] = {{S[0], S[1], S[2], T[0]}, {S[1], S[2], S[3], T[1]}, {S[2], S[3], S[4], T[2]}};
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r) {
      if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
    }
    if (M[piv][c] == 0.0) throw Error(ErrorKind::precondition, "too few points on |beta x| < 1 for a quartic fit");
    for (int k = 0; k < 4; ++k) std::swap(M[c][k], M[piv][k]);
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const double f = M[r][c] / M[c][c];
      for (int k = c; k < 4; ++k) M[r][k] -= f * M[c][k];
    }
  }
  const double b2 = beta * beta;
  return {M[0][3] / M[0][0], M[1][3] / M[1][1] * b2, M[2][3] / M[2][2] * b2 * b2};
}

std::string_view to_string(WellShape s) noexcept {
  switch (s) {
    case WellShape::box: return "box";
    case WellShape::harmonic: return "harmonic";
    case WellShape::double_well: return "double_well";
  }
  return "?";
}

WellAnalysis analyze_well(const std::vector<double>& V, const Grid& grid, double beta) {
  if (V.size() != grid.n) throw Error(ErrorKind::precondition, "potential length does not match the grid");
  WellAnalysis w;
  w.fit = fit_well(V, grid, beta);
  w.flatness = w.fit.c4 / (w.fit.c2 * beta * beta);

  const std::size_t ic = center_index(grid);
  const auto imin = static_cast<std::size_t>(std::min_element(V.begin(), V.end()) - V.begin());
  w.V_center = V[ic];
  w.V_min = V[imin];
  w.V_edge = std::max(V.front(), V.back());
  w.x_star = std::abs(grid.x(imin));
  w.barrier = w.V_center - w.V_min;
  w.depth = w.V_edge - w.V_min;

  // Mirror of x_i on [-L, L) is x_{n - i}; require a matching minimum there.
  if (imin != ic && imin > 0) {
    const std::size_t mirror = grid.n - imin;
    const double tol = 1e-9 * std::max({std::abs(w.V_min), std::abs(w.V_center), 1e-300});
    w.symmetric_minima = mirror < grid.n && std::abs(V[mirror] - w.V_min) <= tol && w.barrier > 0.0;
  }

  const double rel_barrier = w.depth > 0.0 ? w.barrier / w.depth : 0.0;
  if (w.symmetric_minima && rel_barrier >= kDoubleWellBarrier) {
    w.shape = WellShape::double_well;
  } else if (w.symmetric_minima || (w.fit.c2 > 0.0 && w.flatness >= kBoxFlatness)) {
    w.shape = WellShape::box;
  } else {
    w.shape = WellShape::harmonic;
  }
  return w;
}

}  // namespace ambec
