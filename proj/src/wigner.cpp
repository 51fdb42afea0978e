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

#include "ambec/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ambec/kernels.hpp"
#include "ambec/spectral.hpp"

namespace ambec {

namespace {

constexpr double kClipTolerance = 1e-10;

// Row i: c_j = psi^*(x + y_j) psi(x - y_j) for y_j = j dy, j in
// [-m/2, m/2), stored at j mod m. A backward DFT gives
// sum_j c_j e^{2 pi i k j / m} = sum_j c_j e^{2 i p_k y_j}.
template <class Corr>
WignerGrid assemble(const Grid& grid, std::size_t m, double dy, ExecPolicy policy, Corr&& corr) {
  if (m < 2 || m % 2 != 0) throw Error(ErrorKind::config, "p_count must be even and >= 2");
  WignerGrid w;
  w.x = grid.points();
  w.dx = grid.dx();
  w.dp = std::numbers::pi / (static_cast<double>(m) * dy);
  w.p.resize(m);
  const auto half = static_cast<std::ptrdiff_t>(m / 2);
  for (std::size_t k = 0; k < m; ++k) w.p[k] = static_cast<double>(static_cast<std::ptrdiff_t>(k) - half) * w.dp;
  w.W.assign(grid.n * m, 0.0);

  const Spectral fft(m, 1.0);
  std::vector<double> clip(grid.n, 0.0);
  const double scale = dy / std::numbers::pi;
  kernels::for_each_index(policy, grid.n, [&](std::size_t i) {
    ComplexField c(m);
    for (std::ptrdiff_t j = -half; j < half; ++j) {
      c[static_cast<std::size_t>((j + static_cast<std::ptrdiff_t>(m)) % static_cast<std::ptrdiff_t>(m))] =
          corr(i, j);
    }
    clip[i] = std::max(std::abs(c[m / 2]), std::abs(c[m / 2 - 1]));  // j = -m/2 and m/2 - 1
    // Backward transform without the 1/m factor.
    fft.backward(c.data());
    double* row = &w.W[i * m];
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t src = (k + m / 2) % m;  // ascending p
      row[k] = scale * static_cast<double>(m) * c[src].real();
    }
  });

  double peak = 0.0;
  for (std::size_t i = 0; i < grid.n; ++i) peak = std::max(peak, std::abs(corr(i, 0)));
  const double worst = *std::max_element(clip.begin(), clip.end());
  if (peak > 0.0 && worst > kClipTolerance * peak) {
    std::ostringstream os;
    os << "y window clips the correlation product: edge/peak = " << worst / peak;
    throw Error(ErrorKind::truncation, os.str());
  }
  double s = 0.0;
  for (double v : w.W) s += v;
  w.norm = s * w.dx * w.dp;
  return w;
}

}  // namespace

std::vector<double> WignerGrid::x_marginal() const {
  const std::size_t m = p.size();
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += W[i * m + k];
    out[i] = s * dp;
  }
  return out;
}

std::vector<double> WignerGrid::p_marginal() const {
  const std::size_t m = p.size();
  std::vector<double> out(m, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < m; ++k) out[k] += W[i * m + k];
  }
  for (double& v : out) v *= dx;
  return out;
}

WignerGrid wigner_transform(const ComplexField& psi, const Grid& grid, std::size_t p_count, ExecPolicy policy) {
  if (psi.size() != grid.n) throw Error(ErrorKind::precondition, "profile length does not match the grid");
  const std::size_t m = p_count == 0 ? grid.n : p_count;
  double peak = 0.0;
  for (const cplx& v : psi) peak = std::max(peak, std::abs(v));
  const double edge = std::max(std::abs(psi.front()), std::abs(psi.back()));
  if (peak > 0.0 && !(edge < 1e-12 * peak)) {
    std::ostringstream os;
    os << "profile not decayed at the grid edge: edge/peak = " << edge / peak;
    throw Error(ErrorKind::truncation, os.str());
  }
  const auto n = static_cast<std::ptrdiff_t>(grid.n);
  auto sample = [&](std::ptrdiff_t idx) { return idx >= 0 && idx < n ? psi[static_cast<std::size_t>(idx)] : cplx{}; };
  return assemble(grid, m, grid.dx(), policy, [&](std::size_t i, std::ptrdiff_t j) {
    const auto ii = static_cast<std::ptrdiff_t>(i);
    return std::conj(sample(ii + j)) * sample(ii - j);
  });
}

WignerGrid wigner_transform(const Profile& psi, const Grid& grid, std::size_t p_count, ExecPolicy policy) {
  const std::size_t m = p_count == 0 ? grid.n : p_count;
  const double dy = 2.0 * grid.half_width() / static_cast<double>(m);
  return assemble(grid, m, dy, policy, [&](std::size_t i, std::ptrdiff_t j) {
    const double x = grid.x(i), y = static_cast<double>(j) * dy;
    return std::conj(psi(x + y)) * psi(x - y);
  });
}

double wigner_point_direct(const Profile& psi, double x, double p, double dy, std::size_t y_count) {
  const auto half = static_cast<std::ptrdiff_t>(y_count / 2);
  cplx s = 0.0;
  for (std::ptrdiff_t j = -half; j < half; ++j) {
    const double y = static_cast<double>(j) * dy;
    s += std::conj(psi(x + y)) * psi(x - y) * std::polar(1.0, 2.0 * p * y);
  }
  return dy / std::numbers::pi * s.real();
}

PhaseSpaceMetrics phase_space_metrics(const WignerGrid& w) {
  PhaseSpaceMetrics r;
  r.norm = w.norm;
  if (!(w.norm != 0.0)) return r;
  const double inv = 1.0 / w.norm;
  const auto px = w.x_marginal();
  const auto pp = w.p_marginal();
  auto moments = [inv](const std::vector<double>& q, const std::vector<double>& pdf, double h) {
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      m1 += q[i] * pdf[i];
      m2 += q[i] * q[i] * pdf[i];
    }
    m1 *= h * inv;
    m2 *= h * inv;
    return m2 - m1 * m1;
  };
  r.var_x = moments(w.x, px, w.dx);
  r.var_p = moments(w.p, pp, w.dp);
  r.ratio = r.var_x / r.var_p;

  const std::size_t m = w.p.size();
  std::size_t imin = 0;
  double neg = 0.0;
  for (std::size_t idx = 0; idx < w.W.size(); ++idx) {
    if (w.W[idx] < w.W[imin]) imin = idx;
    if (w.W[idx] < 0.0) neg -= w.W[idx];
  }
  r.min_w = w.W[imin] * inv;
  r.min_x = w.x[imin / m];
  r.min_p = w.p[imin % m];
  r.negative_volume = neg * w.dx * w.dp * inv;

  auto nearest = [](const std::vector<double>& v) {
    std::size_t b = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (std::abs(v[i]) < std::abs(v[b])) b = i;
    }
    return b;
  };
  r.w00 = w.at(nearest(w.x), nearest(w.p)) * inv;
  return r;
}

}  // namespace ambec
