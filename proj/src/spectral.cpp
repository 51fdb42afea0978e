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

#include "ambec/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace ambec {

namespace {

// The FFTW planner is not reentrant; execution with new arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

struct Spectral::Plans {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  explicit Plans(std::size_t n) {
    ComplexField scratch(n);
    std::lock_guard<std::mutex> lock(planner_mutex());
    const int flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int len = static_cast<int>(n);
    fwd = fftw_plan_dft_1d(len, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_FORWARD, flags);
    bwd = fftw_plan_dft_1d(len, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_BACKWARD, flags);
    if (!fwd || !bwd) throw Error(ErrorKind::config, "FFTW could not create a plan of length " + std::to_string(n));
  }
  ~Plans() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
  }
  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
};

Spectral::Spectral(std::size_t n, double dx) : n_(n), k_(n) {
  if (n < 2) throw Error(ErrorKind::config, "spectral grid needs at least 2 points");
  if (!(dx > 0.0)) throw Error(ErrorKind::config, "grid spacing must be positive");
  const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n) * dx);
  for (std::size_t j = 0; j < n; ++j) {
    const double jj = j < (n + 1) / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n);
    k_[j] = dk * jj;
  }
  plans_ = std::make_shared<const Plans>(n);
}

double Spectral::k_max() const noexcept {
  double m = 0.0;
  for (double v : k_) m = std::max(m, std::abs(v));
  return m;
}

void Spectral::forward(cplx* data) const { fftw_execute_dft(plans_->fwd, as_fftw(data), as_fftw(data)); }

void Spectral::backward(cplx* data) const {
  fftw_execute_dft(plans_->bwd, as_fftw(data), as_fftw(data));
  const double s = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) data[i] *= s;
}

ComplexField Spectral::derivative(const ComplexField& f, int order) const {
  if (f.size() != n_) throw Error(ErrorKind::precondition, "field length does not match the spectral grid");
  ComplexField g = f;
  forward(g.data());
  const cplx ik{0.0, 1.0};
  for (std::size_t j = 0; j < n_; ++j) {
    if (order % 2 == 1 && n_ % 2 == 0 && j == n_ / 2) {
      g[j] = 0.0;
      continue;
    }
    g[j] *= std::pow(ik * k_[j], order);
  }
  backward(g.data());
  return g;
}

std::vector<double> Spectral::derivative(const std::vector<double>& f, int order) const {
  ComplexField c(f.begin(), f.end());
  const ComplexField d = derivative(c, order);
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i].real();
  return out;
}

std::vector<double> second_derivative_fd5(const std::vector<double>& f, double dx) {
  const std::size_t n = f.size();
  if (n < 5) throw Error(ErrorKind::config, "five-point stencil needs at least 5 points");
  std::vector<double> out(n);
  const double s = 1.0 / (12.0 * dx * dx);
  auto at = [&](std::ptrdiff_t i) { return f[static_cast<std::size_t>((i % static_cast<std::ptrdiff_t>(n) + n) % n)]; };
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::ptrdiff_t>(i);
    out[i] = (-at(j - 2) + 16.0 * at(j - 1) - 30.0 * at(j) + 16.0 * at(j + 1) - at(j + 2)) * s;
  }
  return out;
}

std::vector<double> second_derivative(const std::vector<double>& f, const Grid& grid) {
  if (is_power_of_two(grid.n)) return Spectral(grid).derivative(f, 2);
  return second_derivative_fd5(f, grid.dx());
}

}  // namespace ambec
