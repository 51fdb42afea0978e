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

#include <memory>
#include <vector>

#include "ambec/core.hpp"

namespace ambec {

/// In-place complex FFTs of one length plus the matching periodic
/// wavenumbers k_j = 2 pi j / (n dx), j wrapped to [-n/2, n/2).
/// Plans are shared between copies; transforms are safe to run
/// concurrently on distinct buffers.
class Spectral {
 public:
  Spectral(std::size_t n, double dx);
  explicit Spectral(const Grid& grid) : Spectral(grid.n, grid.dx()) {}

  std::size_t size() const noexcept { return n_; }
  const std::vector<double>& k() const noexcept { return k_; }
  double k_max() const noexcept;

  void forward(cplx* data) const;   // unnormalized, e^{-i k x}
  void backward(cplx* data) const;  // includes the 1/n factor

  /// d^order f / dx^order. The Nyquist mode is dropped for odd orders.
  ComplexField derivative(const ComplexField& f, int order) const;
  std::vector<double> derivative(const std::vector<double>& f, int order) const;

 private:
  struct Plans;
  std::size_t n_;
  std::vector<double> k_;
  std::shared_ptr<const Plans> plans_;
};

/// Fourth-order five-point second derivative with periodic wrap. Fallback
/// for grids that are not a power of two.
std::vector<double> second_derivative_fd5(const std::vector<double>& f, double dx);

/// Spectral second derivative when n is a power of two, else the fallback.
std::vector<double> second_derivative(const std::vector<double>& f, const Grid& grid);

inline bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace ambec
