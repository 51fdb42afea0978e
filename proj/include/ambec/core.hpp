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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

/// Shared domain types for the coupled atomic/molecular condensate toolkit.
///
/// Units are the normalized ones of the 1D mean-field model: hbar = m_a = 1,
/// so the atomic kinetic term is -1/2 d^2/dx^2 and the molecular one is
/// -1/4 d^2/dx^2. No unit conversion layer exists.
namespace ambec {

using cplx = std::complex<double>;
using ComplexField = std::vector<cplx>;

/// Solution families. I: droplet atoms and molecules. II: even-cat atoms.
/// III: odd-cat atoms. The molecular field is a droplet in all three.
enum class Family { I, II, III };

std::string_view to_string(Family f) noexcept;
/// Accepts "I", "II", "III" (also "1", "2", "3").
Family family_from_string(std::string_view s);

enum class ErrorKind {
  domain,            // argument outside the supported regime
  singular,          // a denominator vanishes for these parameters
  no_droplet,        // family I: mu outside (mu0, 0)
  out_of_scope,      // converged but violates sign constraints / B <= 0
  convergence,       // Newton did not converge
  inconsistent_root, // alternative closed forms disagree at the root
  no_root,           // lattice scan found no candidate
  precondition,
  truncation,        // grid too narrow for the profile
  blow_up,           // NaN/Inf during propagation
  instability,       // conserved number drifted too far
  config,
  io,
};

std::string_view to_string(ErrorKind k) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct CouplingParams {
  double g_a = 0.0;   // atom-atom
  double g_m = 0.0;   // molecule-molecule
  double g_am = 0.0;  // atom-molecule
  double alpha = 0.0; // interconversion strength
  double epsilon = 0.0; // atom-molecule detuning
};

struct Violation {
  std::string constraint;
  std::string message;
};

/// Reports every violated admissibility constraint for the family. Never
/// throws; an empty result means the parameters are admissible.
std::vector<Violation> validate_params(const CouplingParams& params, Family family);

/// Delta = arcsinh(sqrt(B)), i.e. the inverse of B = sinh^2(Delta).
/// Throws ErrorKind::domain for B <= 0 (B in (-1, 0) is not supported).
double delta_from_B(double B);

/// One fully determined analytic solution. `couplings.epsilon` is the
/// detuning the family's consistency relations fix.
struct SolutionRecord {
  Family family = Family::I;
  CouplingParams couplings;
  double mu = 0.0;
  double beta = 0.0;
  double A = 0.0;
  double B = 0.0;
  double D = 0.0;
  double delta = 0.0;
  double residual_max = 0.0;

  double epsilon() const noexcept { return couplings.epsilon; }
};

/// Checks the family-specific type invariants (mu-beta relation, sign table,
/// delta consistency). Returns human-readable descriptions of failures.
std::vector<std::string> record_violations(const SolutionRecord& r, double tol = 1e-9);

/// JSON with keys in the fixed order: family, g_a, g_m, g_am, alpha,
/// epsilon, mu, beta, A, B, D, delta, residual_max.
nlohmann::ordered_json to_json(const SolutionRecord& r);
SolutionRecord record_from_json(const nlohmann::ordered_json& j);

/// Uniform periodic grid on [x_min, x_max) with n points.
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t n = 0;

  double dx() const noexcept { return (x_max - x_min) / static_cast<double>(n); }
  double x(std::size_t i) const noexcept { return x_min + static_cast<double>(i) * dx(); }
  double half_width() const noexcept { return 0.5 * (x_max - x_min); }
  std::vector<double> points() const;
};

struct FieldPair {
  Grid grid;
  ComplexField psi_a;
  ComplexField psi_m;
  double t = 0.0;
};

struct Diagnostics {
  double N = 0.0;
  double N_a = 0.0;
  double N_m = 0.0;
  double E = 0.0;
  double r_a = 0.0;
  double r_m = 0.0;
};

enum class ExecPolicy { serial, parallel };

}  // namespace ambec
