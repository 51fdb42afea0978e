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

#include "ambec/core.hpp"

#include <cmath>
#include <sstream>

namespace ambec {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  if (s == "I" || s == "1") return Family::I;
  if (s == "II" || s == "2") return Family::II;
  if (s == "III" || s == "3") return Family::III;
  throw Error(ErrorKind::config, "unknown solution family '" + std::string(s) + "' (expected I, II or III)");
}

std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::singular: return "singular";
    case ErrorKind::no_droplet: return "no_droplet";
    case ErrorKind::out_of_scope: return "out_of_scope";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::inconsistent_root: return "inconsistent_root";
    case ErrorKind::no_root: return "no_root";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::blow_up: return "blow_up";
    case ErrorKind::instability: return "instability";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
  }
  return "?";
}

std::vector<Violation> validate_params(const CouplingParams& p, Family family) {
  std::vector<Violation> out;
  auto add = [&](std::string c, std::string m) { out.push_back({std::move(c), std::move(m)}); };

  for (double v : {p.g_a, p.g_m, p.g_am, p.alpha, p.epsilon}) {
    if (!std::isfinite(v)) {
      add("finite", "all coupling parameters must be finite");
      return out;
    }
  }
  if (p.alpha == 0.0) {
    add("alpha != 0", "interconversion strength alpha must be nonzero for every solution family");
  } else if (p.alpha < 0.0) {
    add("alpha > 0", "interconversion strength alpha must be positive (sign conventions for D assume it)");
  }

  switch (family) {
    case Family::I:
      if (p.g_a == p.g_m) {
        add("g_a != g_m", "family I requires g_a != g_m: (g_a - g_m) A^2 = 2B(B+1) beta^2 has no solution otherwise");
      }
      if (p.g_a + p.g_am == 0.0) {
        add("g_a + g_am != 0", "g_a + g_am = 0 leaves the critical chemical potential undefined");
      }
      break;
    case Family::II:
      if (!(p.g_a < 0.0)) add("g_a < 0", "family II requires an attractive atom-atom interaction g_a < 0");
      if (!(p.g_m > 0.0)) add("g_m > 0", "family II requires a repulsive molecule-molecule interaction g_m > 0");
      break;
    case Family::III:
      if (!(p.g_m < 0.0)) add("g_m < 0", "family III requires g_m < 0");
      if (!(p.g_am < 0.0)) add("g_am < 0", "family III requires g_am < 0");
      break;
  }
  return out;
}

double delta_from_B(double B) {
  if (!(B > 0.0) || !std::isfinite(B)) {
    std::ostringstream os;
    os << "B = " << B << " is outside the supported regime B > 0";
    if (B > -1.0 && B <= 0.0) os << " (B in (-1, 0] is not handled)";
    throw Error(ErrorKind::domain, os.str());
  }
  return std::asinh(std::sqrt(B));
}

std::vector<std::string> record_violations(const SolutionRecord& r, double tol) {
  std::vector<std::string> out;
  auto near = [tol](double a, double b) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); };
  const double eps = r.couplings.epsilon;
  const double b2 = r.beta * r.beta;

  if (!(r.B > 0.0)) out.push_back("B must be positive");
  if (!(r.beta > 0.0)) out.push_back("beta must be positive");
  if (r.B > 0.0 && !near(r.delta, std::asinh(std::sqrt(r.B)))) out.push_back("delta != arcsinh(sqrt(B))");

  switch (r.family) {
    case Family::I:
      if (!near(r.mu, -2.0 * b2)) out.push_back("family I requires mu = -2 beta^2");
      if (!near(eps, 1.5 * r.mu)) out.push_back("family I requires epsilon = 3/2 mu");
      if (!(r.mu < 0.0 && eps < 0.0 && r.D < 0.0)) out.push_back("family I requires mu, epsilon, D < 0");
      break;
    case Family::II:
      if (!near(r.mu, -0.5 * b2)) out.push_back("family II requires mu = -beta^2/2");
      if (!(r.mu < 0.0 && eps < 0.0 && r.couplings.g_a < 0.0)) out.push_back("family II requires mu, epsilon, g_a < 0");
      if (!(r.couplings.g_m > 0.0 && r.D > 0.0)) out.push_back("family II requires g_m, D > 0");
      break;
    case Family::III:
      if (!near(r.mu, -0.5 * b2)) out.push_back("family III requires mu = -beta^2/2");
      if (!(r.mu < 0.0 && r.couplings.g_m < 0.0 && r.couplings.g_am < 0.0)) out.push_back("family III requires mu, g_m, g_am < 0");
      if (!(eps * r.D < 0.0)) out.push_back("family III requires epsilon and D of opposite sign");
      break;
  }
  return out;
}

nlohmann::ordered_json to_json(const SolutionRecord& r) {
  nlohmann::ordered_json j;
  j["family"] = std::string(to_string(r.family));
  j["g_a"] = r.couplings.g_a;
  j["g_m"] = r.couplings.g_m;
  j["g_am"] = r.couplings.g_am;
  j["alpha"] = r.couplings.alpha;
  j["epsilon"] = r.couplings.epsilon;
  j["mu"] = r.mu;
  j["beta"] = r.beta;
  j["A"] = r.A;
  j["B"] = r.B;
  j["D"] = r.D;
  j["delta"] = r.delta;
  j["residual_max"] = r.residual_max;
  return j;
}

SolutionRecord record_from_json(const nlohmann::ordered_json& j) {
  try {
    SolutionRecord r;
    r.family = family_from_string(j.at("family").get<std::string>());
    r.couplings.g_a = j.at("g_a").get<double>();
    r.couplings.g_m = j.at("g_m").get<double>();
    r.couplings.g_am = j.at("g_am").get<double>();
    r.couplings.alpha = j.at("alpha").get<double>();
    r.couplings.epsilon = j.at("epsilon").get<double>();
    r.mu = j.at("mu").get<double>();
    r.beta = j.at("beta").get<double>();
    r.A = j.at("A").get<double>();
    r.B = j.at("B").get<double>();
    r.D = j.at("D").get<double>();
    r.delta = j.at("delta").get<double>();
    r.residual_max = j.value("residual_max", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::io, std::string("malformed solution record: ") + e.what());
  }
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = x(i);
  return xs;
}

}  // namespace ambec
