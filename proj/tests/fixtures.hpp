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

// Coupling sets and reference values shared by the unit and acceptance
// tests. Reference roots were computed independently in 40-digit
// arithmetic by reducing each family's relations to one equation in B
// and rescaling to the alpha listed here (chosen so that beta ~ 0.5).

#pragma once

#include <array>

#include "ambec/core.hpp"

namespace ambec::testing {

// Droplet couplings; g_m = (g_a - g_am)/2 = 2.9.
inline constexpr double kDropGa = 3.0;
inline constexpr double kDropGam = -2.8;
inline constexpr double kDropGm = 2.9;
inline constexpr double kDropAlpha = 2.0;

// Droplet at beta = 1.
inline constexpr double kDropA2 = 1.451612903225806451612903;
inline constexpr double kDropA = 1.204828993353748294338965;
inline constexpr double kDropB = 0.06796183424706481115384605;
inline constexpr double kDropPeakDensity = 1.272739007475474259829083;

struct CatCase {
  const char* name;
  Family family;
  double g_a, g_m, g_am, alpha;
  // reference root
  double mu, eps, beta, A, B, D;
};

inline const std::array<CatCase, 4> kCatCases = {{
    {"even cat, g_am = -2.41", Family::II, -5.0, 1.0, -2.41, 0.16,
     -0.12013963374584130123, -0.2481359087735629509, 0.49018289187983968486,
     12.252121137396116436, 764.57375, 68.444401707743095442},
    {"even cat, g_am = -1.1", Family::II, -5.0, 1.0, -1.1, 1.12,
     -0.12493415740503111919, -0.55029684351914036266, 0.4998682974645043824,
     0.76349186725317486132, 1.3366709183673469388, 0.83890896151438369401},
    {"odd cat, g_am = -0.53", Family::III, -1.03, -1.2, -0.53, 0.042,
     -0.12557425813628045499, -0.23238754171301446051, 0.50114720020425227351,
     28.744253504869986015, 840.13425925925925926, 105.59017739960300931},
    {"odd cat, g_am = -0.8", Family::III, -1.03, -1.2, -0.8, 0.056,
     -0.12392896797353100746, 0.060449655785032200755, 0.49785332774529288559,
     1.4856817684287749539, 1.6586129065353442085, -1.4458751206188816706},
}};

inline CouplingParams couplings(const CatCase& c) {
  CouplingParams p;
  p.g_a = c.g_a;
  p.g_m = c.g_m;
  p.g_am = c.g_am;
  p.alpha = c.alpha;
  return p;
}

// Phase-space references from adaptive 30-digit quadrature of the
// marginal variances.
inline constexpr double kDropletVarX = 3.5453695210804465;
inline constexpr double kDropletVarP = 0.21948129443667161;
inline constexpr double kDropletRatio = 16.153401729200277;
inline constexpr double kEvenCatRatio = 118.52877543289122;
inline constexpr double kOddCatRatio = 29.556475199861072;

}  // namespace ambec::testing
