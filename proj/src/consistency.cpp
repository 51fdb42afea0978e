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

#include "ambec/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "ambec/kernels.hpp"

namespace ambec {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Sum of signed terms together with the sum of their magnitudes.
struct Terms {
  double sum = 0.0;
  double scale = 0.0;

  Terms& operator+=(double t) {
    sum += t;
    scale += std::abs(t);
    return *this;
  }
  Terms& operator-=(double t) { return *this += -t; }
  double normalized() const { return sum / (scale > 0.0 ? scale : 1.0); }
};

ResidualEntry entry(std::string id, const Terms& t) { return {std::move(id), t.sum, t.scale}; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

double shared_denominator(Family family, const CouplingParams& p, double* scale) {
  const double e = p.epsilon;
  if (family == Family::II) {
    *scale = std::abs(2.0 * p.g_am * e) + std::abs(3.0 * p.g_a * e) + std::abs(3.0 * p.alpha * p.alpha);
    return 2.0 * p.g_am * e - 3.0 * p.g_a * e + 3.0 * p.alpha * p.alpha;
  }
  *scale = std::abs(2.0 * p.g_am * e) + std::abs(p.g_a * e) + std::abs(p.alpha * p.alpha);
  return 2.0 * p.g_am * e - p.g_a * e + p.alpha * p.alpha;
}

GammaIntermediates gamma_at(Family family, const CouplingParams& p, double mu, double eps) {
  CouplingParams q = p;
  q.epsilon = eps;
  return gamma_intermediates(family, q, mu);
}

// Quadratic a2 B^2 + a1 B + a0 with its magnitude scale per power of B.
struct Quadratic {
  Terms c2, c1, c0;

  double value(double B) const { return c2.sum * B * B + c1.sum * B + c0.sum; }
  double scale(double B) const { return c2.scale * B * B + c1.scale * std::abs(B) + c0.scale; }
  double normalized(double B) const {
    const double s = scale(B);
    return value(B) / (s > 0.0 ? s : 1.0);
  }
};

Quadratic a24(const CouplingParams& p, double mu, double eps, const GammaIntermediates& gi) {
  const double G = gi.Gamma, C = gi.C, gm = p.g_m;
  Quadratic q;
  q.c2 += gm * G * G;
  q.c2 -= 2.0 * mu;
  q.c2 += eps;
  q.c1 += 2.0 * gm * G * C;
  q.c1 -= 5.0 * mu;
  q.c1 += 2.0 * eps;
  q.c0 += gm * C * C;
  q.c0 -= 3.0 * mu;
  q.c0 += eps;
  return q;
}

Quadratic a25(const CouplingParams& p, double mu, double eps, const GammaIntermediates& gi) {
  const double G = gi.Gamma, C = gi.C, a = p.alpha;
  Quadratic q;
  q.c2 += p.g_am * a * G * G;
  q.c2 += 8.0 * mu * a;
  q.c2 += kSqrt2 * p.g_a * eps * G;
  q.c1 += 2.0 * p.g_am * a * G * C;
  q.c1 += kSqrt2 * p.g_a * eps * G;
  q.c1 += kSqrt2 * p.g_a * eps * C;
  q.c1 += 8.0 * mu * a;
  q.c0 += p.g_am * a * C * C;
  q.c0 += kSqrt2 * p.g_a * eps * C;
  return q;
}

// Denominator and numerator of B = num / den for the first closed form of
// each family (A15 for II, A23 for III).
Terms b_primary_den(const CouplingParams& p, double mu, double eps, const GammaIntermediates& gi) {
  Terms t;
  t += p.alpha * p.alpha * gi.Gamma;
  t -= p.g_a * eps * gi.Gamma;
  t -= 4.0 * kSqrt2 * mu * p.alpha;
  return t;
}

Terms b_primary_num(Family family, const CouplingParams& p, double mu, double eps, const GammaIntermediates& gi) {
  Terms t;
  if (family == Family::II) {
    t += kSqrt2 * mu * p.alpha;
  } else {
    t += 3.0 * kSqrt2 * mu * p.alpha;
    t += p.g_a * eps * gi.C;
    t -= p.alpha * p.alpha * gi.C;
  }
  return t;
}

double b_primary(Family family, const CouplingParams& p, double mu, double eps, const GammaIntermediates& gi) {
  const Terms den = b_primary_den(p, mu, eps, gi);
  if (std::abs(den.sum) <= 1e-12 * den.scale) return kNaN;
  return b_primary_num(family, p, mu, eps, gi).sum / den.sum;
}

// Real root of the quadratic nearest to `target`; NaN if there is none.
double nearest_root(const Quadratic& q, double target) {
  const double a = q.c2.sum, b = q.c1.sum, c = q.c0.sum;
  if (a == 0.0) return b != 0.0 ? -c / b : kNaN;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return kNaN;
  const double s = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  const double r1 = s / a;
  const double r2 = s != 0.0 ? c / s : r1;
  return std::abs(r1 - target) <= std::abs(r2 - target) ? r1 : r2;
}

bool finite2(const std::array<double, 2>& f) { return std::isfinite(f[0]) && std::isfinite(f[1]); }
double norm_inf(const std::array<double, 2>& f) { return std::max(std::abs(f[0]), std::abs(f[1])); }

bool feasible(Family family, double mu, double eps) {
  if (!(mu < 0.0)) return false;
  if (family == Family::II && !(eps < 0.0)) return false;
  return true;
}

Seed newton(Family family, const CouplingParams& p, Seed seed, const NewtonOptions& o) {
  auto F = [&](double mu, double eps) -> std::array<double, 2> {
    if (!feasible(family, mu, eps)) return {kNaN, kNaN};
    return reduced_conditions(family, p, mu, eps);
  };
  double x[2] = {seed.mu, seed.eps};
  std::array<double, 2> f = F(x[0], x[1]);
  if (!finite2(f)) {
    throw Error(ErrorKind::convergence, "reduced conditions are not finite at the seed (mu=" + fmt(seed.mu) +
                                            ", eps=" + fmt(seed.eps) + ")");
  }
  for (int it = 0; it < o.max_iter; ++it) {
    if (norm_inf(f) < o.tol) return {x[0], x[1]};

    double J[2][2];
    for (int k = 0; k < 2; ++k) {
      const double h = o.fd_step * std::max(1.0, std::abs(x[k]));
      double xp[2] = {x[0], x[1]}, xm[2] = {x[0], x[1]};
      xp[k] += h;
      xm[k] -= h;
      const auto fp = F(xp[0], xp[1]);
      const auto fm = F(xm[0], xm[1]);
      if (!finite2(fp) || !finite2(fm)) {
        throw Error(ErrorKind::convergence, "finite-difference Jacobian undefined near mu=" + fmt(x[0]) +
                                                ", eps=" + fmt(x[1]));
      }
      J[0][k] = (fp[0] - fm[0]) / (2.0 * h);
      J[1][k] = (fp[1] - fm[1]) / (2.0 * h);
    }
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (det == 0.0 || !std::isfinite(det)) {
      throw Error(ErrorKind::convergence, "singular Jacobian at mu=" + fmt(x[0]) + ", eps=" + fmt(x[1]));
    }
    const double d0 = -(J[1][1] * f[0] - J[0][1] * f[1]) / det;
    const double d1 = -(-J[1][0] * f[0] + J[0][0] * f[1]) / det;

    double lambda = 1.0;
    bool improved = false;
    for (int h = 0; h <= o.max_halvings; ++h, lambda *= 0.5) {
      const double y0 = x[0] + lambda * d0, y1 = x[1] + lambda * d1;
      const auto fy = F(y0, y1);
      if (finite2(fy) && norm_inf(fy) < norm_inf(f)) {
        x[0] = y0;
        x[1] = y1;
        f = fy;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (norm_inf(f) < o.tol) return {x[0], x[1]};
  throw Error(ErrorKind::convergence, "Newton iteration did not converge; last residual " + fmt(norm_inf(f)) +
                                          " at mu=" + fmt(x[0]) + ", eps=" + fmt(x[1]));
}

SolutionRecord reconstruct(Family family, const CouplingParams& params, Seed root, const SolverOptions& opts) {
  const double mu = root.mu, eps = root.eps;
  if (family == Family::III && std::abs(eps) <= 1e-14 * std::abs(mu)) {
    throw Error(ErrorKind::out_of_scope, "root has epsilon = 0; the odd-cat solution needs mu, epsilon and alpha all nonzero");
  }
  CouplingParams p = params;
  p.epsilon = eps;
  const GammaIntermediates gi = gamma_intermediates(family, p, mu);
  const double B = b_primary(family, p, mu, eps, gi);
  if (!std::isfinite(B)) throw Error(ErrorKind::singular, "B denominator vanishes at the root");
  if (!(B > 0.0)) throw Error(ErrorKind::out_of_scope, "converged root has B = " + fmt(B) + " <= 0");

  const double D = gi.Gamma * B + gi.C;
  const double A2 = -kSqrt2 * eps * D / p.alpha;
  if (!(A2 > 0.0)) throw Error(ErrorKind::out_of_scope, "converged root gives A^2 = " + fmt(A2) + " <= 0");

  SolutionRecord r;
  r.family = family;
  r.couplings = p;
  r.mu = mu;
  r.beta = std::sqrt(-2.0 * mu);
  r.A = std::sqrt(A2);
  r.B = B;
  r.D = D;
  r.delta = delta_from_B(B);

  const auto violations = record_violations(r);
  if (!violations.empty()) throw Error(ErrorKind::out_of_scope, "converged root violates: " + violations.front());

  const auto alts = alternative_B(family, p, mu, eps);
  for (std::size_t i = 1; i < alts.size(); ++i) {
    if (!(std::abs(alts[i] - B) <= 1e-8 * std::max(1.0, std::abs(B)))) {
      throw Error(ErrorKind::inconsistent_root, "alternative closed forms for B disagree at the root: " + fmt(B) +
                                                    " vs " + fmt(alts[i]));
    }
  }

  const auto res = check_consistency(r, p);
  r.residual_max = res.max_normalized();
  if (!res.accepted(opts.tol_consistency)) {
    throw Error(ErrorKind::inconsistent_root, "residual " + fmt(r.residual_max) + " exceeds tolerance " +
                                                  fmt(opts.tol_consistency));
  }
  return r;
}

void require_alpha(const CouplingParams& p) {
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) {
    throw Error(ErrorKind::precondition, "alpha must be positive and finite");
  }
}

SolutionRecord solve_cat(Family family, const CouplingParams& params, Seed seed, const SolverOptions& opts) {
  const auto violations = validate_params(params, family);
  if (!violations.empty()) throw Error(ErrorKind::precondition, violations.front().message);
  if (!std::isfinite(seed.mu) || !std::isfinite(seed.eps)) throw Error(ErrorKind::precondition, "seed must be finite");
  if (!(seed.mu < 0.0)) throw Error(ErrorKind::precondition, "seed must have mu < 0");
  if (family == Family::II && !(seed.eps < 0.0)) throw Error(ErrorKind::precondition, "family II seed must have epsilon < 0");
  if (family == Family::III && seed.eps == 0.0) throw Error(ErrorKind::precondition, "family III seed must have epsilon != 0");
  return reconstruct(family, params, newton(family, params, seed, opts.newton), opts);
}

}  // namespace

double ResidualEntry::normalized() const noexcept { return residual / std::max(1.0, scale); }

double ConsistencyResidualVector::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, std::abs(e.residual));
  return m;
}

double ConsistencyResidualVector::max_normalized() const noexcept {
  double m = 0.0;
  for (const auto& e : entries) {
    const double v = std::abs(e.normalized());
    if (!(v <= m)) m = v;  // propagates NaN
  }
  return m;
}

const ResidualEntry& ConsistencyResidualVector::at(const std::string& id) const {
  for (const auto& e : entries) {
    if (e.id == id) return e;
  }
  throw Error(ErrorKind::precondition, "no residual with id " + id);
}

double default_tolerance() {
  if (const char* s = std::getenv("AMBEC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
  }
  return 1e-9;
}

GammaIntermediates gamma_intermediates(Family family, const CouplingParams& p, double mu) {
  if (family == Family::I) throw Error(ErrorKind::precondition, "family I has no Gamma intermediates");
  double scale = 0.0;
  const double den = shared_denominator(family, p, &scale);
  if (!(std::abs(den) > 1e-12 * scale)) {
    throw Error(ErrorKind::singular, "Gamma denominator vanishes for epsilon = " + fmt(p.epsilon));
  }
  GammaIntermediates g;
  if (family == Family::II) {
    g.Gamma = kSqrt2 * (p.epsilon + 6.0 * mu) * p.alpha / den;
  } else {
    g.Gamma = kSqrt2 * (p.epsilon - 2.0 * mu) * p.alpha / den;
    g.C = kSqrt2 * p.epsilon * p.alpha / den;
  }
  return g;
}

std::array<double, 2> reduced_conditions(Family family, const CouplingParams& params, double mu, double eps) {
  if (family == Family::I) throw Error(ErrorKind::precondition, "family I has a closed form");
  GammaIntermediates gi;
  try {
    gi = gamma_at(family, params, mu, eps);
  } catch (const Error&) {
    return {kNaN, kNaN};
  }
  const double a = params.alpha, G = gi.Gamma;
  if (family == Family::II) {
    Terms f1, f2;
    f1 += kSqrt2 * params.g_m * a * G * G;
    f1 += a * a * G;
    f1 -= params.g_a * eps * G;
    f1 -= 6.0 * kSqrt2 * a * mu;
    f1 += kSqrt2 * a * eps;
    f2 += params.g_am * a * G * G;
    f2 += 4.0 * kSqrt2 * a * a * G;
    f2 -= 3.0 * kSqrt2 * params.g_a * eps * G;
    f2 -= 24.0 * mu * a;
    return {f1.normalized(), f2.normalized()};
  }
  const double B = b_primary(family, params, mu, eps, gi);
  if (!std::isfinite(B)) return {kNaN, kNaN};
  return {a24(params, mu, eps, gi).normalized(B), a25(params, mu, eps, gi).normalized(B)};
}

std::vector<double> alternative_B(Family family, const CouplingParams& params, double mu, double eps) {
  if (family == Family::I) throw Error(ErrorKind::precondition, "family I has a closed form");
  const GammaIntermediates gi = gamma_at(family, params, mu, eps);
  const double B = b_primary(family, params, mu, eps, gi);
  const double G = gi.Gamma, a = params.alpha;
  if (family == Family::II) {
    const double b16 = mu / ((2.0 * mu - eps) - params.g_m * G * G);
    const double b17 = -8.0 * mu * a / (params.g_am * a * G * G + kSqrt2 * params.g_a * eps * G + 8.0 * mu * a);
    return {B, b16, b17};
  }
  return {B, nearest_root(a24(params, mu, eps, gi), B), nearest_root(a25(params, mu, eps, gi), B)};
}

ConsistencyResidualVector check_consistency(const SolutionRecord& r, const CouplingParams& p) {
  const double mu = r.mu, eps = r.couplings.epsilon, b2 = r.beta * r.beta;
  const double A = r.A, A2 = A * A, B = r.B, D = r.D, D2 = D * D;
  const double ga = p.g_a, gm = p.g_m, gam = p.g_am, al = p.alpha;
  ConsistencyResidualVector v;
  auto add = [&](const char* id, std::initializer_list<double> lhs, std::initializer_list<double> rhs) {
    Terms t;
    for (double x : lhs) t += x;
    for (double x : rhs) t -= x;
    v.entries.push_back(entry(id, t));
  };

  switch (r.family) {
    case Family::I: {
      add("A1", {mu}, {-2.0 * b2});
      add("A2", {kSqrt2 * al * D}, {-3.0 * b2, -6.0 * B * b2});
      add("A3", {ga * A2, gam * D2}, {4.0 * B * (B + 1.0) * b2});
      add("A4a", {eps}, {-3.0 * b2});
      add("A4b", {D2}, {A2});
      add("A5", {(gam + gm) * A2}, {2.0 * B * (1.0 + B) * b2});
      add("A6", {(ga - gm) * A2}, {2.0 * B * (B + 1.0) * b2});
      add("A7", {eps}, {1.5 * mu});
      add("A8", {A2 * 2.0 * al * al / (9.0 * b2), -A2 * ga, -A2 * gam}, {b2});
      add("A9", {gm}, {0.5 * ga, -0.5 * gam});
      break;
    }
    case Family::II:
    case Family::III: {
      const bool two = r.family == Family::II;
      const char* ids2[] = {"A10", "A11", "A12", "A13a", "A13b", "A14"};
      const char* ids3[] = {"A18", "A19", "A20", "A21a", "A21b", "A22"};
      const char** id = two ? ids2 : ids3;
      const double Bs = two ? B : B + 1.0;  // B in II, (B + 1) in III
      add(id[0], {2.0 * mu * D, -eps * D}, {-D * b2, al * A2 / kSqrt2});
      if (two) {
        add(id[1], {gam * A2}, {2.0 * mu * B, -eps * B, -1.5 * b2, -2.0 * B * b2});
        add(id[2], {gm * D2}, {2.0 * mu * B * B, -eps * B * B, 0.5 * B * b2});
      } else {
        add(id[1], {gam * A2}, {2.0 * mu * Bs, -eps * Bs, -0.5 * b2, -2.0 * B * b2});
        add(id[2], {gm * D2}, {2.0 * mu * Bs * Bs, -eps * Bs * Bs, -0.5 * Bs * b2});
      }
      add(id[3], {mu}, {-0.5 * b2});
      add(id[4], {ga * A2, kSqrt2 * al * D}, {two ? -b2 : -3.0 * b2, -4.0 * B * b2});
      add(id[5], {gam * D2, -Bs * ga * A2}, {4.0 * B * (B + 1.0) * b2});

      CouplingParams q = p;
      q.epsilon = eps;
      GammaIntermediates gi;
      bool have_gamma = true;
      try {
        gi = gamma_intermediates(r.family, q, mu);
      } catch (const Error&) {
        have_gamma = false;
      }
      auto push_nan = [&](const char* name) { v.entries.push_back({name, kNaN, 0.0}); };
      if (two) {
        if (!have_gamma) {
          push_nan("A15");
          push_nan("A16");
          push_nan("A17");
          break;
        }
        const double G = gi.Gamma;
        const Terms den = b_primary_den(q, mu, eps, gi);
        const double num = kSqrt2 * mu * al;
        v.entries.push_back({"A15", B * den.sum - num, std::abs(B) * den.scale + std::abs(num)});
        add("A16", {2.0 * mu * B, -eps * B, -gm * G * G * B}, {mu});
        add("A17", {B * gam * al * G * G, B * kSqrt2 * ga * eps * G, B * 8.0 * mu * al}, {-8.0 * mu * al});
      } else {
        if (!have_gamma) {
          push_nan("A23");
          push_nan("A24");
          push_nan("A25");
          break;
        }
        const Terms den = b_primary_den(q, mu, eps, gi);
        const Terms num = b_primary_num(r.family, q, mu, eps, gi);
        v.entries.push_back({"A23", B * den.sum - num.sum, std::abs(B) * den.scale + num.scale});
        const Quadratic q24 = a24(q, mu, eps, gi), q25 = a25(q, mu, eps, gi);
        v.entries.push_back({"A24", q24.value(B), q24.scale(B)});
        v.entries.push_back({"A25", q25.value(B), q25.scale(B)});
      }
      break;
    }
  }
  return v;
}

ConsistencyResidualVector check_consistency(const SolutionRecord& record) {
  return check_consistency(record, record.couplings);
}

SolutionRecord solve_family_I(double g_a, double g_am, double alpha, double beta, double tol) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::domain, "alpha must be positive");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorKind::domain, "beta must be positive");
  const double b2 = beta * beta;
  const double s = g_a + g_am;
  const double den = 2.0 * alpha * alpha / (9.0 * b2) - s;
  if (!(den > 0.0)) {
    std::ostringstream os;
    os << "no droplet: mu = " << fmt(-2.0 * b2) << " lies outside (mu0, 0)";
    if (s > 0.0) {
      os << "; admissible beta < " << fmt(std::sqrt(2.0 * alpha * alpha / (9.0 * s))) << " (mu0 = "
         << fmt(-(4.0 / 9.0) * alpha * alpha / s) << ")";
    } else {
      os << "; g_a + g_am <= 0 leaves no droplet window";
    }
    throw Error(ErrorKind::no_droplet, os.str());
  }
  SolutionRecord r;
  r.family = Family::I;
  r.couplings.g_a = g_a;
  r.couplings.g_am = g_am;
  r.couplings.g_m = 0.5 * (g_a - g_am);
  r.couplings.alpha = alpha;
  r.couplings.epsilon = -3.0 * b2;
  r.mu = -2.0 * b2;
  r.beta = beta;
  r.A = std::sqrt(b2 / den);
  r.D = -r.A;
  r.B = 0.5 * (kSqrt2 * alpha * r.A / (3.0 * b2) - 1.0);
  if (!(r.B > 0.0)) {
    throw Error(ErrorKind::out_of_scope, "B = " + fmt(r.B) + " <= 0 is outside the supported regime");
  }
  r.delta = delta_from_B(r.B);
  const auto res = check_consistency(r);
  r.residual_max = res.max_normalized();
  if (!res.accepted(tol)) {
    throw Error(ErrorKind::inconsistent_root, "closed form fails its own relations: residual " + fmt(r.residual_max));
  }
  return r;
}

SolutionRecord solve_family_II(const CouplingParams& params, Seed seed, const SolverOptions& opts) {
  return solve_cat(Family::II, params, seed, opts);
}

SolutionRecord solve_family_III(const CouplingParams& params, Seed seed, const SolverOptions& opts) {
  return solve_cat(Family::III, params, seed, opts);
}

std::array<Range, 2> default_scan_ranges(Family family, double alpha) {
  const double a2 = alpha * alpha;
  const Range mu{-200.0 * a2, -1e-4 * a2};
  if (family == Family::III) return {mu, Range{-200.0 * a2, 200.0 * a2}};
  return {mu, mu};
}

std::vector<SeedCandidate> grid_scan_seed(const CouplingParams& params, Family family, Range mu_range,
                                          Range eps_range, int n, ExecPolicy policy) {
  if (family == Family::I) throw Error(ErrorKind::precondition, "family I is solved in closed form; no scan needed");
  require_alpha(params);
  if (n < 2) throw Error(ErrorKind::precondition, "scan lattice needs n >= 2");
  for (const Range& r : {mu_range, eps_range}) {
    if (!(r.lo < r.hi) || !std::isfinite(r.lo) || !std::isfinite(r.hi)) {
      throw Error(ErrorKind::precondition, "scan range must be finite with lo < hi");
    }
  }
  if (!(mu_range.hi < 0.0)) throw Error(ErrorKind::precondition, "mu range must lie in mu < 0");
  if (family == Family::II && !(eps_range.hi < 0.0)) {
    throw Error(ErrorKind::precondition, "family II epsilon range must lie in epsilon < 0");
  }

  auto axis = [n](Range r) {
    const double s = 1e-3 * std::max(std::abs(r.lo), std::abs(r.hi));
    const double t0 = std::asinh(r.lo / s), t1 = std::asinh(r.hi / s);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = s * std::sinh(t0 + (t1 - t0) * i / (n - 1));
    v.front() = r.lo;
    v.back() = r.hi;
    return std::pair{v, std::pair{s, std::pair{t0, t1}}};
  };
  const auto [mus, mu_map] = axis(mu_range);
  const auto [eps, eps_map] = axis(eps_range);

  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<double> f1(N * N), f2(N * N);
  auto eval = [&](std::size_t k) {
    const auto f = reduced_conditions(family, params, mus[k / N], eps[k % N]);
    f1[k] = f[0];
    f2[k] = f[1];
  };
  if (policy == ExecPolicy::parallel) {
    kernels::parallel::for_each_index(N * N, eval);
  } else {
    kernels::serial::for_each_index(N * N, eval);
  }

  auto mid = [](double v0, double v1, const auto& map) {
    const double s = map.first;
    return s * std::sinh(0.5 * (std::asinh(v0 / s) + std::asinh(v1 / s)));
  };

  std::vector<SeedCandidate> out;
  for (std::size_t i = 0; i + 1 < N; ++i) {
    for (std::size_t j = 0; j + 1 < N; ++j) {
      const std::size_t c[4] = {i * N + j, i * N + j + 1, (i + 1) * N + j, (i + 1) * N + j + 1};
      bool ok = true;
      bool p1 = false, n1 = false, p2 = false, n2 = false;
      double score = std::numeric_limits<double>::infinity();
      for (std::size_t k : c) {
        if (!std::isfinite(f1[k]) || !std::isfinite(f2[k])) {
          ok = false;
          break;
        }
        (f1[k] > 0.0 ? p1 : n1) = true;
        (f2[k] > 0.0 ? p2 : n2) = true;
        score = std::min(score, std::abs(f1[k]) + std::abs(f2[k]));
      }
      if (ok && p1 && n1 && p2 && n2) {
        out.push_back({mid(mus[i], mus[i + 1], mu_map), mid(eps[j], eps[j + 1], eps_map), score});
      }
    }
  }
  if (out.empty()) {
    throw Error(ErrorKind::no_root, "no sign-change cell for family " + std::string(to_string(family)) +
                                        " in mu [" + fmt(mu_range.lo) + ", " + fmt(mu_range.hi) + "], epsilon [" +
                                        fmt(eps_range.lo) + ", " + fmt(eps_range.hi) + "]");
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.score < b.score; });
  return out;
}

SolutionRecord solve_scanned(const CouplingParams& params, Family family, Range mu_range, Range eps_range, int n,
                             const SolverOptions& opts) {
  const auto violations = validate_params(params, family);
  if (!violations.empty()) throw Error(ErrorKind::precondition, violations.front().message);
  const auto candidates = grid_scan_seed(params, family, mu_range, eps_range, n);
  std::string first_error;
  for (const auto& c : candidates) {
    try {
      return family == Family::II ? solve_family_II(params, {c.mu, c.eps}, opts)
                                  : solve_family_III(params, {c.mu, c.eps}, opts);
    } catch (const Error& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  throw Error(ErrorKind::no_root, "no scan candidate (" + std::to_string(candidates.size()) +
                              " tried) converged to an admissible root; first failure: " + first_error);
}

}  // namespace ambec
