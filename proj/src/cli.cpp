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

#include "ambec/cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include <CLI11.hpp>

#include "ambec/ansatz.hpp"
#include "ambec/consistency.hpp"
#include "ambec/dynamics.hpp"
#include "ambec/io.hpp"
#include "ambec/potentials.hpp"
#include "ambec/wigner.hpp"

namespace ambec::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Options {
  std::string family = "I";
  double g_a = kNaN, g_m = kNaN, g_am = kNaN, alpha = kNaN, beta = kNaN;
  bool scan = false;
  double seed_mu = kNaN, seed_eps = kNaN;
  double mu_min = kNaN, mu_max = kNaN, eps_min = kNaN, eps_max = kNaN;
  int scan_n = 200;
  std::string solution;
  double grid_l = 0.0;
  std::size_t grid_n = 0;  // 0: the command's default
  double t = kNaN;
  double dt = 1e-3;
  int record_every = 100;
  double tol_drift = 1e-6;
  double noise = 0.0;
  std::uint64_t seed = 1;
  bool serial = false;
  std::size_t p_count = 0;
  std::string kind;
  std::string component = "atomic";
  double delta = kNaN;
  double mu = kNaN;
  int points = 20;
  std::string out;
  double tol = kNaN;
};

// Exceptions carrying an exit code for input problems found by the CLI
// itself rather than by a library call.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

bool given(double v) { return !std::isnan(v); }

double tolerance(const Options& o) { return given(o.tol) ? o.tol : default_tolerance(); }

nlohmann::ordered_json num(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

SolutionRecord load_solution(const Options& o) {
  require(!o.solution.empty(), "--solution is required");
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(read_text(o.solution));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::io, "cannot parse " + o.solution + ": " + e.what());
  }
  SolutionRecord r = record_from_json(j);
  const auto v = record_violations(r, 1e-8);
  if (!v.empty()) throw Error(ErrorKind::precondition, o.solution + ": " + v.front());
  return r;
}

Grid grid_for(const Options& o, double beta) {
  if (o.grid_l > 0.0) return make_grid(o.grid_l, o.grid_n);
  return default_grid(beta, o.grid_n);
}

std::string record_comment(const SolutionRecord& r) { return "solution: " + to_json(r).dump(); }

void finish(const Options& o, const std::string& command, nlohmann::ordered_json params,
            const std::vector<std::string>& outputs, std::chrono::steady_clock::time_point start) {
  RunManifest m;
  m.command = command;
  m.parameters = std::move(params);
  if (!o.solution.empty()) m.inputs.push_back(o.solution);
  m.outputs = outputs;
  m.duration_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  m.write(manifest_path_for(outputs.front()));
}

nlohmann::ordered_json grid_json(const Grid& g) {
  return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"n", g.n}};
}

// ---------------------------------------------------------------- solve

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Family fam = family_from_string(o.family);
  const double tol = tolerance(o);
  require(given(o.g_a) && given(o.g_am) && given(o.alpha), "--g-a, --g-am and --alpha are required");

  CouplingParams p;
  p.g_a = o.g_a;
  p.g_am = o.g_am;
  p.alpha = o.alpha;
  if (fam == Family::I) {
    p.g_m = given(o.g_m) ? o.g_m : 0.5 * (o.g_a - o.g_am);
  } else {
    require(given(o.g_m), "--g-m is required for families II and III");
    p.g_m = o.g_m;
  }
  const auto violations = validate_params(p, fam);
  if (!violations.empty()) {
    for (const auto& v : violations) err << "invalid parameters: " << v.constraint << ": " << v.message << "\n";
    return kInvalidInput;
  }

  nlohmann::ordered_json params = {{"family", std::string(to_string(fam))}, {"g_a", o.g_a},
                                   {"g_m", p.g_m}, {"g_am", o.g_am}, {"alpha", o.alpha}, {"tol", tol}};
  SolutionRecord r;
  if (fam == Family::I) {
    require(given(o.beta), "--beta is required for family I");
    if (given(o.g_m) && std::abs(o.g_m - 0.5 * (o.g_a - o.g_am)) > 1e-12 * std::max(1.0, std::abs(o.g_m))) {
      err << "invalid parameters: family I fixes g_m = (g_a - g_am)/2 = " << format_double(0.5 * (o.g_a - o.g_am))
          << "\n";
      return kInvalidInput;
    }
    params["beta"] = o.beta;
    r = solve_family_I(o.g_a, o.g_am, o.alpha, o.beta, tol);
  } else {
    SolverOptions so;
    so.tol_consistency = tol;
    if (given(o.seed_mu) || given(o.seed_eps)) {
      require(given(o.seed_mu) && given(o.seed_eps), "--seed-mu and --seed-eps go together");
      params["seed"] = {{"mu", o.seed_mu}, {"eps", o.seed_eps}};
      r = fam == Family::II ? solve_family_II(p, {o.seed_mu, o.seed_eps}, so)
                            : solve_family_III(p, {o.seed_mu, o.seed_eps}, so);
    } else {
      auto ranges = default_scan_ranges(fam, o.alpha);
      if (given(o.mu_min)) ranges[0].lo = o.mu_min;
      if (given(o.mu_max)) ranges[0].hi = o.mu_max;
      if (given(o.eps_min)) ranges[1].lo = o.eps_min;
      if (given(o.eps_max)) ranges[1].hi = o.eps_max;
      params["scan"] = {{"mu", {ranges[0].lo, ranges[0].hi}}, {"eps", {ranges[1].lo, ranges[1].hi}}, {"n", o.scan_n}};
      r = solve_scanned(p, fam, ranges[0], ranges[1], o.scan_n, so);
    }
  }

  const std::string path = o.out.empty() ? "solution.json" : o.out;
  write_text(path, to_json(r).dump(2) + "\n");
  finish(o, "solve", params, {path}, start);
  out << to_json(r).dump() << "\n";
  return kOk;
}

// -------------------------------------------------------------- profile

int cmd_profile(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const SolutionRecord r = load_solution(o);
  const Grid g = grid_for(o, r.beta);
  const double t = given(o.t) ? o.t : 0.0;
  const SampledFields s = sample_fields(r, g, t);
  if (s.truncated) {
    err << "warning: grid truncates the profile, boundary/peak amplitude = " << format_double(s.boundary_ratio)
        << "\n";
  }
  CsvWriter csv({"x", "psi_a_re", "psi_a_im", "psi_m_re", "psi_m_im", "density_a", "density_m"});
  csv.comment(record_comment(r));
  csv.comment("t = " + format_double(t) + ", boundary_ratio = " + format_double(s.boundary_ratio));
  for (std::size_t i = 0; i < g.n; ++i) {
    const cplx a = s.fields.psi_a[i], m = s.fields.psi_m[i];
    csv.row({g.x(i), a.real(), a.imag(), m.real(), m.imag(), std::norm(a), std::norm(m)});
  }
  const std::string path = o.out.empty() ? "profile.csv" : o.out;
  csv.write(path, manifest_path_for(path));
  finish(o, "profile", {{"t", t}, {"grid", grid_json(g)}}, {path}, start);
  out << "wrote " << path << " (" << g.n << " rows)\n";
  return kOk;
}

// ------------------------------------------------------------ potential

std::string well_comment(const char* name, const WellAnalysis& w) {
  return std::string(name) + ": shape = " + std::string(to_string(w.shape)) +
         ", x_star = " + format_double(w.x_star) + ", barrier = " + format_double(w.barrier) +
         ", depth = " + format_double(w.depth) + ", flatness = " + format_double(w.flatness) +
         ", c0 = " + format_double(w.fit.c0) + ", c2 = " + format_double(w.fit.c2) +
         ", c4 = " + format_double(w.fit.c4);
}

int cmd_potential(const Options& o, std::ostream& out, std::ostream&) {
  const auto start = std::chrono::steady_clock::now();
  const SolutionRecord r = load_solution(o);
  const Grid g = grid_for(o, r.beta);
  const PotentialPair pp = self_consistent_potentials(r, g);
  const WellAnalysis wa = analyze_well(pp.V_a, g, r.beta);
  const WellAnalysis wm = analyze_well(pp.V_m, g, r.beta);
  CsvWriter csv({"x", "V_a", "V_m", "phi_a", "phi_m"});
  csv.comment(record_comment(r));
  csv.comment(well_comment("V_a", wa));
  csv.comment(well_comment("V_m", wm));
  for (std::size_t i = 0; i < g.n; ++i) csv.row({g.x(i), pp.V_a[i], pp.V_m[i], pp.phi_a[i], pp.phi_m[i]});
  const std::string path = o.out.empty() ? "potential.csv" : o.out;
  csv.write(path, manifest_path_for(path));
  finish(o, "potential", {{"grid", grid_json(g)}}, {path}, start);
  out << "V_a " << to_string(wa.shape) << ", V_m " << to_string(wm.shape) << "; wrote " << path << "\n";
  return kOk;
}

// ------------------------------------------------------------- residual

int cmd_residual(const Options& o, std::ostream& out, std::ostream&) {
  const auto start = std::chrono::steady_clock::now();
  const SolutionRecord r = load_solution(o);
  const Grid g = grid_for(o, r.beta);
  const EigenResidualProfile e = eigen_residual_profile(r, g);
  const ConsistencyResidualVector cv = check_consistency(r);
  nlohmann::ordered_json rel = nlohmann::ordered_json::object();
  for (const auto& en : cv.entries) rel[en.id] = {{"residual", num(en.residual)}, {"normalized", num(en.normalized())}};

  CsvWriter csv({"x", "res_a", "res_m"});
  csv.comment(record_comment(r));
  csv.comment("r_a = " + format_double(e.norms.r_a) + ", r_m = " + format_double(e.norms.r_m) +
              " (relative max norm; outer 5% below 1e-12 of peak excluded)");
  csv.comment("consistency: " + rel.dump());
  for (std::size_t i = 0; i < g.n; ++i) csv.row({g.x(i), e.res_a[i], e.res_m[i]});
  const std::string path = o.out.empty() ? "residual.csv" : o.out;
  csv.write(path, manifest_path_for(path));
  finish(o, "residual", {{"grid", grid_json(g)}}, {path}, start);
  out << "r_a = " << format_double(e.norms.r_a) << ", r_m = " << format_double(e.norms.r_m)
      << ", consistency max = " << format_double(cv.max_normalized()) << "\n";
  return kOk;
}

// --------------------------------------------------------------- evolve

int cmd_evolve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const SolutionRecord r = load_solution(o);
  const Grid g = grid_for(o, r.beta);
  SampledFields s = sample_fields(r, g, 0.0);
  if (s.truncated) {
    err << "warning: grid truncates the profile, boundary/peak amplitude = " << format_double(s.boundary_ratio)
        << "\n";
  }
  if (o.noise > 0.0) add_amplitude_noise(s.fields, o.noise, o.seed);
  PropagatorConfig cfg;
  cfg.dt = o.dt;
  cfg.T = given(o.t) ? o.t : 10.0;
  cfg.record_every = o.record_every;
  cfg.tol_drift = o.tol_drift;
  cfg.policy = o.serial ? ExecPolicy::serial : ExecPolicy::parallel;
  const Trajectory tr = evolve(s.fields, r.couplings, cfg);

  CsvWriter csv({"t", "N", "N_a", "N_m", "E", "drift_a", "drift_m"});
  csv.comment(record_comment(r));
  csv.comment("dt = " + format_double(cfg.dt) + ", T = " + format_double(cfg.T) + ", noise = " +
              format_double(o.noise) + ", seed = " + std::to_string(o.seed));
  for (const auto& smp : tr.samples) csv.row({smp.t, smp.N, smp.N_a, smp.N_m, smp.E, smp.drift_a, smp.drift_m});
  const std::string path = o.out.empty() ? "evolve.csv" : o.out;
  csv.write(path, manifest_path_for(path));
  finish(o, "evolve",
         {{"dt", cfg.dt}, {"T", cfg.T}, {"record_every", cfg.record_every}, {"noise", o.noise}, {"seed", o.seed},
          {"grid", grid_json(g)}},
         {path}, start);
  out << "steps = " << tr.steps << ", max drift = " << format_double(tr.max_drift())
      << ", N drift = " << format_double(tr.max_relative_number_drift())
      << ", E drift = " << format_double(tr.max_relative_energy_drift()) << "\n";
  return kOk;
}

// --------------------------------------------------------------- wigner

int cmd_wigner(const Options& o, std::ostream& out, std::ostream&) {
  const auto start = std::chrono::steady_clock::now();
  Profile psi;
  double beta = 1.0;
  nlohmann::ordered_json params;
  if (!o.solution.empty()) {
    const SolutionRecord r = load_solution(o);
    beta = r.beta;
    require(o.component == "atomic" || o.component == "molecular", "--component must be atomic or molecular");
    if (o.component == "atomic") {
      psi = [r](double x) { return cplx(atomic_profile(r, x)); };
    } else {
      psi = [r](double x) { return cplx(molecular_profile(r, x)); };
    }
    params["component"] = o.component;
  } else {
    require(!o.kind.empty(), "either --solution or --kind is required");
    params["kind"] = o.kind;
    if (o.kind == "gaussian") {
      psi = [](double x) { return cplx(std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x)); };
    } else {
      require(given(o.beta) && given(o.delta), "--beta and --delta are required with --kind");
      require(o.beta > 0.0, "--beta must be positive");
      Superposition k;
      if (o.kind == "kink_pair") {
        k = Superposition::kink_pair;
      } else if (o.kind == "bright_even") {
        k = Superposition::bright_even;
      } else if (o.kind == "bright_odd") {
        k = Superposition::bright_odd;
      } else {
        throw InputError("--kind must be kink_pair, bright_even, bright_odd or gaussian");
      }
      beta = o.beta;
      const double d = o.delta;
      superposed_profile(k, beta, d, 0.0);  // validates delta
      psi = [k, beta, d](double x) { return cplx(superposed_profile(k, beta, d, x)); };
      params["beta"] = beta;
      params["delta"] = d;
    }
  }
  const std::size_t n = o.grid_n;
  const Grid g = o.grid_l > 0.0 ? make_grid(o.grid_l, n) : default_grid(beta, n);
  const WignerGrid w = wigner_transform(psi, g, o.p_count);
  const PhaseSpaceMetrics m = phase_space_metrics(w);

  const std::string path = o.out.empty() ? "wigner.csv" : o.out;
  const std::string metrics_path = path + ".metrics.json";
  CsvWriter csv({"x", "p", "W"});
  csv.comment("convention: " + std::string(kWignerConvention));
  for (std::size_t i = 0; i < w.x.size(); ++i) {
    for (std::size_t k = 0; k < w.p.size(); ++k) csv.row({w.x[i], w.p[k], w.at(i, k)});
  }
  csv.write(path, manifest_path_for(path));

  nlohmann::ordered_json mj;
  mj["convention"] = std::string(kWignerConvention);
  mj["var_x"] = m.var_x;
  mj["var_p"] = m.var_p;
  mj["variance_ratio"] = m.ratio;
  mj["variance_ratio_note"] = "heuristic squeezing proxy Var(x)/Var(p)";
  mj["min_w"] = m.min_w;
  mj["min_x"] = m.min_x;
  mj["min_p"] = m.min_p;
  mj["negative_volume"] = m.negative_volume;
  mj["w00"] = m.w00;
  mj["norm"] = m.norm;
  write_text(metrics_path, mj.dump(2) + "\n");

  params["grid"] = grid_json(g);
  params["p_count"] = w.p.size();
  finish(o, "wigner", params, {path, metrics_path}, start);
  out << "R = " << format_double(m.ratio) << ", W(0,0) = " << format_double(m.w00)
      << ", negative volume = " << format_double(m.negative_volume) << "\n";
  return kOk;
}

// ----------------------------------------------------------------- scan

int cmd_scan(const Options& o, std::ostream& out, std::ostream&) {
  const auto start = std::chrono::steady_clock::now();
  require(given(o.g_a) && given(o.g_am) && given(o.alpha), "--g-a, --g-am and --alpha are required");
  CouplingParams p;
  p.g_a = o.g_a;
  p.g_am = o.g_am;
  p.g_m = 0.5 * (o.g_a - o.g_am);
  p.alpha = o.alpha;
  const auto violations = validate_params(p, Family::I);
  require(violations.empty(), violations.empty() ? "" : violations.front().message);
  const double mu0 = mu_critical(p);
  const double tol = tolerance(o);

  std::vector<double> mus;
  if (given(o.mu)) {
    mus.push_back(o.mu);
  } else {
    require(o.points >= 1, "--points must be >= 1");
    if (given(o.mu_min) || given(o.mu_max)) {
      require(given(o.mu_min) && given(o.mu_max), "--mu-min and --mu-max go together");
      for (int k = 0; k < o.points; ++k) {
        const double f = o.points == 1 ? 0.0 : static_cast<double>(k) / (o.points - 1);
        mus.push_back(o.mu_max + f * (o.mu_min - o.mu_max));
      }
    } else {
      // Interior points mu0 k / (points + 1), ordered toward mu0.
      for (int k = 1; k <= o.points; ++k) mus.push_back(mu0 * k / (o.points + 1));
    }
  }

  CsvWriter csv({"mu", "mu_over_mu0", "beta", "B", "A", "peak_density", "half_width", "half_width_x", "flatness",
                 "attainable"});
  csv.comment("family I sweep: g_a = " + format_double(p.g_a) + ", g_am = " + format_double(p.g_am) +
              ", alpha = " + format_double(p.alpha) + ", mu0 = " + format_double(mu0));
  csv.comment("half_width: 99%-of-peak density half-width in units of 1/beta; half_width_x in x units");
  csv.comment("flatness: c4 / (c2 beta^2) of V_m fitted on |beta x| < 1");
  int valid = 0;
  for (double mu : mus) {
    const double ratio = mu / mu0;
    std::vector<double> row{mu, ratio, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, 0.0};
    if (mu < 0.0 && ratio > 0.0 && ratio < 1.0) {
      try {
        const double beta = std::sqrt(-mu / 2.0);
        const SolutionRecord r = solve_family_I(p.g_a, p.g_am, p.alpha, beta, tol);
        const PetrovParams pp = petrov_params(r);
        const double hw = petrov_half_width(pp, std::sqrt(0.99));
        const Grid g = default_grid(beta, o.grid_n);
        const PotentialPair pot = self_consistent_potentials(r, g);
        const WellFit fit = fit_well(pot.V_m, g, beta);
        const double peak = r.A / (r.B + 1.0);
        row = {mu, ratio, beta, r.B, r.A, peak * peak, hw * beta, hw, fit.c4 / (fit.c2 * beta * beta), 1.0};
        ++valid;
      } catch (const Error&) {
        // Numerically at the edge of the window; reported as unattainable.
      }
    }
    csv.row(row);
  }
  const std::string path = o.out.empty() ? "scan.csv" : o.out;
  csv.write(path, manifest_path_for(path));
  finish(o, "scan", {{"g_a", p.g_a}, {"g_am", p.g_am}, {"alpha", p.alpha}, {"mu0", mu0}, {"mu", mus}}, {path},
         start);
  out << valid << " of " << mus.size() << " rows attainable; wrote " << path << "\n";
  return kOk;
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::no_root:
      return kNoRoot;
    case ErrorKind::domain:
    case ErrorKind::singular:
    case ErrorKind::no_droplet:
    case ErrorKind::precondition:
    case ErrorKind::config:
    case ErrorKind::io:
      return kInvalidInput;
    case ErrorKind::out_of_scope:
    case ErrorKind::convergence:
    case ErrorKind::inconsistent_root:
    case ErrorKind::truncation:
    case ErrorKind::blow_up:
    case ErrorKind::instability:
      return kNumericalFailure;
  }
  return kNumericalFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact droplet and cat-state solutions of the coupled atomic-molecular condensate", "ambec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Options o;

  auto couplings = [&o](CLI::App* c) {
    c->add_option("--g-a", o.g_a, "atom-atom interaction");
    c->add_option("--g-m", o.g_m, "molecule-molecule interaction");
    c->add_option("--g-am", o.g_am, "atom-molecule interaction");
    c->add_option("--alpha", o.alpha, "interconversion strength (> 0)");
  };
  auto grid = [&o](CLI::App* c, std::size_t n_default) {
    c->add_option("--grid-l", o.grid_l, "grid half-width L (default 40/beta)");
    c->add_option("--grid-n", o.grid_n, "grid points, a power of two (default " + std::to_string(n_default) + ")");
  };
  auto common = [&o](CLI::App* c) {
    c->add_option("--out", o.out, "output path");
    c->add_option("--tol", o.tol, "consistency tolerance (default 1e-9 or AMBEC_TOL)");
  };

  auto* solve = app.add_subcommand("solve", "solve the consistency relations of one family");
  solve->add_option("--family", o.family, "I, II or III")->capture_default_str();
  couplings(solve);
  solve->add_option("--beta", o.beta, "inverse width (family I)");
  solve->add_flag("--scan", o.scan, "seed Newton from a lattice scan (default for II and III)");
  solve->add_option("--seed-mu", o.seed_mu, "Newton seed for mu");
  solve->add_option("--seed-eps", o.seed_eps, "Newton seed for epsilon");
  solve->add_option("--mu-min", o.mu_min);
  solve->add_option("--mu-max", o.mu_max);
  solve->add_option("--eps-min", o.eps_min);
  solve->add_option("--eps-max", o.eps_max);
  solve->add_option("--scan-n", o.scan_n, "lattice points per axis")->capture_default_str();
  common(solve);

  auto* profile = app.add_subcommand("profile", "sample psi_a and psi_m on a grid");
  profile->add_option("--solution", o.solution, "solution JSON")->required();
  profile->add_option("--t", o.t, "time of the sample");
  grid(profile, 2048);
  common(profile);

  auto* potential = app.add_subcommand("potential", "self-consistent potentials and well shapes");
  potential->add_option("--solution", o.solution, "solution JSON")->required();
  grid(potential, 2048);
  common(potential);

  auto* residual = app.add_subcommand("residual", "eigen-equation and consistency residuals");
  residual->add_option("--solution", o.solution, "solution JSON")->required();
  grid(residual, 2048);
  common(residual);

  auto* evolve_cmd = app.add_subcommand("evolve", "propagate the mean-field equations");
  evolve_cmd->add_option("--solution", o.solution, "solution JSON")->required();
  evolve_cmd->add_option("--t", o.t, "total time (default 10)");
  evolve_cmd->add_option("--dt", o.dt, "time step")->capture_default_str();
  evolve_cmd->add_option("--record-every", o.record_every, "steps between samples")->capture_default_str();
  evolve_cmd->add_option("--tol-drift", o.tol_drift)->capture_default_str();
  evolve_cmd->add_option("--noise", o.noise, "relative amplitude noise on the initial fields");
  evolve_cmd->add_option("--seed", o.seed, "noise seed")->capture_default_str();
  evolve_cmd->add_flag("--serial", o.serial, "use the serial kernels");
  grid(evolve_cmd, 2048);
  common(evolve_cmd);

  auto* wigner = app.add_subcommand("wigner", "Wigner function and phase-space metrics");
  wigner->add_option("--solution", o.solution, "solution JSON");
  wigner->add_option("--component", o.component, "atomic or molecular")->capture_default_str();
  wigner->add_option("--kind", o.kind, "kink_pair, bright_even, bright_odd or gaussian");
  wigner->add_option("--beta", o.beta);
  wigner->add_option("--delta", o.delta);
  wigner->add_option("--p-count", o.p_count, "momentum points (default: grid points)");
  grid(wigner, 512);
  common(wigner);

  auto* scan = app.add_subcommand("scan", "family I droplet sweep toward mu0");
  couplings(scan);
  scan->add_option("--mu", o.mu, "single chemical potential");
  scan->add_option("--mu-min", o.mu_min);
  scan->add_option("--mu-max", o.mu_max);
  scan->add_option("--points", o.points, "sweep length")->capture_default_str();
  grid(scan, 2048);
  common(scan);

  std::vector<std::string> argv_store{"ambec"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  if (o.grid_n == 0) o.grid_n = wigner->parsed() ? 512 : 2048;

  try {
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (profile->parsed()) return cmd_profile(o, out, err);
    if (potential->parsed()) return cmd_potential(o, out, err);
    if (residual->parsed()) return cmd_residual(o, out, err);
    if (evolve_cmd->parsed()) return cmd_evolve(o, out, err);
    if (wigner->parsed()) return cmd_wigner(o, out, err);
    if (scan->parsed()) return cmd_scan(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kInvalidInput;
}

}  // namespace ambec::cli
