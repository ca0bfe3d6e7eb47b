#include "core/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/norms.hpp"

namespace catconv {

std::vector<double> ProblemSpec::theta_full() const {
  std::vector<double> t = theta_reg;
  t.push_back(theta_Ns);
  return t;
}

void ProblemSpec::validate() const {
  if (n_species < 1) throw std::invalid_argument("ProblemSpec: n_species >= 1 required");
  auto need_n = [&](const auto& v, const char* what, int n) {
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument(std::string("ProblemSpec: ") + what +
                                  " must have " + std::to_string(n) + " entries");
  };
  need_n(beta_f, "beta_f", n_species);
  need_n(gamma_s, "gamma_s", n_species);
  need_n(theta_reg, "theta_reg", n_species - 1);
  need_n(signs, "delta", n_species);
  need_n(inlet, "inlet", n_species);
  need_n(wall_init, "wall_init", n_species);
  for (double b : beta_f)
    if (!(b > 0.0)) throw std::invalid_argument("ProblemSpec: beta_f must be positive");
  for (double g : gamma_s)
    if (!(g > 0.0)) throw std::invalid_argument("ProblemSpec: gamma_s must be positive");
  if (!(theta_Ns > 0.0))
    throw std::invalid_argument("ProblemSpec: theta_Ns must be positive");
  for (double t : theta_reg)
    if (t < 0.0) throw std::invalid_argument("ProblemSpec: theta_reg must be >= 0");
  for (double s : signs)
    if (s != 1.0 && s != -1.0)
      throw std::invalid_argument("ProblemSpec: delta entries must be +-1");
  if (model.n_species != n_species)
    throw std::invalid_argument("ProblemSpec: kinetics species count mismatch");
  if (!(horizon > 0.0)) throw std::invalid_argument("ProblemSpec: horizon must be positive");
  if (n_r < 3 || n_z < 3 || n_t < 3)
    throw std::invalid_argument("ProblemSpec: grid counts must be >= 3");
  if (modes < 1 || modes >= n_r - 2)
    throw std::invalid_argument("ProblemSpec: modes must satisfy 1 <= m < n_r - 2");
  for (int i = 0; i < n_species; ++i) {
    if (static_cast<int>(inlet[i].size()) != n_r)
      throw std::invalid_argument("ProblemSpec: inlet profile size mismatch");
    if (static_cast<int>(wall_init[i].size()) != n_z)
      throw std::invalid_argument("ProblemSpec: wall_init profile size mismatch");
  }
  if (!(picard_tol > 0.0))
    throw std::invalid_argument("ProblemSpec: picard_tol must be positive");
  if (picard_max_iter < 1)
    throw std::invalid_argument("ProblemSpec: picard_max_iter must be >= 1");
}

ProblemSpec ProblemSpec::with_theta_reg(double theta) const {
  ProblemSpec s = *this;
  std::fill(s.theta_reg.begin(), s.theta_reg.end(), theta);
  return s;
}

ProblemSpec ProblemSpec::with_horizon(double T) const {
  ProblemSpec s = *this;
  s.horizon = T;
  return s;
}

Discretization make_discretization(const ProblemSpec& spec) {
  return build_discretization(spec.n_r, spec.n_z, spec.n_t, spec.horizon,
                              spec.layout);
}

WallParams make_wall_params(const ProblemSpec& spec) {
  WallParams p;
  p.theta = spec.theta_full();
  p.gamma_over_beta.resize(spec.n_species);
  for (int i = 0; i < spec.n_species; ++i)
    p.gamma_over_beta[i] = spec.gamma_s[i] / spec.beta_f[i];
  p.signs = spec.signs;
  p.model = spec.model;
  p.u_s0 = spec.wall_init;
  return p;
}

namespace {

BoundaryField constant_in_time(const std::vector<std::vector<double>>& profiles,
                               int nz, int nt) {
  BoundaryField f(static_cast<int>(profiles.size()), nz, nt);
  for (int i = 0; i < f.n_species; ++i)
    for (int k = 0; k < nz; ++k)
      for (int l = 0; l < nt; ++l) f.at(i, k, l) = profiles[i][k];
  return f;
}

// slope fit of log increments; ratio = exp(slope), r2 = fit quality
void fit_geometric(const std::vector<double>& inc, double& ratio, double& r2) {
  std::vector<double> logs;
  for (double v : inc)
    if (v > 0.0) logs.push_back(std::log(v));
  ratio = 0.0;
  r2 = 1.0;
  const int n = static_cast<int>(logs.size());
  if (n < 2) return;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += i;
    sy += logs[i];
    sxx += static_cast<double>(i) * i;
    sxy += i * logs[i];
  }
  const double det = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / det;
  const double icpt = (sy - slope * sx) / n;
  ratio = std::exp(slope);
  double ss_res = 0, ss_tot = 0;
  const double mean = sy / n;
  for (int i = 0; i < n; ++i) {
    const double pred = icpt + slope * i;
    ss_res += (logs[i] - pred) * (logs[i] - pred);
    ss_tot += (logs[i] - mean) * (logs[i] - mean);
  }
  r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
}

}  // namespace

PicardResult picard_solve(const ProblemSpec& spec, double tol, int max_iter,
                          const BoundaryField* seed_field,
                          std::shared_ptr<const EigenBasis> basis) {
  spec.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("picard_solve: tol must be positive");
  const Discretization disc = make_discretization(spec);
  if (!basis)
    basis = std::make_shared<const EigenBasis>(eigenpairs(disc, 1.0, spec.modes));
  const WallParams wall = make_wall_params(spec);

  BoundaryField us = seed_field
                         ? *seed_field
                         : constant_in_time(spec.wall_init, spec.n_z, spec.n_t);
  if (!(us.n_species == spec.n_species && us.n_z == spec.n_z &&
        us.n_t == spec.n_t))
    throw std::invalid_argument("picard_solve: seed field shape mismatch");

  PicardResult out;
  out.report.converged = false;
  for (int it = 0; it < max_iter; ++it) {
    const CylinderField uf = solve_cylinder(us, spec.inlet, spec.beta_f, disc, basis);
    const BoundaryField g = flux_integral(uf, disc);
    BoundaryField next = solve_boundary(g, wall, disc);
    const double inc = norm_Wz(subtract(next, us), disc);
    out.report.iterates.push_back(inc);
    us = std::move(next);
    out.report.iterations = it + 1;
    if (inc <= tol) {
      out.report.converged = true;
      break;
    }
  }
  fit_geometric(out.report.iterates, out.report.contraction_ratio,
                out.report.log_fit_r2);

  // pair the wall fix point with its own cylinder field and measure the
  // residual of one more full application
  out.u_f = solve_cylinder(us, spec.inlet, spec.beta_f, disc, basis);
  const BoundaryField g = flux_integral(out.u_f, disc);
  const BoundaryField probe = solve_boundary(g, wall, disc);
  out.report.cross_residual = norm_Wz(subtract(probe, us), disc);
  out.u_s = std::move(us);
  return out;
}

ContinuationResult theta_continuation(const ProblemSpec& spec,
                                      const std::vector<double>& theta_sequence,
                                      double tol) {
  if (theta_sequence.size() < 2)
    throw std::invalid_argument("theta_continuation: need at least two levels");
  for (size_t i = 0; i + 1 < theta_sequence.size(); ++i)
    if (!(theta_sequence[i] > theta_sequence[i + 1]) || !(theta_sequence.back() > 0.0))
      throw std::invalid_argument(
          "theta_continuation: sequence must be strictly decreasing and positive");

  const Discretization disc = make_discretization(spec);
  auto basis =
      std::make_shared<const EigenBasis>(eigenpairs(disc, 1.0, spec.modes));

  ContinuationResult out;
  out.report.thetas = theta_sequence;
  const BoundaryField* seed = nullptr;
  for (double theta : theta_sequence) {
    const ProblemSpec level = spec.with_theta_reg(theta);
    PicardResult res =
        picard_solve(level, spec.picard_tol, spec.picard_max_iter, seed, basis);
    if (!res.report.converged)
      throw std::runtime_error("theta_continuation: inner fixed-point failed at theta=" +
                               std::to_string(theta));
    out.levels.push_back(std::move(res));
    seed = &out.levels.back().u_s;
  }

  auto pair_distance = [&](const PicardResult& a, const PicardResult& b) {
    const double wall = norm_Wz_tilde(subtract(a.u_s, b.u_s), disc);
    const double cyl = norm_WrT(subtract(a.u_f, b.u_f), disc);
    return std::sqrt(wall * wall + cyl * cyl);
  };
  for (size_t i = 0; i + 1 < out.levels.size(); ++i)
    out.report.distances.push_back(
        pair_distance(out.levels[i], out.levels[i + 1]));

  out.report.monotone = true;
  for (size_t i = 0; i + 1 < out.report.distances.size(); ++i)
    if (out.report.distances[i + 1] > out.report.distances[i])
      out.report.monotone = false;
  out.report.final_gap = out.report.distances.back();
  out.report.converged = out.report.monotone && out.report.final_gap <= tol;

  const ProblemSpec direct = spec.with_theta_reg(0.0);
  const PicardResult at_zero = picard_solve(direct, spec.picard_tol,
                                            spec.picard_max_iter,
                                            &out.levels.back().u_s, basis);
  out.report.theta_zero_distance = pair_distance(out.levels.back(), at_zero);
  return out;
}

EnergyAudit energy_audit(const BoundaryField& u_s, const ProblemSpec& spec) {
  spec.validate();
  const Discretization disc = make_discretization(spec);
  if (u_s.n_species != spec.n_species || u_s.n_z != spec.n_z ||
      u_s.n_t != spec.n_t)
    throw std::invalid_argument("energy_audit: field shape mismatch");

  const double T = spec.horizon;
  const auto theta = spec.theta_full();
  const auto wz = trapezoid_weights(disc.axial_nodes);
  const auto wt = trapezoid_weights(disc.time_nodes);

  EnergyAudit a;
  a.lhs = l2_z_slice(u_s, disc, spec.n_t - 1);
  std::vector<double> slice(spec.n_z), dslice;
  for (int i = 0; i < spec.n_species; ++i)
    for (int l = 0; l < spec.n_t; ++l) {
      for (int k = 0; k < spec.n_z; ++k) slice[k] = u_s.at(i, k, l);
      dslice = fd_derivative(slice, disc.axial_nodes);
      double s = 0.0;
      for (int k = 0; k < spec.n_z; ++k) s += wz[k] * dslice[k] * dslice[k];
      a.lhs += theta[i] * wt[l] * s;
    }

  double ratio_inf = spec.beta_f[0] / spec.gamma_s[0];
  double ratio_sup = ratio_inf;
  for (int i = 0; i < spec.n_species; ++i) {
    const double r = spec.beta_f[i] / spec.gamma_s[i];
    ratio_inf = std::min(ratio_inf, r);
    ratio_sup = std::max(ratio_sup, r);
  }

  double inlet_mass = 0.0, wall_mass = 0.0;
  for (int i = 0; i < spec.n_species; ++i) {
    inlet_mass += inner_weighted(spec.inlet[i], spec.inlet[i], Measure::RW, disc);
    double s = 0.0;
    for (int k = 0; k < spec.n_z; ++k)
      s += wz[k] * spec.wall_init[i][k] * spec.wall_init[i][k];
    wall_mass += (spec.beta_f[i] / spec.gamma_s[i]) * s;
  }
  a.a_T = 0.5 * T * inlet_mass + 0.5 * wall_mass;
  a.b_T = 2.0 * a.a_T / ratio_inf;
  a.d = 2.0 * ratio_sup * spec.model.lipschitz_k * spec.n_species / ratio_inf;
  a.c_T = a.b_T * std::exp(a.d * T);
  a.pass = a.lhs <= a.c_T;
  return a;
}

StabilityReport stability_experiment(const ProblemSpec& spec, double eps) {
  if (!(eps > 0.0))
    throw std::invalid_argument("stability_experiment: eps must be positive");
  spec.validate();
  const Discretization disc = make_discretization(spec);
  auto basis =
      std::make_shared<const EigenBasis>(eigenpairs(disc, 1.0, spec.modes));

  ProblemSpec perturbed = spec;
  std::vector<double> bump(spec.n_z);
  for (int k = 0; k < spec.n_z; ++k)
    bump[k] = std::cos(std::numbers::pi * disc.axial_nodes[k]);
  for (int i = 0; i < spec.n_species; ++i)
    for (int k = 0; k < spec.n_z; ++k)
      perturbed.wall_init[i][k] += eps * bump[k];

  const PicardResult base =
      picard_solve(spec, spec.picard_tol, spec.picard_max_iter, nullptr, basis);
  const PicardResult pert = picard_solve(perturbed, spec.picard_tol,
                                         spec.picard_max_iter, nullptr, basis);
  if (!base.report.converged || !pert.report.converged)
    throw std::runtime_error("stability_experiment: inner solve did not converge");

  const BoundaryField diff = subtract(pert.u_s, base.u_s);
  const auto wz = trapezoid_weights(disc.axial_nodes);
  double bump_l2 = 0.0;
  for (int k = 0; k < spec.n_z; ++k) bump_l2 += wz[k] * bump[k] * bump[k];
  const double denom = eps * eps * spec.n_species * bump_l2;

  StabilityReport rep;
  rep.epsilon = eps;
  for (int l = 0; l < spec.n_t; ++l)
    rep.growth = std::max(rep.growth, l2_z_slice(diff, disc, l) / denom);
  rep.gronwall_factor =
      std::exp(2.0 * spec.model.lipschitz_k * spec.n_species * spec.horizon);
  rep.pass = rep.growth <= rep.gronwall_factor * 1.1;
  return rep;
}

}  // namespace catconv
