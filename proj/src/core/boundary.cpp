#include "core/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "core/cylinder.hpp"
#include "core/norms.hpp"
#include "core/tridiag.hpp"

namespace catconv {

void WallParams::validate(int n_z) const {
  const int N = model.n_species;
  if (static_cast<int>(theta.size()) != N ||
      static_cast<int>(gamma_over_beta.size()) != N ||
      static_cast<int>(signs.size()) != N ||
      static_cast<int>(u_s0.size()) != N)
    throw std::invalid_argument("WallParams: species count mismatch");
  if (!(theta[N - 1] > 0.0))
    throw std::invalid_argument("WallParams: temperature diffusivity must be positive");
  for (int i = 0; i < N; ++i) {
    if (theta[i] < 0.0)
      throw std::invalid_argument("WallParams: negative diffusivity");
    if (!(gamma_over_beta[i] > 0.0))
      throw std::invalid_argument("WallParams: Gamma must be positive");
    if (signs[i] != 1.0 && signs[i] != -1.0)
      throw std::invalid_argument("WallParams: signs must be +-1");
    if (static_cast<int>(u_s0[i].size()) != n_z)
      throw std::invalid_argument("WallParams: initial profile size mismatch");
  }
}

namespace {

// Ghost-reflected Neumann Laplacian on a uniform grid.
void laplacian_neumann(const std::vector<double>& u, double h,
                       std::vector<double>& out) {
  const int n = static_cast<int>(u.size());
  out.resize(n);
  const double h2 = h * h;
  for (int k = 1; k + 1 < n; ++k)
    out[k] = (u[k + 1] - 2.0 * u[k] + u[k - 1]) / h2;
  out[0] = 2.0 * (u[1] - u[0]) / h2;
  out[n - 1] = 2.0 * (u[n - 2] - u[n - 1]) / h2;
}

struct CnSystem {
  std::vector<double> lower, diag, upper;
};

CnSystem build_cn_system(int n, double theta, double dt, double h) {
  CnSystem s;
  s.lower.assign(n, 0.0);
  s.diag.assign(n, 0.0);
  s.upper.assign(n, 0.0);
  const double r = theta * dt / (2.0 * h * h);
  for (int k = 0; k < n; ++k) {
    s.diag[k] = 1.0 + 2.0 * r;
    if (k > 0) s.lower[k] = -r;
    if (k + 1 < n) s.upper[k] = -r;
  }
  s.upper[0] = -2.0 * r;
  s.lower[n - 1] = -2.0 * r;
  return s;
}

double residual_inf(const CnSystem& s, const std::vector<double>& x,
                    const std::vector<double>& rhs) {
  const int n = static_cast<int>(x.size());
  double worst = 0.0, scale = 1.0;
  for (int k = 0; k < n; ++k) {
    double v = s.diag[k] * x[k];
    if (k > 0) v += s.lower[k] * x[k - 1];
    if (k + 1 < n) v += s.upper[k] * x[k + 1];
    worst = std::max(worst, std::abs(v - rhs[k]));
    scale = std::max(scale, std::abs(rhs[k]));
  }
  return worst / scale;
}

}  // namespace

BoundaryField solve_boundary(const BoundaryField& flux_source,
                             const WallParams& params,
                             const Discretization& disc,
                             BoundarySolveInfo* info) {
  const int N = params.model.n_species;
  const int nz = disc.n_z(), nt = disc.n_t();
  params.validate(nz);
  if (flux_source.n_species != N || flux_source.n_z != nz ||
      flux_source.n_t != nt)
    throw std::invalid_argument("solve_boundary: flux source shape mismatch");

  const double dt = disc.dt();
  const double h = disc.dz();
  const double k_lip = params.model.lipschitz_k;
  if (k_lip * dt > 1.0)
    throw std::runtime_error(
        "solve_boundary: reaction too stiff for the step size (k*dt = " +
        std::to_string(k_lip * dt) + " > 1); need dt <= " +
        std::to_string(1.0 / k_lip));

  BoundaryField us(N, nz, nt);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < nz; ++k) us.at(i, k, 0) = params.u_s0[i][k];

  std::vector<CnSystem> systems(N);
  for (int i = 0; i < N; ++i)
    if (params.theta[i] > 0.0)
      systems[i] = build_cn_system(nz, params.theta[i], dt, h);

  double max_res = 0.0;
  std::vector<std::vector<double>> un(N, std::vector<double>(nz));
  std::vector<std::vector<double>> ustar(N, std::vector<double>(nz));
  std::vector<std::vector<double>> rn(N, std::vector<double>(nz));
  std::vector<std::vector<double>> rstar(N, std::vector<double>(nz));
  std::vector<std::vector<double>> shalf(N, std::vector<double>(nz));
  std::vector<double> state(N), rate(N), lap(nz), rhs(nz);

  auto eval_reaction = [&](const std::vector<std::vector<double>>& u,
                           std::vector<std::vector<double>>& out) {
    for (int k = 0; k < nz; ++k) {
      for (int i = 0; i < N; ++i) state[i] = u[i][k];
      params.model.rate_fn(state, rate);
      for (int i = 0; i < N; ++i) out[i][k] = params.signs[i] * rate[i];
    }
  };

  auto cn_step = [&](int i, const std::vector<double>& u,
                     const std::vector<double>& f,
                     std::vector<double>& out) {
    if (params.theta[i] == 0.0) {
      out.resize(nz);
      for (int k = 0; k < nz; ++k) out[k] = u[k] + dt * f[k];
      return;
    }
    laplacian_neumann(u, h, lap);
    for (int k = 0; k < nz; ++k)
      rhs[k] = u[k] + 0.5 * dt * params.theta[i] * lap[k] + dt * f[k];
    const CnSystem& s = systems[i];
    out = solve_tridiagonal(s.lower, s.diag, s.upper, rhs);
    max_res = std::max(max_res, residual_inf(s, out, rhs));
  };

  for (int n = 0; n + 1 < nt; ++n) {
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k < nz; ++k) {
        un[i][k] = us.at(i, k, n);
        shalf[i][k] = -params.gamma_over_beta[i] * 0.5 *
                      (flux_source.at(i, k, n) + flux_source.at(i, k, n + 1));
      }
    }
    eval_reaction(un, rn);
    std::vector<double> f(nz), next;
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k < nz; ++k) f[k] = rn[i][k] + shalf[i][k];
      cn_step(i, un[i], f, next);
      ustar[i] = next;
    }
    eval_reaction(ustar, rstar);
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k < nz; ++k)
        f[k] = 0.5 * (rn[i][k] + rstar[i][k]) + shalf[i][k];
      cn_step(i, un[i], f, next);
      for (int k = 0; k < nz; ++k) us.at(i, k, n + 1) = next[k];
    }
  }
  if (info) info->max_step_residual = max_res;
  return us;
}

PhiProbeReport contraction_probe_phi(const CylinderField& u_f1,
                                     const CylinderField& u_f2,
                                     const WallParams& params,
                                     const Discretization& disc,
                                     const EigenBasis& dual_basis,
                                     const std::vector<double>& horizons) {
  if (horizons.size() < 2)
    throw std::invalid_argument("contraction_probe_phi: need at least two horizons");
  if (!u_f1.has_modal() || !u_f2.has_modal())
    throw std::invalid_argument("contraction_probe_phi: fields lack modal data");
  if (u_f1.basis != u_f2.basis)
    throw std::invalid_argument("contraction_probe_phi: fields built on different bases");
  bool identical = u_f1.values.size() == u_f2.values.size();
  for (size_t i = 0; i < u_f1.values.size() && identical; ++i)
    identical = (u_f1.values[i] == u_f2.values[i]);
  if (identical)
    throw std::invalid_argument("contraction_probe_phi: identical inputs");

  const int N = u_f1.n_species, nz = disc.n_z(), nt = disc.n_t();
  const int m = u_f1.n_modes;
  if (dual_basis.mode_count < m)
    throw std::invalid_argument("contraction_probe_phi: dual basis too small");

  const BoundaryField g1 = flux_integral(u_f1, disc);
  const BoundaryField g2 = flux_integral(u_f2, disc);
  const BoundaryField us1 = solve_boundary(g1, params, disc);
  const BoundaryField us2 = solve_boundary(g2, params, disc);
  const BoundaryField du = subtract(us1, us2);

  // dual-norm^2 of d(u_f1-u_f2)/dz per (species,z,t), from modal data:
  // coefficient on mode j is  d(modal_dz) + d(trace_dz) c_j.
  std::vector<double> dual2(static_cast<size_t>(N) * nz * nt, 0.0);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < nz; ++k)
      for (int l = 0; l < nt; ++l) {
        double s = 0.0;
        const double dtr =
            u_f1.trace_dz.at(i, k, l) - u_f2.trace_dz.at(i, k, l);
        for (int j = 0; j < m; ++j) {
          const double dj = u_f1.modal_dz_at(i, j, k, l) -
                            u_f2.modal_dz_at(i, j, k, l) +
                            dtr * dual_basis.unit_coeffs[j];
          s += dj * dj / dual_basis.eigenvalues[j];
        }
        dual2[(static_cast<size_t>(i) * nz + k) * nt + l] = s;
      }

  const auto wz = trapezoid_weights(disc.axial_nodes);
  PhiProbeReport rep;
  rep.horizons = horizons;
  for (double T : horizons) {
    int idx = -1;
    for (int l = 0; l < nt; ++l)
      if (std::abs(disc.time_nodes[l] - T) <= 1e-9 * std::max(1.0, T)) {
        idx = l;
        break;
      }
    if (idx < 1)
      throw std::invalid_argument(
          "contraction_probe_phi: horizon does not lie on a time node");
    const double num = norm_Wz(du, disc, idx);
    std::vector<double> sub(disc.time_nodes.begin(),
                            disc.time_nodes.begin() + idx + 1);
    const auto wt = trapezoid_weights(sub);
    double den = 0.0;
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < nz; ++k)
        for (int l = 0; l <= idx; ++l)
          den += wz[k] * wt[l] *
                 dual2[(static_cast<size_t>(i) * nz + k) * nt + l];
    if (den == 0.0)
      throw std::invalid_argument("contraction_probe_phi: zero denominator");
    rep.q.push_back(num * num / den);
  }

  rep.monotone = true;
  for (size_t i = 0; i + 1 < rep.q.size(); ++i)
    if (rep.q[i + 1] < rep.q[i]) rep.monotone = false;
  double qmin = rep.q[0], qmax = rep.q[0];
  for (double q : rep.q) {
    qmin = std::min(qmin, q);
    qmax = std::max(qmax, q);
  }
  rep.shrink = qmax > 0.0 ? rep.q.front() / qmax : 0.0;

  // least squares q ~ a T^2 + b T
  double s22 = 0.0, s21 = 0.0, s11 = 0.0, r2 = 0.0, r1 = 0.0;
  for (size_t i = 0; i < rep.q.size(); ++i) {
    const double T = rep.horizons[i], q = rep.q[i];
    s22 += T * T * T * T;
    s21 += T * T * T;
    s11 += T * T;
    r2 += q * T * T;
    r1 += q * T;
  }
  const double det = s22 * s11 - s21 * s21;
  rep.fit_a = (r2 * s11 - r1 * s21) / det;
  rep.fit_b = (s22 * r1 - s21 * r2) / det;
  return rep;
}

}  // namespace catconv
