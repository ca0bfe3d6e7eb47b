#include "core/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "core/tridiag.hpp"

namespace catconv {

namespace {

void require_uniform_radial(const Discretization& disc) {
  const int n = disc.n_r();
  const double h = disc.radial_nodes[1] - disc.radial_nodes[0];
  for (int i = 1; i < n; ++i) {
    const double hi = disc.radial_nodes[i] - disc.radial_nodes[i - 1];
    if (std::abs(hi - h) > 1e-12)
      throw std::invalid_argument("oracle: uniform radial grids only");
  }
}

// Finite-volume radial operator: control volumes against the measure
// r(1-r^2) dr, two-point fluxes beta r u'. Natural zero flux at r=0,
// Dirichlet at r=1 handled by the caller.
struct RadialFv {
  std::vector<double> vol;     // cv integrals of r(1-r^2)
  std::vector<double> fl, fr;  // flux coefficients per node (beta included)
  int n = 0;

  RadialFv(const Discretization& disc, double beta) {
    n = disc.n_r();
    const auto& r = disc.radial_nodes;
    const double h = r[1] - r[0];
    vol.resize(n);
    fl.assign(n, 0.0);
    fr.assign(n, 0.0);
    auto anti = [](double x) { return x * x / 2.0 - x * x * x * x / 4.0; };
    for (int i = 0; i < n; ++i) {
      const double a = i == 0 ? 0.0 : r[i] - h / 2.0;
      const double b = i == n - 1 ? 1.0 : r[i] + h / 2.0;
      vol[i] = anti(b) - anti(a);
      if (i > 0) fl[i] = beta * (r[i] - h / 2.0) / (h * vol[i]);
      if (i < n - 1) fr[i] = beta * (r[i] + h / 2.0) / (h * vol[i]);
    }
  }

  // y = A u on nodes 0..n-2 with u[n-1] the Dirichlet value
  void apply(const std::vector<double>& u, std::vector<double>& y) const {
    y.resize(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
      double v = 0.0;
      if (i > 0) v += fl[i] * (u[i - 1] - u[i]);
      v += fr[i] * (u[i + 1] - u[i]);
      y[i] = v;
    }
  }
};

// One Crank-Nicolson z-step of the cylinder equation, Dirichlet trace values
// given at both z levels.
void cn_z_step(const RadialFv& fv, double dz, std::vector<double>& u,
               double trace_next) {
  const int ni = fv.n - 1;
  std::vector<double> au;
  fv.apply(u, au);
  std::vector<double> lower(ni, 0.0), diag(ni, 0.0), upper(ni, 0.0), rhs(ni);
  for (int i = 0; i < ni; ++i) {
    diag[i] = 1.0 + 0.5 * dz * (fv.fl[i] + fv.fr[i]);
    if (i > 0) lower[i] = -0.5 * dz * fv.fl[i];
    if (i + 1 < ni) upper[i] = -0.5 * dz * fv.fr[i];
    rhs[i] = u[i] + 0.5 * dz * au[i];
  }
  rhs[ni - 1] += 0.5 * dz * fv.fr[ni - 1] * trace_next;
  std::vector<double> x = solve_tridiagonal(lower, diag, upper, rhs);
  for (int i = 0; i < ni; ++i) u[i] = x[i];
  u[ni] = trace_next;
}

// march one (species, time) slice across z given the wall trace in z
void march_slice(const RadialFv& fv, const Discretization& disc,
                 const std::vector<double>& inlet,
                 const std::vector<double>& trace_z, double* out_rt,
                 int stride_z) {
  const int nz = disc.n_z();
  std::vector<double> u = inlet;
  u[fv.n - 1] = trace_z[0];
  for (int r = 0; r < fv.n; ++r) out_rt[static_cast<size_t>(r) * stride_z] = u[r];
  for (int k = 0; k + 1 < nz; ++k) {
    const double dz = disc.axial_nodes[k + 1] - disc.axial_nodes[k];
    cn_z_step(fv, dz, u, trace_z[k + 1]);
    for (int r = 0; r < fv.n; ++r)
      out_rt[static_cast<size_t>(r) * stride_z + (k + 1)] = u[r];
  }
}

// one-sided second-order derivative at r=1 on a uniform grid
double trace_derivative(const double* col_r, int n, double h, int stride) {
  const double um1 = col_r[static_cast<size_t>(n - 1) * stride];
  const double um2 = col_r[static_cast<size_t>(n - 2) * stride];
  const double um3 = col_r[static_cast<size_t>(n - 3) * stride];
  return (3.0 * um1 - 4.0 * um2 + um3) / (2.0 * h);
}

}  // namespace

CylinderField solve_cylinder_fd(const BoundaryField& u_s,
                                const std::vector<std::vector<double>>& u_f0,
                                const std::vector<double>& betas,
                                const Discretization& disc) {
  require_uniform_radial(disc);
  const int N = u_s.n_species, nr = disc.n_r(), nz = disc.n_z(), nt = disc.n_t();
  if (nr < 4) throw std::invalid_argument("solve_cylinder_fd: need n_r >= 4");
  if (u_s.n_z != nz || u_s.n_t != nt)
    throw std::invalid_argument("solve_cylinder_fd: wall field shape mismatch");

  CylinderField out(N, nr, nz, nt);
  out.trace = u_s;
  std::vector<double> trace_z(nz);
  for (int i = 0; i < N; ++i) {
    const RadialFv fv(disc, betas[i]);
    for (int l = 0; l < nt; ++l) {
      for (int k = 0; k < nz; ++k) trace_z[k] = u_s.at(i, k, l);
      // values layout [i][r][z][t]; pass a (r,z) view at fixed (i,l)
      std::vector<double> slab(static_cast<size_t>(nr) * nz);
      march_slice(fv, disc, u_f0[i], trace_z, slab.data(), nz);
      for (int r = 0; r < nr; ++r)
        for (int k = 0; k < nz; ++k)
          out.at(i, r, k, l) = slab[static_cast<size_t>(r) * nz + k];
    }
  }
  return out;
}

MonolithicResult solve_monolithic(const ProblemSpec& spec) {
  spec.validate();
  const Discretization disc = make_discretization(spec);
  require_uniform_radial(disc);
  const int N = spec.n_species, nr = disc.n_r(), nz = disc.n_z(), nt = disc.n_t();
  if (nr < 4) throw std::invalid_argument("solve_monolithic: need n_r >= 4");
  if (static_cast<long long>(nr) * nz * nt > 10'000'000)
    throw std::invalid_argument("solve_monolithic: instance exceeds the node guard");

  const double h_r = disc.radial_nodes[1] - disc.radial_nodes[0];
  const double h_z = disc.dz();
  const double dt = disc.dt();
  const auto theta = spec.theta_full();

  std::vector<RadialFv> fvs;
  fvs.reserve(N);
  for (int i = 0; i < N; ++i) fvs.emplace_back(disc, spec.beta_f[i]);

  MonolithicResult res;
  res.u_f = CylinderField(N, nr, nz, nt);
  res.u_s = BoundaryField(N, nz, nt);

  // wall CN systems (theta_i > 0 rows)
  auto build = [&](double th) {
    std::vector<double> lower(nz, 0.0), diag(nz, 0.0), upper(nz, 0.0);
    const double r = th * dt / (2.0 * h_z * h_z);
    for (int k = 0; k < nz; ++k) {
      diag[k] = 1.0 + 2.0 * r;
      if (k > 0) lower[k] = -r;
      if (k + 1 < nz) upper[k] = -r;
    }
    upper[0] = -2.0 * r;
    lower[nz - 1] = -2.0 * r;
    return std::tuple{lower, diag, upper};
  };
  std::vector<std::tuple<std::vector<double>, std::vector<double>, std::vector<double>>>
      wall_sys;
  for (int i = 0; i < N; ++i) wall_sys.push_back(build(theta[i]));

  auto lap_neumann = [&](const std::vector<double>& u, std::vector<double>& out) {
    out.resize(nz);
    const double h2 = h_z * h_z;
    for (int k = 1; k + 1 < nz; ++k)
      out[k] = (u[k + 1] - 2.0 * u[k] + u[k - 1]) / h2;
    out[0] = 2.0 * (u[1] - u[0]) / h2;
    out[nz - 1] = 2.0 * (u[nz - 2] - u[nz - 1]) / h2;
  };

  // cylinder slab per species at one time level, plus its wall forcing
  // F_i = -gamma_i dC_if/dr(1,z) + delta_i r_i(u_s)
  std::vector<std::vector<double>> slab(N, std::vector<double>(static_cast<size_t>(nr) * nz));
  auto cylinder_at = [&](const std::vector<std::vector<double>>& wall) {
    std::vector<double> trace_z(nz);
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k < nz; ++k) trace_z[k] = wall[i][k];
      march_slice(fvs[i], disc, spec.inlet[i], trace_z, slab[i].data(), nz);
    }
  };
  std::vector<double> state(N), rate(N);
  auto forcing = [&](const std::vector<std::vector<double>>& wall,
                     std::vector<std::vector<double>>& F) {
    for (int k = 0; k < nz; ++k) {
      for (int i = 0; i < N; ++i) state[i] = wall[i][k];
      spec.model.rate_fn(state, rate);
      for (int i = 0; i < N; ++i) {
        const double dudr = trace_derivative(&slab[i][static_cast<size_t>(k)],
                                             nr, h_r, nz);
        F[i][k] = -spec.gamma_s[i] * dudr + spec.signs[i] * rate[i];
      }
    }
  };

  std::vector<std::vector<double>> wall_now(N, std::vector<double>(nz));
  std::vector<std::vector<double>> wall_next(N, std::vector<double>(nz));
  std::vector<std::vector<double>> F_now(N, std::vector<double>(nz));
  std::vector<std::vector<double>> F_next(N, std::vector<double>(nz));
  std::vector<double> lap(nz), rhs(nz);

  for (int i = 0; i < N; ++i) wall_now[i] = spec.wall_init[i];
  cylinder_at(wall_now);
  for (int i = 0; i < N; ++i)
    for (int r = 0; r < nr; ++r)
      for (int k = 0; k < nz; ++k)
        res.u_f.at(i, r, k, 0) = slab[i][static_cast<size_t>(r) * nz + k];
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < nz; ++k) res.u_s.at(i, k, 0) = wall_now[i][k];
  forcing(wall_now, F_now);

  const int max_inner = 200;
  for (int n = 0; n + 1 < nt; ++n) {
    for (int i = 0; i < N; ++i) wall_next[i] = wall_now[i];
    int inner = 0;
    double delta = 0.0;
    for (; inner < max_inner; ++inner) {
      cylinder_at(wall_next);
      forcing(wall_next, F_next);
      delta = 0.0;
      for (int i = 0; i < N; ++i) {
        lap_neumann(wall_now[i], lap);
        for (int k = 0; k < nz; ++k)
          rhs[k] = wall_now[i][k] + 0.5 * dt * theta[i] * lap[k] +
                   0.5 * dt * (F_now[i][k] + F_next[i][k]);
        std::vector<double> updated;
        if (theta[i] == 0.0) {
          updated = rhs;
        } else {
          const auto& [lo, di, up] = wall_sys[i];
          updated = solve_tridiagonal(lo, di, up, rhs);
        }
        for (int k = 0; k < nz; ++k)
          delta = std::max(delta, std::abs(updated[k] - wall_next[i][k]));
        wall_next[i] = std::move(updated);
      }
      if (delta <= 1e-10) break;
    }
    if (delta > 1e-10)
      throw std::runtime_error(
          "solve_monolithic: inner coupling iteration stalled at step " +
          std::to_string(n) + " (delta=" + std::to_string(delta) + ")");
    res.max_inner_iterations = std::max(res.max_inner_iterations, inner + 1);

    cylinder_at(wall_next);
    forcing(wall_next, F_next);
    for (int i = 0; i < N; ++i) {
      for (int r = 0; r < nr; ++r)
        for (int k = 0; k < nz; ++k)
          res.u_f.at(i, r, k, n + 1) = slab[i][static_cast<size_t>(r) * nz + k];
      for (int k = 0; k < nz; ++k) res.u_s.at(i, k, n + 1) = wall_next[i][k];
      wall_now[i] = wall_next[i];
      F_now[i] = F_next[i];
    }
  }
  return res;
}

namespace {

// u'' = -u'/r - mu (1-r^2) u, series through the axis then midpoint RK.
double shoot_value_at_one(double mu, int n_steps) {
  const double h = 1.0 / n_steps;
  // even power series u = sum a_k r^{2k}: (2k)^2 a_k = -mu (a_{k-1} - a_{k-2})
  double a_prev2 = 0.0, a_prev1 = 1.0;
  double u = 1.0, du = 0.0;
  const double r0 = h;
  double rpow = 1.0;
  for (int k = 1; k <= 40; ++k) {
    const double ak = -mu * (a_prev1 - a_prev2) / (4.0 * k * k);
    rpow *= r0 * r0;
    u += ak * rpow;
    du += 2.0 * k * ak * rpow / r0;
    a_prev2 = a_prev1;
    a_prev1 = ak;
    if (std::abs(ak * rpow) < 1e-18) break;
  }
  auto f = [mu](double r, double y0, double y1, double& d0, double& d1) {
    d0 = y1;
    d1 = -y1 / r - mu * (1.0 - r * r) * y0;
  };
  double r = r0, y0 = u, y1 = du;
  for (int s = 0; s + 1 < n_steps; ++s) {
    double k0, k1;
    f(r, y0, y1, k0, k1);
    double m0, m1;
    f(r + h / 2.0, y0 + h / 2.0 * k0, y1 + h / 2.0 * k1, m0, m1);
    y0 += h * m0;
    y1 += h * m1;
    r += h;
  }
  return y0;
}

double bisect_eigenvalue(double lo, double hi, int n_steps) {
  double flo = shoot_value_at_one(lo, n_steps);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = shoot_value_at_one(mid, n_steps);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-13 * std::max(1.0, hi)) break;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> shoot_eigenvalues(int j_max, int n_steps) {
  std::vector<double> mus;
  double mu = 0.5;
  double prev = shoot_value_at_one(mu, n_steps);
  while (static_cast<int>(mus.size()) < j_max) {
    const double step = std::max(2.0, 0.02 * mu);
    const double mu_next = mu + step;
    const double cur = shoot_value_at_one(mu_next, n_steps);
    if ((cur > 0.0) != (prev > 0.0))
      mus.push_back(bisect_eigenvalue(mu, mu_next, n_steps));
    mu = mu_next;
    prev = cur;
    if (mu > 1e7)
      throw std::runtime_error("eigen_oracle: bracket scan ran away");
  }
  return mus;
}

}  // namespace

std::vector<double> eigen_oracle(int n_fine, double beta, int j_max) {
  if (n_fine < 16) throw std::invalid_argument("eigen_oracle: n_fine too small");
  if (j_max < 1) throw std::invalid_argument("eigen_oracle: j_max must be >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("eigen_oracle: beta must be positive");
  const std::vector<double> coarse = shoot_eigenvalues(j_max, n_fine);
  const std::vector<double> fine = shoot_eigenvalues(j_max, 2 * n_fine);
  std::vector<double> out(j_max);
  for (int j = 0; j < j_max; ++j)
    out[j] = beta * (4.0 * fine[j] - coarse[j]) / 3.0;  // second-order Richardson
  return out;
}

}  // namespace catconv
