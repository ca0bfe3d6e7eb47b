#include "core/cylinder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/norms.hpp"

namespace catconv {

namespace {

// phi1(x) = (e^x - 1)/x, phi2(x) = (e^x - 1 - x)/x^2, series near 0
void phi_functions(double x, double& phi1, double& phi2) {
  if (std::abs(x) < 1e-4) {
    phi1 = 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
    phi2 = 0.5 + x / 6.0 + x * x / 24.0 + x * x * x / 120.0;
    return;
  }
  const double ex = std::exp(x);
  phi1 = (ex - 1.0) / x;
  phi2 = (ex - 1.0 - x) / (x * x);
}

void check_probe_shapes(const BoundaryField& a, const BoundaryField& b) {
  if (!a.same_shape(b))
    throw std::invalid_argument("lipschitz_probe_psi: wall field shape mismatch");
  bool identical = true;
  for (size_t i = 0; i < a.data.size() && identical; ++i)
    identical = (a.data[i] == b.data[i]);
  if (identical)
    throw std::invalid_argument(
        "lipschitz_probe_psi: identical wall fields (zero denominator)");
}

}  // namespace

CylinderField solve_cylinder(const BoundaryField& u_s,
                             const std::vector<std::vector<double>>& u_f0,
                             const std::vector<double>& betas,
                             const Discretization& disc,
                             std::shared_ptr<const EigenBasis> basis,
                             bool* compat_warn) {
  const int N = u_s.n_species;
  const int nr = disc.n_r(), nz = disc.n_z(), nt = disc.n_t();
  if (u_s.n_z != nz || u_s.n_t != nt)
    throw std::invalid_argument("solve_cylinder: wall field shape mismatch");
  if (static_cast<int>(u_f0.size()) != N ||
      static_cast<int>(betas.size()) != N)
    throw std::invalid_argument("solve_cylinder: species count mismatch");
  for (const auto& prof : u_f0) {
    if (static_cast<int>(prof.size()) != nr)
      throw std::invalid_argument("solve_cylinder: inlet profile size mismatch");
    for (double v : prof)
      if (!std::isfinite(v))
        throw std::invalid_argument("solve_cylinder: non-finite inlet data");
  }
  if (!basis) throw std::invalid_argument("solve_cylinder: missing basis");
  const int m = basis->mode_count;

  CylinderField out(N, nr, nz, nt);
  out.n_modes = m;
  out.modal.assign(static_cast<size_t>(N) * m * nz * nt, 0.0);
  out.modal_dz.assign(static_cast<size_t>(N) * m * nz * nt, 0.0);
  out.trace = u_s;
  out.trace_dz = BoundaryField(N, nz, nt);
  out.basis = basis;
  out.betas = betas;

  if (compat_warn) *compat_warn = false;
  std::vector<double> slice(nz), dslice;
  for (int i = 0; i < N; ++i)
    for (int l = 0; l < nt; ++l) {
      for (int k = 0; k < nz; ++k) slice[k] = u_s.at(i, k, l);
      dslice = fd_derivative(slice, disc.axial_nodes);
      for (int k = 0; k < nz; ++k) out.trace_dz.at(i, k, l) = dslice[k];
      if (compat_warn &&
          std::abs(u_s.at(i, 0, l) - u_f0[i][nr - 1]) >
              1e-9 * (1.0 + std::abs(u_f0[i][nr - 1])))
        *compat_warn = true;
    }

  std::vector<double> w0(nr), what0(m);
  for (int i = 0; i < N; ++i) {
    const double lambda_scale = betas[i] / basis->beta;
    for (int r = 0; r < nr; ++r) w0[r] = u_f0[i][r] - u_f0[i][nr - 1];
    for (int j = 0; j < m; ++j)
      what0[j] = inner_weighted(w0, basis->eigenfunctions[j], Measure::RW, disc);

    for (int j = 0; j < m; ++j) {
      const double a = lambda_scale * basis->eigenvalues[j];
      const double cj = basis->unit_coeffs[j];
      for (int l = 0; l < nt; ++l) {
        double w = what0[j];
        out.modal_at(i, j, 0, l) = w;
        for (int k = 0; k + 1 < nz; ++k) {
          const double h = disc.axial_nodes[k + 1] - disc.axial_nodes[k];
          const double x = -a * h;
          double phi1, phi2;
          phi_functions(x, phi1, phi2);
          const double i0 = h * phi1, i1 = h * phi2;
          const double sk = -out.trace_dz.at(i, k, l) * cj;
          const double sk1 = -out.trace_dz.at(i, k + 1, l) * cj;
          w = std::exp(x) * w + (i0 - i1) * sk + i1 * sk1;
          out.modal_at(i, j, k + 1, l) = w;
        }
        for (int k = 0; k < nz; ++k)
          out.modal_dz_at(i, j, k, l) = -a * out.modal_at(i, j, k, l) -
                                        out.trace_dz.at(i, k, l) * cj;
      }
    }

    for (int r = 0; r < nr; ++r)
      for (int k = 0; k < nz; ++k)
        for (int l = 0; l < nt; ++l) {
          double v = u_s.at(i, k, l);
          for (int j = 0; j < m; ++j)
            v += out.modal_at(i, j, k, l) * basis->eigenfunctions[j][r];
          out.at(i, r, k, l) = v;
        }
  }
  return out;
}

BoundaryField flux_integral(const CylinderField& u_f,
                            const Discretization& disc) {
  (void)disc;  // shape bookkeeping only; the modal data carries the rule
  if (u_f.n_z < 2)
    throw std::invalid_argument("flux_integral: need z-resolution >= 2");
  if (!u_f.has_modal())
    throw std::invalid_argument(
        "flux_integral: field carries no modal data (not from solve_cylinder)");
  const auto& basis = *u_f.basis;
  BoundaryField g(u_f.n_species, u_f.n_z, u_f.n_t);
  for (int i = 0; i < u_f.n_species; ++i)
    for (int k = 0; k < u_f.n_z; ++k)
      for (int l = 0; l < u_f.n_t; ++l) {
        double s = u_f.trace_dz.at(i, k, l) * 0.25;
        for (int j = 0; j < u_f.n_modes; ++j)
          s += u_f.modal_dz_at(i, j, k, l) * basis.unit_coeffs[j];
        g.at(i, k, l) = s;
      }
  return g;
}

PsiProbeReport lipschitz_probe_psi(const BoundaryField& u_s1,
                                   const BoundaryField& u_s2,
                                   const std::vector<std::vector<double>>& u_f0,
                                   const std::vector<double>& betas,
                                   const Discretization& disc,
                                   std::shared_ptr<const EigenBasis> basis) {
  check_probe_shapes(u_s1, u_s2);
  const CylinderField f1 = solve_cylinder(u_s1, u_f0, betas, disc, basis);
  const CylinderField f2 = solve_cylinder(u_s2, u_f0, betas, disc, basis);
  const CylinderField df = subtract(f1, f2);
  const BoundaryField ds = subtract(u_s1, u_s2);

  PsiProbeReport rep;
  const double dwz = norm_Wz(ds, disc);
  if (dwz == 0.0)
    throw std::invalid_argument("lipschitz_probe_psi: zero denominator");
  rep.full_ratio = norm_WrT(df, disc) / dwz;

  const double grad_num = gradient_part_WrT(df, disc);
  const double grad_den = gradient_part_Wz(ds, disc);
  if (grad_den == 0.0)
    throw std::invalid_argument(
        "lipschitz_probe_psi: wall difference has no axial variation");
  rep.gradient_ratio = grad_num / grad_den;
  double beta_inf = betas[0];
  for (double b : betas) beta_inf = std::min(beta_inf, b);
  rep.gradient_bound = std::numbers::e / (8.0 * beta_inf);
  rep.gradient_within_bound = rep.gradient_ratio <= rep.gradient_bound * 1.05;
  return rep;
}

}  // namespace catconv
