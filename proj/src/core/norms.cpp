#include "core/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace catconv {

namespace {

std::vector<double> time_weights(const Discretization& disc, int t_end) {
  if (t_end < 0) t_end = disc.n_t() - 1;
  if (t_end >= disc.n_t())
    throw std::invalid_argument("norm: time index out of range");
  std::vector<double> sub(disc.time_nodes.begin(),
                          disc.time_nodes.begin() + t_end + 1);
  return trapezoid_weights(sub);
}

// d/dz of one (species, t) wall slice
void axial_derivative(const BoundaryField& u, const Discretization& disc,
                      int i, int l, std::vector<double>& tmp,
                      std::vector<double>& out) {
  const int nz = u.n_z;
  tmp.resize(nz);
  for (int k = 0; k < nz; ++k) tmp[k] = u.at(i, k, l);
  out = fd_derivative(tmp, disc.axial_nodes);
}

}  // namespace

double norm_Wz(const BoundaryField& u, const Discretization& disc, int t_end) {
  const auto wz = trapezoid_weights(disc.axial_nodes);
  const auto wt = time_weights(disc, t_end);
  std::vector<double> tmp, du;
  double acc = 0.0;
  for (int i = 0; i < u.n_species; ++i)
    for (size_t l = 0; l < wt.size(); ++l) {
      axial_derivative(u, disc, i, static_cast<int>(l), tmp, du);
      double s = 0.0;
      for (int k = 0; k < u.n_z; ++k)
        s += wz[k] * (tmp[k] * tmp[k] + du[k] * du[k]);
      acc += wt[l] * s;
    }
  return std::sqrt(acc);
}

double norm_Wz_tilde(const BoundaryField& u, const Discretization& disc) {
  const auto wz = trapezoid_weights(disc.axial_nodes);
  const auto wt = trapezoid_weights(disc.time_nodes);
  std::vector<double> tmp, du;
  double acc = 0.0;
  for (int i = 0; i < u.n_species; ++i)
    for (int l = 0; l < u.n_t; ++l) {
      const bool with_grad = (i == u.n_species - 1);
      axial_derivative(u, disc, i, l, tmp, du);
      double s = 0.0;
      for (int k = 0; k < u.n_z; ++k)
        s += wz[k] * (tmp[k] * tmp[k] + (with_grad ? du[k] * du[k] : 0.0));
      acc += wt[l] * s;
    }
  return std::sqrt(acc);
}

double gradient_part_Wz(const BoundaryField& u, const Discretization& disc,
                        int t_end) {
  const auto wz = trapezoid_weights(disc.axial_nodes);
  const auto wt = time_weights(disc, t_end);
  std::vector<double> tmp, du;
  double acc = 0.0;
  for (int i = 0; i < u.n_species; ++i)
    for (size_t l = 0; l < wt.size(); ++l) {
      axial_derivative(u, disc, i, static_cast<int>(l), tmp, du);
      double s = 0.0;
      for (int k = 0; k < u.n_z; ++k) s += wz[k] * du[k] * du[k];
      acc += wt[l] * s;
    }
  return acc;
}

double norm_WrT(const CylinderField& u, const Discretization& disc) {
  const auto wz = trapezoid_weights(disc.axial_nodes);
  const auto wt = trapezoid_weights(disc.time_nodes);
  const int nr = u.n_r;
  std::vector<double> col(nr), dcol;
  double acc = 0.0;
  for (int i = 0; i < u.n_species; ++i)
    for (int k = 0; k < u.n_z; ++k)
      for (int l = 0; l < u.n_t; ++l) {
        for (int r = 0; r < nr; ++r) col[r] = u.at(i, r, k, l);
        dcol = fd_derivative(col, disc.radial_nodes);
        double s = 0.0;
        for (int r = 0; r < nr; ++r)
          s += disc.quad_w_rw[r] * col[r] * col[r] +
               disc.quad_w_r[r] * dcol[r] * dcol[r];
        acc += wz[k] * wt[l] * s;
      }
  return std::sqrt(acc);
}

double gradient_part_WrT(const CylinderField& u, const Discretization& disc) {
  const auto wz = trapezoid_weights(disc.axial_nodes);
  const auto wt = trapezoid_weights(disc.time_nodes);
  const int nr = u.n_r;
  std::vector<double> col(nr), dcol;
  double acc = 0.0;
  for (int i = 0; i < u.n_species; ++i)
    for (int k = 0; k < u.n_z; ++k)
      for (int l = 0; l < u.n_t; ++l) {
        for (int r = 0; r < nr; ++r) col[r] = u.at(i, r, k, l);
        dcol = fd_derivative(col, disc.radial_nodes);
        double s = 0.0;
        for (int r = 0; r < nr; ++r) s += disc.quad_w_r[r] * dcol[r] * dcol[r];
        acc += wz[k] * wt[l] * s;
      }
  return acc;
}

double l2_z_slice(const BoundaryField& u, const Discretization& disc, int l) {
  const auto wz = trapezoid_weights(disc.axial_nodes);
  double s = 0.0;
  for (int i = 0; i < u.n_species; ++i)
    for (int k = 0; k < u.n_z; ++k) s += wz[k] * u.at(i, k, l) * u.at(i, k, l);
  return s;
}

double rel_l2_cylinder(const CylinderField& a, const CylinderField& b,
                       const Discretization& disc) {
  const auto wz = trapezoid_weights(disc.axial_nodes);
  const auto wt = trapezoid_weights(disc.time_nodes);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < a.n_species; ++i)
    for (int r = 0; r < a.n_r; ++r)
      for (int k = 0; k < a.n_z; ++k)
        for (int l = 0; l < a.n_t; ++l) {
          const double w = disc.quad_w_rw[r] * wz[k] * wt[l];
          const double d = a.at(i, r, k, l) - b.at(i, r, k, l);
          num += w * d * d;
          den += w * b.at(i, r, k, l) * b.at(i, r, k, l);
        }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double rel_l2_boundary(const BoundaryField& a, const BoundaryField& b,
                       const Discretization& disc) {
  const auto wz = trapezoid_weights(disc.axial_nodes);
  const auto wt = trapezoid_weights(disc.time_nodes);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < a.n_species; ++i)
    for (int k = 0; k < a.n_z; ++k)
      for (int l = 0; l < a.n_t; ++l) {
        const double w = wz[k] * wt[l];
        const double d = a.at(i, k, l) - b.at(i, k, l);
        num += w * d * d;
        den += w * b.at(i, k, l) * b.at(i, k, l);
      }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace catconv
