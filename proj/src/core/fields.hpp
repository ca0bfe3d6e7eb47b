#pragma once

#include <memory>
#include <vector>

#include "core/eigenbasis.hpp"

namespace catconv {

// Wall values per species on the (z,t) grid. Species N is the temperature.
struct BoundaryField {
  int n_species = 0, n_z = 0, n_t = 0;
  std::vector<double> data;  // [species][z][t]

  BoundaryField() = default;
  BoundaryField(int N, int nz, int nt)
      : n_species(N), n_z(nz), n_t(nt),
        data(static_cast<size_t>(N) * nz * nt, 0.0) {}

  double& at(int i, int k, int l) {
    return data[(static_cast<size_t>(i) * n_z + k) * n_t + l];
  }
  double at(int i, int k, int l) const {
    return data[(static_cast<size_t>(i) * n_z + k) * n_t + l];
  }
  bool same_shape(const BoundaryField& o) const {
    return n_species == o.n_species && n_z == o.n_z && n_t == o.n_t;
  }
};

BoundaryField subtract(const BoundaryField& a, const BoundaryField& b);

// Interior values per species on the (r,z,t) grid. When produced by the
// spectral solver the field also carries its modal representation
// u = trace + sum_j modal_j * w_j together with the exact axial derivative
// of the modal coefficients, which downstream consumers (flux integral,
// dual-norm probes) use directly.
struct CylinderField {
  int n_species = 0, n_r = 0, n_z = 0, n_t = 0, n_modes = 0;
  std::vector<double> values;    // [species][r][z][t]
  std::vector<double> modal;     // [species][mode][z][t]
  std::vector<double> modal_dz;  // [species][mode][z][t]
  BoundaryField trace;           // the wall data the field was built on
  BoundaryField trace_dz;        // d(trace)/dz on the axial nodes
  std::shared_ptr<const EigenBasis> basis;  // null for purely nodal fields
  std::vector<double> betas;     // per-species diffusion used by the solve

  CylinderField() = default;
  CylinderField(int N, int nr, int nz, int nt)
      : n_species(N), n_r(nr), n_z(nz), n_t(nt),
        values(static_cast<size_t>(N) * nr * nz * nt, 0.0) {}

  double& at(int i, int r, int k, int l) {
    return values[((static_cast<size_t>(i) * n_r + r) * n_z + k) * n_t + l];
  }
  double at(int i, int r, int k, int l) const {
    return values[((static_cast<size_t>(i) * n_r + r) * n_z + k) * n_t + l];
  }
  double& modal_at(int i, int j, int k, int l) {
    return modal[((static_cast<size_t>(i) * n_modes + j) * n_z + k) * n_t + l];
  }
  double modal_at(int i, int j, int k, int l) const {
    return modal[((static_cast<size_t>(i) * n_modes + j) * n_z + k) * n_t + l];
  }
  double& modal_dz_at(int i, int j, int k, int l) {
    return modal_dz[((static_cast<size_t>(i) * n_modes + j) * n_z + k) * n_t + l];
  }
  double modal_dz_at(int i, int j, int k, int l) const {
    return modal_dz[((static_cast<size_t>(i) * n_modes + j) * n_z + k) * n_t + l];
  }
  bool has_modal() const { return basis != nullptr && n_modes > 0; }
};

CylinderField subtract(const CylinderField& a, const CylinderField& b);

}  // namespace catconv
