#pragma once

#include <memory>
#include <vector>

#include "core/fields.hpp"
#include "core/spaces.hpp"

namespace catconv {

// Solves the interior diffusion problem by marching the shifted unknown
// w = u_f - u_s along z on the spectral basis: each modal coefficient obeys
//   dw_j/dz = -beta_i lambda_j w_j + s_j,   s_j = -(du_s/dz) <1,w_j>_rw,
// integrated exactly per step with a piecewise-linear source (exponential
// time differencing), so modes of any stiffness march stably.
//
// The wall trace is reproduced identically (w_j(1)=0 by construction) and the
// inlet is matched up to modal projection error. The inlet convention fixes
// w(r,0,t) = u_f0(r) - u_f0(1); if the wall data disagree with u_f0(1) at z=0
// the solve proceeds anyway and reports it through compat_warn.
CylinderField solve_cylinder(const BoundaryField& u_s,
                             const std::vector<std::vector<double>>& u_f0,
                             const std::vector<double>& betas,
                             const Discretization& disc,
                             std::shared_ptr<const EigenBasis> basis,
                             bool* compat_warn = nullptr);

// G_i(z,t) = int_0^1 du_f/dz r(1-r^2) dr, assembled from the modal axial
// derivatives as sum_j (dw_j/dz) <1,w_j>_rw + (du_s/dz)/4. Requires a field
// produced by solve_cylinder (or one carrying equivalent modal data).
BoundaryField flux_integral(const CylinderField& u_f,
                            const Discretization& disc);

struct PsiProbeReport {
  double full_ratio = 0.0;      // |Psi1-Psi2|_{Wr(T)} / |us1-us2|_{Wz(T)}
  double gradient_ratio = 0.0;  // radial-gradient part over axial-gradient part
  double gradient_bound = 0.0;  // e / (8 inf_i beta_i)
  bool gradient_within_bound = false;
};

PsiProbeReport lipschitz_probe_psi(const BoundaryField& u_s1,
                                   const BoundaryField& u_s2,
                                   const std::vector<std::vector<double>>& u_f0,
                                   const std::vector<double>& betas,
                                   const Discretization& disc,
                                   std::shared_ptr<const EigenBasis> basis);

}  // namespace catconv
