#pragma once

#include <vector>

#include "core/fields.hpp"
#include "core/kinetics.hpp"
#include "core/spaces.hpp"

namespace catconv {

struct WallParams {
  std::vector<double> theta;            // size N; theta[N-1] > 0 (temperature)
  std::vector<double> gamma_over_beta;  // Gamma_i, positive
  std::vector<double> signs;            // delta_i in {-1,+1}
  ReactionModel model;
  std::vector<std::vector<double>> u_s0;  // N initial profiles on axial nodes

  void validate(int n_z) const;
};

struct BoundarySolveInfo {
  double max_step_residual = 0.0;  // worst linear-system residual over steps
};

// Marches the wall system in t: Crank-Nicolson for the diffusion term
// (Neumann via ghost-node reflection), explicit trapezoidal (Heun) update of
// the reaction, flux source averaged to half steps. Rows with theta_i = 0
// skip the tridiagonal solve and reduce to the plain ODE update.
//
// Rejects the step size when lipschitz_k * dt > 1 (reports the admissible dt).
BoundaryField solve_boundary(const BoundaryField& flux_source,
                             const WallParams& params,
                             const Discretization& disc,
                             BoundarySolveInfo* info = nullptr);

struct PhiProbeReport {
  std::vector<double> horizons;
  std::vector<double> q;   // |Phi1-Phi2|^2_{Wz(T)} / dual-gradient integral
  double fit_a = 0.0;      // least squares of q(T) = T (a T + b)
  double fit_b = 0.0;
  bool monotone = false;   // q nondecreasing along the horizon list
  double shrink = 0.0;     // q(min T) / q(max T)
};

// Measures the horizon dependence of the wall map: both cylinder fields are
// pushed through the flux integral and the wall solve once (the march is
// causal, so every prefix [0,T] of the trajectory is the T-horizon solution),
// then prefix norms produce q(T) for each requested horizon. Horizons must
// lie on time nodes.
PhiProbeReport contraction_probe_phi(const CylinderField& u_f1,
                                     const CylinderField& u_f2,
                                     const WallParams& params,
                                     const Discretization& disc,
                                     const EigenBasis& dual_basis,
                                     const std::vector<double>& horizons);

}  // namespace catconv
