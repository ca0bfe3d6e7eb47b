#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "core/boundary.hpp"
#include "core/cylinder.hpp"
#include "core/fields.hpp"
#include "core/kinetics.hpp"
#include "core/spaces.hpp"

namespace catconv {

// Everything a run needs: physical constants, kinetics, initial data sampled
// on the run's own grids, grid sizes, horizon and solver knobs.
struct ProblemSpec {
  int n_species = 0;
  std::vector<double> beta_f;     // positive, per species
  std::vector<double> gamma_s;    // positive, per species
  double theta_Ns = 1.0;          // temperature wall diffusivity, positive
  std::vector<double> theta_reg;  // size N-1, nonnegative
  std::vector<double> signs;      // delta_i in {-1,+1}
  ReactionModel model;
  std::vector<std::vector<double>> inlet;      // N radial profiles (n_r)
  std::vector<std::vector<double>> wall_init;  // N axial profiles (n_z)
  double horizon = 0.0;
  int n_r = 0, n_z = 0, n_t = 0, modes = 0;
  RadialLayout layout = RadialLayout::Uniform;
  double picard_tol = 1e-9;
  int picard_max_iter = 40;
  std::uint64_t seed = 0;

  std::vector<double> theta_full() const;  // {theta_reg..., theta_Ns}
  void validate() const;

  ProblemSpec with_theta_reg(double theta) const;
  ProblemSpec with_horizon(double T) const;
};

Discretization make_discretization(const ProblemSpec& spec);
WallParams make_wall_params(const ProblemSpec& spec);

struct PicardReport {
  std::vector<double> iterates;    // W_z(T) increment per iteration
  double contraction_ratio = 0.0;  // geometric fit over the increments
  bool converged = false;
  int iterations = 0;
  double cross_residual = 0.0;     // |Phi(Psi(u_s)) - u_s|_{Wz(T)} at the fix point
  double log_fit_r2 = 0.0;         // fit quality of the geometric decay
};

struct PicardResult {
  BoundaryField u_s;
  CylinderField u_f;  // Psi applied to the returned wall field
  PicardReport report;
};

// Iterates u_s <- Phi(Psi(u_s)) from the constant-in-t extension of the wall
// initial data (or the given seed field). Non-convergence is reported, not
// thrown; expect it for horizons past the contraction regime.
PicardResult picard_solve(const ProblemSpec& spec, double tol, int max_iter,
                          const BoundaryField* seed_field = nullptr,
                          std::shared_ptr<const EigenBasis> basis = nullptr);

struct CauchyReport {
  std::vector<double> thetas;
  std::vector<double> distances;  // successive pair distances in the reduced norm
  bool monotone = false;
  double final_gap = 0.0;
  bool converged = false;
  double theta_zero_distance = 0.0;  // limit iterate vs direct theta=0 solve
};

struct ContinuationResult {
  std::vector<PicardResult> levels;  // one per theta, last is the limit iterate
  CauchyReport report;
};

// Solves the regularized problem along a decreasing theta sequence,
// warm-starting each level from the previous solution, and compares the
// final iterate against the direct theta=0 solve.
ContinuationResult theta_continuation(const ProblemSpec& spec,
                                      const std::vector<double>& theta_sequence,
                                      double tol);

struct EnergyAudit {
  double lhs = 0.0;   // final-slice L2 mass + theta-weighted gradient history
  double a_T = 0.0;
  double b_T = 0.0;
  double d = 0.0;
  double c_T = 0.0;   // b(T) e^{dT}
  bool pass = false;  // lhs <= c_T
};

EnergyAudit energy_audit(const BoundaryField& u_s, const ProblemSpec& spec);

struct StabilityReport {
  double epsilon = 0.0;
  double growth = 0.0;           // sup_t L2 perturbation growth, normalized
  double gronwall_factor = 0.0;  // e^{2 k N T}
  bool pass = false;             // growth <= factor * 1.1
};

// Re-runs the fixed-point solve with the wall initial data perturbed by
// eps*cos(pi z) in every species and measures the worst L2 growth of the
// difference relative to the initial perturbation.
StabilityReport stability_experiment(const ProblemSpec& spec, double eps);

struct AuditReport {
  EnergyAudit energy;
  std::optional<PsiProbeReport> psi_ratios;
  std::optional<PhiProbeReport> phi_ratios;
  std::optional<StabilityReport> stability_growth;
};

}  // namespace catconv
