#pragma once

#include <vector>

#include "core/coupling.hpp"
#include "core/fields.hpp"
#include "core/spaces.hpp"

namespace catconv {

// Reference implementations kept algorithmically disjoint from the main
// pipeline: finite-volume radial discretization marched with Crank-Nicolson
// in z (the main solver is spectral with exact modal integration), and the
// wall coupled through the raw one-sided trace derivative (the main solver
// uses the integral form). Agreement between the two is therefore evidence,
// not a tautology.

// Cylinder-only march with the wall data imposed as Dirichlet values at r=1.
// The returned field is purely nodal (no modal data). Uniform radial grids
// with n_r >= 4 only.
CylinderField solve_cylinder_fd(const BoundaryField& u_s,
                                const std::vector<std::vector<double>>& u_f0,
                                const std::vector<double>& betas,
                                const Discretization& disc);

struct MonolithicResult {
  CylinderField u_f;
  BoundaryField u_s;
  int max_inner_iterations = 0;
};

// Fully coupled solve of the regularized system on the tensor grid: each
// time step alternates cylinder marches (trace as Dirichlet data) with one
// wall step driven by -gamma_i dC_if/dr(1,z,t), inner-iterated to 1e-10
// self-consistency.
MonolithicResult solve_monolithic(const ProblemSpec& spec);

// Eigenvalues of the weighted radial operator from an independent scheme:
// strong-form shooting (midpoint integrator, power series through the
// singular axis), bisection on the eigenvalue, Richardson-extrapolated over
// a step-size halving.
std::vector<double> eigen_oracle(int n_fine, double beta, int j_max);

}  // namespace catconv
