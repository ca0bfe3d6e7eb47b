#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "core/spaces.hpp"
#include "core/tridiag.hpp"

namespace catconv {

// Stiffness S_ij = beta * int phi_i' phi_j' r dr on the full node set
// (piecewise-linear elements, exact cell integrals) and the diagonal mass
// carrying the r(1-r^2) quadrature weights. The eigenproblem uses the
// diagonal mass so that the computed basis is orthonormal in the same
// discrete inner product the rest of the library uses.
struct RadialOperators {
  TridiagonalMatrix stiffness;    // full grid, symmetric, row sums zero
  std::vector<double> mass_diag;  // = quad_w_rw
};

RadialOperators assemble_operators(const Discretization& disc, double beta);

// First m eigenpairs of the Dirichlet-at-1 problem S w = lambda M w with the
// natural condition at r=0. Eigenfunctions are stored on the full grid with
// w_j(1) = 0 and normalized so <w_i, w_j>_rw = delta_ij.
struct EigenBasis {
  std::vector<double> eigenvalues;                 // ascending, positive
  std::vector<std::vector<double>> eigenfunctions; // m functions of size n_r
  int mode_count = 0;
  double beta = 1.0;
  std::vector<double> unit_coeffs;                 // c_j = <1, w_j>_rw
};

EigenBasis eigenpairs(const Discretization& disc, double beta, int m);

// T(g): weak solve of L(T g) = g r(1-r^2) with T(g)(1) = 0.
std::vector<double> apply_T(std::span<const double> g,
                            const Discretization& disc, double beta);

// sup over the discrete Dirichlet space of <u,u>_rw / |u|_Wr0^2, i.e. the
// inverse of the smallest eigenvalue of the beta=1 problem.
double poincare_sup(const Discretization& disc);

// One row per mode: j, lambda_j, then the nodal values of w_j.
void write_eigenbasis_csv(const EigenBasis& basis, const Discretization& disc,
                          const std::string& path);

}  // namespace catconv
