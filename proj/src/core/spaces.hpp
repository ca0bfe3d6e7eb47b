#pragma once

#include <span>
#include <string>
#include <vector>

namespace catconv {

struct EigenBasis;  // see eigenbasis.hpp

enum class RadialLayout {
  Uniform,
  // Nodes clustered toward r=1, where the wall coupling creates the
  // active region: r_i = sin(pi*xi_i/2) with xi uniform on [0,1].
  ChebyshevAtWall,
};

enum class Measure {
  R,   // r dr
  RW,  // r(1-r^2) dr
};

// Grids in (r,z,t) plus quadrature weights for the two radial measures.
//
// The radial weights come from exact integration of piecewise-linear hat
// functions against each measure, followed by a weighted least-squares
// correction that makes the monomial moments r^0, r^1, r^2 exact. The
// correction is a relative perturbation of each weight, so nonnegativity
// is preserved on any sane grid; it is asserted after construction.
struct Discretization {
  std::vector<double> radial_nodes;  // ascending in [0,1], endpoints included
  std::vector<double> axial_nodes;   // ascending in [0,1], uniform
  std::vector<double> time_nodes;    // ascending in [0,T], uniform
  std::vector<double> quad_w_r;      // weights for the measure r dr
  std::vector<double> quad_w_rw;     // weights for the measure r(1-r^2) dr

  int n_r() const { return static_cast<int>(radial_nodes.size()); }
  int n_z() const { return static_cast<int>(axial_nodes.size()); }
  int n_t() const { return static_cast<int>(time_nodes.size()); }
  double horizon() const { return time_nodes.back(); }
  double dz() const { return axial_nodes[1] - axial_nodes[0]; }
  double dt() const { return time_nodes[1] - time_nodes[0]; }

  const std::vector<double>& quad(Measure m) const {
    return m == Measure::R ? quad_w_r : quad_w_rw;
  }
};

Discretization build_discretization(int n_r, int n_z, int n_t, double T,
                                    RadialLayout layout = RadialLayout::Uniform);

// Discrete inner product sum_i w_i u(r_i) v(r_i) under the chosen measure.
double inner_weighted(std::span<const double> u, std::span<const double> v,
                      Measure measure, const Discretization& disc);

// Three-point finite-difference derivative on an arbitrary ascending grid;
// second order in the interior and at both endpoints.
std::vector<double> fd_derivative(std::span<const double> u,
                                  std::span<const double> x);

// sqrt( int |du/dr|^2 r dr ) for u with u(1)=0. Rejects functions outside
// the Dirichlet-at-1 space (|u(1)| > 1e-10 * max|u|).
double norm_Wr0(std::span<const double> u, const Discretization& disc);

// Discrete dual norm sqrt( sum_j <f,w_j>_rw^2 / lambda_j ) truncated at the
// basis mode count.
double dual_norm(std::span<const double> f, const EigenBasis& basis,
                 const Discretization& disc);

// Trapezoid weights for integrals over the axial or time grid.
std::vector<double> trapezoid_weights(std::span<const double> nodes);

// Exact moments int r^k dmu for k=0,1,2 of the two measures on [0,1].
std::vector<double> exact_moments(Measure measure);

}  // namespace catconv
