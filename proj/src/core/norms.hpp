#pragma once

#include "core/fields.hpp"
#include "core/spaces.hpp"

namespace catconv {

// ||u||_{Wz(T)}: values plus axial derivative, integrated over z and [0,T].
// t_end < 0 integrates over the whole grid; otherwise over nodes 0..t_end.
double norm_Wz(const BoundaryField& u, const Discretization& disc,
               int t_end = -1);

// Same but with axial-derivative control only for the last species
// (the temperature keeps its diffusion, the others lose it with theta -> 0).
double norm_Wz_tilde(const BoundaryField& u, const Discretization& disc);

// ||u||_{Wr(T)}: r(1-r^2)-weighted values plus r-weighted radial derivative,
// integrated over z and t. The derivative is taken by finite differences on
// the nodal values, independent of any modal representation.
double norm_WrT(const CylinderField& u, const Discretization& disc);

// Gradient parts used by the Lipschitz probes.
double gradient_part_WrT(const CylinderField& u, const Discretization& disc);
double gradient_part_Wz(const BoundaryField& u, const Discretization& disc,
                        int t_end = -1);

// sum_i int u_i(z, t_l)^2 dz at one time node.
double l2_z_slice(const BoundaryField& u, const Discretization& disc, int l);

// Relative L2 distances used for oracle comparisons (rw-weighted in r,
// trapezoid in z and t; plain L2 for wall fields).
double rel_l2_cylinder(const CylinderField& a, const CylinderField& b,
                       const Discretization& disc);
double rel_l2_boundary(const BoundaryField& a, const BoundaryField& b,
                       const Discretization& disc);

}  // namespace catconv
