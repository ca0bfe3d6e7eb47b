#pragma once

#include <string>

#include "core/fields.hpp"
#include "core/spaces.hpp"

namespace catconv {

// Field CSVs share the header r_or_z,z,t,value; wall fields live at r=1 so
// their first column is the constant 1. Floats are written at 17 significant
// digits so reruns compare bit-identical.
void write_boundary_csv(const std::string& path, const BoundaryField& field,
                        int species, const Discretization& disc);
void write_cylinder_csv(const std::string& path, const CylinderField& field,
                        int species, const Discretization& disc);

}  // namespace catconv
