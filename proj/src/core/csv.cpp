#include "core/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace catconv {

namespace {

void write_row(std::ofstream& out, double a, double b, double c, double d) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", a, b, c, d);
  out << buf;
}

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << "r_or_z,z,t,value\n";
  return out;
}

}  // namespace

void write_boundary_csv(const std::string& path, const BoundaryField& field,
                        int species, const Discretization& disc) {
  std::ofstream out = open_or_throw(path);
  for (int k = 0; k < field.n_z; ++k)
    for (int l = 0; l < field.n_t; ++l)
      write_row(out, 1.0, disc.axial_nodes[k], disc.time_nodes[l],
                field.at(species, k, l));
}

void write_cylinder_csv(const std::string& path, const CylinderField& field,
                        int species, const Discretization& disc) {
  std::ofstream out = open_or_throw(path);
  for (int r = 0; r < field.n_r; ++r)
    for (int k = 0; k < field.n_z; ++k)
      for (int l = 0; l < field.n_t; ++l)
        write_row(out, disc.radial_nodes[r], disc.axial_nodes[k],
                  disc.time_nodes[l], field.at(species, r, k, l));
}

}  // namespace catconv
