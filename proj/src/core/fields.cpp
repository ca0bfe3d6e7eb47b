#include "core/fields.hpp"

#include <stdexcept>

namespace catconv {

BoundaryField subtract(const BoundaryField& a, const BoundaryField& b) {
  if (!a.same_shape(b))
    throw std::invalid_argument("BoundaryField subtract: shape mismatch");
  BoundaryField out(a.n_species, a.n_z, a.n_t);
  for (size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] - b.data[i];
  return out;
}

CylinderField subtract(const CylinderField& a, const CylinderField& b) {
  if (a.n_species != b.n_species || a.n_r != b.n_r || a.n_z != b.n_z ||
      a.n_t != b.n_t)
    throw std::invalid_argument("CylinderField subtract: shape mismatch");
  CylinderField out(a.n_species, a.n_r, a.n_z, a.n_t);
  for (size_t i = 0; i < a.values.size(); ++i)
    out.values[i] = a.values[i] - b.values[i];
  return out;
}

}  // namespace catconv
