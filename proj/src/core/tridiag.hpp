#pragma once

#include <span>
#include <vector>

namespace catconv {

// Symmetric tridiagonal matrix, full-size storage (diag n, off n-1).
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> off;

  int size() const { return static_cast<int>(diag.size()); }

  std::vector<double> apply(std::span<const double> x) const;
};

// Thomas solve of a general tridiagonal system (lower, diag, upper, rhs).
// Overwrites nothing; returns the solution. The systems assembled here are
// strictly diagonally dominant, so no pivoting is needed.
std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs);

// Convenience for symmetric systems.
std::vector<double> solve_tridiagonal(const TridiagonalMatrix& m,
                                      std::span<const double> rhs);

}  // namespace catconv
