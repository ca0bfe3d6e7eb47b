#include "core/tridiag.hpp"

#include <stdexcept>

namespace catconv {

std::vector<double> TridiagonalMatrix::apply(std::span<const double> x) const {
  const int n = size();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("tridiagonal apply: size mismatch");
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double v = diag[i] * x[i];
    if (i > 0) v += off[i - 1] * x[i - 1];
    if (i + 1 < n) v += off[i] * x[i + 1];
    y[i] = v;
  }
  return y;
}

std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> r(rhs.begin(), rhs.end());
  for (int i = 1; i < n; ++i) {
    const double m = lower[i] / d[i - 1];
    d[i] -= m * upper[i - 1];
    r[i] -= m * r[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = r[n - 1] / d[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = (r[i] - upper[i] * x[i + 1]) / d[i];
  return x;
}

std::vector<double> solve_tridiagonal(const TridiagonalMatrix& m,
                                      std::span<const double> rhs) {
  const int n = m.size();
  std::vector<double> lower(n, 0.0), upper(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) {
    upper[i] = m.off[i];
    lower[i + 1] = m.off[i];
  }
  return solve_tridiagonal(lower, m.diag, upper, rhs);
}

}  // namespace catconv
