#include "core/eigenbasis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace catconv {

RadialOperators assemble_operators(const Discretization& disc, double beta) {
  if (!(beta > 0.0))
    throw std::invalid_argument("assemble_operators: beta must be positive");
  const int n = disc.n_r();
  RadialOperators ops;
  ops.stiffness.diag.assign(n, 0.0);
  ops.stiffness.off.assign(n - 1, 0.0);
  for (int c = 0; c + 1 < n; ++c) {
    const double a = disc.radial_nodes[c], b = disc.radial_nodes[c + 1];
    const double h = b - a;
    if (!(h > 0.0))
      throw std::invalid_argument("assemble_operators: degenerate grid");
    const double s = beta * (b * b - a * a) / (2.0 * h * h);  // int_cell r dr / h^2
    ops.stiffness.diag[c] += s;
    ops.stiffness.diag[c + 1] += s;
    ops.stiffness.off[c] -= s;
  }
  ops.mass_diag = disc.quad_w_rw;
  return ops;
}

EigenBasis eigenpairs(const Discretization& disc, double beta, int m) {
  const int n = disc.n_r();
  if (m < 1) throw std::invalid_argument("eigenpairs: mode count must be >= 1");
  if (m >= n - 2)
    throw std::invalid_argument("eigenpairs: mode count must be < n_r - 2");

  const RadialOperators ops = assemble_operators(disc, beta);
  const int ni = n - 1;  // Dirichlet at r=1 removes the last node

  // With a diagonal mass D, S w = lambda D w reduces to the symmetric
  // tridiagonal problem B y = lambda y, B = D^{-1/2} S D^{-1/2}, w = D^{-1/2} y.
  Eigen::VectorXd scale(ni), bdiag(ni), bsub(ni - 1);
  for (int i = 0; i < ni; ++i) {
    const double di = ops.mass_diag[i];
    if (!(di > 0.0))
      throw std::runtime_error("eigenpairs: nonpositive mass weight");
    scale[i] = 1.0 / std::sqrt(di);
  }
  for (int i = 0; i < ni; ++i) bdiag[i] = ops.stiffness.diag[i] * scale[i] * scale[i];
  for (int i = 0; i + 1 < ni; ++i)
    bsub[i] = ops.stiffness.off[i] * scale[i] * scale[i + 1];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(bdiag, bsub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error(
        "eigenpairs: tridiagonal QL iteration failed to converge (n_r=" +
        std::to_string(n) + ", beta=" + std::to_string(beta) + ")");

  EigenBasis basis;
  basis.mode_count = m;
  basis.beta = beta;
  basis.eigenvalues.resize(m);
  basis.eigenfunctions.assign(m, std::vector<double>(n, 0.0));
  for (int j = 0; j < m; ++j) {
    basis.eigenvalues[j] = es.eigenvalues()[j];
    auto& w = basis.eigenfunctions[j];
    for (int i = 0; i < ni; ++i) w[i] = es.eigenvectors()(i, j) * scale[i];
    // fix the arbitrary eigenvector sign: positive at the axis
    int first = 0;
    while (first < ni && w[first] == 0.0) ++first;
    if (first < ni && w[first] < 0.0)
      for (double& v : w) v = -v;
  }
  basis.unit_coeffs.resize(m);
  const std::vector<double> one(n, 1.0);
  for (int j = 0; j < m; ++j)
    basis.unit_coeffs[j] =
        inner_weighted(one, basis.eigenfunctions[j], Measure::RW, disc);
  return basis;
}

std::vector<double> apply_T(std::span<const double> g,
                            const Discretization& disc, double beta) {
  const int n = disc.n_r();
  if (static_cast<int>(g.size()) != n)
    throw std::invalid_argument("apply_T: size mismatch with radial grid");
  for (double v : g)
    if (!std::isfinite(v)) throw std::invalid_argument("apply_T: non-finite input");

  const RadialOperators ops = assemble_operators(disc, beta);
  const int ni = n - 1;
  TridiagonalMatrix s_int;
  s_int.diag.assign(ops.stiffness.diag.begin(), ops.stiffness.diag.begin() + ni);
  s_int.off.assign(ops.stiffness.off.begin(), ops.stiffness.off.begin() + ni - 1);
  std::vector<double> rhs(ni);
  for (int i = 0; i < ni; ++i) rhs[i] = ops.mass_diag[i] * g[i];
  std::vector<double> x = solve_tridiagonal(s_int, rhs);
  x.push_back(0.0);
  return x;
}

double poincare_sup(const Discretization& disc) {
  return 1.0 / eigenpairs(disc, 1.0, 1).eigenvalues[0];
}

void write_eigenbasis_csv(const EigenBasis& basis, const Discretization& disc,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_eigenbasis_csv: cannot open " + path);
  out << "j,lambda";
  char buf[40];
  for (int i = 0; i < disc.n_r(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", disc.radial_nodes[i]);
    out << ",omega_at_r_" << buf;
  }
  out << "\n";
  for (int j = 0; j < basis.mode_count; ++j) {
    out << (j + 1);
    std::snprintf(buf, sizeof buf, "%.17g", basis.eigenvalues[j]);
    out << "," << buf;
    for (double v : basis.eigenfunctions[j]) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << "," << buf;
    }
    out << "\n";
  }
}

}  // namespace catconv
