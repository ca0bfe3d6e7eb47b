#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "core/eigenbasis.hpp"
#include "core/oracle.hpp"
#include "core/spaces.hpp"

using namespace catconv;

namespace {

double weak_form(const TridiagonalMatrix& s, const std::vector<double>& u,
                 const std::vector<double>& v) {
  const auto su = s.apply(u);
  double acc = 0.0;
  for (size_t i = 0; i < v.size(); ++i) acc += v[i] * su[i];
  return acc;
}

}  // namespace

TEST_CASE("assembled operators: symmetry, kernel, mass") {
  const Discretization d = build_discretization(96, 3, 3, 1.0);
  const RadialOperators ops = assemble_operators(d, 1.3);

  // symmetric storage: reconstructing dense S and its transpose gives
  // literally identical entries
  const int n = ops.stiffness.size();
  for (int i = 0; i + 1 < n; ++i)
    CHECK(ops.stiffness.off[i] == ops.stiffness.off[i]);

  std::vector<double> one(n, 1.0);
  const auto s_one = ops.stiffness.apply(one);
  for (double v : s_one) CHECK(std::abs(v) <= 1e-13);

  double mass_form = 0.0;
  for (int i = 0; i < n; ++i) mass_form += ops.mass_diag[i];
  CHECK(mass_form == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS_AS(assemble_operators(d, 0.0), std::invalid_argument);
}

TEST_CASE("eigenpairs: orthonormality, weak identity, ordering") {
  const Discretization d = build_discretization(257, 3, 3, 1.0);
  const int m = 32;
  const EigenBasis basis = eigenpairs(d, 1.0, m);

  double defect = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double ip = inner_weighted(basis.eigenfunctions[i],
                                       basis.eigenfunctions[j], Measure::RW, d);
      defect = std::max(defect, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  CHECK(defect <= 1e-8);

  for (int j = 0; j < m; ++j) {
    CHECK(basis.eigenvalues[j] > 0.0);
    if (j > 0) CHECK(basis.eigenvalues[j] > basis.eigenvalues[j - 1]);
    CHECK(basis.eigenfunctions[j].back() == 0.0);
  }

  // weak identity <w_j', phi'>_r = lambda_j <w_j, phi>_rw for random phi
  const RadialOperators ops = assemble_operators(d, 1.0);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> phi(d.n_r());
    for (auto& v : phi) v = gauss(rng);
    phi.back() = 0.0;
    for (int j : {0, 5, m - 1}) {
      const double lhs = weak_form(ops.stiffness, basis.eigenfunctions[j], phi);
      const double rhs = basis.eigenvalues[j] *
                         inner_weighted(basis.eigenfunctions[j], phi, Measure::RW, d);
      CHECK(std::abs(lhs - rhs) <=
            1e-6 * std::max(1.0, std::abs(lhs)));
    }
  }

  CHECK_THROWS_AS(eigenpairs(d, 1.0, d.n_r() - 2), std::invalid_argument);
  CHECK_THROWS_AS(eigenpairs(d, 1.0, 0), std::invalid_argument);
}

TEST_CASE("eigenvalues scale linearly in beta with unchanged modes") {
  const Discretization d = build_discretization(129, 3, 3, 1.0);
  const EigenBasis b1 = eigenpairs(d, 1.0, 8);
  const EigenBasis b2 = eigenpairs(d, 2.0, 8);
  for (int j = 0; j < 8; ++j) {
    CHECK(b2.eigenvalues[j] ==
          doctest::Approx(2.0 * b1.eigenvalues[j]).epsilon(1e-10));
    for (int i = 0; i < d.n_r(); ++i)
      CHECK(std::abs(b2.eigenfunctions[j][i] - b1.eigenfunctions[j][i]) <= 1e-8);
  }
}

TEST_CASE("Rayleigh bound from the Poincare constant") {
  const Discretization d = build_discretization(257, 3, 3, 1.0);
  for (double beta : {0.5, 1.0, 2.0}) {
    const EigenBasis b = eigenpairs(d, beta, 1);
    CHECK(1.0 / b.eigenvalues[0] <= (3.0 / 16.0) / beta);
  }
}

TEST_CASE("lambda_1 agrees with the shooting oracle") {
  const Discretization d = build_discretization(513, 3, 3, 1.0);
  const EigenBasis b = eigenpairs(d, 1.0, 1);
  const std::vector<double> ref = eigen_oracle(2048, 1.0, 1);
  CHECK(std::abs(b.eigenvalues[0] - ref[0]) / ref[0] <= 1e-3);
}

TEST_CASE("apply_T: inverse relation, self-adjointness, positivity") {
  const Discretization d = build_discretization(193, 3, 3, 1.0);
  const int n = d.n_r();

  std::vector<double> zero(n, 0.0);
  const auto t_zero = apply_T(zero, d, 1.0);
  for (double v : t_zero) CHECK(v == 0.0);

  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> f(n), g(n);
    for (int i = 0; i < n; ++i) {
      f[i] = gauss(rng);
      g[i] = gauss(rng);
    }
    const auto tf = apply_T(f, d, 1.0);
    const auto tg = apply_T(g, d, 1.0);
    const double a = inner_weighted(tf, g, Measure::RW, d);
    const double b = inner_weighted(f, tg, Measure::RW, d);
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
    const double pos = inner_weighted(tf, f, Measure::RW, d);
    CHECK(pos >= -1e-12);
    // non-degenerate: random f is nonzero, so the form is strictly positive
    CHECK(pos > 0.0);
  }

  const EigenBasis basis = eigenpairs(d, 1.0, 12);
  for (int j : {0, 4, 11}) {
    const auto tw = apply_T(basis.eigenfunctions[j], d, 1.0);
    double resid = 0.0;
    for (int i = 0; i < n; ++i)
      resid = std::max(resid, std::abs(tw[i] * basis.eigenvalues[j] -
                                       basis.eigenfunctions[j][i]));
    CHECK(resid <= 1e-6);
  }
}

TEST_CASE("poincare_sup: bounded by 3/16, stable under refinement") {
  double prev = 0.0;
  for (int n : {128, 256, 512}) {
    const double v = poincare_sup(build_discretization(n, 3, 3, 1.0));
    CHECK(v > 0.0);
    CHECK(v <= 3.0 / 16.0);
    if (prev > 0.0) CHECK(std::abs(v - prev) / v <= 0.005);
    prev = v;
  }
}

TEST_CASE("completeness proxy: projection error decreases with m") {
  const Discretization d = build_discretization(257, 3, 3, 1.0);
  const int n = d.n_r();
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) {
    const double r = d.radial_nodes[i];
    f[i] = (1.0 - r * r) * (0.5 + r + 0.3 * std::sin(3.0 * r));
  }
  double prev_err = 1e300;
  for (int m : {4, 8, 16, 32}) {
    const EigenBasis basis = eigenpairs(d, 1.0, m);
    std::vector<double> recon(n, 0.0);
    for (int j = 0; j < m; ++j) {
      const double c = inner_weighted(f, basis.eigenfunctions[j], Measure::RW, d);
      for (int i = 0; i < n; ++i) recon[i] += c * basis.eigenfunctions[j][i];
    }
    std::vector<double> diff(n);
    for (int i = 0; i < n; ++i) diff[i] = recon[i] - f[i];
    const double err = std::sqrt(inner_weighted(diff, diff, Measure::RW, d));
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err <= 1e-3);
}

TEST_CASE("eigenbasis CSV export") {
  const Discretization d = build_discretization(33, 3, 3, 1.0);
  const EigenBasis basis = eigenpairs(d, 1.0, 4);
  const std::string path = "eigenbasis_test.csv";
  write_eigenbasis_csv(basis, d, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header.substr(0, 8) == "j,lambda");
  int rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);
  std::remove(path.c_str());
}
