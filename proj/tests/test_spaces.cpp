#include <doctest.h>

#include <cmath>
#include <random>

#include "core/eigenbasis.hpp"
#include "core/spaces.hpp"

using namespace catconv;

namespace {

// independent quadrature oracle: composite trapezoid of an analytic
// integrand on a fine grid
template <typename F>
double trapezoid_oracle(F f, int n) {
  double s = 0.5 * (f(0.0) + f(1.0));
  for (int i = 1; i < n; ++i) s += f(static_cast<double>(i) / n);
  return s / n;
}

}  // namespace

TEST_CASE("build_discretization validates its inputs") {
  CHECK_THROWS_AS(build_discretization(2, 8, 8, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_discretization(8, 2, 8, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_discretization(8, 8, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_discretization(8, 8, 8, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_discretization(8, 8, 8, -1.0), std::invalid_argument);

  const Discretization d = build_discretization(3, 3, 3, 2.0);
  CHECK(d.radial_nodes.front() == 0.0);
  CHECK(d.radial_nodes.back() == 1.0);
  CHECK(d.time_nodes.back() == doctest::Approx(2.0));
}

TEST_CASE("quadrature reproduces the measure masses on every grid") {
  for (int n : {3, 4, 16, 64, 128, 512}) {
    for (auto layout : {RadialLayout::Uniform, RadialLayout::ChebyshevAtWall}) {
      const Discretization d = build_discretization(n, 3, 3, 1.0, layout);
      double s_r = 0.0, s_rw = 0.0;
      for (int i = 0; i < n; ++i) {
        s_r += d.quad_w_r[i];
        s_rw += d.quad_w_rw[i];
        CHECK(d.quad_w_r[i] >= 0.0);
        CHECK(d.quad_w_rw[i] >= 0.0);
        if (i > 0) CHECK(d.radial_nodes[i] > d.radial_nodes[i - 1]);
      }
      CHECK(std::abs(s_rw - 0.25) <= 1e-12);
      CHECK(std::abs(s_r - 0.5) <= 1e-12);
    }
  }
}

TEST_CASE("quadrature reproduces the r^0..r^2 moments") {
  // uniform grids at every size; clustered grids once they can carry the
  // r^2 moment with nonnegative weights
  auto check_moments = [](int n, RadialLayout layout) {
    const Discretization d = build_discretization(n, 3, 3, 1.0, layout);
    for (auto m : {Measure::R, Measure::RW}) {
      const auto moments = exact_moments(m);
      for (int k = 0; k <= 2; ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
          s += d.quad(m)[i] * std::pow(d.radial_nodes[i], k);
        CHECK(std::abs(s - moments[k]) <= 1e-12);
      }
    }
  };
  for (int n : {3, 4, 16, 64, 128, 512}) check_moments(n, RadialLayout::Uniform);
  for (int n : {33, 128, 512}) check_moments(n, RadialLayout::ChebyshevAtWall);
}

TEST_CASE("inner_weighted basics") {
  const Discretization d = build_discretization(64, 3, 3, 1.0);
  std::vector<double> one(64, 1.0), zero(64, 0.0);
  CHECK(inner_weighted(one, one, Measure::RW, d) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(inner_weighted(one, zero, Measure::RW, d) == 0.0);
  CHECK(inner_weighted(d.radial_nodes, d.radial_nodes, Measure::R, d) ==
        doctest::Approx(0.25).epsilon(1e-12));

  std::vector<double> bad(63, 1.0);
  CHECK_THROWS_AS(inner_weighted(bad, one, Measure::R, d), std::invalid_argument);
}

TEST_CASE("inner products satisfy Cauchy-Schwarz on random samples") {
  const Discretization d = build_discretization(65, 3, 3, 1.0);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> u(65), v(65);
    for (int i = 0; i < 65; ++i) {
      u[i] = gauss(rng);
      v[i] = gauss(rng);
    }
    for (auto m : {Measure::R, Measure::RW}) {
      const double uv = inner_weighted(u, v, m, d);
      const double uu = inner_weighted(u, u, m, d);
      const double vv = inner_weighted(v, v, m, d);
      CHECK(std::abs(uv) <= std::sqrt(uu) * std::sqrt(vv) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("norm_Wr0 on analytic functions") {
  const Discretization d = build_discretization(64, 3, 3, 1.0);
  std::vector<double> zero(64, 0.0);
  CHECK(norm_Wr0(zero, d) == 0.0);

  // u = 1-r^2: |u|^2 = int 4 r^3 dr = 1, and the rule integrates the
  // quadratic derivative exactly
  std::vector<double> para(64);
  for (int i = 0; i < 64; ++i)
    para[i] = 1.0 - d.radial_nodes[i] * d.radial_nodes[i];
  CHECK(norm_Wr0(para, d) == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<double> off(64, 1.0);  // u(1) != 0
  CHECK_THROWS_AS(norm_Wr0(off, d), std::invalid_argument);
}

TEST_CASE("norm_Wr0 matches a fine trapezoid oracle on smooth data") {
  // u = (1-r^2)(a + b r + c r^2), derivative known in closed form; the
  // oracle integrates the analytic integrand on a 2e5-point grid.
  const double a = 0.7, b = -0.4, c = 0.9;
  auto du = [&](double r) {
    return -2.0 * r * (a + b * r + c * r * r) +
           (1.0 - r * r) * (b + 2.0 * c * r);
  };
  const double target =
      trapezoid_oracle([&](double r) { return du(r) * du(r) * r; }, 200000);

  double prev_err = 0.0;
  for (int n : {128, 512}) {
    const Discretization d = build_discretization(n, 3, 3, 1.0);
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) {
      const double r = d.radial_nodes[i];
      u[i] = (1.0 - r * r) * (a + b * r + c * r * r);
    }
    const double got = norm_Wr0(u, d);
    const double err = std::abs(got - std::sqrt(target)) / std::sqrt(target);
    if (n == 128) prev_err = err;
    if (n == 512) {
      CHECK(err <= 2e-5);
      CHECK(err <= prev_err / 8.0);  // second-order convergence
    }
  }
}

TEST_CASE("discrete Poincare inequality with the 3/16 constant") {
  // upper bound only; the sharp discrete constant is 1/lambda_1 ~ 0.137
  for (int n : {128, 256}) {
    const Discretization d = build_discretization(n, 3, 3, 1.0);
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> u(n, 0.0);
      for (int p = 1; p <= 5; ++p) {
        const double amp = gauss(rng);
        for (int i = 0; i < n; ++i) {
          const double r = d.radial_nodes[i];
          u[i] += amp * (1.0 - r * r) * std::pow(r, p - 1);
        }
      }
      const double mass = inner_weighted(u, u, Measure::RW, d);
      const double grad = norm_Wr0(u, d);
      CHECK(mass <= (3.0 / 16.0) * grad * grad * 1.05);
    }
  }
}

TEST_CASE("dual_norm basics and monotonicity in the mode count") {
  const Discretization d = build_discretization(129, 3, 3, 1.0);
  const EigenBasis basis = eigenpairs(d, 1.0, 24);

  std::vector<double> zero(129, 0.0);
  CHECK(dual_norm(zero, basis, d) == 0.0);

  CHECK(dual_norm(basis.eigenfunctions[0], basis, d) ==
        doctest::Approx(1.0 / std::sqrt(basis.eigenvalues[0])).epsilon(1e-10));

  std::vector<double> f(129);
  for (int i = 0; i < 129; ++i)
    f[i] = std::cos(2.0 * d.radial_nodes[i]) + 0.3 * d.radial_nodes[i];
  const double base = dual_norm(f, basis, d);
  std::vector<double> scaled(f);
  for (double& v : scaled) v *= -2.5;
  CHECK(dual_norm(scaled, basis, d) == doctest::Approx(2.5 * base).epsilon(1e-12));

  double prev = 0.0;
  double last_step = 0.0;
  for (int m : {4, 8, 16, 24}) {
    const EigenBasis sub = eigenpairs(d, 1.0, m);
    const double v = dual_norm(f, sub, d);
    CHECK(v >= prev - 1e-14);
    last_step = v - prev;
    prev = v;
  }
  CHECK(last_step <= 0.05 * prev);  // Cauchy in m

  EigenBasis empty;
  CHECK_THROWS_AS(dual_norm(f, empty, d), std::invalid_argument);
}
