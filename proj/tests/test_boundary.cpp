#include <doctest.h>

#include <cmath>
#include <memory>

#include "core/boundary.hpp"
#include "core/cylinder.hpp"
#include "core/norms.hpp"

using namespace catconv;

namespace {

constexpr double kPi = 3.141592653589793;

WallParams single_species_params(const Discretization& d, double theta,
                                 ReactionModel model, double u0_const) {
  WallParams p;
  p.theta = {theta};
  p.gamma_over_beta = {1.0};
  p.signs = {1.0};
  p.model = std::move(model);
  p.u_s0 = {std::vector<double>(d.n_z(), u0_const)};
  return p;
}

// classical RK4, used as the independent integrator for the theta=0 rows
template <typename F>
double rk4(F f, double y0, double t0, double t1, int steps) {
  double y = y0, t = t0;
  const double h = (t1 - t0) / steps;
  for (int s = 0; s < steps; ++s) {
    const double k1 = f(t, y);
    const double k2 = f(t + h / 2, y + h / 2 * k1);
    const double k3 = f(t + h / 2, y + h / 2 * k2);
    const double k4 = f(t + h, y + h * k3);
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    t += h;
  }
  return y;
}

}  // namespace

TEST_CASE("constants are a fixed point of the heat step") {
  const Discretization d = build_discretization(5, 33, 17, 0.5);
  const double c = 0.37;
  WallParams p = single_species_params(d, 0.8, make_zero_model(1), c);
  const BoundaryField g(1, d.n_z(), d.n_t());
  const BoundaryField us = solve_boundary(g, p, d);
  for (double v : us.data) CHECK(std::abs(v - c) <= 1e-13);
}

TEST_CASE("zero input is the exact zero fixed point") {
  const Discretization d = build_discretization(5, 17, 9, 0.2);
  WallParams p = single_species_params(d, 0.5, make_zero_model(1), 0.0);
  const BoundaryField g(1, d.n_z(), d.n_t());
  const BoundaryField us = solve_boundary(g, p, d);
  for (double v : us.data) CHECK(v == 0.0);
}

TEST_CASE("initial condition is copied bitwise") {
  const Discretization d = build_discretization(5, 21, 7, 0.1);
  WallParams p = single_species_params(d, 0.5, make_zero_model(1), 0.0);
  for (int k = 0; k < d.n_z(); ++k)
    p.u_s0[0][k] = std::sin(2.7 * k) * 0.1234567890123456;
  const BoundaryField g(1, d.n_z(), d.n_t());
  const BoundaryField us = solve_boundary(g, p, d);
  for (int k = 0; k < d.n_z(); ++k) CHECK(us.at(0, k, 0) == p.u_s0[0][k]);
}

TEST_CASE("Neumann heat decay against the separable solution") {
  const double theta0 = 1.0, T = 0.25;
  const Discretization d = build_discretization(5, 128, 257, T);
  WallParams p = single_species_params(d, theta0, make_zero_model(1), 0.0);
  for (int k = 0; k < d.n_z(); ++k)
    p.u_s0[0][k] = std::cos(kPi * d.axial_nodes[k]);
  const BoundaryField g(1, d.n_z(), d.n_t());
  BoundarySolveInfo info;
  const BoundaryField us = solve_boundary(g, p, d, &info);

  double worst = 0.0;
  for (int k = 0; k < d.n_z(); ++k) {
    const double expect =
        std::exp(-theta0 * kPi * kPi * T) * std::cos(kPi * d.axial_nodes[k]);
    worst = std::max(worst, std::abs(us.at(0, k, d.n_t() - 1) - expect));
  }
  CHECK(worst <= 1e-4);
  CHECK(info.max_step_residual <= 1e-8);

  // discrete Neumann: one-sided derivative at both ends is O(dz^2)
  double umax = 0.0;
  for (double v : us.data) umax = std::max(umax, std::abs(v));
  const double h = d.dz();
  const int nt = d.n_t() - 1;
  const double d0 = (-3.0 * us.at(0, 0, nt) + 4.0 * us.at(0, 1, nt) -
                     us.at(0, 2, nt)) / (2.0 * h);
  const int nz = d.n_z() - 1;
  const double d1 = (3.0 * us.at(0, nz, nt) - 4.0 * us.at(0, nz - 1, nt) +
                     us.at(0, nz - 2, nt)) / (2.0 * h);
  CHECK(std::abs(d0) <= 20.0 * h * h * umax);
  CHECK(std::abs(d1) <= 20.0 * h * h * umax);
}

TEST_CASE("theta=0 rows reduce to the nodal ODE") {
  // species 1 degenerate, species 2 the (diffusive) temperature row; the
  // custom kinetics keeps row 1 independent so each z node is a scalar ODE
  // checked against RK4
  const double T = 0.25;
  const Discretization d = build_discretization(5, 17, 513, T);
  ReactionModel saturating;
  saturating.name = "saturating";
  saturating.n_species = 2;
  saturating.lipschitz_k = 2.0;
  saturating.rate_fn = [](std::span<const double> x, std::span<double> out) {
    out[0] = x[0] * x[0] / (1.0 + x[0] * x[0]);
    out[1] = 0.0;
  };
  WallParams p;
  p.theta = {0.0, 1.0};
  p.gamma_over_beta = {1.5, 1.0};
  p.signs = {-1.0, 1.0};
  p.model = saturating;
  p.u_s0 = {std::vector<double>(d.n_z(), 0.9),
            std::vector<double>(d.n_z(), 0.0)};

  BoundaryField g(2, d.n_z(), d.n_t());
  auto g_of = [](double z, double t) {
    return 0.4 * std::sin(kPi * z) * std::exp(-t);
  };
  for (int k = 0; k < d.n_z(); ++k)
    for (int l = 0; l < d.n_t(); ++l)
      g.at(0, k, l) = g_of(d.axial_nodes[k], d.time_nodes[l]);

  const BoundaryField us = solve_boundary(g, p, d);
  for (int k : {0, 5, 16}) {
    const double z = d.axial_nodes[k];
    // the solver sees the half-step average of the nodal source; the ODE
    // reference uses the same piecewise-linear-in-t source
    auto rhs = [&](double t, double y) {
      return -1.5 * g_of(z, t) - y * y / (1.0 + y * y);
    };
    const double ref = rk4(rhs, 0.9, 0.0, T, 20000);
    CHECK(std::abs(us.at(0, k, d.n_t() - 1) - ref) <= 1e-6);
  }
}

TEST_CASE("step-size rejection reports the admissible dt") {
  const Discretization d = build_discretization(5, 9, 5, 1.0);  // dt = 0.25
  WallParams p = single_species_params(d, 0.5,
                                       make_clipped_mass_action_model(1, {8.0}),
                                       0.5);
  const BoundaryField g(1, d.n_z(), d.n_t());
  CHECK_THROWS_WITH_AS(solve_boundary(g, p, d),
                       doctest::Contains("need dt"), std::runtime_error);
}

TEST_CASE("wall solve error paths") {
  const Discretization d = build_discretization(5, 9, 5, 0.1);
  WallParams p = single_species_params(d, 0.5, make_zero_model(1), 0.0);
  const BoundaryField wrong(2, d.n_z(), d.n_t());
  CHECK_THROWS_AS(solve_boundary(wrong, p, d), std::invalid_argument);
  p.theta = {0.0};  // temperature row must keep diffusion
  CHECK_THROWS_AS(solve_boundary(BoundaryField(1, d.n_z(), d.n_t()), p, d),
                  std::invalid_argument);
}

TEST_CASE("contraction probe: rejection, horizon growth, nonnegative fit") {
  const Discretization d = build_discretization(65, 33, 257, 0.5);
  auto basis = std::make_shared<const EigenBasis>(eigenpairs(d, 1.0, 16));

  BoundaryField us1(2, d.n_z(), d.n_t()), us2(2, d.n_z(), d.n_t());
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < d.n_z(); ++k)
      for (int l = 0; l < d.n_t(); ++l) {
        const double z = d.axial_nodes[k], t = d.time_nodes[l];
        us1.at(i, k, l) = 0.6 + 0.2 * std::sin(0.5 * kPi * z) * std::cos(t);
        us2.at(i, k, l) = 0.65 + 0.12 * std::sin(kPi * z) * std::exp(-t);
      }
  const std::vector<std::vector<double>> inlet(
      2, std::vector<double>(d.n_r(), 0.6));
  const std::vector<double> betas{1.0, 1.0};
  const CylinderField f1 = solve_cylinder(us1, inlet, betas, d, basis);
  const CylinderField f2 = solve_cylinder(us2, inlet, betas, d, basis);

  WallParams p;
  p.theta = {0.25, 1.0};
  p.gamma_over_beta = {1.0, 1.0};
  p.signs = {-1.0, 1.0};
  p.model = make_clipped_mass_action_model(2, {1.0});
  p.u_s0 = {std::vector<double>(d.n_z(), 0.6), std::vector<double>(d.n_z(), 0.6)};

  CHECK_THROWS_AS(contraction_probe_phi(f1, f1, p, d, *basis, {0.25, 0.5}),
                  std::invalid_argument);

  std::vector<double> horizons;
  for (int e = 6; e >= 1; --e) horizons.push_back(std::pow(2.0, -e));
  const PhiProbeReport rep =
      contraction_probe_phi(f1, f2, p, d, *basis, horizons);
  CHECK(rep.monotone);
  CHECK(rep.q.front() <= 0.25 * rep.q.back());
  CHECK(rep.fit_a >= -1e-8);
  CHECK(rep.fit_b >= -1e-8);

  CHECK_THROWS_AS(contraction_probe_phi(f1, f2, p, d, *basis, {0.123456, 0.5}),
                  std::invalid_argument);
}
