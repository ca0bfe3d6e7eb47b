#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "core/coupling.hpp"

namespace catconv {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Initial-data profile: radial kinds are "constant c" and "parabolic a b"
// (a + b(1-r^2)); axial kinds are "constant c" and "cosine a b"
// (a + b cos(pi z)).
struct ProfileSpec {
  std::string kind;
  double a = 0.0;
  double b = 0.0;
};

// Flat key-value run configuration. Lines are `key = value`, '#' starts a
// comment. Values are scalars, whitespace-separated lists, or profile
// descriptors. See README for the full schema.
struct RunConfig {
  int n_species = 0;
  std::vector<double> beta_f;
  std::vector<double> gamma_s;
  double theta_Ns = 0.0;
  std::vector<double> theta_reg;
  std::vector<double> delta;
  std::string kinetics_name;
  std::vector<double> kinetics_params{1.0};
  std::vector<ProfileSpec> inlet;
  std::vector<ProfileSpec> wall_init;
  int n_r = 0, n_z = 0, n_t = 0;
  int modes = 0;  // 0: defaulted to n_r/4
  double horizon = 0.0;
  std::string radial_grid = "uniform";
  double picard_tol = 1e-9;
  int picard_max_iter = 40;
  std::uint64_t seed = 0;
  std::vector<double> continuation_thetas;  // default 2^-2 .. 2^-8
  double continuation_tol = 1e-3;
  std::vector<double> sweep_horizons;  // default {T/8, T/4, T/2, T}

  ProblemSpec to_problem_spec(std::vector<std::string>* warnings = nullptr) const;
  std::string serialize() const;  // canonical echo, reparses to the same run
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace catconv
