#include <doctest.h>

#include <string>

#include "core/config.hpp"

using namespace catconv;

namespace {

const char* kGoodConfig = R"(
# two-species demo
n_species = 2
beta_f = 1.0 1.0
gamma_s = 1.0 1.0
theta_Ns = 1.0
theta_reg = 0.25
delta = -1 1
kinetics.name = clipped_mass_action
kinetics.params = 1.0
inlet.1 = parabolic 0.8 0.1
inlet.2 = parabolic 0.6 0.15
wall_init.1 = cosine 0.75 0.05
wall_init.2 = cosine 0.52 0.08
n_r = 33
n_z = 17
n_t = 9
horizon = 0.05
seed = 7
)";

std::string without_line(const std::string& text, const std::string& needle) {
  std::string out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string line = text.substr(pos, eol - pos);
    if (line.find(needle) == std::string::npos) out += line + "\n";
    pos = eol + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("a complete config parses and materializes") {
  const RunConfig cfg = parse_config_text(kGoodConfig);
  CHECK(cfg.n_species == 2);
  CHECK(cfg.modes == 0);  // defaulted later
  CHECK(cfg.seed == 7);
  CHECK(cfg.continuation_thetas.size() == 7);  // 2^-2 .. 2^-8

  std::vector<std::string> warnings;
  const ProblemSpec spec = cfg.to_problem_spec(&warnings);
  CHECK(spec.modes == 8);  // n_r / 4
  CHECK(spec.inlet[0].front() == doctest::Approx(0.9));   // r = 0
  CHECK(spec.inlet[0].back() == doctest::Approx(0.8));    // r = 1
  CHECK(spec.wall_init[0].front() == doctest::Approx(0.8));  // z = 0
  CHECK(warnings.empty());  // compatible corner data
}

TEST_CASE("missing keys are reported by name") {
  const std::string no_beta = without_line(kGoodConfig, "beta_f");
  CHECK_THROWS_WITH_AS(parse_config_text(no_beta),
                       doctest::Contains("beta_f"), ConfigError);
  const std::string no_kin = without_line(kGoodConfig, "kinetics.name");
  CHECK_THROWS_WITH_AS(parse_config_text(no_kin),
                       doctest::Contains("kinetics.name"), ConfigError);
  const std::string no_inlet = without_line(kGoodConfig, "inlet.2");
  CHECK_THROWS_WITH_AS(parse_config_text(no_inlet),
                       doctest::Contains("inlet.2"), ConfigError);
}

TEST_CASE("malformed values are reported with their key") {
  std::string bad = kGoodConfig;
  bad += "picard_tol = banana\n";
  CHECK_THROWS_WITH_AS(parse_config_text(bad), doctest::Contains("picard_tol"),
                       ConfigError);

  std::string short_list = without_line(kGoodConfig, "delta");
  short_list += "delta = -1\n";
  CHECK_THROWS_WITH_AS(parse_config_text(short_list),
                       doctest::Contains("delta"), ConfigError);

  std::string dup = kGoodConfig;
  dup += "seed = 8\n";
  CHECK_THROWS_WITH_AS(parse_config_text(dup), doctest::Contains("duplicate"),
                       ConfigError);

  std::string bad_profile = without_line(kGoodConfig, "inlet.1");
  bad_profile += "inlet.1 = gaussian 0.5 0.1\n";
  CHECK_THROWS_WITH_AS(parse_config_text(bad_profile),
                       doctest::Contains("inlet.1"), ConfigError);

  std::string bad_grid = kGoodConfig;
  bad_grid += "radial_grid = log\n";
  CHECK_THROWS_WITH_AS(parse_config_text(bad_grid),
                       doctest::Contains("radial_grid"), ConfigError);
}

TEST_CASE("bad kinetics name surfaces through materialization") {
  std::string cfg = without_line(kGoodConfig, "kinetics.name");
  cfg += "kinetics.name = arrhenius\n";
  const RunConfig parsed = parse_config_text(cfg);
  CHECK_THROWS_AS(parsed.to_problem_spec(), std::invalid_argument);
}

TEST_CASE("serialize echoes a config that reproduces the run") {
  const RunConfig cfg = parse_config_text(kGoodConfig);
  const RunConfig echo = parse_config_text(cfg.serialize());
  CHECK(echo.n_species == cfg.n_species);
  CHECK(echo.beta_f == cfg.beta_f);
  CHECK(echo.theta_reg == cfg.theta_reg);
  CHECK(echo.seed == cfg.seed);
  CHECK(echo.continuation_thetas == cfg.continuation_thetas);
  const ProblemSpec a = cfg.to_problem_spec();
  const ProblemSpec b = echo.to_problem_spec();
  CHECK(a.inlet == b.inlet);
  CHECK(a.wall_init == b.wall_init);
  CHECK(a.modes == b.modes);
}

TEST_CASE("incompatible corner data produces a warning") {
  std::string cfg = without_line(kGoodConfig, "wall_init.1");
  cfg += "wall_init.1 = constant 0.5\n";  // inlet.1 at r=1 is 0.8
  std::vector<std::string> warnings;
  parse_config_text(cfg).to_problem_spec(&warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("species 1") != std::string::npos);
}
