#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "core/kinetics.hpp"

using namespace catconv;

TEST_CASE("evaluate: built-in models at hand-checked states") {
  const auto clipped = make_clipped_mass_action_model(3, {1.0});

  // product of three clipped factors 0.5 each
  const auto r = evaluate(clipped, std::vector<double>{0.5, 0.5, 0.5});
  for (double v : r) CHECK(v == doctest::Approx(0.125).epsilon(1e-15));

  // a zero coordinate stops every reaction
  const auto r0 = evaluate(clipped, std::vector<double>{0.7, 0.0, 0.9});
  for (double v : r0) CHECK(v == 0.0);

  const auto zero = make_zero_model(3);
  for (double v : evaluate(zero, std::vector<double>{1.0, -2.0, 5.0}))
    CHECK(v == 0.0);

  // chain rate is limited by the scarcest species
  const auto chain = make_linear_chain_model(2, {2.0, 3.0});
  const auto rc = evaluate(chain, std::vector<double>{0.8, 0.25});
  CHECK(rc[0] == doctest::Approx(2.0 * 0.25));
  CHECK(rc[1] == doctest::Approx(3.0 * 0.25));

  CHECK_THROWS_AS(evaluate(clipped, std::vector<double>{0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate(clipped, std::vector<double>{0.5, 0.5, NAN}),
                  std::invalid_argument);
}

TEST_CASE("hypothesis checker validates the compliant models") {
  const int samples = 4000;

  const auto zero = make_zero_model(2);
  const auto rep0 = verify_hypotheses(zero, samples, -1.0, 2.0, 1);
  CHECK(rep0.max_lipschitz_ratio == 0.0);
  CHECK(rep0.pass());

  const auto chain = make_linear_chain_model(2, {1.5});
  const auto rep1 = verify_hypotheses(chain, samples, -1.0, 2.0, 2);
  CHECK(rep1.pass());
  CHECK(rep1.max_lipschitz_ratio <= chain.lipschitz_k * (1.0 + 1e-9));

  const auto clipped = make_clipped_mass_action_model(2, {1.0});
  const auto rep2 = verify_hypotheses(clipped, samples, -1.0, 2.0, 3);
  CHECK(rep2.pass());
  // documented constant is k*N; the sampled ratio stays below it
  CHECK(clipped.lipschitz_k == doctest::Approx(2.0));
  CHECK(rep2.max_lipschitz_ratio <= 2.0 * (1.0 + 1e-9));
  CHECK(rep2.min_rate >= 0.0);
  CHECK(rep2.max_rate_at_zero == 0.0);
}

TEST_CASE("hypothesis checker flags the unclipped product") {
  const auto broken = make_unclipped_mass_action_model(2, {1.0});
  // on [0,10]^2 the product's Lipschitz ratio grows with the box and
  // overshoots the documented constant
  const auto rep = verify_hypotheses(broken, 4000, 0.0, 10.0, 4);
  CHECK_FALSE(rep.h1_pass);
  CHECK_FALSE(rep.pass());
  CHECK(rep.h2_pass);
  CHECK(rep.h3_pass);
}

TEST_CASE("evaluate is deterministic") {
  const auto m = make_clipped_mass_action_model(3, {0.7, 1.1, 0.3});
  const std::vector<double> x{0.2, 0.9, 0.6};
  const auto a = evaluate(m, x);
  const auto b = evaluate(m, x);
  CHECK(a == b);
}

TEST_CASE("model factory") {
  CHECK(make_model("zero", 2, {}).name == "zero");
  CHECK(make_model("linear_chain", 2, {1.0}).n_species == 2);
  CHECK(make_model("clipped_mass_action", 4, {1.0}).lipschitz_k ==
        doctest::Approx(4.0));
  CHECK_THROWS_AS(make_model("arrhenius", 2, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_model("linear_chain", 2, {1.0, 1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_model("clipped_mass_action", 2, {-1.0}),
                  std::invalid_argument);
}
