#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace catconv {

// Reaction-rate vector r(x) together with its documented global Lipschitz
// constant. All built-in models are componentwise nonnegative and vanish
// whenever any state coordinate is zero; the checker below falsifies those
// properties by sampling rather than trusting them.
struct ReactionModel {
  std::string name;
  int n_species = 0;
  double lipschitz_k = 0.0;  // documented bound, not a runtime estimate
  std::function<void(std::span<const double>, std::span<double>)> rate_fn;
};

std::vector<double> evaluate(const ReactionModel& model,
                             std::span<const double> x);

ReactionModel make_zero_model(int n_species);
// Rate limited by the scarcest species: r_i = k_i * min_j clip01(x_j).
ReactionModel make_linear_chain_model(int n_species, std::vector<double> k);
// r_i = k_i * prod_j clip01(x_j); clipping at 1 keeps the product globally
// Lipschitz (normalized concentrations).
ReactionModel make_clipped_mass_action_model(int n_species, std::vector<double> k);
// Unclipped product r_i = k_i * prod_j max(x_j,0). Its documented constant is
// deliberately the clipped one, so the checker reports a violation on any box
// reaching past 1 -- a negative control for the hypothesis checker.
ReactionModel make_unclipped_mass_action_model(int n_species, std::vector<double> k);

// name in {"zero","linear_chain","clipped_mass_action","unclipped_mass_action"};
// params are the per-species rate constants (one value broadcasts).
ReactionModel make_model(const std::string& name, int n_species,
                         const std::vector<double>& params);

struct HypothesisReport {
  double max_lipschitz_ratio = 0.0;  // sampled |r(x)-r(y)| / |x-y|
  double min_rate = 0.0;             // smallest sampled rate component
  double max_rate_at_zero = 0.0;     // largest |r_i| over zero-coordinate states
  bool h1_pass = false;
  bool h2_pass = false;
  bool h3_pass = false;
  bool pass() const { return h1_pass && h2_pass && h3_pass; }
};

HypothesisReport verify_hypotheses(const ReactionModel& model, int sample_count,
                                   double box_lo, double box_hi, uint64_t seed);

}  // namespace catconv
