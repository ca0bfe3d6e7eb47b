#include "core/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace catconv {

namespace {

double clip01(double s) { return std::min(std::max(s, 0.0), 1.0); }

std::vector<double> broadcast(int n, std::vector<double> k) {
  if (k.empty()) k.assign(n, 1.0);
  if (static_cast<int>(k.size()) == 1) k.assign(n, k[0]);
  if (static_cast<int>(k.size()) != n)
    throw std::invalid_argument("kinetics: rate constant list must have 1 or N entries");
  for (double v : k)
    if (!(v >= 0.0))
      throw std::invalid_argument("kinetics: rate constants must be nonnegative");
  return k;
}

double max_of(const std::vector<double>& k) {
  double m = 0.0;
  for (double v : k) m = std::max(m, v);
  return m;
}

}  // namespace

std::vector<double> evaluate(const ReactionModel& model,
                             std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.n_species)
    throw std::invalid_argument("evaluate: state length mismatch");
  for (double v : x)
    if (!std::isfinite(v))
      throw std::invalid_argument("evaluate: non-finite state");
  std::vector<double> out(model.n_species, 0.0);
  model.rate_fn(x, out);
  return out;
}

ReactionModel make_zero_model(int n_species) {
  ReactionModel m;
  m.name = "zero";
  m.n_species = n_species;
  m.lipschitz_k = 0.0;
  m.rate_fn = [](std::span<const double>, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
  };
  return m;
}

ReactionModel make_linear_chain_model(int n_species, std::vector<double> k) {
  auto kk = broadcast(n_species, std::move(k));
  ReactionModel m;
  m.name = "linear_chain";
  m.n_species = n_species;
  m.lipschitz_k = max_of(kk);  // min of 1-Lipschitz factors is 1-Lipschitz
  m.rate_fn = [kk](std::span<const double> x, std::span<double> out) {
    double mn = 1.0;
    for (double v : x) mn = std::min(mn, clip01(v));
    for (size_t i = 0; i < out.size(); ++i) out[i] = kk[i] * mn;
  };
  return m;
}

ReactionModel make_clipped_mass_action_model(int n_species,
                                             std::vector<double> k) {
  auto kk = broadcast(n_species, std::move(k));
  ReactionModel m;
  m.name = "clipped_mass_action";
  m.n_species = n_species;
  // each clipped factor is bounded by 1 and 1-Lipschitz, so the product
  // moves by at most sum_j |dx_j| <= N |dx|
  m.lipschitz_k = max_of(kk) * n_species;
  m.rate_fn = [kk](std::span<const double> x, std::span<double> out) {
    double p = 1.0;
    for (double v : x) p *= clip01(v);
    for (size_t i = 0; i < out.size(); ++i) out[i] = kk[i] * p;
  };
  return m;
}

ReactionModel make_unclipped_mass_action_model(int n_species,
                                               std::vector<double> k) {
  auto kk = broadcast(n_species, std::move(k));
  ReactionModel m;
  m.name = "unclipped_mass_action";
  m.n_species = n_species;
  m.lipschitz_k = max_of(kk) * n_species;  // wrong on purpose beyond [0,1]^N
  m.rate_fn = [kk](std::span<const double> x, std::span<double> out) {
    double p = 1.0;
    for (double v : x) p *= std::max(v, 0.0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = kk[i] * p;
  };
  return m;
}

ReactionModel make_model(const std::string& name, int n_species,
                         const std::vector<double>& params) {
  if (name == "zero") return make_zero_model(n_species);
  if (name == "linear_chain") return make_linear_chain_model(n_species, params);
  if (name == "clipped_mass_action")
    return make_clipped_mass_action_model(n_species, params);
  if (name == "unclipped_mass_action")
    return make_unclipped_mass_action_model(n_species, params);
  throw std::invalid_argument("make_model: unknown kinetics name '" + name + "'");
}

HypothesisReport verify_hypotheses(const ReactionModel& model, int sample_count,
                                   double box_lo, double box_hi, uint64_t seed) {
  if (sample_count < 1)
    throw std::invalid_argument("verify_hypotheses: sample_count must be >= 1");
  if (!(box_hi > box_lo))
    throw std::invalid_argument("verify_hypotheses: empty state box");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(box_lo, box_hi);
  std::uniform_int_distribution<int> coord(0, model.n_species - 1);

  const int n = model.n_species;
  std::vector<double> x(n), y(n), rx(n), ry(n);
  HypothesisReport rep;
  rep.min_rate = std::numeric_limits<double>::infinity();

  for (int s = 0; s < sample_count; ++s) {
    for (int i = 0; i < n; ++i) {
      x[i] = uni(rng);
      y[i] = uni(rng);
    }
    model.rate_fn(x, rx);
    model.rate_fn(y, ry);
    // the hypothesis is per component: every r_i shares the constant k
    double dr_max = 0.0, dx2 = 0.0;
    for (int i = 0; i < n; ++i) {
      dr_max = std::max(dr_max, std::abs(rx[i] - ry[i]));
      dx2 += (x[i] - y[i]) * (x[i] - y[i]);
      rep.min_rate = std::min({rep.min_rate, rx[i], ry[i]});
    }
    if (dx2 > 1e-28)
      rep.max_lipschitz_ratio =
          std::max(rep.max_lipschitz_ratio, dr_max / std::sqrt(dx2));

    x[coord(rng)] = 0.0;
    model.rate_fn(x, rx);
    for (int i = 0; i < n; ++i)
      rep.max_rate_at_zero = std::max(rep.max_rate_at_zero, std::abs(rx[i]));
  }

  rep.h1_pass = rep.max_lipschitz_ratio <= model.lipschitz_k * (1.0 + 1e-9);
  rep.h2_pass = rep.min_rate >= 0.0;
  rep.h3_pass = rep.max_rate_at_zero == 0.0;
  return rep;
}

}  // namespace catconv
