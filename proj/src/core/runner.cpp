#include "core/runner.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "core/config.hpp"
#include "core/csv.hpp"
#include "core/norms.hpp"
#include "core/oracle.hpp"
#include "core/version.hpp"

namespace catconv {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct OutputTracker {
  fs::path dir;
  std::vector<std::string> files;

  std::string path(const std::string& name) {
    files.push_back((dir / name).string());
    return files.back();
  }
  void write_text(const std::string& name, const std::string& text) {
    std::ofstream out(path(name));
    if (!out) throw std::runtime_error("cannot open output file '" + name + "'");
    out << text;
  }
  void remove_all() {
    for (const auto& f : files) {
      std::error_code ec;
      fs::remove(f, ec);
    }
    files.clear();
  }
};

json to_json(const PicardReport& r, double tol) {
  return json{{"iterates", r.iterates},
              {"contraction_ratio", r.contraction_ratio},
              {"converged", r.converged},
              {"iterations", r.iterations},
              {"cross_residual", r.cross_residual},
              {"log_fit_r2", r.log_fit_r2},
              {"tolerance", tol}};
}

json to_json(const EnergyAudit& e) {
  return json{{"energy_lhs", e.lhs},     {"energy_a_T", e.a_T},
              {"energy_b_T", e.b_T},     {"energy_d", e.d},
              {"energy_c_T", e.c_T},     {"energy_pass", e.pass}};
}

json to_json(const PsiProbeReport& p) {
  return json{{"full_ratio", p.full_ratio},
              {"gradient_ratio", p.gradient_ratio},
              {"gradient_bound", p.gradient_bound},
              {"gradient_within_bound", p.gradient_within_bound}};
}

json to_json(const PhiProbeReport& p) {
  return json{{"horizons", p.horizons}, {"q", p.q},
              {"fit_a", p.fit_a},       {"fit_b", p.fit_b},
              {"monotone", p.monotone}, {"shrink", p.shrink}};
}

json to_json(const StabilityReport& s) {
  return json{{"epsilon", s.epsilon},
              {"growth", s.growth},
              {"gronwall_factor", s.gronwall_factor},
              {"pass", s.pass}};
}

// Smooth seeded wall perturbation for the probe pair: a few low axial/time
// modes with random amplitudes.
BoundaryField perturb_wall(const BoundaryField& base, const Discretization& disc,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(0.02, 0.08);
  BoundaryField out = base;
  const double T = disc.horizon();
  for (int i = 0; i < base.n_species; ++i)
    for (int p = 1; p <= 3; ++p) {
      const double a = amp(rng);
      for (int k = 0; k < base.n_z; ++k)
        for (int l = 0; l < base.n_t; ++l) {
          const double z = disc.axial_nodes[k];
          const double t = disc.time_nodes[l];
          out.at(i, k, l) += a * std::sin(0.5 * std::numbers::pi * p * z) *
                             std::cos(p * t / T);
        }
    }
  return out;
}

std::vector<double> probe_horizons(const Discretization& disc) {
  const int nt = disc.n_t();
  std::vector<int> idx = {(nt - 1) / 4, (nt - 1) / 2, 3 * (nt - 1) / 4, nt - 1};
  std::vector<double> h;
  for (int i : idx)
    if (i >= 1 && (h.empty() || disc.time_nodes[i] > h.back()))
      h.push_back(disc.time_nodes[i]);
  return h;
}

AuditReport build_audit(const ProblemSpec& spec, const PicardResult& solved,
                        const Discretization& disc,
                        std::shared_ptr<const EigenBasis> basis) {
  AuditReport audit;
  audit.energy = energy_audit(solved.u_s, spec);

  const BoundaryField us2 = perturb_wall(solved.u_s, disc, spec.seed ^ 0x9e3779b97f4a7c15ull);
  audit.psi_ratios = lipschitz_probe_psi(solved.u_s, us2, spec.inlet,
                                         spec.beta_f, disc, basis);

  const CylinderField f1 =
      solve_cylinder(solved.u_s, spec.inlet, spec.beta_f, disc, basis);
  const CylinderField f2 =
      solve_cylinder(us2, spec.inlet, spec.beta_f, disc, basis);
  const auto horizons = probe_horizons(disc);
  if (horizons.size() >= 2)
    audit.phi_ratios = contraction_probe_phi(f1, f2, make_wall_params(spec),
                                             disc, *basis, horizons);

  audit.stability_growth = stability_experiment(spec, 1e-3);
  return audit;
}

}  // namespace

RunOutcome run_from_config_file(const std::string& config_path,
                                const std::string& out_dir,
                                const RunFlags& flags) {
  RunOutcome outcome;
  RunConfig cfg;
  try {
    cfg = parse_config_file(config_path);
  } catch (const ConfigError& e) {
    outcome.status = RunStatus::ConfigError;
    outcome.message = e.what();
    return outcome;
  }
  if (flags.seed_override) cfg.seed = *flags.seed_override;

  OutputTracker out;
  out.dir = out_dir;
  try {
    fs::create_directories(out.dir);
  } catch (const std::exception& e) {
    outcome.status = RunStatus::IoError;
    outcome.message = std::string("cannot create output directory: ") + e.what();
    return outcome;
  }

  try {
    ProblemSpec spec = cfg.to_problem_spec(&outcome.warnings);
    const Discretization disc = make_discretization(spec);
    auto basis =
        std::make_shared<const EigenBasis>(eigenpairs(disc, 1.0, spec.modes));

    out.write_text("config_echo.cfg", cfg.serialize());

    PicardResult solved =
        picard_solve(spec, spec.picard_tol, spec.picard_max_iter, nullptr, basis);
    if (!solved.report.converged) {
      out.remove_all();
      outcome.status = RunStatus::NoConvergence;
      outcome.message =
          "fixed-point iteration did not converge in " +
          std::to_string(solved.report.iterations) +
          " iterations (ratio estimate " +
          std::to_string(solved.report.contraction_ratio) +
          "); expected for horizons past the contraction regime";
      return outcome;
    }

    for (int i = 0; i < spec.n_species; ++i) {
      write_boundary_csv(out.path("us_species_" + std::to_string(i + 1) + ".csv"),
                         solved.u_s, i, disc);
      write_cylinder_csv(out.path("uf_species_" + std::to_string(i + 1) + ".csv"),
                         solved.u_f, i, disc);
    }

    json report;
    report["version"] = kVersion;
    report["picard"] = to_json(solved.report, spec.picard_tol);

    if (flags.audit) {
      const AuditReport audit = build_audit(spec, solved, disc, basis);
      json a = to_json(audit.energy);
      a["psi_ratios"] = audit.psi_ratios ? to_json(*audit.psi_ratios) : json();
      a["phi_ratios"] = audit.phi_ratios ? to_json(*audit.phi_ratios) : json();
      a["stability_growth"] =
          audit.stability_growth ? to_json(*audit.stability_growth) : json();
      report["audit"] = a;
    }

    if (flags.export_eigenbasis)
      write_eigenbasis_csv(*basis, disc, out.path("eigenbasis.csv"));

    if (flags.sweep_horizons) {
      std::vector<double> horizons = cfg.sweep_horizons;
      if (horizons.empty())
        horizons = {spec.horizon / 8.0, spec.horizon / 4.0, spec.horizon / 2.0,
                    spec.horizon};
      json sweep;
      sweep["horizons"] = horizons;
      std::vector<double> ratios;
      std::vector<bool> converged;
      for (double T : horizons) {
        const ProblemSpec s = spec.with_horizon(T);
        const PicardResult r =
            picard_solve(s, s.picard_tol, s.picard_max_iter, nullptr, basis);
        ratios.push_back(r.report.contraction_ratio);
        converged.push_back(r.report.converged);
      }
      sweep["contraction_ratios"] = ratios;
      sweep["converged"] = converged;
      bool nondecreasing = true;
      for (size_t i = 0; i + 1 < ratios.size(); ++i)
        if (ratios[i + 1] < ratios[i] * (1.0 - 1e-9)) nondecreasing = false;
      sweep["ratio_nondecreasing_in_T"] = nondecreasing;
      out.write_text("sweep_T.json", sweep.dump(2) + "\n");
    }

    if (flags.theta_continuation) {
      const ContinuationResult cont =
          theta_continuation(spec, cfg.continuation_thetas, cfg.continuation_tol);
      json c;
      c["thetas"] = cont.report.thetas;
      c["distances"] = cont.report.distances;
      c["monotone"] = cont.report.monotone;
      c["final_gap"] = cont.report.final_gap;
      c["converged"] = cont.report.converged;
      c["theta_zero_distance"] = cont.report.theta_zero_distance;
      c["tolerance"] = cfg.continuation_tol;
      json levels = json::array();
      for (size_t k = 0; k < cont.levels.size(); ++k) {
        const std::string sub = "theta_" + std::to_string(k);
        fs::create_directories(out.dir / sub);
        for (int i = 0; i < spec.n_species; ++i) {
          write_boundary_csv(
              out.path(sub + "/us_species_" + std::to_string(i + 1) + ".csv"),
              cont.levels[k].u_s, i, disc);
          write_cylinder_csv(
              out.path(sub + "/uf_species_" + std::to_string(i + 1) + ".csv"),
              cont.levels[k].u_f, i, disc);
        }
        levels.push_back(json{{"theta", cont.report.thetas[k]},
                              {"dir", sub},
                              {"picard", to_json(cont.levels[k].report,
                                                 spec.picard_tol)}});
      }
      c["levels"] = levels;
      out.write_text("continuation.json", c.dump(2) + "\n");
    }

    if (flags.oracle_check) {
      const MonolithicResult mono = solve_monolithic(spec);
      json oc;
      oc["cylinder_rel_l2"] = rel_l2_cylinder(solved.u_f, mono.u_f, disc);
      oc["wall_rel_l2"] = rel_l2_boundary(solved.u_s, mono.u_s, disc);
      oc["max_inner_iterations"] = mono.max_inner_iterations;
      const double tol = 1e-2;  // coarse sanity level for arbitrary configs
      oc["tolerance"] = tol;
      oc["pass"] = oc["cylinder_rel_l2"].get<double>() <= tol &&
                   oc["wall_rel_l2"].get<double>() <= tol;
      out.write_text("oracle_check.json", oc.dump(2) + "\n");
    }

    out.write_text("report.json", report.dump(2) + "\n");

    outcome.files_written = out.files;
    outcome.message = "converged in " +
                      std::to_string(solved.report.iterations) +
                      " iterations (ratio " +
                      std::to_string(solved.report.contraction_ratio) +
                      "); wrote " + std::to_string(out.files.size()) +
                      " files to " + out.dir.string();
    return outcome;
  } catch (const std::invalid_argument& e) {
    out.remove_all();
    outcome.status = RunStatus::InvalidArgument;
    outcome.message = e.what();
  } catch (const std::ios_base::failure& e) {
    out.remove_all();
    outcome.status = RunStatus::IoError;
    outcome.message = e.what();
  } catch (const std::exception& e) {
    out.remove_all();
    outcome.status = RunStatus::InternalError;
    outcome.message = e.what();
  }
  return outcome;
}

}  // namespace catconv
