#include "catconv/catconv.h"

#include <json.hpp>

#include <cstring>
#include <new>
#include <string>

#include "core/config.hpp"
#include "core/coupling.hpp"
#include "core/runner.hpp"
#include "core/version.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

catconv_status classify(const std::exception& e) {
  set_error(e.what());
  if (dynamic_cast<const catconv::ConfigError*>(&e)) return CATCONV_ERR_CONFIG;
  if (dynamic_cast<const std::invalid_argument*>(&e))
    return CATCONV_ERR_INVALID_ARGUMENT;
  return CATCONV_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct catconv_problem {
  catconv::RunConfig config;
  catconv::ProblemSpec spec;
};

struct catconv_solution {
  catconv::PicardResult result;
  double tolerance = 0.0;
};

extern "C" {

const char* catconv_version(void) { return catconv::kVersion; }

const char* catconv_status_name(catconv_status status) {
  switch (status) {
    case CATCONV_OK: return "ok";
    case CATCONV_ERR_CONFIG: return "config-error";
    case CATCONV_ERR_NO_CONVERGENCE: return "no-convergence";
    case CATCONV_ERR_IO: return "io-error";
    case CATCONV_ERR_INTERNAL: return "internal-error";
    case CATCONV_ERR_INVALID_ARGUMENT: return "invalid-argument";
  }
  return "unknown";
}

const char* catconv_last_error(void) { return g_last_error.c_str(); }

static catconv_status make_problem(catconv::RunConfig cfg,
                                   catconv_problem** out) {
  auto p = new catconv_problem;
  p->config = std::move(cfg);
  p->spec = p->config.to_problem_spec();
  *out = p;
  g_last_error.clear();
  return CATCONV_OK;
}

catconv_status catconv_problem_from_file(const char* path,
                                         catconv_problem** out) {
  if (!path || !out) {
    set_error("null argument");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    return make_problem(catconv::parse_config_file(path), out);
  } catch (const std::exception& e) {
    return classify(e);
  }
}

catconv_status catconv_problem_from_string(const char* text,
                                           catconv_problem** out) {
  if (!text || !out) {
    set_error("null argument");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    return make_problem(catconv::parse_config_text(text), out);
  } catch (const std::exception& e) {
    return classify(e);
  }
}

void catconv_problem_free(catconv_problem* problem) { delete problem; }

catconv_status catconv_solve(const catconv_problem* problem,
                             catconv_solution** out) {
  if (!problem || !out) {
    set_error("null argument");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    auto s = new catconv_solution;
    s->tolerance = problem->spec.picard_tol;
    s->result = catconv::picard_solve(problem->spec, problem->spec.picard_tol,
                                      problem->spec.picard_max_iter);
    if (!s->result.report.converged) {
      set_error("fixed-point iteration did not converge (ratio estimate " +
                std::to_string(s->result.report.contraction_ratio) + ")");
      delete s;
      return CATCONV_ERR_NO_CONVERGENCE;
    }
    *out = s;
    g_last_error.clear();
    return CATCONV_OK;
  } catch (const std::exception& e) {
    return classify(e);
  }
}

void catconv_solution_free(catconv_solution* solution) { delete solution; }

catconv_status catconv_solution_dims(const catconv_solution* solution,
                                     int32_t* n_species, int32_t* n_r,
                                     int32_t* n_z, int32_t* n_t) {
  if (!solution) {
    set_error("null solution");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  const auto& f = solution->result.u_f;
  if (n_species) *n_species = f.n_species;
  if (n_r) *n_r = f.n_r;
  if (n_z) *n_z = f.n_z;
  if (n_t) *n_t = f.n_t;
  return CATCONV_OK;
}

catconv_status catconv_solution_wall_values(const catconv_solution* solution,
                                            int32_t species, double* buffer,
                                            size_t buffer_len) {
  if (!solution || !buffer) {
    set_error("null argument");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  const auto& u = solution->result.u_s;
  if (species < 1 || species > u.n_species) {
    set_error("species index out of range (1-based)");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  const size_t need = static_cast<size_t>(u.n_z) * u.n_t;
  if (buffer_len < need) {
    set_error("buffer too small: need " + std::to_string(need) + " doubles");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  for (int k = 0; k < u.n_z; ++k)
    for (int l = 0; l < u.n_t; ++l)
      buffer[static_cast<size_t>(k) * u.n_t + l] = u.at(species - 1, k, l);
  return CATCONV_OK;
}

catconv_status catconv_solution_cylinder_values(
    const catconv_solution* solution, int32_t species, double* buffer,
    size_t buffer_len) {
  if (!solution || !buffer) {
    set_error("null argument");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  const auto& f = solution->result.u_f;
  if (species < 1 || species > f.n_species) {
    set_error("species index out of range (1-based)");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  const size_t need = static_cast<size_t>(f.n_r) * f.n_z * f.n_t;
  if (buffer_len < need) {
    set_error("buffer too small: need " + std::to_string(need) + " doubles");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  size_t idx = 0;
  for (int r = 0; r < f.n_r; ++r)
    for (int k = 0; k < f.n_z; ++k)
      for (int l = 0; l < f.n_t; ++l) buffer[idx++] = f.at(species - 1, r, k, l);
  return CATCONV_OK;
}

catconv_status catconv_solution_report_json(const catconv_solution* solution,
                                            char** json_out) {
  if (!solution || !json_out) {
    set_error("null argument");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  const auto& r = solution->result.report;
  nlohmann::json j{{"iterates", r.iterates},
                   {"contraction_ratio", r.contraction_ratio},
                   {"converged", r.converged},
                   {"iterations", r.iterations},
                   {"cross_residual", r.cross_residual},
                   {"log_fit_r2", r.log_fit_r2},
                   {"tolerance", solution->tolerance}};
  *json_out = dup_string(j.dump(2));
  if (!*json_out) {
    set_error("allocation failure");
    return CATCONV_ERR_INTERNAL;
  }
  return CATCONV_OK;
}

void catconv_string_free(char* s) { ::operator delete(s); }

void catconv_run_options_init(catconv_run_options* options) {
  if (!options) return;
  options->oracle_check = 0;
  options->audit = 0;
  options->theta_continuation = 0;
  options->sweep_horizons = 0;
  options->export_eigenbasis = 0;
  options->seed = -1;
}

catconv_status catconv_run(const char* config_path, const char* out_dir,
                           const catconv_run_options* options, char** message) {
  if (message) *message = nullptr;
  if (!config_path || !out_dir) {
    set_error("null argument");
    return CATCONV_ERR_INVALID_ARGUMENT;
  }
  catconv::RunFlags flags;
  if (options) {
    flags.oracle_check = options->oracle_check != 0;
    flags.audit = options->audit != 0;
    flags.theta_continuation = options->theta_continuation != 0;
    flags.sweep_horizons = options->sweep_horizons != 0;
    flags.export_eigenbasis = options->export_eigenbasis != 0;
    if (options->seed >= 0)
      flags.seed_override = static_cast<std::uint64_t>(options->seed);
  }
  try {
    const catconv::RunOutcome outcome =
        catconv::run_from_config_file(config_path, out_dir, flags);
    std::string text = outcome.message;
    for (const auto& w : outcome.warnings) text += "\nwarning: " + w;
    if (message) *message = dup_string(text);
    if (outcome.status != catconv::RunStatus::Ok) set_error(outcome.message);
    return static_cast<catconv_status>(static_cast<int>(outcome.status));
  } catch (const std::exception& e) {
    return classify(e);
  }
}

}  // extern "C"
