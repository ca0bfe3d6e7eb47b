#include "core/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace catconv {

namespace {

struct KeyValues {
  std::map<std::string, std::string> kv;
  std::vector<std::string> errors;

  bool has(const std::string& key) const { return kv.count(key) > 0; }

  std::string raw(const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) {
      errors.push_back("missing required key '" + key + "'");
      return {};
    }
    return it->second;
  }

  double number(const std::string& key, double fallback, bool required) {
    if (!has(key)) {
      if (required) errors.push_back("missing required key '" + key + "'");
      return fallback;
    }
    try {
      size_t pos = 0;
      const double v = std::stod(kv[key], &pos);
      while (pos < kv[key].size() && std::isspace(kv[key][pos])) ++pos;
      if (pos != kv[key].size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      errors.push_back("key '" + key + "': not a number ('" + kv[key] + "')");
      return fallback;
    }
  }

  long integer(const std::string& key, long fallback, bool required) {
    const double v = number(key, static_cast<double>(fallback), required);
    if (v != std::floor(v)) {
      errors.push_back("key '" + key + "': expected an integer");
      return fallback;
    }
    return static_cast<long>(v);
  }

  std::vector<double> list(const std::string& key, bool required) {
    std::vector<double> out;
    if (!has(key)) {
      if (required) errors.push_back("missing required key '" + key + "'");
      return out;
    }
    std::istringstream in(kv[key]);
    std::string tok;
    while (in >> tok) {
      try {
        out.push_back(std::stod(tok));
      } catch (const std::exception&) {
        errors.push_back("key '" + key + "': bad list entry '" + tok + "'");
        return {};
      }
    }
    if (out.empty()) errors.push_back("key '" + key + "': empty list");
    return out;
  }

  ProfileSpec profile(const std::string& key, bool radial) {
    ProfileSpec p;
    if (!has(key)) {
      errors.push_back("missing required key '" + key + "'");
      return p;
    }
    std::istringstream in(kv[key]);
    in >> p.kind;
    const bool ok_kind = p.kind == "constant" ||
                         (radial ? p.kind == "parabolic" : p.kind == "cosine");
    if (!ok_kind) {
      errors.push_back("key '" + key + "': unknown profile kind '" + p.kind +
                       "' (want constant|" +
                       std::string(radial ? "parabolic" : "cosine") + ")");
      return p;
    }
    if (!(in >> p.a)) {
      errors.push_back("key '" + key + "': profile needs numeric parameters");
      return p;
    }
    if (p.kind != "constant" && !(in >> p.b)) {
      errors.push_back("key '" + key + "': profile '" + p.kind +
                       "' needs two parameters");
      return p;
    }
    return p;
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += fmt(v[i]);
  }
  return s;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  KeyValues kvs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    if (eq == std::string::npos) {
      if (!trim(line).empty())
        kvs.errors.push_back("line " + std::to_string(lineno) +
                             ": expected 'key = value'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) {
      kvs.errors.push_back("line " + std::to_string(lineno) + ": empty key");
      continue;
    }
    if (kvs.kv.count(key))
      kvs.errors.push_back("duplicate key '" + key + "'");
    kvs.kv[key] = val;
  }

  RunConfig cfg;
  cfg.n_species = static_cast<int>(kvs.integer("n_species", 0, true));
  cfg.beta_f = kvs.list("beta_f", true);
  cfg.gamma_s = kvs.list("gamma_s", true);
  cfg.theta_Ns = kvs.number("theta_Ns", 0.0, true);
  if (kvs.has("theta_reg")) {
    cfg.theta_reg = kvs.list("theta_reg", false);
  } else if (cfg.n_species > 1) {
    cfg.theta_reg.assign(cfg.n_species - 1, 0.25);
  }
  cfg.delta = kvs.list("delta", true);
  if (kvs.has("kinetics.name"))
    cfg.kinetics_name = kvs.raw("kinetics.name");
  else
    kvs.errors.push_back("missing required key 'kinetics.name'");
  if (kvs.has("kinetics.params")) cfg.kinetics_params = kvs.list("kinetics.params", false);

  for (int i = 1; i <= std::max(cfg.n_species, 0); ++i) {
    cfg.inlet.push_back(kvs.profile("inlet." + std::to_string(i), true));
    cfg.wall_init.push_back(kvs.profile("wall_init." + std::to_string(i), false));
  }

  cfg.n_r = static_cast<int>(kvs.integer("n_r", 0, true));
  cfg.n_z = static_cast<int>(kvs.integer("n_z", 0, true));
  cfg.n_t = static_cast<int>(kvs.integer("n_t", 0, true));
  cfg.modes = static_cast<int>(kvs.integer("modes", 0, false));
  cfg.horizon = kvs.number("horizon", 0.0, true);
  if (kvs.has("radial_grid")) cfg.radial_grid = kvs.raw("radial_grid");
  cfg.picard_tol = kvs.number("picard_tol", 1e-9, false);
  cfg.picard_max_iter = static_cast<int>(kvs.integer("picard_max_iter", 40, false));
  cfg.seed = static_cast<std::uint64_t>(kvs.integer("seed", 0, false));
  if (kvs.has("continuation.thetas"))
    cfg.continuation_thetas = kvs.list("continuation.thetas", false);
  else
    for (int k = 2; k <= 8; ++k) cfg.continuation_thetas.push_back(std::pow(2.0, -k));
  cfg.continuation_tol = kvs.number("continuation.tol", 1e-3, false);
  if (kvs.has("sweep.horizons"))
    cfg.sweep_horizons = kvs.list("sweep.horizons", false);

  // schema checks beyond presence/typing
  auto check_count = [&](const std::vector<double>& v, const char* key, int n) {
    if (!v.empty() && static_cast<int>(v.size()) != n)
      kvs.errors.push_back(std::string("key '") + key + "': expected " +
                           std::to_string(n) + " entries, got " +
                           std::to_string(v.size()));
  };
  if (cfg.n_species >= 1) {
    check_count(cfg.beta_f, "beta_f", cfg.n_species);
    check_count(cfg.gamma_s, "gamma_s", cfg.n_species);
    check_count(cfg.delta, "delta", cfg.n_species);
    if (cfg.n_species > 1) check_count(cfg.theta_reg, "theta_reg", cfg.n_species - 1);
  } else {
    kvs.errors.push_back("key 'n_species': must be >= 1");
  }
  if (kvs.has("radial_grid") && cfg.radial_grid != "uniform" &&
      cfg.radial_grid != "chebyshev")
    kvs.errors.push_back("key 'radial_grid': want uniform|chebyshev, got '" +
                         cfg.radial_grid + "'");

  if (!kvs.errors.empty()) {
    std::string msg = "config validation failed:";
    for (const auto& e : kvs.errors) msg += "\n  - " + e;
    throw ConfigError(msg);
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

ProblemSpec RunConfig::to_problem_spec(std::vector<std::string>* warnings) const {
  ProblemSpec spec;
  spec.n_species = n_species;
  spec.beta_f = beta_f;
  spec.gamma_s = gamma_s;
  spec.theta_Ns = theta_Ns;
  spec.theta_reg = theta_reg;
  spec.signs = delta;
  spec.model = make_model(kinetics_name, n_species, kinetics_params);
  spec.horizon = horizon;
  spec.n_r = n_r;
  spec.n_z = n_z;
  spec.n_t = n_t;
  spec.modes = modes > 0 ? modes : std::max(1, n_r / 4);
  spec.layout = radial_grid == "chebyshev" ? RadialLayout::ChebyshevAtWall
                                           : RadialLayout::Uniform;
  spec.picard_tol = picard_tol;
  spec.picard_max_iter = picard_max_iter;
  spec.seed = seed;

  const Discretization disc =
      build_discretization(n_r, n_z, n_t, horizon, spec.layout);
  for (int i = 0; i < n_species; ++i) {
    std::vector<double> prof_r(n_r), prof_z(n_z);
    const ProfileSpec& pi = inlet[i];
    for (int r = 0; r < n_r; ++r) {
      const double x = disc.radial_nodes[r];
      prof_r[r] = pi.kind == "constant" ? pi.a : pi.a + pi.b * (1.0 - x * x);
    }
    const ProfileSpec& pw = wall_init[i];
    for (int k = 0; k < n_z; ++k) {
      const double z = disc.axial_nodes[k];
      prof_z[k] = pw.kind == "constant"
                      ? pw.a
                      : pw.a + pw.b * std::cos(std::numbers::pi * z);
    }
    if (warnings) {
      const double mismatch = std::abs(prof_r[n_r - 1] - prof_z[0]);
      if (mismatch > 1e-9 * (1.0 + std::abs(prof_r[n_r - 1])))
        warnings->push_back("species " + std::to_string(i + 1) +
                            ": inlet value at r=1 (" + fmt(prof_r[n_r - 1]) +
                            ") differs from wall_init at z=0 (" +
                            fmt(prof_z[0]) +
                            "); the cylinder solve keeps the inlet value");
    }
    spec.inlet.push_back(std::move(prof_r));
    spec.wall_init.push_back(std::move(prof_z));
  }
  spec.validate();
  return spec;
}

std::string RunConfig::serialize() const {
  std::ostringstream out;
  out << "n_species = " << n_species << "\n";
  out << "beta_f = " << fmt_list(beta_f) << "\n";
  out << "gamma_s = " << fmt_list(gamma_s) << "\n";
  out << "theta_Ns = " << fmt(theta_Ns) << "\n";
  if (!theta_reg.empty()) out << "theta_reg = " << fmt_list(theta_reg) << "\n";
  out << "delta = " << fmt_list(delta) << "\n";
  out << "kinetics.name = " << kinetics_name << "\n";
  out << "kinetics.params = " << fmt_list(kinetics_params) << "\n";
  auto emit_profile = [&](const std::string& key, const ProfileSpec& p) {
    out << key << " = " << p.kind << " " << fmt(p.a);
    if (p.kind != "constant") out << " " << fmt(p.b);
    out << "\n";
  };
  for (int i = 0; i < n_species; ++i) {
    emit_profile("inlet." + std::to_string(i + 1), inlet[i]);
    emit_profile("wall_init." + std::to_string(i + 1), wall_init[i]);
  }
  out << "n_r = " << n_r << "\n";
  out << "n_z = " << n_z << "\n";
  out << "n_t = " << n_t << "\n";
  if (modes > 0) out << "modes = " << modes << "\n";
  out << "horizon = " << fmt(horizon) << "\n";
  out << "radial_grid = " << radial_grid << "\n";
  out << "picard_tol = " << fmt(picard_tol) << "\n";
  out << "picard_max_iter = " << picard_max_iter << "\n";
  out << "seed = " << seed << "\n";
  out << "continuation.thetas = " << fmt_list(continuation_thetas) << "\n";
  out << "continuation.tol = " << fmt(continuation_tol) << "\n";
  if (!sweep_horizons.empty())
    out << "sweep.horizons = " << fmt_list(sweep_horizons) << "\n";
  return out.str();
}

}  // namespace catconv
