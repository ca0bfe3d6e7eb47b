// Batch front end. Links only the public C API.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "catconv/catconv.h"

int main(int argc, char** argv) {
  CLI::App app{"catconv: coupled cylinder/wall catalytic channel solver"};
  app.set_version_flag("--version", std::string(catconv_version()));
  app.require_subcommand(1);

  std::string config_path, out_dir;
  long long seed = -1;
  catconv_run_options opts;
  catconv_run_options_init(&opts);
  bool oracle_check = false, audit = false, continuation = false,
       sweep = false, export_basis = false;

  CLI::App* run = app.add_subcommand("run", "execute a run configuration");
  run->add_option("config", config_path, "run configuration file")->required();
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_flag("--oracle-check", oracle_check,
                "cross-validate against the monolithic reference solver");
  run->add_flag("--audit", audit,
                "emit the energy/probe/stability audit in report.json");
  run->add_flag("--theta-continuation", continuation,
                "solve along the configured theta sequence");
  run->add_flag("--sweep-T", sweep, "contraction-ratio sweep over horizons");
  run->add_flag("--export-eigenbasis", export_basis,
                "write the spectral basis as eigenbasis.csv");
  run->add_option("--seed", seed, "override the config seed");

  CLI11_PARSE(app, argc, argv);

  opts.oracle_check = oracle_check ? 1 : 0;
  opts.audit = audit ? 1 : 0;
  opts.theta_continuation = continuation ? 1 : 0;
  opts.sweep_horizons = sweep ? 1 : 0;
  opts.export_eigenbasis = export_basis ? 1 : 0;
  opts.seed = seed;

  char* message = nullptr;
  const catconv_status status =
      catconv_run(config_path.c_str(), out_dir.c_str(), &opts, &message);
  if (status == CATCONV_OK) {
    if (message && *message) std::printf("%s\n", message);
  } else {
    std::fprintf(stderr, "error (%s): %s\n", catconv_status_name(status),
                 message && *message ? message : catconv_last_error());
  }
  catconv_string_free(message);
  return static_cast<int>(status);
}
