#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace catconv {

struct RunFlags {
  bool oracle_check = false;
  bool audit = false;
  bool theta_continuation = false;
  bool sweep_horizons = false;
  bool export_eigenbasis = false;
  std::optional<std::uint64_t> seed_override;
};

enum class RunStatus : int {
  Ok = 0,
  ConfigError = 2,
  NoConvergence = 3,
  IoError = 4,
  InternalError = 5,
  InvalidArgument = 6,
};

struct RunOutcome {
  RunStatus status = RunStatus::Ok;
  std::string message;
  std::vector<std::string> files_written;
  std::vector<std::string> warnings;
};

// The batch pipeline behind the CLI: parse + validate the config, run the
// fixed-point solve (plus any flagged studies), and write field CSVs and
// JSON reports into out_dir. Partial outputs are removed on failure.
RunOutcome run_from_config_file(const std::string& config_path,
                                const std::string& out_dir,
                                const RunFlags& flags);

}  // namespace catconv
