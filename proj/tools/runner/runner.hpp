#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"

namespace isospec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitIo = 4;

struct RunResult {
  int exit_code = kExitOk;
  std::string category;  // config_error, solver_failure, io_error; empty on success
  std::string message;
  std::vector<std::filesystem::path> files;  // emitted CSVs
  std::filesystem::path manifest;
};

/// Validates the config, runs the experiment and writes its artifacts into
/// cfg.output_dir. Failures are reported through the exit code.
RunResult run(ExperimentConfig cfg);

/// Table of experiments, schemes and built-in initial data. An empty filter
/// lists everything; otherwise only experiments the scheme applies to.
/// Throws ConfigError on an unknown scheme name.
std::string list_experiments(const std::string& scheme_filter = {});

/// The configs behind reproduce-figure <id>, each writing into its own
/// subdirectory of output_dir when there is more than one.
std::vector<ExperimentConfig> figure_configs(int figure, const std::filesystem::path& output_dir);

}  // namespace isospec::cli
