#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "config.hpp"

namespace wqed::cli {

struct TaskOutput {
    std::string csv_path;
    std::string meta_path;
};

/// Execute the task described by `config`, writing the CSV and its JSON
/// metadata sidecar into out_dir (created if missing). Output files are
/// written atomically (temp file + rename).
TaskOutput run(const RunConfig& config, const std::string& out_dir);

/// Exit codes of the command line frontend.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

/// Full pipeline: load + validate + run, mapping failures to exit codes
/// and emitting a machine-readable JSON error record to `err`.
/// `expected_task` (the CLI subcommand) must match the config's task.
int run_file(const std::string& config_path, const std::string& out_dir,
             std::optional<int> threads_override,
             std::optional<std::uint64_t> seed_override,
             const std::optional<std::string>& expected_task, std::ostream& err);

}  // namespace wqed::cli
