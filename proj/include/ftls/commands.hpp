// commands.hpp — CLI commands: spectrum, heatpump, evolve, verify

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "ftls/config.hpp"

namespace ftls {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitConfig = 2, kExitDegenerate = 3 };

// Each command writes its files into `out` (created if missing) and returns an
// exit code; exceptions propagate to run_command.
int cmd_spectrum(const RunConfig& cfg, const std::filesystem::path& out);
int cmd_heatpump(const RunConfig& cfg, const std::filesystem::path& out);
int cmd_evolve(const RunConfig& cfg, const std::filesystem::path& out);
int cmd_verify(const RunConfig& cfg, const std::filesystem::path& out);

// Default configuration used when no --config is given.
RunConfig default_config_for(const std::string& command);

// Loads the config (or the command default), applies --seed, dispatches and
// maps errors onto exit codes: InvalidArgument 2, DegeneracyError and
// NumericalError 3. Diagnostics go to stderr.
int run_command(const std::string& command, const std::optional<std::filesystem::path>& config,
                const std::filesystem::path& out, std::optional<std::uint64_t> seed);

} // namespace ftls
