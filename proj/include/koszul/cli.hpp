#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace koszul {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kExitOk = 0, kExitPropertyFailure = 1, kExitConfig = 2, kExitResource = 3 };

struct RunConfig {
    std::string algebra = "truncated:3";
    std::string field = "Q";
    std::optional<std::size_t> p_max;
    std::optional<std::size_t> w_max;
    std::uint64_t seed = 1;
    std::string coeff = "A";  // A or k
    std::string side = "homology";
    std::size_t trials = 200;
    bool timings = false;
};

struct Bounds {
    std::size_t p_max = 0;
    std::size_t w_max = 0;
};
/// Defaults by number of generators.
Bounds default_bounds(std::size_t g);

struct CommandResult {
    nlohmann::json report;  // {version, config, payload, timings}
    int exit_code = kExitOk;
    std::string text;       // human-readable table
};

const std::vector<std::string>& command_names();
/// Runs one command; `suite` is only read by verify. Never throws: errors become
/// an `error` payload with the matching exit code.
CommandResult run_command(const std::string& command, const std::string& suite, const RunConfig& cfg);

}  // namespace koszul
