#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orlicz/config.hpp"

namespace orlicz {

enum class Subcommand { analyze, bound, solve, verify };
const char* to_string(Subcommand c) noexcept;
std::optional<Subcommand> parse_subcommand(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitNonconvergent = 3;

struct RunOptions {
  std::optional<std::uint64_t> seed;  // overrides the config seed
  bool timestamp = true;
};

struct ReportFile {
  std::string name;
  std::string content;
};

struct RunResult {
  int exit_code = kExitOk;
  std::vector<ReportFile> files;
  std::string summary;
};

/// Errors from missing fields are thrown as ErrorCode::config with the field
/// path; solver nonconvergence is reported through exit_code with the
/// diagnostics still written.
RunResult run(Subcommand command, const RunConfig& config, const RunOptions& options = {});

}  // namespace orlicz
