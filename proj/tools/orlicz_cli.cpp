#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "orlicz/orlicz.h"

namespace {

constexpr int kExitInvalidConfig = 2;

int exit_for(orlicz_status s) {
  switch (s) {
    case ORLICZ_CONFIG:
    case ORLICZ_INVALID_ARGUMENT:
    case ORLICZ_DOMAIN_EMPTY:
    case ORLICZ_IO:
      return kExitInvalidConfig;
    case ORLICZ_NONCONVERGENT:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz fractional eigenvalue toolkit"};
  app.require_subcommand(1);
  std::string config_path, out_dir = ".";
  std::uint64_t seed = 0;
  bool no_timestamp = false;

  const std::pair<const char*, const char*> commands[] = {
      {"analyze", "Matuszewska profile, doubling class and growth conditions of a Young function"},
      {"bound", "lower bounds for the critical value from inradius, diameter and weight norms"},
      {"solve", "critical values, eigenvalues and minimizers on a rasterized domain"},
      {"verify", "built-in self-check suites"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--seed", seed, "seed for randomized solver starts");
    sub->add_option("--out", out_dir, "directory for report files");
    sub->add_flag("--no-timestamp", no_timestamp, "omit generation time from reports");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; usage errors share the invalid-input code.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalidConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const bool has_seed = app.get_subcommands().front()->count("--seed") > 0;

  std::string config_text = "{}";
  std::string base_dir = ".";
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config " << config_path << "\n";
      return kExitInvalidConfig;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    config_text = ss.str();
    base_dir = std::filesystem::absolute(config_path).parent_path().string();
  } else if (command != "verify") {
    std::cerr << "error: --config is required for " << command << "\n";
    return kExitInvalidConfig;
  }

  orlicz_run_options opts{has_seed ? 1 : 0, seed, no_timestamp ? 0 : 1};
  orlicz_report* report = nullptr;
  const orlicz_status status = orlicz_run(command.c_str(), config_text.c_str(), base_dir.c_str(), &opts, &report);
  if (status != ORLICZ_OK) {
    std::cerr << "error (" << orlicz_status_string(status) << "): " << orlicz_last_error() << "\n";
    return exit_for(status);
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  for (size_t i = 0; i < orlicz_report_file_count(report); ++i) {
    size_t length = 0;
    const char* content = orlicz_report_file_content(report, i, &length);
    const auto path = std::filesystem::path(out_dir) / orlicz_report_file_name(report, i);
    std::ofstream out(path, std::ios::binary);
    out.write(content, static_cast<std::streamsize>(length));
    if (!out) {
      std::cerr << "error: cannot write " << path.string() << "\n";
      orlicz_report_destroy(report);
      return 1;
    }
    std::cout << "wrote " << path.string() << "\n";
  }
  std::cout << orlicz_report_summary(report) << "\n";
  const int code = orlicz_report_exit_code(report);
  orlicz_report_destroy(report);
  return code;
}
