#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orlicz/bounds.hpp"
#include "orlicz/domain.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct OmegaSpec {
  enum class Kind { constant, unit_mass, file };
  Kind kind = Kind::constant;
  double c = 1.0;
  std::string path;
};

struct SolverSpec {
  int max_iterations = 5000;
  double rel_tol = 1e-9;
  int random_starts = 0;
};

/// Parsed and validated run configuration. Fields not needed by a subcommand
/// may be absent; the runner reports the missing path.
struct RunConfig {
  std::optional<YoungFunction> young;
  nlohmann::json young_echo;
  std::optional<DomainSpec> domain;
  std::optional<double> s;
  std::optional<int> n;
  OmegaSpec omega;
  std::vector<double> alpha;
  double calibration_C = 1.0;
  std::uint64_t seed = 0;
  SolverSpec solver;
  bool alpha0 = false;
  // Absent means "derive from solve_alpha0".
  std::optional<AlphaRegime> regime = AlphaRegime::below_alpha0;
  std::string base_dir;
};

/// Errors carry ErrorCode::config and a message of the form "<field.path>: <reason>".
RunConfig parse_config(const nlohmann::json& j, const std::string& base_dir = ".");
RunConfig parse_config_text(const std::string& text, const std::string& base_dir = ".");

YoungFunction parse_young(const nlohmann::json& j, const std::string& path = "young", const std::string& base_dir = ".");
DomainSpec parse_domain(const nlohmann::json& j, const std::string& path = "domain", const std::string& base_dir = ".");

/// (t, a) pairs, optional header row.
YoungFunction load_tabulated_csv(const std::string& file);

}  // namespace orlicz
