#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

// Each suite appends to `out`. The catalog suites run on `f` only.
void verify_young(const YoungFunction& f, std::vector<CheckResult>& out);
void verify_matuszewska(const YoungFunction& f, std::vector<CheckResult>& out);
void verify_bounds(std::vector<CheckResult>& out);
void verify_domain(std::vector<CheckResult>& out);
void verify_spectral(std::uint64_t seed, std::vector<CheckResult>& out);

/// Functions exercised by the young and matuszewska suites.
std::vector<YoungFunction> verify_catalog();

/// All suites over the catalog, plus `extra` when given.
VerifyReport run_verify_suites(std::uint64_t seed, const std::optional<YoungFunction>& extra = std::nullopt);

nlohmann::json to_json(const VerifyReport& r);

}  // namespace orlicz
