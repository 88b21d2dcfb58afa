#pragma once

#include <string>

#include "json.hpp"
#include "orlicz/bounds.hpp"
#include "orlicz/domain.hpp"
#include "orlicz/matuszewska.hpp"
#include "orlicz/spectral.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

inline constexpr int kSchemaVersion = 1;

/// Finite values as numbers; ±inf and NaN as the strings "inf", "-inf", "nan".
nlohmann::json json_number(double x);
nlohmann::json to_json(const ExtendedReal& x);

nlohmann::json to_json(const YoungFunction& f);
nlohmann::json to_json(const DoublingClass& d);
nlohmann::json to_json(const MatuszewskaProfile& p);
nlohmann::json to_json(const GrowthConditions& g);
nlohmann::json to_json(const BoundReport& b);
nlohmann::json to_json(const DomainGeometry& g);
/// Minimizer values are exported separately as CSV.
nlohmann::json to_json(const CriticalValueResult& r);
nlohmann::json to_json(const EnergyCurve& e);
nlohmann::json to_json(const Alpha0Result& a);

/// Adds schema_version and, unless suppressed, a UTC generated_at stamp;
/// dumps with sorted keys, two-space indent and a trailing newline.
std::string finalize_report(nlohmann::json body, bool timestamp);

}  // namespace orlicz
