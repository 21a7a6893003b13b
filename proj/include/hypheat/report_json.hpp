#pragma once

#include <json.hpp>
#include <string>

#include "hypheat/kernel.hpp"
#include "hypheat/series.hpp"
#include "hypheat/verify.hpp"

namespace hypheat {

/// Bumped whenever a field is renamed or removed. See docs/report-schema.md.
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const KernelEval& k, const AlphaEval& a);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);
nlohmann::json to_json(const SeriesReport& r);
nlohmann::json to_json(const DominanceReport& r);
nlohmann::json to_json(const ConcavityReport& r);
nlohmann::json to_json(const ComparisonTable& t);

/// One row per grid point, columns dim,t,r then one per estimate. Cells for
/// estimates that do not apply, or failed to evaluate, are empty.
std::string to_csv(const ComparisonTable& t);

}  // namespace hypheat
