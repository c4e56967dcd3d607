#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mrr/bounds.hpp"
#include "mrr/census.hpp"

namespace mrr {

/// group,order,mode,total_or_n,mrr_count_or_hits,fraction,ci_low,ci_high,seed
inline constexpr const char* kReportCsvHeader =
    "group,order,mode,total_or_n,mrr_count_or_hits,fraction,ci_low,ci_high,seed";

/// r,lemma2_log2,lemma3,ratio_log2
inline constexpr const char* kBoundsCsvHeader = "r,lemma2_log2,lemma3,ratio_log2";

std::string mode_name(ReportRow::Mode mode);

/// Header line plus one line per row, '\n'-terminated. Error rows keep the
/// group and carry empty numeric fields.
std::string format_report_csv(const std::vector<ReportRow>& rows);
/// Same fields as the CSV, as a JSON array of objects.
nlohmann::json report_json(const std::vector<ReportRow>& rows);

/// Data fields of a census plus the per-size breakdown; run metadata is
/// included only when `with_metadata` is set.
nlohmann::json census_json(const CensusResult& census, bool with_metadata);

std::string format_bounds_csv(const std::vector<BoundReport>& rows);
nlohmann::json bounds_json(const std::vector<BoundReport>& rows);

/// Shortest round-trip-safe decimal text for a double ("%.17g" trimmed).
std::string format_real(double value);

}  // namespace mrr
