#include "mrr/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace mrr {

using nlohmann::json;

std::string format_real(double value) {
  char buf[64];
  for (int precision = 10; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

std::string mode_name(ReportRow::Mode mode) {
  switch (mode) {
    case ReportRow::Mode::Exhaustive: return "exhaustive";
    case ReportRow::Mode::Sampled: return "sampled";
    case ReportRow::Mode::Error: return "error";
  }
  return {};
}

namespace {

// Group labels may be file paths; quote when CSV needs it.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string format_report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << kReportCsvHeader << '\n';
  for (const ReportRow& row : rows) {
    out << csv_field(row.group) << ',';
    if (row.mode == ReportRow::Mode::Error) {
      out << ",error,,,,,,\n";
      continue;
    }
    out << row.order << ',' << mode_name(row.mode) << ',' << row.total_or_n << ',' << row.count
        << ',' << format_real(row.fraction) << ',' << format_real(row.ci_low) << ','
        << format_real(row.ci_high) << ',';
    if (row.seed) out << *row.seed;
    out << '\n';
  }
  return out.str();
}

json report_json(const std::vector<ReportRow>& rows) {
  json out = json::array();
  for (const ReportRow& row : rows) {
    json item{{"group", row.group}, {"mode", mode_name(row.mode)}};
    if (row.mode == ReportRow::Mode::Error) {
      item["error"] = row.error;
    } else {
      item["order"] = row.order;
      item["total_or_n"] = row.total_or_n;
      item["mrr_count_or_hits"] = row.count;
      item["fraction"] = row.fraction;
      item["ci_low"] = row.ci_low;
      item["ci_high"] = row.ci_high;
      item["seed"] = row.seed ? json(*row.seed) : json(nullptr);
    }
    out.push_back(std::move(item));
  }
  return out;
}

json census_json(const CensusResult& census, bool with_metadata) {
  json per_size = json::array();
  for (const auto& [size, tally] : census.per_size) {
    per_size.push_back({{"size", size}, {"maps", tally.maps}, {"mrrs", tally.mrrs}});
  }
  json out = report_json({to_row(census)}).front();
  out["fraction_exact"] = std::to_string(census.mrr_count) + "/" +
                          std::to_string(census.total_maps);
  out["per_size"] = std::move(per_size);
  if (with_metadata) {
    out["wall_seconds"] = census.wall_seconds;
    out["shards"] = census.shards;
  }
  return out;
}

namespace {

std::string format_long_real(long double value) {
  return format_real(static_cast<double>(value));
}

std::string integer_text(const BigRational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return value.str();
}

}  // namespace

std::string format_bounds_csv(const std::vector<BoundReport>& rows) {
  std::ostringstream out;
  out << kBoundsCsvHeader << '\n';
  for (const BoundReport& row : rows) {
    out << row.r << ',' << format_long_real(row.lemma2_log2) << ',' << integer_text(row.lemma3)
        << ',';
    if (row.ratio_log2) out << format_long_real(*row.ratio_log2);
    out << '\n';
  }
  return out.str();
}

json bounds_json(const std::vector<BoundReport>& rows) {
  json out = json::array();
  for (const BoundReport& row : rows) {
    out.push_back({{"r", row.r},
                   {"lemma2_log2", static_cast<double>(row.lemma2_log2)},
                   {"lemma3", integer_text(row.lemma3)},
                   {"ratio_log2", row.ratio_log2 ? json(static_cast<double>(*row.ratio_log2))
                                                 : json(nullptr)},
                   {"vacuous", row.vacuous()}});
  }
  return out;
}

}  // namespace mrr
