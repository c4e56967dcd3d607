#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "mrr/bounds.hpp"
#include "mrr/census.hpp"
#include "mrr/errors.hpp"
#include "mrr/io.hpp"
#include "mrr/mapauto.hpp"
#include "mrr/report.hpp"

namespace mrr::cli {

namespace {

struct CommonFlags {
  std::string out_path;
  std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--out", flags.out_path, "Write the report to this file instead of stdout");
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void emit(const std::string& text, const CommonFlags& flags, std::ostream& out) {
  if (flags.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out_path, std::ios::binary);
  if (!file) throw ValidationError("cannot write " + flags.out_path);
  file << text;
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

unsigned default_shards() { return std::max(1u, std::thread::hardware_concurrency()); }

// "A..B" or a single "N".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto parse = [&](std::string_view part) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw SpecError("bad r range '" + text + "'");
    }
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t r = parse(text);
    return {r, r};
  }
  const auto lo = parse(std::string_view(text).substr(0, dots));
  const auto hi = parse(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw SpecError("empty r range '" + text + "'");
  return {lo, hi};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley map censuses, MRR detection and counting bounds", "mrrtool"};
  app.require_subcommand(1);

  // census
  CommonFlags census_flags;
  std::string census_group;
  std::uint64_t census_budget = CensusOptions::kDefaultBudget;
  unsigned census_shards = default_shards();
  std::int64_t export_index = -1;
  std::string export_path;
  auto* census = app.add_subcommand("census", "Exhaustive MRR census of one group");
  census->add_option("--group", census_group, "Builtin spec or group JSON file")->required();
  census->add_option("--budget", census_budget, "Maximum number of labelled maps")
      ->capture_default_str();
  census->add_option("--shards", census_shards, "Index-range shards run concurrently")
      ->check(CLI::PositiveNumber);
  census->add_option("--export-index", export_index, "Export the map with this census index");
  census->add_option("--export", export_path, "Map JSON path for --export-index");
  add_output_flags(census, census_flags);

  // sample
  CommonFlags sample_flags;
  std::string sample_group;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  double confidence = 0.95;
  unsigned sample_threads = default_shards();
  auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of the MRR fraction");
  sample->add_option("--group", sample_group, "Builtin spec or group JSON file")->required();
  sample->add_option("--samples", samples, "Number of labelled maps to draw")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample->add_option("--seed", seed, "RNG seed")->capture_default_str();
  sample->add_option("--confidence", confidence, "Wilson interval level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sample->add_option("--shards", sample_threads, "Worker threads (does not change results)")
      ->check(CLI::PositiveNumber);
  add_output_flags(sample, sample_flags);

  // check
  std::string map_path;
  auto* check = app.add_subcommand("check", "Stabilizer, |Aut| and MRR verdict of a map file");
  check->add_option("map", map_path, "Map JSON file")->required();

  // bounds
  CommonFlags bounds_flags;
  std::string range_text = "3..64";
  bool find_crossing = false;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the counting bounds over a range of r");
  bounds->add_option("--range", range_text, "r values as A..B or N")->capture_default_str();
  bounds->add_flag("--find-crossing", find_crossing,
                   "Also report the first r in the range where the ratio drops below 1");
  add_output_flags(bounds, bounds_flags);

  // trend
  CommonFlags trend_flags;
  std::vector<std::string> trend_groups;
  TrendOptions trend;
  trend.census.shards = default_shards();
  auto* trend_cmd = app.add_subcommand("trend", "One report row per group: census or sample");
  trend_cmd->add_option("--group", trend_groups, "Groups, in report order")->required();
  trend_cmd->add_option("--samples", trend.n_samples, "Samples for groups over budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  trend_cmd->add_option("--seed", trend.seed, "RNG seed")->capture_default_str();
  trend_cmd->add_option("--confidence", trend.confidence, "Wilson interval level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  trend_cmd->add_option("--budget", trend.census.budget, "Census budget")->capture_default_str();
  trend_cmd->add_option("--shards", trend.census.shards, "Shards / worker threads")
      ->check(CLI::PositiveNumber);
  add_output_flags(trend_cmd, trend_flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (census->parsed()) {
      const GroupPtr group = load_group(census_group);
      const CensusResult result =
          exhaustive_census(group, CensusOptions{census_budget, census_shards});
      if (census_flags.format == "json") {
        emit(dump(census_json(result, true)), census_flags, out);
      } else {
        emit(format_report_csv({to_row(result)}), census_flags, out);
      }
      if (export_index >= 0) {
        if (export_path.empty()) throw InvalidInput("--export-index needs --export <path>");
        const CayleyMap m = MapIndex(group).at(static_cast<std::uint64_t>(export_index));
        std::ofstream file(export_path, std::ios::binary);
        if (!file) throw ValidationError("cannot write " + export_path);
        file << format_map_file(m, is_mrr(m));
      }
      return kOk;
    }

    if (sample->parsed()) {
      const GroupPtr group = load_group(sample_group);
      const SampleEstimate est =
          estimate_fraction(group, samples, seed, confidence, sample_threads);
      const std::vector<ReportRow> rows{to_row(est)};
      emit(sample_flags.format == "json" ? dump(report_json(rows)) : format_report_csv(rows),
           sample_flags, out);
      return kOk;
    }

    if (check->parsed()) {
      const MapFile file = read_map_file(map_path);
      const StabilizerResult stab = stabilizer_of_identity(file.map);
      const std::size_t aut = file.map.group().order() * stab.order;
      out << "generator_exponent=" << stab.generator_exponent << ", aut=" << aut
          << ", stabilizer=" << stab.order << ", MRR=" << (stab.order == 1 ? "yes" : "no");
      if (file.census_mrr) out << ", census_MRR=" << (*file.census_mrr ? "yes" : "no");
      out << '\n';
      return kOk;
    }

    if (bounds->parsed()) {
      const auto [lo, hi] = parse_range(range_text);
      if (lo < 1) throw SpecError("r must be at least 1");
      std::vector<BoundReport> rows;
      std::size_t vacuous = 0;
      for (std::size_t r = lo; r <= hi; ++r) {
        rows.push_back(bound_report(r));
        if (!rows.back().ratio_log2) {
          err << "warning: r=" << r << ": (r-2)! undefined, ratio left blank\n";
        } else if (rows.back().vacuous()) {
          ++vacuous;
        }
      }
      if (vacuous > 0) err << "note: " << vacuous << " row(s) have ratio > 1 (vacuous)\n";
      if (find_crossing) {
        const auto crossing = first_ratio_below_one(std::max<std::size_t>(lo, 2), hi);
        err << "first r with ratio < 1: "
            << (crossing ? std::to_string(*crossing) : std::string("none in range")) << '\n';
      }
      emit(bounds_flags.format == "json" ? dump(bounds_json(rows)) : format_bounds_csv(rows),
           bounds_flags, out);
      return kOk;
    }

    if (trend_cmd->parsed()) {
      const auto rows = trend_report(trend_groups, trend);
      for (const auto& row : rows) {
        if (row.mode == ReportRow::Mode::Error) err << "error: " << row.group << ": " << row.error << '\n';
      }
      emit(trend_flags.format == "json" ? dump(report_json(rows)) : format_report_csv(rows),
           trend_flags, out);
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const SpecError& e) {
    err << "bad group spec: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kUsage;
}

}  // namespace mrr::cli
