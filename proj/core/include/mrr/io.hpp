#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mrr/cayley.hpp"
#include "mrr/group.hpp"

namespace mrr {

// Group files:
//   {"order": r, "names": [...], "table": [[...], ...]}
// with 0-based element indices; the identity is inferred from the table.
// format_group_file is canonical, so read-then-write reproduces the bytes
// of any file it wrote.

nlohmann::json group_to_json(const FiniteGroup& group);
/// Throws ValidationError on schema or table errors.
FiniteGroup group_from_json(const nlohmann::json& doc, std::string label = {});

std::string format_group_file(const FiniteGroup& group);
FiniteGroup parse_group_file(std::string_view text, std::string label = {});
FiniteGroup read_group_file(const std::filesystem::path& path);
void write_group_file(const std::filesystem::path& path, const FiniteGroup& group);

/// A builtin descriptor ("dihedral:6") or the path of a group file.
/// Throws SpecError when neither applies.
GroupPtr load_group(std::string_view spec_or_path);

// Map files:
//   {"group": "cyclic:5" | {group file object},
//    "S": [indices], "rotation": [[x, r(x)], ...]}
// Builtin groups are written by descriptor, others embedded. An optional
// "census_mrr" boolean records a verdict computed when the map was exported.

struct MapFile {
  CayleyMap map;
  std::optional<bool> census_mrr;
};

std::string format_map_file(const CayleyMap& map, std::optional<bool> census_mrr = {});
MapFile parse_map_file(std::string_view text);
MapFile read_map_file(const std::filesystem::path& path);

}  // namespace mrr
