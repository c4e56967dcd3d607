#include "mrr/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "mrr/errors.hpp"

namespace mrr {

using nlohmann::json;

json group_to_json(const FiniteGroup& group) {
  const std::size_t r = group.order();
  json table = json::array();
  for (Index a = 0; a < r; ++a) {
    json row = json::array();
    for (Index b = 0; b < r; ++b) row.push_back(group.mult(a, b));
    table.push_back(std::move(row));
  }
  return json{{"order", r},
              {"names", std::vector<std::string>(group.names().begin(), group.names().end())},
              {"table", std::move(table)}};
}

FiniteGroup group_from_json(const json& doc, std::string label) {
  try {
    if (!doc.is_object()) throw ValidationError("group document must be a JSON object");
    for (const char* key : {"order", "names", "table"}) {
      if (!doc.contains(key)) throw ValidationError(std::string("group file lacks \"") + key + "\"");
    }
    const auto order = doc.at("order").get<std::size_t>();
    auto names = doc.at("names").get<std::vector<std::string>>();
    auto table = doc.at("table").get<std::vector<std::vector<Index>>>();
    if (table.size() != order) {
      throw ValidationError("\"order\" is " + std::to_string(order) + " but the table has " +
                            std::to_string(table.size()) + " rows");
    }
    return FiniteGroup::from_multiplication_table(std::move(table), std::move(names),
                                                  std::move(label));
  } catch (const json::exception& err) {
    throw ValidationError(std::string("malformed group document: ") + err.what());
  }
}

std::string format_group_file(const FiniteGroup& group) {
  const std::size_t r = group.order();
  std::ostringstream out;
  out << "{\n  \"order\": " << r << ",\n  \"names\": [";
  for (Index a = 0; a < r; ++a) out << (a ? ", " : "") << json(group.name(a)).dump();
  out << "],\n  \"table\": [\n";
  for (Index a = 0; a < r; ++a) {
    out << "    [";
    for (Index b = 0; b < r; ++b) out << (b ? ", " : "") << group.mult(a, b);
    out << (a + 1 < r ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

FiniteGroup parse_group_file(std::string_view text, std::string label) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ValidationError(std::string("group file is not valid JSON: ") + err.what());
  }
  return group_from_json(doc, std::move(label));
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

FiniteGroup read_group_file(const std::filesystem::path& path) {
  return parse_group_file(slurp(path), path.string());
}

void write_group_file(const std::filesystem::path& path, const FiniteGroup& group) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << format_group_file(group);
}

GroupPtr load_group(std::string_view spec_or_path) {
  try {
    return std::make_shared<const FiniteGroup>(builtin(spec_or_path));
  } catch (const SpecError&) {
    const std::filesystem::path path(spec_or_path);
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) throw;
    return std::make_shared<const FiniteGroup>(read_group_file(path));
  }
}

// --- map files -------------------------------------------------------------

namespace {

bool is_builtin_label(const FiniteGroup& group) {
  try {
    parse_builtin_spec(group.label());
    return true;
  } catch (const SpecError&) {
    return false;
  }
}

}  // namespace

std::string format_map_file(const CayleyMap& map, std::optional<bool> census_mrr) {
  const FiniteGroup& g = map.group();
  std::ostringstream out;
  out << "{\n  \"group\": ";
  if (is_builtin_label(g)) {
    out << json(g.label()).dump();
  } else {
    out << group_to_json(g).dump();
  }
  out << ",\n  \"S\": [";
  const auto s = map.connection_set().elements();
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? ", " : "") << s[i];
  out << "],\n  \"rotation\": [";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << (i ? ", " : "") << '[' << s[i] << ", " << map.ordering().successor(s[i]) << ']';
  }
  out << ']';
  if (census_mrr) out << ",\n  \"census_mrr\": " << (*census_mrr ? "true" : "false");
  out << "\n}\n";
  return out.str();
}

MapFile parse_map_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ValidationError(std::string("map file is not valid JSON: ") + err.what());
  }
  try {
    if (!doc.is_object()) throw ValidationError("map document must be a JSON object");
    for (const char* key : {"group", "S", "rotation"}) {
      if (!doc.contains(key)) throw ValidationError(std::string("map file lacks \"") + key + "\"");
    }
    GroupPtr group;
    const json& g = doc.at("group");
    if (g.is_string()) {
      try {
        group = std::make_shared<const FiniteGroup>(builtin(g.get<std::string>()));
      } catch (const SpecError& err) {
        throw ValidationError(std::string("map file group: ") + err.what());
      }
    } else {
      group = std::make_shared<const FiniteGroup>(group_from_json(g, "embedded"));
    }

    auto elements = doc.at("S").get<std::vector<Index>>();
    std::map<Index, Index> successor;
    for (const auto& pair : doc.at("rotation")) {
      const auto xy = pair.get<std::vector<Index>>();
      if (xy.size() != 2) throw ValidationError("rotation entries must be [x, successor] pairs");
      if (!successor.emplace(xy[0], xy[1]).second) {
        throw ValidationError("rotation lists element " + std::to_string(xy[0]) + " twice");
      }
    }
    MapFile out{CayleyMap(make_connection_set(group, std::move(elements)),
                          CyclicOrdering::from_successor(successor)),
                std::nullopt};
    if (doc.contains("census_mrr")) out.census_mrr = doc.at("census_mrr").get<bool>();
    return out;
  } catch (const json::exception& err) {
    throw ValidationError(std::string("malformed map document: ") + err.what());
  } catch (const InvalidInput& err) {
    throw ValidationError(std::string("invalid map: ") + err.what());
  }
}

MapFile read_map_file(const std::filesystem::path& path) { return parse_map_file(slurp(path)); }

}  // namespace mrr
