#include "mrr/io.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mrr/errors.hpp"
#include "test_support.hpp"

namespace mrr {
namespace {

using ::testing::HasSubstr;
using testing::group;

TEST(GroupFileTest, FormatIsCanonical) {
  const auto text = format_group_file(builtin("cyclic:3"));
  EXPECT_EQ(text,
            "{\n"
            "  \"order\": 3,\n"
            "  \"names\": [\"0\", \"1\", \"2\"],\n"
            "  \"table\": [\n"
            "    [0, 1, 2],\n"
            "    [1, 2, 0],\n"
            "    [2, 0, 1]\n"
            "  ]\n"
            "}\n");
}

TEST(GroupFileTest, RoundTripIsBitExact) {
  for (const auto& g : testing::catalog(12)) {
    const std::string once = format_group_file(*g);
    const FiniteGroup back = parse_group_file(once);
    EXPECT_EQ(format_group_file(back), once) << g->label();
    EXPECT_EQ(back.identity(), g->identity());
  }
  // The shipped A4 file is itself in canonical form.
  const std::string path = std::string(MRR_DATA_DIR) + "/groups/alternating4.json";
  std::ifstream in(path);
  const std::string on_disk((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(format_group_file(read_group_file(path)), on_disk);
}

TEST(GroupFileTest, AlternatingFourIsValid) {
  const auto a4 = testing::alternating4();
  EXPECT_EQ(a4->order(), 12u);
  const auto part = inverse_class_partition(*a4);
  EXPECT_EQ(part.involutions.size(), 3u);
  EXPECT_EQ(part.pairs.size(), 4u);
  EXPECT_FALSE(is_exceptional(*a4));
}

TEST(GroupFileTest, MalformedDocuments) {
  EXPECT_THROW(parse_group_file("{not json"), ValidationError);
  EXPECT_THROW(parse_group_file("[1, 2]"), ValidationError);
  EXPECT_THROW(parse_group_file(R"({"order": 2, "names": ["a", "b"]})"), ValidationError);
  EXPECT_THROW(parse_group_file(R"({"order": 3, "names": ["a", "b"], "table": [[0,1],[1,0]]})"),
               ValidationError);
  EXPECT_THROW(parse_group_file(R"({"order": 2, "names": ["a", "b"], "table": [[0,1],[1,1]]})"),
               ValidationError);
  EXPECT_THROW(parse_group_file(R"({"order": 2, "names": ["a", "b"], "table": "x"})"),
               ValidationError);
}

TEST(LoadGroupTest, SpecOrPath) {
  EXPECT_EQ(load_group("dihedral:4")->order(), 8u);
  const auto dir = std::filesystem::temp_directory_path() / "mrr_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "q8.json";
  write_group_file(path, builtin("quaternion:8"));
  const auto g = load_group(path.string());
  EXPECT_EQ(g->order(), 8u);
  EXPECT_EQ(g->label(), path.string());
  EXPECT_THROW(load_group("nonexistent:7"), SpecError);
  EXPECT_THROW(load_group((dir / "missing.json").string()), SpecError);
}

TEST(MapFileTest, BuiltinGroupRoundTrip) {
  const auto g = group("cyclic:5");
  const CayleyMap m(make_connection_set(g, {1, 2, 3, 4}), CyclicOrdering::from_cycle({1, 3, 2, 4}));
  const std::string text = format_map_file(m, true);
  EXPECT_THAT(text, HasSubstr("\"group\": \"cyclic:5\""));
  EXPECT_THAT(text, HasSubstr("\"rotation\": [[1, 3], [2, 4], [3, 2], [4, 1]]"));
  const MapFile back = parse_map_file(text);
  EXPECT_EQ(back.map.connection_set().elements().size(), 4u);
  EXPECT_EQ(back.map.ordering(), m.ordering());
  EXPECT_EQ(back.census_mrr, std::optional<bool>(true));
  EXPECT_EQ(format_map_file(back.map, true), text);
}

TEST(MapFileTest, EmbeddedGroupRoundTrip) {
  const auto a4 = testing::alternating4();
  std::vector<Index> all;
  for (Index x = 1; x < 12; ++x) all.push_back(x);
  const CayleyMap m(make_connection_set(a4, all), CyclicOrdering::from_cycle(all));
  const std::string text = format_map_file(m);
  EXPECT_THAT(text, HasSubstr("\"order\":12"));
  const MapFile back = parse_map_file(text);
  EXPECT_EQ(back.map.group().order(), 12u);
  EXPECT_EQ(back.map.cycle(), m.cycle());
  EXPECT_FALSE(back.census_mrr.has_value());
  EXPECT_EQ(format_map_file(back.map), text);
}

TEST(MapFileTest, MalformedMaps) {
  EXPECT_THROW(parse_map_file("nope"), ValidationError);
  EXPECT_THROW(parse_map_file(R"({"group": "cyclic:4", "S": [1, 3]})"), ValidationError);
  // Not inverse-closed.
  EXPECT_THROW(parse_map_file(R"({"group": "cyclic:4", "S": [1], "rotation": [[1, 1]]})"),
               ValidationError);
  // Rotation is two cycles.
  EXPECT_THROW(parse_map_file(
                   R"({"group": "cyclic:5", "S": [1,2,3,4], "rotation": [[1,4],[4,1],[2,3],[3,2]]})"),
               ValidationError);
  // Rotation support differs from S.
  EXPECT_THROW(parse_map_file(
                   R"({"group": "cyclic:4", "S": [1, 3], "rotation": [[1, 2], [2, 1]]})"),
               ValidationError);
  EXPECT_THROW(parse_map_file(R"({"group": "bogus:1", "S": [1], "rotation": [[1, 1]]})"),
               ValidationError);
}

}  // namespace
}  // namespace mrr
