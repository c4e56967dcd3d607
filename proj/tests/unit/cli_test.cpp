#include "cli.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mrr/census.hpp"
#include "mrr/io.hpp"
#include "mrr/mapauto.hpp"

namespace mrr::cli {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mrr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, CensusExceptionalGroups) {
  auto z3 = invoke({"census", "--group", "cyclic:3"});
  EXPECT_EQ(z3.code, kOk);
  EXPECT_THAT(z3.out, HasSubstr("cyclic:3,3,exhaustive,1,0,0,"));
  auto klein = invoke({"census", "--group", "elem2:2"});
  EXPECT_THAT(klein.out, HasSubstr("elem2:2,4,exhaustive,5,0,0,"));
}

TEST_F(CliTest, CensusShardCountDoesNotChangeReport) {
  const auto one = invoke({"census", "--group", "dihedral:4", "--shards", "1"});
  const auto four = invoke({"census", "--group", "dihedral:4", "--shards", "4"});
  EXPECT_EQ(one.code, kOk);
  EXPECT_EQ(one.out, four.out);
  const auto j1 = nlohmann::json::parse(
      invoke({"census", "--group", "cyclic:8", "--shards", "1", "--format", "json"}).out);
  const auto j4 = nlohmann::json::parse(
      invoke({"census", "--group", "cyclic:8", "--shards", "4", "--format", "json"}).out);
  for (const char* key : {"group", "order", "total_or_n", "mrr_count_or_hits", "fraction_exact", "per_size"}) {
    EXPECT_EQ(j1.at(key), j4.at(key)) << key;
  }
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"census"}).code, kUsage);
  EXPECT_EQ(invoke({"census", "--group", "cyclic:0"}).code, kUsage);
  EXPECT_EQ(invoke({"census", "--group", "bogus:3"}).code, kUsage);
  EXPECT_EQ(invoke({"census", "--group", "cyclic:12", "--budget", "1000"}).code, kBudget);
  EXPECT_EQ(invoke({"check", path("missing.json")}).code, kValidation);
  EXPECT_EQ(invoke({"census", "--group", "cyclic:4", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST_F(CliTest, SampleIsReproducible) {
  const std::vector<std::string> args{"sample", "--group", "cyclic:16", "--samples", "5000",
                                      "--seed", "17"};
  auto a = args;
  a.insert(a.end(), {"--out", path("a.csv")});
  auto b = args;
  b.insert(b.end(), {"--out", path("b.csv"), "--shards", "3"});
  ASSERT_EQ(invoke(a).code, kOk);
  ASSERT_EQ(invoke(b).code, kOk);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_THAT(slurp(path("a.csv")), HasSubstr(",sampled,5000,"));
}

TEST_F(CliTest, SampleExceptionalGroupEstimatesZero) {
  const auto r = invoke({"sample", "--group", "elem2:2", "--samples", "1000"});
  EXPECT_THAT(r.out, HasSubstr("elem2:2,4,sampled,1000,0,0,0,"));
}

TEST_F(CliTest, SampleCyclicFourCoversExactFraction) {
  const auto r = invoke(
      {"sample", "--group", "cyclic:4", "--samples", "100000", "--seed", "3", "--format", "json"});
  const auto row = nlohmann::json::parse(r.out).at(0);
  EXPECT_LE(row.at("ci_low").get<double>(), 2.0 / 3.0);
  EXPECT_GE(row.at("ci_high").get<double>(), 2.0 / 3.0);
}

TEST_F(CliTest, CheckExportedNonMrr) {
  ASSERT_EQ(invoke({"census", "--group", "cyclic:3", "--export-index", "0", "--export",
                    path("z3.json")})
                .code,
            kOk);
  const auto r = invoke({"check", path("z3.json")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_THAT(r.out, HasSubstr("stabilizer=2, MRR=no"));
  EXPECT_THAT(r.out, HasSubstr("aut=6"));
  EXPECT_THAT(r.out, HasSubstr("census_MRR=no"));
}

TEST_F(CliTest, CheckReproducesCensusVerdicts) {
  const auto g = std::make_shared<const FiniteGroup>(builtin("sym:3"));
  const MapIndex index(g);
  for (std::uint64_t i = 0; i < index.total(); i += 4) {
    const std::string file = path("m" + std::to_string(i) + ".json");
    ASSERT_EQ(invoke({"census", "--group", "sym:3", "--export-index", std::to_string(i),
                      "--export", file})
                  .code,
              kOk);
    const auto r = invoke({"check", file});
    const bool mrr = is_mrr(index.at(i));
    EXPECT_THAT(r.out, HasSubstr(mrr ? "stabilizer=1, MRR=yes" : "MRR=no"));
    EXPECT_THAT(r.out, HasSubstr(mrr ? "census_MRR=yes" : "census_MRR=no"));
  }
}

TEST_F(CliTest, CheckRejectsMalformedFile) {
  std::ofstream(path("bad.json")) << "{\"group\": \"cyclic:3\", \"S\": [1, 2], \"rotation\": [[1";
  const auto r = invoke({"check", path("bad.json")});
  EXPECT_EQ(r.code, kValidation);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, BoundsRows) {
  const auto r = invoke({"bounds", "--range", "1..8"});
  EXPECT_EQ(r.code, kOk);
  std::vector<std::string> lines;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], "r,lemma2_log2,lemma3,ratio_log2");
  EXPECT_EQ(lines[1].rfind("1,0,", 0), 0u);
  EXPECT_EQ(lines[1].back(), ',');
  EXPECT_EQ(lines[2].rfind("2,19,", 0), 0u);
  EXPECT_EQ(lines[4].rfind("4,52,192,", 0), 0u);
  EXPECT_EQ(lines[8].rfind("8,99,172032,", 0), 0u);
  EXPECT_THAT(r.err, HasSubstr("r=1"));
  EXPECT_THAT(r.err, HasSubstr("vacuous"));
}

TEST_F(CliTest, BoundsCrossing) {
  const auto r = invoke({"bounds", "--range", "200..210", "--find-crossing"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_THAT(r.err, HasSubstr("first r with ratio < 1: 203"));
  EXPECT_EQ(invoke({"bounds", "--range", "9..3"}).code, kUsage);
}

TEST_F(CliTest, TrendMixesModes) {
  const auto r = invoke({"trend", "--group", "cyclic:5", "--group", "cyclic:32", "--samples",
                         "500", "--budget", "1000"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_THAT(r.out, HasSubstr("cyclic:5,5,exhaustive,8,4,0.5,"));
  EXPECT_THAT(r.out, HasSubstr("cyclic:32,32,sampled,500,"));
}

}  // namespace
}  // namespace mrr::cli
