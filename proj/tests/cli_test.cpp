#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "om/cli.hpp"

namespace om::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return oracle::fixture_path(name); }

std::filesystem::path temp_file(const std::string& name, const std::string& content = {}) {
  const auto path = std::filesystem::temp_directory_path() / ("omc_cli_test_" + name);
  if (!content.empty()) {
    std::ofstream(path) << content;
  }
  return path;
}

TEST(Cli, CountsCrossCheckOnExampleFixture) {
  const auto r = run_cli({"counts", "--cross-check", "--json", fixture("example28.topes")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["committees_eq7"], 3);
  EXPECT_EQ(j["committees_eq1"], 3);
  EXPECT_EQ(j["committees_eq8"], 3);
  EXPECT_EQ(j["triangles_trace"], 3);
  EXPECT_EQ(j["gamma_max_edges_formula"], 11);
  EXPECT_EQ(j["no_opposite_triples_formula"], 1137);
  EXPECT_EQ(j["all_consistent"], true);
}

TEST(Cli, CountsWithoutCrossCheckLeavesDirectFieldsNull) {
  const auto r = run_cli({"--json", "counts", fixture("hex.topes")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["triangles_direct"].is_null());
  EXPECT_TRUE(j["all_consistent"].is_null());
  EXPECT_EQ(j["edges_eq5"], 6);
}

TEST(Cli, CountsTextTable) {
  const auto r = run_cli({"counts", "--cross-check", fixture("hex.topes")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("all_consistent"), std::string::npos);
  EXPECT_NE(r.out.find("true"), std::string::npos);
}

TEST(Cli, CommitteesMaxPositiveOnHex) {
  const auto r = run_cli({"committees", "--max-positive", fixture("hex.topes")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("1 committee\n", 0), 0u);
  EXPECT_NE(r.out.find("++- +-+ -++"), std::string::npos);

  const auto j = Json::parse(run_cli({"committees", "--json", fixture("example28.topes")}).out);
  ASSERT_TRUE(j.contains("committees"));
  EXPECT_EQ(j["committees"].size(), 3u);
}

TEST(Cli, ValidateOutcomes) {
  EXPECT_EQ(run_cli({"validate", fixture("example28.topes")}).code, kExitOk);

  const auto broken = temp_file("broken.topes", "+-+\n+--\n-++\n-+-\n");
  const auto r = run_cli({"validate", broken.string()});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.out.find("simplicity"), std::string::npos);

  const auto asym = temp_file("asym.topes", "++\n+-\n-+\n");
  const auto j = run_cli({"validate", "--json", asym.string()});
  EXPECT_EQ(j.code, kExitInvalid);
  EXPECT_EQ(Json::parse(j.out)["ok"], false);

  EXPECT_EQ(run_cli({"validate", fixture("hex0.topes")}).code, kExitOk);
  EXPECT_EQ(run_cli({"--strict", "validate", fixture("hex0.topes")}).code, kExitInvalid);
}

TEST(Cli, InvalidInputStopsOtherCommands) {
  const auto broken = temp_file("broken2.topes", "++\n+-\n-+\n");
  const auto r = run_cli({"counts", broken.string()});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("symmetry"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"counts", "--bogus", fixture("hex.topes")}).code, kExitUsage);
  EXPECT_EQ(run_cli({"counts", "/nonexistent/none.topes"}).code, kExitUsage);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"graph", "--kind", "petersen", fixture("hex.topes")}).code, kExitUsage);
  const auto garbage = temp_file("garbage.topes", "+-\n+x\n");
  EXPECT_EQ(run_cli({"validate", garbage.string()}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* cmd : {"counts", "lattice", "committees", "graph"}) {
    const auto a = run_cli({"--json", cmd, fixture("example28.topes")});
    const auto b = run_cli({"--json", cmd, fixture("example28.topes")});
    ASSERT_EQ(a.code, kExitOk) << cmd << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(Cli, GraphFormats) {
  const auto dot = run_cli({"graph", "--kind", "gamma-max", fixture("example28.topes")});
  ASSERT_EQ(dot.code, kExitOk) << dot.err;
  EXPECT_EQ(dot.out.rfind("// kind: gamma-max\n", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t p = dot.out.find(" -- "); p != std::string::npos; p = dot.out.find(" -- ", p + 1)) ++edges;
  EXPECT_EQ(edges, 11u);

  const auto js = run_cli({"graph", "--format", "json", fixture("example28.topes")});
  EXPECT_EQ(Json::parse(js.out)["edge_count"], 49);

  const auto path = temp_file("g.dot");
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli({"graph", "--kind", "g", "-o", path.string(), fixture("hex.topes")}).code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(path));
}

TEST(Cli, LatticeOutput) {
  const auto r = run_cli({"lattice", "--verify-mobius", fixture("hex.topes")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("coatoms (3): {1,2} {1,3} {2,3}"), std::string::npos);
  const auto j = Json::parse(run_cli({"--json", "lattice", "--verify-mobius", fixture("example28.topes")}).out);
  EXPECT_EQ(j["coatoms"].size(), 7u);
  ASSERT_TRUE(j.contains("mobius_recursive"));
  EXPECT_EQ(j["mobius_recursive"].size(), 44u);
}

TEST(Cli, IngestWritesTopes) {
  const auto path = temp_file("hex_out.topes");
  std::filesystem::remove(path);
  const auto r = run_cli({"ingest", "--arrangement", fixture("hex.arr"), "--reorient", "2", "-o", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse_topes(oracle::read_text(path.string())), oracle::load("hex.topes"));

  const auto plain = run_cli({"ingest", "--arrangement", fixture("hex.arr")});
  EXPECT_EQ(plain.code, kExitOk);
  EXPECT_NE(plain.err.find("warning"), std::string::npos);
  EXPECT_EQ(run_cli({"--strict", "ingest", "--arrangement", fixture("hex.arr")}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"ingest", "--arrangement", fixture("hex.arr"), "--reorient", "9"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"ingest"}).code, kExitUsage);
}

}  // namespace
}  // namespace om::cli
