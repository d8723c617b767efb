#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wonderful_cli/run.hpp"

namespace wonderful::cli {
namespace {

using nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  args.insert(args.begin(), "wonderful");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err, env);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct GoldenCase {
  const char* file;
  const char* args;
};

const GoldenCase kGoldens[] = {
    {"class_k3_d2.json", "class --graph builtin:complete:3 --dim 2 --format json"},
    {"class_k2_d2_p2.txt", "class --graph builtin:complete:2 --dim 2 --target Pd"},
    {"nests_p3.txt", "nests --graph builtin:path:3"},
    {"nests_k3_prop3.json", "nests --graph builtin:complete:3 --format json --literal-prop3"},
    {"building_set_c4.txt", "building-set --graph builtin:cycle:4"},
    {"validate_bowtie.json", "validate --graph builtin:bowtie --format json"},
    {"conf_class_k3.txt", "conf-class --graph builtin:complete:3"},
    {"c_class_k3_d2.txt", "c-class --graph builtin:complete:3 --dim 2"},
    {"hodge_k2_d2.json", "hodge --graph builtin:complete:2 --dim 2 --target Pd --format json"},
    {"euler_k2_d2.txt", "euler --graph builtin:complete:2 --dim 2 --target P2"},
    {"divergence_k4.txt", "divergence --graph builtin:complete:4 --dim 4"},
    {"divergence_k5.json", "divergence --graph builtin:complete:5 --dim 4 --format json"},
    {"strata_k2_d3.dot", "strata --graph builtin:complete:2 --dim 3 --format dot"},
    {"strata_p3_d1.txt", "strata --graph builtin:path:3 --dim 1"},
    {"identities_k3_d2.txt", "identities --graph builtin:complete:3 --dim 2 --literal-lemma14"},
};

std::filesystem::path golden_path(const char* file) {
  return std::filesystem::path(WONDERFUL_GOLDEN_DIR) / file;
}

TEST(Cli, GoldenOutputs) {
  const bool update = std::getenv("WONDERFUL_UPDATE_GOLDENS") != nullptr;
  for (const auto& g : kGoldens) {
    const Result r = invoke(split(g.args));
    ASSERT_EQ(r.code, 0) << g.args << "\n" << r.err;
    if (update) {
      std::ofstream(golden_path(g.file), std::ios::binary) << r.out;
      continue;
    }
    std::ifstream in(golden_path(g.file), std::ios::binary);
    ASSERT_TRUE(in) << "missing golden " << g.file;
    std::stringstream expected;
    expected << in.rdbuf();
    EXPECT_EQ(r.out, expected.str()) << g.args;
    EXPECT_EQ(invoke(split(g.args)).out, r.out) << "output not deterministic: " << g.args;
  }
}

TEST(Cli, ClassJsonCarriesThePolynomial) {
  const Result r = invoke(split("class --graph builtin:complete:3 --dim 2 --format json"));
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "1");
  EXPECT_EQ(j["d"], 2);
  const json expected = json::parse(
      R"({"terms":[{"t":3,"l":0,"c":"1"},{"t":2,"l":1,"c":"3"},{"t":1,"l":3,"c":"1"},)"
      R"({"t":1,"l":2,"c":"4"},{"t":1,"l":1,"c":"1"}]})");
  EXPECT_EQ(j["class"], expected);
}

TEST(Cli, NestsAndDivergenceExamples) {
  const Result n = invoke(split("nests --graph builtin:path:3"));
  ASSERT_EQ(n.code, 0);
  EXPECT_NE(n.out.find("nests: 3\n"), std::string::npos);
  const Result d = invoke(split("divergence --graph builtin:complete:4 --dim 4 --format json"));
  ASSERT_EQ(d.code, 0);
  const json j = json::parse(d.out);
  EXPECT_EQ(j["divergence"]["verdict"], "log_divergent");
  EXPECT_EQ(j["divergence"]["primitive"], true);
}

TEST(Cli, EveryCommandEchoesTheDimension) {
  for (const char* cmd : {"validate", "building-set", "nests", "class", "conf-class", "c-class",
                          "hodge", "euler", "divergence", "strata", "identities"}) {
    const Result t = invoke({cmd, "--graph", "builtin:complete:3"});
    ASSERT_EQ(t.code, 0) << cmd << t.err;
    EXPECT_NE(t.out.find("d = 4\n"), std::string::npos) << cmd;
    const Result j = invoke({cmd, "--graph", "builtin:complete:3", "--format", "json", "--dim", "3"});
    ASSERT_EQ(j.code, 0) << cmd;
    const json doc = json::parse(j.out);
    EXPECT_EQ(doc["d"], 3) << cmd;
    EXPECT_EQ(doc["schema"], "1") << cmd;
  }
}

TEST(Cli, DiagnosticFlagsOnlyAddOutput) {
  const json plain = json::parse(invoke(split("nests --graph builtin:complete:4 --format json")).out);
  json diag = json::parse(
      invoke(split("nests --graph builtin:complete:4 --format json --literal-prop3")).out);
  ASSERT_TRUE(diag.contains("literal_pairwise_count"));
  diag.erase("literal_pairwise_count");
  EXPECT_EQ(plain, diag);

  const json base = json::parse(invoke(split("identities --graph builtin:complete:3 --format json")).out);
  const json lit = json::parse(
      invoke(split("identities --graph builtin:complete:3 --format json --literal-lemma14")).out);
  EXPECT_EQ(base["required_passed"], lit["required_passed"]);
  json required = json::array();
  for (const auto& c : lit["grothendieck"]["checks"]) {
    if (c["required"]) required.push_back(c);
  }
  EXPECT_EQ(base["grothendieck"]["checks"], required);
  EXPECT_GT(lit["grothendieck"]["checks"].size(), required.size());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke(split("class --graph builtin:complete:3 --format dot")).code, kExitUsage);
  EXPECT_EQ(invoke(split("frobnicate --graph builtin:complete:3")).code, kExitUsage);
  EXPECT_EQ(invoke(split("class")).code, kExitUsage);
  EXPECT_EQ(invoke(split("class --graph builtin:complete:3 --target Q3")).code, kExitUsage);
  EXPECT_EQ(invoke(split("class --graph builtin:complete:3 --target custom:x.json")).code, kExitUsage);
  EXPECT_EQ(invoke(split("class --graph builtin:complete:3 --dim 0")).code, kExitUsage);
  EXPECT_EQ(invoke(split("--help")).code, kExitOk);

  const Result unknown = invoke(split("class --graph builtin:wheel:4"));
  EXPECT_EQ(unknown.code, kExitDomainError);
  EXPECT_NE(unknown.err.find("UnknownFamily"), std::string::npos);

  const Result mismatch = invoke(split("class --graph builtin:complete:3 --dim 2 --target P3"));
  EXPECT_EQ(mismatch.code, kExitDomainError);
  EXPECT_NE(mismatch.err.find("DimensionMismatch"), std::string::npos);
}

TEST(Cli, ErrorJsonInJsonMode) {
  const Result r = invoke(split("divergence --graph builtin:path:1 --format json"));
  EXPECT_EQ(r.code, kExitDomainError);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "1");
  EXPECT_EQ(j["error"]["code"], "NoEdges");
}

TEST(Cli, BudgetFromFlagAndEnvironment) {
  EXPECT_EQ(invoke(split("nests --graph builtin:complete:5 --budget 100")).code, kExitDomainError);
  const Result env = invoke(split("nests --graph builtin:complete:5"), std::string("100"));
  EXPECT_EQ(env.code, kExitDomainError);
  EXPECT_NE(env.err.find("ExplosionGuard"), std::string::npos);
  EXPECT_EQ(invoke(split("nests --graph builtin:complete:5 --budget 100000000"), std::string("100")).code,
            kExitOk);
  EXPECT_EQ(invoke(split("nests --graph builtin:complete:3"), std::string("lots")).code, kExitUsage);
}

TEST(Cli, GraphFilesAndCustomTargets) {
  const auto dir = std::filesystem::temp_directory_path() / "wonderful_cli_test";
  std::filesystem::create_directories(dir);
  const auto graph = dir / "g.json";
  std::ofstream(graph) << R"({"vertices":[1,2,3,4],"edges":[[1,2],[2,3],[3,4],[1,4]],"potentials":{"1":2}})";
  const auto edges = dir / "g.txt";
  std::ofstream(edges) << "1 2\n2 3\n3 4\n4 1\n";
  const auto target = dir / "p1.json";
  std::ofstream(target) << R"({"terms":[{"p":0,"q":0,"c":"1"},{"p":1,"q":1,"c":"1"}]})";

  const Result a = invoke({"class", "--graph", graph.string(), "--dim", "2"});
  const Result b = invoke({"class", "--graph", edges.string(), "--dim", "2"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);

  const json div = json::parse(invoke({"divergence", "--graph", graph.string(), "--format", "json"}).out);
  EXPECT_EQ(div["potentials"]["1"], 2);

  const Result custom = invoke({"euler", "--graph", "builtin:complete:2", "--dim", "2", "--target",
                                "custom:" + target.string(), "--format", "json"});
  const Result p1 = invoke(split("euler --graph builtin:complete:2 --dim 2 --target P1 --format json"));
  ASSERT_EQ(custom.code, 0) << custom.err;
  EXPECT_EQ(json::parse(custom.out)["euler"], json::parse(p1.out)["euler"]);
  std::filesystem::remove_all(dir);
}

TEST(Cli, JsonOutputsRoundTrip) {
  for (const auto& g : kGoldens) {
    const Result r = invoke(split(g.args));
    if (std::string(g.args).find("--format json") == std::string::npos) continue;
    const json j = json::parse(r.out);
    EXPECT_EQ(json::parse(j.dump(2)), j);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
  }
}

}  // namespace
}  // namespace wonderful::cli
