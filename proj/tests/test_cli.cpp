#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"

namespace eigensym::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "eigensym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  RunConfig cfg;
  if (const auto code = parse_args(static_cast<int>(argv.size()), argv.data(), cfg, out, err))
    return {*code, out.str(), err.str()};
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = invoke(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("eigensym_cli_" + name);
  std::ofstream(path) << text;
  return path;
}

TEST(ParseArgsTest, SourcesAndValidation) {
  EXPECT_EQ(invoke({"aut"}).code, kParseError);
  EXPECT_EQ(invoke({"aut", "--builtin", "petersen", "--input", "x"}).code, kParseError);
  EXPECT_EQ(invoke({"aut", "--builtin", "petersen", "--format", "xml"}).code, kParseError);
  EXPECT_EQ(invoke({"aut", "--builtin", "petersen", "--tol", "-1"}).code, kParseError);
  EXPECT_EQ(invoke({"aut", "--builtin", "petersen", "--cap", "0"}).code, kParseError);
  EXPECT_EQ(invoke({"aut", "--builtin", "path", "three"}).code, kParseError);
  EXPECT_EQ(invoke({"verify", "--builtin", "petersen"}).code, kParseError);
  EXPECT_EQ(invoke({"span", "--builtin", "petersen", "--ones", "--random"}).code, kParseError);
  EXPECT_EQ(invoke({"frobnicate", "--builtin", "petersen"}).code, kParseError);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(ExitCodeTest, DisjointClasses) {
  EXPECT_EQ(exit_code_for(ErrorKind::MalformedLine), kParseError);
  EXPECT_EQ(exit_code_for(ErrorKind::BadChecksumChar), kParseError);
  EXPECT_EQ(exit_code_for(ErrorKind::CapExceeded), kCapExceeded);
  EXPECT_EQ(exit_code_for(ErrorKind::NoConvergence), kNoConvergence);
  EXPECT_EQ(exit_code_for(ErrorKind::DecompositionFailed), kDecompositionFailed);
  EXPECT_EQ(exit_code_for(ErrorKind::ConstructionFailed), kDisagreement);
  EXPECT_EQ(exit_code_for(ErrorKind::Internal), kOther);
}

TEST(AutCommandTest, Examples) {
  const auto pet = invoke_json({"aut", "--builtin", "petersen"});
  EXPECT_EQ(pet["schema_version"], kJsonSchemaVersion);
  EXPECT_EQ(pet["order"], 120);
  EXPECT_EQ(pet["orbit_stabilizer"]["factorization"], "10·3·2·2");

  const auto based = invoke_json({"aut", "--builtin", "petersen", "--base", "1,6,2"});
  EXPECT_EQ(based["orbit_stabilizer"]["orbit_sizes"], json::array({10, 3, 2}));
  EXPECT_EQ(based["orbit_stabilizer"]["final_stabilizer"], 2);
  EXPECT_EQ(based["orbit_stabilizer"]["factorization"], "10·3·2·2");

  EXPECT_EQ(invoke_json({"aut", "--builtin", "complete", "4"})["order"], 24);
  const auto p3 = invoke_json({"aut", "--builtin", "path", "3"});
  EXPECT_EQ(p3["order"], 2);
  EXPECT_EQ(p3["generators"], json::array({"(1,3)"}));

  const auto text = invoke({"aut", "--builtin", "petersen"});
  EXPECT_NE(text.out.find("order: 120"), std::string::npos);
  EXPECT_NE(text.out.find("10·3·2·2 = 120"), std::string::npos);
}

TEST(AutCommandTest, Errors) {
  EXPECT_EQ(invoke({"aut", "--builtin", "petersen", "--cap", "10"}).code, kCapExceeded);
  EXPECT_EQ(invoke({"aut", "--builtin", "nope", "3"}).code, kParseError);
  EXPECT_EQ(invoke({"aut", "--input", "/nonexistent/graph.txt"}).code, kParseError);
  EXPECT_EQ(invoke({"aut", "--builtin", "petersen", "--base", "1,11"}).code, kParseError);
  EXPECT_EQ(invoke({"aut", "--builtin", "petersen", "--group", "(1,2)"}).code, kParseError);
}

TEST(AutCommandTest, SubgroupClosure) {
  const auto j = invoke_json({"aut", "--builtin", "petersen", "--group", "(1,4,2,5,3)(6,9,7,10,8);(3,7)(4,10)(8,9)"});
  EXPECT_EQ(j["order"], 120);
  EXPECT_EQ(invoke_json({"aut", "--builtin", "petersen", "--group", "(1,4,2,5,3)(6,9,7,10,8)"})["order"], 5);
}

TEST(InputFileTest, EdgeListAndGraph6) {
  const auto edges = write_temp("p3.txt", "# path on three vertices\nn 3\n1 2\n2 3\n");
  EXPECT_EQ(invoke_json({"aut", "--input", edges.string()})["order"], 2);
  const auto g6 = write_temp("pet.g6", "IheA@GUAo\n");
  EXPECT_EQ(invoke_json({"aut", "--input", g6.string()})["order"], 120);
  const auto bad = write_temp("bad.txt", "n 3\n1 1\n");
  EXPECT_EQ(invoke({"aut", "--input", bad.string()}).code, kParseError);
  const auto bad6 = write_temp("bad.g6", "Bw~\n");
  EXPECT_EQ(invoke({"aut", "--input", bad6.string()}).code, kParseError);
}

TEST(SpectrumCommandTest, Examples) {
  auto check = [](std::vector<std::string> args, std::vector<std::pair<double, int>> expected) {
    const auto j = invoke_json(std::move(args));
    ASSERT_EQ(j["eigenvalues"].size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
      EXPECT_NEAR(j["eigenvalues"][k]["value"].get<double>(), expected[k].first, 1e-8);
      EXPECT_EQ(j["eigenvalues"][k]["multiplicity"], expected[k].second);
      EXPECT_LE(j["eigenvalues"][k]["residual"].get<double>(), 1e-9);
    }
  };
  check({"spectrum", "--builtin", "petersen"}, {{3, 1}, {1, 5}, {-2, 4}});
  check({"spectrum", "--builtin", "cycle", "4"}, {{2, 1}, {0, 2}, {-2, 1}});
  check({"spectrum", "--builtin", "complete", "3"}, {{2, 1}, {-1, 2}});
}

std::multiset<std::pair<int, int>> dm_of(const json& components) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& c : components) out.insert({c["d"].get<int>(), c["m"].get<int>()});
  return out;
}

TEST(DecomposeCommandTest, Examples) {
  const auto pet = invoke_json({"decompose", "--builtin", "petersen"});
  EXPECT_EQ(dm_of(pet["global"]["components"]), (std::multiset<std::pair<int, int>>{{1, 1}, {5, 1}, {4, 1}}));
  for (const auto& e : pet["eigenspaces"]) EXPECT_TRUE(e["irreducible"].get<bool>());
  EXPECT_TRUE(pet["certified"].get<bool>());
  EXPECT_TRUE(pet["global"]["cross_seed"]["agrees"].get<bool>());
  for (const auto& c : pet["global"]["components"]) {
    ASSERT_EQ(c["eigenvalues"].size(), 1u);
    const double lambda = c["eigenvalues"][0].get<double>();
    const int d = c["d"].get<int>();
    EXPECT_NEAR(lambda, d == 1 ? 3.0 : d == 5 ? 1.0 : -2.0, 1e-8);
  }

  const auto p3 = invoke_json({"decompose", "--builtin", "path", "3"});
  EXPECT_EQ(dm_of(p3["global"]["components"]), (std::multiset<std::pair<int, int>>{{1, 2}, {1, 1}}));

  const auto e4 = invoke_json({"decompose", "--builtin", "empty", "4"});
  EXPECT_EQ(dm_of(e4["global"]["components"]), (std::multiset<std::pair<int, int>>{{1, 1}, {3, 1}}));
}

TEST(SpanCommandTest, Examples) {
  EXPECT_EQ(invoke_json({"span", "--builtin", "petersen", "--eigen", "1"})["dim_closure"], 5);
  const auto rnd = invoke_json({"span", "--builtin", "petersen", "--random"});
  EXPECT_EQ(rnd["dim_closure"], 10);
  EXPECT_EQ(rnd["dim_formula"], 10);
  EXPECT_TRUE(rnd["agrees"].get<bool>());
  const auto ones = invoke_json({"span", "--builtin", "petersen", "--ones"});
  EXPECT_EQ(ones["dim_formula"], 1);
  EXPECT_EQ(ones["index_bound"], 1);
  EXPECT_TRUE(ones["index_bound_equal"].get<bool>());

  const auto e1 = write_temp("e1.txt", "1\n0 0\n0  # last entry\n");
  const auto j = invoke_json({"span", "--builtin", "path", "3", "--vector", e1.string()});
  EXPECT_EQ(j["dim_closure"], 2);
  EXPECT_EQ(j["vector"][0], json::array({1.0, 0.0}));

  const auto short_vec = write_temp("short.txt", "1\n0\n");
  EXPECT_EQ(invoke({"span", "--builtin", "path", "3", "--vector", short_vec.string()}).code, kParseError);
  EXPECT_EQ(invoke({"span", "--builtin", "petersen", "--eigen", "7"}).code, kParseError);
}

TEST(ExtremalCommandTest, Examples) {
  const auto pet = invoke_json({"extremal", "--builtin", "petersen"});
  EXPECT_EQ(pet["global"]["max_value"], 10);
  EXPECT_EQ(pet["global"]["asymmetric_dim"], 10);
  EXPECT_EQ(pet["global"]["symmetric_dim"], 1);

  const auto p3 = invoke_json({"extremal", "--builtin", "path", "3"});
  EXPECT_EQ(p3["global"]["max_value"], 2);
  EXPECT_EQ(p3["global"]["capped_components"].size(), 1u);

  // Under <sigma_1> the eigenspace of 1 breaks into eigenlines of sigma_1.
  const auto sub = invoke_json({"extremal", "--builtin", "petersen", "--group", "(1,4,2,5,3)(6,9,7,10,8)"});
  for (const auto& e : sub["eigenspaces"]) {
    if (std::abs(e["eigenvalue"].get<double>() - 1.0) > 1e-8) continue;
    EXPECT_EQ(e["symmetric_dim"], 1);
    EXPECT_EQ(e["asymmetric_dim"], 5);
  }
  const auto dec = invoke_json({"decompose", "--builtin", "petersen", "--group", "(1,4,2,5,3)(6,9,7,10,8)"});
  for (const auto& e : dec["eigenspaces"]) {
    if (std::abs(e["eigenvalue"].get<double>() - 1.0) > 1e-8) continue;
    EXPECT_EQ(dm_of(e["components"]), (std::multiset<std::pair<int, int>>{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}));
  }
}

TEST(VerifyCommandTest, Examples) {
  const auto s2 = invoke_json({"verify", "--builtin", "petersen", "--perm", "(3,7)(4,10)(8,9)"});
  for (const auto& [key, value] : s2["statements"].items()) EXPECT_TRUE(value.get<bool>()) << key;
  EXPECT_TRUE(s2["consistent"].get<bool>());

  const auto bad = invoke_json({"verify", "--builtin", "petersen", "--perm", "(1,2)"});
  for (const auto& [key, value] : bad["statements"].items()) EXPECT_FALSE(value.get<bool>()) << key;

  const auto p3 = invoke_json({"verify", "--builtin", "path", "3", "--perm", "(1,3)"});
  for (const auto& [key, value] : p3["statements"].items()) EXPECT_TRUE(value.get<bool>()) << key;

  EXPECT_EQ(invoke({"verify", "--builtin", "petersen", "--perm", "(1,2"}).code, kParseError);
  EXPECT_EQ(invoke({"verify", "--builtin", "petersen", "--perm", "(1,11)"}).code, kParseError);
}

TEST(DeterminismTest, IdenticalConfigGivesIdenticalJson) {
  for (const char* cmd : {"aut", "spectrum", "decompose", "span", "extremal"}) {
    const std::vector<std::string> args{cmd, "--builtin", "petersen", "--seed", "7", "--format", "json"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.code, 0) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

}  // namespace
}  // namespace eigensym::cli
