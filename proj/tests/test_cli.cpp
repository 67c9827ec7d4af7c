#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pauli/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pauli::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::filesystem::path(PAULI_GOLDEN_DIR) / name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string drop_lines_starting_with(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line, kept;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) != 0) kept += line + "\n";
  return kept;
}

}  // namespace

TEST(Cli, Multiply) {
  const auto r = invoke({"mul", "XYZ", "ZXY"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "XYZ * ZXY = iYZX\n");
}

TEST(Cli, MultiplyDump) {
  const auto r = invoke({"mul", "X", "Y", "--dump"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("mul_x_y_dump.txt"));
}

TEST(Cli, Classify) {
  EXPECT_EQ(invoke({"classify", "XXX", "YYY"}).out, "anticommute; [A,B] = -2i·ZZZ\n");
  EXPECT_EQ(invoke({"classify", "XX", "YY"}).out, "commute; {A,B} = -2·ZZ\n");
}

TEST(Classify, CriterionWarning) {
  for (const char* flag : {"--coincidence-criterion", "--paper-criterion"}) {
    const auto r = invoke({"classify", "XX", "IX", flag});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("coincidence criterion: anticommute"), std::string::npos);
    EXPECT_NE(r.out.find("warning:"), std::string::npos);
  }
  const auto agree = invoke({"classify", "XYZ", "ZXY", "--coincidence-criterion"});
  EXPECT_EQ(agree.out.find("warning:"), std::string::npos);
}

TEST(Cli, GroupCount) {
  const auto r = invoke({"group", "--n", "1", "--count"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "16\n");
  EXPECT_EQ(invoke({"group", "--n", "2", "--count"}).out, "64\n");
  EXPECT_EQ(invoke({"group", "--n", "1"}).out, golden("group_n1.txt"));
}

TEST(Cli, GroupClosure) {
  const auto r = invoke({"group", "--n", "2", "--closure"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "order 64, 4096 products checked, closed, identity and inverses present\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"group", "--n", "3"}).code, 2);
  EXPECT_EQ(invoke({"ham", "--n", "13"}).code, 2);
  EXPECT_EQ(invoke({"ham", "--model", "K", "--n", "4"}).code, 2);
  EXPECT_EQ(invoke({"mul", "XX", "Y"}).code, 1);
  EXPECT_EQ(invoke({"mul", "XQ", "XX"}).code, 1);
  EXPECT_EQ(invoke({"ham", "--n", "3", "--symmetry", "XII"}).code, 1);
  EXPECT_EQ(invoke({"bose", "--cutoff", "2", "--sector", "3"}).code, 1);
  EXPECT_EQ(invoke({"fermi", "--modes", "9"}).code, 2);
  EXPECT_EQ(invoke({}).code, 1);
}

TEST(Cli, UnknownFlagPrintsUsage) {
  const auto r = invoke({"mul", "XYZ", "ZXY", "--bogus"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--bogus"), std::string::npos);
  EXPECT_NE(r.err.find("Usage:"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Subcommands:"), std::string::npos);
}

TEST(Cli, ParseErrorReportsPosition) {
  const auto r = invoke({"mul", "XQ", "XX"});
  EXPECT_NE(r.err.find("position 2"), std::string::npos);
}

TEST(Cli, HamSectorsGolden) {
  const auto r = invoke({"ham", "--n", "3", "--bc", "open"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(drop_lines_starting_with(r.out, "residuals"), golden("ham_xxz3_open.txt"));
}

TEST(Cli, HamVerifySixSiteRing) {
  const auto r = invoke({"ham", "--n", "6", "--symmetry", "ZZZZZZ", "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify: sector union matches full spectrum"), std::string::npos);
}

TEST(Cli, JsonMultiply) {
  const auto r = invoke({"--json", "mul", "XYZ", "ZXY"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("product"), "iYZX");
  EXPECT_EQ(j.at("product_json").at("phase_q"), 1);
}

TEST(Cli, JsonClassifyGolden) {
  const auto r = invoke({"--json", "classify", "XXX", "YYY"});
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::parse(golden("classify_xxx_yyy.json")));
}

TEST(Cli, JsonHam) {
  const auto r = invoke({"--json", "ham", "--model", "H", "--verify"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("model"), "H");
  EXPECT_EQ(j.at("symmetry"), "ZZZ");
  EXPECT_EQ(j.at("symmetry_kind"), "termwise");
  ASSERT_EQ(j.at("sectors").size(), 2u);
  EXPECT_EQ(j.at("sectors")[0].at("label"), "+1");
  EXPECT_EQ(j.at("sectors")[1].at("label"), "-1");
  EXPECT_EQ(j.at("sectors")[0].at("eigenvalues").size(), 4u);
  EXPECT_TRUE(j.at("verified").get<bool>());
  EXPECT_LT(j.at("residuals").at("spectrum_match").get<double>(), 1e-9);
}

TEST(Cli, JsonRelationsSchema) {
  const auto f = nlohmann::json::parse(invoke({"--json", "fermi", "--modes", "2"}).out);
  EXPECT_TRUE(f.at("passed").get<bool>());
  for (const auto& rel : f.at("relations")) {
    EXPECT_TRUE(rel.contains("relation"));
    EXPECT_LT(rel.at("residual").get<double>(), 1e-13);
    EXPECT_EQ(rel.at("scope"), "full");
  }
  const auto b = nlohmann::json::parse(invoke({"--json", "bose", "--cutoff", "3", "--sector", "2"}).out);
  EXPECT_EQ(b.at("sector_dim"), 3);
  for (const auto& rel : b.at("relations")) EXPECT_EQ(rel.at("scope"), "sector:2");
}

TEST(Cli, ExpCheckRandomIsSeeded) {
  const auto a = invoke({"--seed", "7", "exp-check", "--random", "20", "--max-n", "4"});
  const auto b = invoke({"--seed", "7", "exp-check", "--random", "20", "--max-n", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("pass"), std::string::npos);
}

TEST(Cli, MubTable) {
  const auto path = std::filesystem::temp_directory_path() / "pauli_cli_mub_table.csv";
  const auto r = invoke({"mub", "--family", "2", "--table", path.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "a,b,j,k,overlap");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 3 * 16);
  std::filesystem::remove(path);
}
