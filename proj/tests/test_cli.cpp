#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "opair/cli/export.hpp"
#include "opair/cli/report.hpp"
#include "opair/families/family.hpp"

using namespace opair;
using families::Family;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(OPAIR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("opair_test_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, FVectors) {
  EXPECT_EQ(run("fvector K 4").out, "5 5 1\n");
  EXPECT_EQ(run("fvector Freehedron 2").out, "5 5 1\n");
  EXPECT_EQ(run("fvector J 3").code, 0);
}

TEST(Cli, FacesAreSorted) {
  EXPECT_EQ(run("faces Cube 1").out, "a\nb\nc\n");
  EXPECT_EQ(run("faces K 4 --dim 2").out, "(****)\n");
  const auto all = run("faces Freehedron 3").out;
  EXPECT_EQ(std::count(all.begin(), all.end(), '\n'), 39);
}

TEST(Cli, BoundaryAndDiagonal) {
  const auto b = run("boundary Cube bb");
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(std::count(b.out.begin(), b.out.end(), '\n'), 4);
  const auto d = run("diagonal Freehedron '0,1,2]|'");
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(std::count(d.out.begin(), d.out.end(), '\n'), 6);
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("fvector L 3").code, 2);
  EXPECT_EQ(run("fvector J 40").code, 2);
  EXPECT_EQ(run("verify nonsense").code, 2);
  EXPECT_EQ(run("export Cube 2 --format svg").code, 2);
  EXPECT_EQ(run("boundary K '(**'").code, 2);
  EXPECT_EQ(run("diagonal K '(**)'").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, VerifySuitesPass) {
  EXPECT_EQ(run("verify iso --max-n 6").code, 0);
  EXPECT_EQ(run("verify d2 --max-n 6").code, 0);
  EXPECT_EQ(run("verify diagram --max-n 5").code, 0);
}

TEST(Cli, VerifyJsonReport) {
  const auto r = run("verify homotopy --max-n 2 --json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("suite"), "homotopy");
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("instances").size(), 2u);
  for (const auto& i : j.at("instances")) {
    EXPECT_TRUE(i.contains("params"));
    EXPECT_TRUE(i.contains("seconds"));
    EXPECT_TRUE(i.at("counterexamples").empty());
  }
}

TEST(Cli, ExportJsonRoundTrips) {
  const auto path = temp_file("f2.json");
  ASSERT_EQ(run("export Freehedron 2 --format json --out " + path.string()).code, 0);
  const auto j = nlohmann::json::parse(slurp(path));
  std::filesystem::remove(path);
  EXPECT_EQ(j.at("family"), "Freehedron");
  EXPECT_EQ(j.at("ring"), "GF(2)");
  EXPECT_EQ(j.at("faces").size(), 11u);
  EXPECT_EQ(j.at("realization").size(), 11u);
  EXPECT_EQ(cli::import_json(j), families::complex(Family::Freehedron, 2));
}

TEST(Cli, ExportDotCountsTheSquareLattice) {
  const auto path = temp_file("cube2.dot");
  ASSERT_EQ(run("export Cube 2 --format dot --out " + path.string()).code, 0);
  const auto dot = slurp(path);
  std::filesystem::remove(path);
  const std::regex node(R"(^\s*f\d+ \[label=)"), edge(R"(^\s*f\d+ -> f\d+;)");
  int nodes = 0, edges = 0;
  std::istringstream is(dot);
  for (std::string line; std::getline(is, line);) {
    nodes += std::regex_search(line, node);
    edges += std::regex_search(line, edge);
  }
  EXPECT_EQ(nodes, 9);
  EXPECT_EQ(edges, 12);
}

TEST(Cli, ExportToUnwritablePathFails) {
  EXPECT_EQ(run("export Cube 1 --format json --out /nonexistent-dir/x.json").code, 1);
}

TEST(Export, RoundTripForEveryFamily) {
  for (auto [f, n] : std::vector<std::pair<Family, std::size_t>>{
           {Family::K, 5}, {Family::J, 4}, {Family::Cube, 3}, {Family::Freehedron, 4}}) {
    const auto j = cli::export_json(f, n);
    EXPECT_EQ(cli::import_json(nlohmann::json::parse(j.dump())), families::complex(f, n)) << families::to_string(f);
    EXPECT_EQ(j.dump(), cli::export_json(f, n).dump());
  }
}

TEST(Export, FacetsOfAFaceAreTheFacetsContainingIt) {
  const auto j = cli::export_json(Family::Cube, 2);
  for (const auto& face : j.at("faces")) {
    const auto dim = face.at("dim").get<std::size_t>();
    // In the square a vertex lies on 2 edges, an edge on itself, the top cell on none.
    EXPECT_EQ(face.at("facets").size(), dim == 0 ? 2u : dim == 1 ? 1u : 0u) << face.at("encoding");
  }
}

TEST(Report, FailureCarriesACounterexample) {
  cli::VerificationReport rep{"demo", {}};
  rep.run("ok", {}, [](cli::InstanceResult&) {});
  rep.run("bad", {{"n", "3"}}, [](cli::InstanceResult& r) { r.pass = false; });
  rep.run("throws", {}, [](cli::InstanceResult&) { throw std::runtime_error("boom"); });
  EXPECT_FALSE(rep.pass());
  EXPECT_EQ(rep.instances[1].counterexamples, (std::vector<std::string>{"bad"}));
  EXPECT_FALSE(rep.instances[2].pass);
  const auto j = rep.to_json();
  EXPECT_FALSE(j.at("pass").get<bool>());
  EXPECT_NE(rep.to_text().find("FAIL demo bad"), std::string::npos);
}
