#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "opair/cli/export.hpp"
#include "opair/cli/suites.hpp"
#include "opair/diagonal/diagonal.hpp"
#include "opair/families/family.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Thrown for bad arguments that CLI11 itself cannot detect.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

opair::families::Family family_arg(const std::string& s) {
  auto f = opair::families::parse_family(s);
  if (!f) throw UsageError("unknown family '" + s + "' (expected K, J, Cube or Freehedron)");
  return *f;
}

void range_arg(opair::families::Family f, std::size_t n) {
  try {
    opair::families::check_range(f, n);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace opair;
  CLI::App app{"Faces, chains and diagonals of associahedra, multiplihedra, cubes and freehedra"};
  app.require_subcommand(1);

  std::string family_name, face, suite, format, out_path;
  std::size_t n = 0;
  std::optional<std::size_t> dim, max_n;
  bool as_json = false;

  auto* faces = app.add_subcommand("faces", "List faces in canonical encoding, sorted");
  faces->add_option("family", family_name, "K, J, Cube or Freehedron")->required();
  faces->add_option("n", n, "Family parameter")->required();
  faces->add_option("--dim", dim, "Only faces of this dimension");

  auto* fvector = app.add_subcommand("fvector", "Print face counts by dimension");
  fvector->add_option("family", family_name)->required();
  fvector->add_option("n", n)->required();

  auto* boundary = app.add_subcommand("boundary", "Print the boundary of a face");
  boundary->add_option("family", family_name)->required();
  boundary->add_option("face", face, "Face encoding")->required();

  auto* diagonal = app.add_subcommand("diagonal", "Print the diagonal of a cube or freehedron face");
  diagonal->add_option("family", family_name, "Cube or Freehedron")->required();
  diagonal->add_option("face", face)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = cli::suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-n", max_n, "Largest instance (defaults per suite)");
  verify->add_flag("--json", as_json, "Emit the report as JSON");

  auto* exp = app.add_subcommand("export", "Write the face lattice as JSON or DOT");
  exp->add_option("family", family_name)->required();
  exp->add_option("n", n)->required();
  exp->add_option("--format", format, "json or dot")->required();
  exp->add_option("--out", out_path, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*faces) {
      const auto f = family_arg(family_name);
      range_arg(f, n);
      const auto graded = families::enumerate_faces(f, n);
      std::vector<std::string> all;
      for (std::size_t k = 0; k < graded.size(); ++k)
        if (!dim || *dim == k) all.insert(all.end(), graded[k].begin(), graded[k].end());
      std::sort(all.begin(), all.end());
      for (const auto& s : all) std::cout << s << '\n';
      return kPass;
    }
    if (*fvector) {
      const auto f = family_arg(family_name);
      range_arg(f, n);
      const auto v = families::f_vector(f, n);
      for (std::size_t k = 0; k < v.size(); ++k) std::cout << (k ? " " : "") << v[k];
      std::cout << '\n';
      return kPass;
    }
    if (*boundary) {
      const auto f = family_arg(family_name);
      std::vector<std::string> terms;
      try {
        terms = families::boundary(f, face);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      for (const auto& s : terms) std::cout << s << '\n';
      return kPass;
    }
    if (*diagonal) {
      const auto f = family_arg(family_name);
      std::vector<std::string> terms;
      try {
        terms = diag::diagonal(f, face);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      for (const auto& s : terms) std::cout << s << '\n';
      return kPass;
    }
    if (*verify) {
      std::vector<std::string> run = suite == "all" ? cli::suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      nlohmann::json reports = nlohmann::json::array();
      for (const auto& s : run) {
        const auto report = cli::run_suite(s, max_n.value_or(cli::default_max_n(s)));
        ok = ok && report.pass();
        if (as_json) reports.push_back(report.to_json());
        else std::cout << report.to_text() << std::flush;
      }
      if (as_json) std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
      return ok ? kPass : kFail;
    }
    if (*exp) {
      const auto f = family_arg(family_name);
      if (format != "json" && format != "dot") throw UsageError("unknown format '" + format + "' (expected json or dot)");
      range_arg(f, n);
      const std::string text = format == "json" ? cli::export_json(f, n).dump(2) + "\n" : cli::export_dot(f, n);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os || !(os << text)) {
          std::cerr << "error: cannot write " << out_path << '\n';
          return kFail;
        }
      }
      return kPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
