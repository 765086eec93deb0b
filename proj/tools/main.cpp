#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropmat/catalog.hpp"
#include "tropmat/io.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/morphisms.hpp"
#include "tropmat/multivector.hpp"
#include "tropmat/suites.hpp"
#include "tropmat/transversal.hpp"
#include "tropmat/tropical_space.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kBug = 3;

int cmd_info(const std::string& path) {
  const tropmat::Matroid m = tropmat::parse_matroid(tropmat::read_file(path));
  std::cout << "n: " << m.n() << "\n";
  std::cout << "rank: " << m.rank() << "\n";
  std::cout << "bases: " << m.bases().size() << "\n";
  std::cout << "circuits: " << tropmat::circuits(m).size() << "\n";
  std::cout << "cocircuits: " << tropmat::cocircuits(m).size() << "\n";
  std::cout << "flats: " << tropmat::flats(m).size() << "\n";
  std::cout << "connected: " << (tropmat::is_connected(m) ? "yes" : "no") << "\n";
  try {
    std::cout << "transversal: " << (tropmat::is_transversal(m) ? "yes" : "no")
              << "\n";
    std::cout << "fundamental: "
              << (tropmat::is_fundamental_transversal(m) ? "yes" : "no") << "\n";
  } catch (const tropmat::SizeBudgetExceededError&) {
    std::cout << "transversal: unknown (beyond search budget)\n";
  }
  return kPass;
}

int cmd_verify(const std::string& suite, int nmax, long long sample,
               unsigned seed, bool as_json) {
  const tropmat::SuiteReport report =
      tropmat::run_suite(suite, nmax, sample, seed);
  if (as_json) {
    std::cout << tropmat::suite_report_to_json(report) << "\n";
  } else {
    std::cout << "suite: " << report.suite << "\n";
    std::cout << "tested: " << report.tested << "\n";
    std::cout << "failures: " << report.failures.size() << "\n";
    for (const std::string& f : report.failures) std::cout << "  " << f << "\n";
    std::cout << "ms: " << report.ms << "\n";
    std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  if (report.passed()) return kPass;
  for (const std::string& f : report.failures)
    if (f.rfind("[bug]", 0) == 0) return kBug;
  return kFalse;
}

int cmd_lattice(const std::string& path, const std::string& format) {
  const tropmat::Matroid m = tropmat::parse_matroid(tropmat::read_file(path));
  if (format == "dot")
    std::cout << tropmat::lattice_to_dot(m);
  else
    std::cout << tropmat::lattice_to_json(m) << "\n";
  return kPass;
}

int cmd_presentation(const std::string& mode, const std::string& path) {
  const tropmat::BMatrix a = tropmat::parse_bmatrix(tropmat::read_file(path));
  if (mode == "max") {
    std::cout << tropmat::bmatrix_rows_string(tropmat::maximal_presentation(a))
              << "\n";
    return kPass;
  }
  if (mode == "min") {
    for (const tropmat::BMatrix& b : tropmat::minimal_presentations(a))
      std::cout << tropmat::bmatrix_rows_string(b) << "\n";
    return kPass;
  }
  const tropmat::Multivector v = tropmat::maximal_minors(a);
  std::cout << tropmat::fiber_report_to_json(
                   tropmat::stiefel_fiber(v, a.rows, a.cols))
            << "\n";
  return kPass;
}

int cmd_strongmap(const std::string& map_path, const std::string& m_path,
                  const std::string& n_path) {
  const tropmat::Matroid m = tropmat::parse_matroid(tropmat::read_file(m_path));
  const tropmat::Matroid n = tropmat::parse_matroid(tropmat::read_file(n_path));
  const std::string map_text = tropmat::read_file(map_path);
  bool verdict = false;
  if (tropmat::looks_multivalued(map_text))
    verdict = tropmat::is_multivalued_strong(tropmat::parse_multimap(map_text), m, n);
  else
    verdict = tropmat::is_strong_map(tropmat::parse_pointed_map(map_text), m, n);
  std::cout << (verdict ? "strong: yes" : "strong: no") << "\n";
  return verdict ? kPass : kFalse;
}

int cmd_stablesum(const std::string& m_path, const std::string& n_path) {
  const tropmat::Matroid m = tropmat::parse_matroid(tropmat::read_file(m_path));
  const tropmat::Matroid n = tropmat::parse_matroid(tropmat::read_file(n_path));
  try {
    const tropmat::TropicalLinearSpace l = tropmat::stable_sum(m, n);
    std::cout << tropmat::matroid_to_json(l.matroid()) << "\n";
    return kPass;
  } catch (const tropmat::NotSufficientlyMoveableError& e) {
    std::cout << "not sufficiently moveable: " << e.what() << "\n";
    return kFalse;
  }
}

int cmd_catalog(int n, const std::string& out) {
  const std::vector<tropmat::Matroid>& slice =
      n <= 6 ? tropmat::catalog_slice(n) : tropmat::curated_matroids(n);
  nlohmann::json j;
  j["n"] = n;
  j["exhaustive"] = n <= 6;
  j["count"] = slice.size();
  nlohmann::json items = nlohmann::json::array();
  for (const tropmat::Matroid& m : slice)
    items.push_back(nlohmann::json::parse(tropmat::matroid_to_json(m)));
  j["matroids"] = items;
  if (out.empty())
    std::cout << j.dump() << "\n";
  else
    tropmat::write_file(out, j.dump());
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean-semiring matroid algebra toolkit"};
  app.require_subcommand(1);

  std::string matroid_file, matrix_file, map_file, m_file, n_file;
  std::string suite, format = "dot", mode, out_path;
  int nmax = -1, catalog_n = 4;
  long long sample = 0;
  unsigned seed = 1;
  bool as_json = false;

  auto* info = app.add_subcommand("info", "Summarize a matroid file");
  info->add_option("matroid-file", matroid_file)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--nmax", nmax);
  verify->add_option("--sample", sample);
  verify->add_option("--seed", seed);
  verify->add_flag("--json", as_json);

  auto* lattice = app.add_subcommand("lattice", "Export the lattice of flats");
  lattice->add_option("matroid-file", matroid_file)->required();
  lattice->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  auto* presentation =
      app.add_subcommand("presentation", "Analyze a 0/1 presentation matrix");
  presentation->add_option("mode", mode)
      ->required()
      ->check(CLI::IsMember({"max", "min", "fiber"}));
  presentation->add_option("matrix-file", matrix_file)->required();

  auto* strongmap = app.add_subcommand("strongmap", "Test a map for strength");
  strongmap->add_option("map-file", map_file)->required();
  strongmap->add_option("M-file", m_file)->required();
  strongmap->add_option("N-file", n_file)->required();

  auto* stablesum = app.add_subcommand("stablesum", "Stable sum of two matroids");
  stablesum->add_option("M-file", m_file)->required();
  stablesum->add_option("N-file", n_file)->required();

  auto* catalog = app.add_subcommand("catalog", "Emit a catalog slice");
  catalog->add_option("--n", catalog_n)->required();
  catalog->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInputError;
  }

  try {
    if (info->parsed()) return cmd_info(matroid_file);
    if (verify->parsed()) return cmd_verify(suite, nmax, sample, seed, as_json);
    if (lattice->parsed()) return cmd_lattice(matroid_file, format);
    if (presentation->parsed()) return cmd_presentation(mode, matrix_file);
    if (strongmap->parsed()) return cmd_strongmap(map_file, m_file, n_file);
    if (stablesum->parsed()) return cmd_stablesum(m_file, n_file);
    if (catalog->parsed()) return cmd_catalog(catalog_n, out_path);
  } catch (const tropmat::TheoremViolationError& e) {
    std::cerr << "theorem violation (bug): " << e.what() << "\n";
    return kBug;
  } catch (const tropmat::EquivalenceViolationError& e) {
    std::cerr << "equivalence violation (bug): " << e.what() << "\n";
    return kBug;
  } catch (const tropmat::WitnessSearchExhaustedError& e) {
    std::cerr << "witness search exhausted (bug): " << e.what() << "\n";
    return kBug;
  } catch (const tropmat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
