// Command-line front end: reads a problem file, runs the requested analyses,
// prints the JSON report on stdout. Exit codes: 0 success, 2 parse error,
// 3 validation error, 4 internal invariant violation, 5 unsupported feature.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "indrep/problem.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;
constexpr int kExitUnsupported = 5;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition data for representations induced from "
               "characters of a maximal split torus"};
  std::string input_path;
  bool verbose = false;
  bool oracle = false;
  int max_rank = -1;
  app.add_option("--input", input_path, "Problem file (TOML syntax)")->required();
  app.add_flag("--verbose", verbose, "Print a human-readable summary on stderr");
  app.add_flag("--oracle", oracle,
               "Also recompute the decomposition by brute force and compare");
  app.add_option("--max-rank", max_rank, "Override the enumeration bound")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::ifstream file(input_path);
  if (!file) {
    std::cerr << "error: cannot open '" << input_path << "'\n";
    return kExitParse;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();

  try {
    const indrep::ProblemSpec spec = indrep::parse_problem(buffer.str());
    indrep::RunOptions options;
    options.oracle = oracle;
    if (max_rank > 0) options.max_rank_override = max_rank;
    const nlohmann::ordered_json report = indrep::run(spec, options);
    std::cout << report.dump(2) << "\n";
    if (verbose) std::cerr << indrep::render_summary(report);
    return 0;
  } catch (const indrep::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const indrep::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const indrep::InconsistentInput& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const indrep::NotSelfDual& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const indrep::UnsupportedFamily& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const indrep::UnsupportedRankOne& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const indrep::UnsupportedRank& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const indrep::UnsupportedCocycle& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const indrep::EnumerationBoundExceeded& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const indrep::RamifiedComponent& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const indrep::Error& e) {
    // DecompositionViolation, SubRootSystemViolation, table errors, oracle
    // mismatches: forensic dump, nothing partial on stdout.
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
