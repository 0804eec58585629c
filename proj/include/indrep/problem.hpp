#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "indrep/commalg.hpp"
#include "indrep/elliptic.hpp"
#include "indrep/lfactor.hpp"
#include "indrep/maximal.hpp"
#include "indrep/oracle.hpp"

namespace indrep {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Analysis { RGROUP, ELLIPTIC, COMMALG, LFACTOR, COMPLEMENTARY, SIEGEL };

std::string analysis_name(Analysis a);
Analysis analysis_from_name(const std::string& name);  // ValidationError

/// A fully validated problem file: the ambient group, the character, the
/// requested analyses in pipeline order, and the per-analysis sub-records.
struct ProblemSpec {
  CartanSpec group;
  CharGroup char_group;
  TorusCharacter character;
  std::vector<Analysis> analyses;  // canonical pipeline order, no duplicates
  int max_rank = kDefaultEnumerationBound;
  std::optional<std::vector<SatakeValue>> lfactor;
  std::optional<CompSeriesInput> complementary;
  std::optional<SiegelInput> siegel;

  void validate() const;  // cross-field rules; throws ValidationError

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Parses and validates a problem document (ParseError / ValidationError).
ProblemSpec parse_problem(const std::string& text);

/// Inverse of parse_problem on valid specs: parse(serialize(s)) == s.
std::string serialize_problem(const ProblemSpec& spec);

struct RunOptions {
  bool oracle = false;
  std::optional<int> max_rank_override;
};

/// Runs the requested analyses in the fixed order rgroup, elliptic, commalg,
/// lfactor, complementary, siegel, and assembles the report document. Any
/// internal invariant failure propagates as an exception; nothing partial is
/// returned.
nlohmann::ordered_json run(const ProblemSpec& spec, const RunOptions& options = {});

/// One-paragraph-per-analysis human summary of a report.
std::string render_summary(const nlohmann::ordered_json& report);

}  // namespace indrep
