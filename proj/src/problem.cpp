#include "indrep/problem.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "indrep/toml.hpp"

namespace indrep {

namespace {

using toml::Table;
using toml::Value;
using nlohmann::ordered_json;

constexpr Analysis kPipelineOrder[] = {Analysis::RGROUP,      Analysis::ELLIPTIC,
                                       Analysis::COMMALG,     Analysis::LFACTOR,
                                       Analysis::COMPLEMENTARY, Analysis::SIEGEL};

[[noreturn]] void reject(int line, const std::string& what) {
  if (line <= 0) throw ValidationError(what);
  throw ValidationError("line " + std::to_string(line) + ": " + what);
}

// Checked view over a parsed table: every key must be consumed.
class TableReader {
 public:
  TableReader(const Table& table, std::string name)
      : table_(table), name_(std::move(name)) {}

  ~TableReader() = default;

  const Value& get(const std::string& key, Value::Kind kind) {
    auto it = table_.values.find(key);
    if (it == table_.values.end())
      reject(table_.line, "section [" + name_ + "] is missing key '" + key + "'");
    consumed_.insert(key);
    const Value& v = it->second;
    if (v.kind != kind) reject(v.line, "key '" + key + "' has the wrong type");
    return v;
  }

  long long integer(const std::string& key) {
    return get(key, Value::Kind::Integer).integer;
  }
  bool boolean(const std::string& key) {
    return get(key, Value::Kind::Boolean).boolean;
  }
  std::string text(const std::string& key) {
    return get(key, Value::Kind::String).text;
  }
  std::vector<long long> integer_list(const std::string& key) {
    const Value& v = get(key, Value::Kind::Array);
    std::vector<long long> out;
    for (const Value& e : v.array) {
      if (e.kind != Value::Kind::Integer)
        reject(e.line, "array '" + key + "' must hold integers");
      out.push_back(e.integer);
    }
    return out;
  }
  std::vector<std::string> string_list(const std::string& key) {
    const Value& v = get(key, Value::Kind::Array);
    std::vector<std::string> out;
    for (const Value& e : v.array) {
      if (e.kind != Value::Kind::String)
        reject(e.line, "array '" + key + "' must hold strings");
      out.push_back(e.text);
    }
    return out;
  }
  std::optional<long long> optional_integer(const std::string& key) {
    if (!table_.values.contains(key)) return std::nullopt;
    return integer(key);
  }

  void finish() {
    for (const auto& [key, value] : table_.values) {
      if (!consumed_.contains(key))
        reject(value.line, "unknown key '" + key + "' in section [" + name_ + "]");
    }
    if (!table_.subtables.empty())
      reject(table_.subtables.begin()->second.line,
             "unexpected subsection under [" + name_ + "]");
    if (!table_.table_arrays.empty())
      reject(table_.table_arrays.begin()->second.front().line,
             "unexpected table array under [" + name_ + "]");
  }

 private:
  const Table& table_;
  std::string name_;
  std::set<std::string> consumed_;
};

const Table& require_table(const Table& parent, const std::string& name, int line) {
  auto it = parent.subtables.find(name);
  if (it == parent.subtables.end())
    reject(line, "missing required section [" + name + "]");
  return it->second;
}

SatakeValue parse_satake(const std::string& text, int line) {
  if (text == "ramified") return SatakeValue::ramified_value();
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    reject(line, "satake entries are \"ramified\" or \"a/m\", got \"" + text + "\"");
  try {
    const long long a = std::stoll(text.substr(0, slash));
    const long long m = std::stoll(text.substr(slash + 1));
    if (m < 1) reject(line, "satake order must be >= 1");
    return SatakeValue::unramified(a, m);
  } catch (const std::invalid_argument&) {
    reject(line, "malformed satake entry \"" + text + "\"");
  } catch (const std::out_of_range&) {
    reject(line, "satake entry out of range \"" + text + "\"");
  }
}

std::string satake_to_string(const SatakeValue& v) {
  if (v.ramified) return "ramified";
  return std::to_string(v.a) + "/" + std::to_string(v.m);
}

VanishingIndex vanishing_from_name(const std::string& s, int line) {
  if (s == "none") return VanishingIndex::NONE;
  if (s == "i1") return VanishingIndex::I1;
  if (s == "i2") return VanishingIndex::I2;
  reject(line, "vanishing_index must be \"none\", \"i1\", or \"i2\"");
}

std::string vanishing_name(VanishingIndex v) {
  switch (v) {
    case VanishingIndex::NONE: return "none";
    case VanishingIndex::I1: return "i1";
    case VanishingIndex::I2: return "i2";
  }
  return "?";
}

SiegelFamily siegel_family_from_name(const std::string& s, int line) {
  if (s == "Sp2n") return SiegelFamily::Sp2n;
  if (s == "SO2n") return SiegelFamily::SO2n;
  if (s == "SO2n+1") return SiegelFamily::SO2nPlus1;
  reject(line, "siegel family must be \"Sp2n\", \"SO2n\", or \"SO2n+1\"");
}

std::string siegel_family_name(SiegelFamily f) {
  switch (f) {
    case SiegelFamily::Sp2n: return "Sp2n";
    case SiegelFamily::SO2n: return "SO2n";
    case SiegelFamily::SO2nPlus1: return "SO2n+1";
  }
  return "?";
}

SiegelOrigin origin_from_name(const std::string& s, int line) {
  if (s == "so_n_plus_1") return SiegelOrigin::SO_N_PLUS_1;
  if (s == "so_n_star") return SiegelOrigin::SO_N_STAR;
  if (s == "sp_n_minus_1") return SiegelOrigin::SP_N_MINUS_1;
  if (s == "none") return SiegelOrigin::NONE;
  reject(line, "origin must be \"so_n_plus_1\", \"so_n_star\", "
               "\"sp_n_minus_1\", or \"none\"");
}

std::string origin_name(SiegelOrigin o) {
  switch (o) {
    case SiegelOrigin::SO_N_PLUS_1: return "so_n_plus_1";
    case SiegelOrigin::SO_N_STAR: return "so_n_star";
    case SiegelOrigin::SP_N_MINUS_1: return "sp_n_minus_1";
    case SiegelOrigin::NONE: return "none";
  }
  return "?";
}

std::string adjoint_piece_name(AdjointPiece p) {
  switch (p) {
    case AdjointPiece::STANDARD: return "standard";
    case AdjointPiece::EXTERIOR_SQUARE: return "exterior_square";
    case AdjointPiece::SYMMETRIC_SQUARE: return "symmetric_square";
  }
  return "?";
}

}  // namespace

std::string analysis_name(Analysis a) {
  switch (a) {
    case Analysis::RGROUP: return "rgroup";
    case Analysis::ELLIPTIC: return "elliptic";
    case Analysis::COMMALG: return "commalg";
    case Analysis::LFACTOR: return "lfactor";
    case Analysis::COMPLEMENTARY: return "complementary";
    case Analysis::SIEGEL: return "siegel";
  }
  return "?";
}

Analysis analysis_from_name(const std::string& name) {
  for (Analysis a : kPipelineOrder) {
    if (analysis_name(a) == name) return a;
  }
  throw ValidationError("unknown analysis '" + name + "'");
}

void ProblemSpec::validate() const {
  group.validate();
  char_group.validate();
  character.validate();
  if (character.group != char_group)
    throw ValidationError("character values must live in the declared group");
  if (character.dim() != group.ambient_dim())
    throw ValidationError(
        "expected " + std::to_string(group.ambient_dim()) +
        " character values, got " + std::to_string(character.dim()));
  if (max_rank < 1) throw ValidationError("max_rank must be >= 1");

  std::set<Analysis> seen(analyses.begin(), analyses.end());
  if (seen.size() != analyses.size())
    throw ValidationError("duplicate analyses requested");
  std::vector<Analysis> canonical;
  for (Analysis a : kPipelineOrder) {
    if (seen.contains(a)) canonical.push_back(a);
  }
  if (canonical != analyses)
    throw ValidationError("analyses must be listed in pipeline order");
  if (analyses.empty()) throw ValidationError("no analyses requested");

  if (seen.contains(Analysis::LFACTOR) != lfactor.has_value())
    throw ValidationError(seen.contains(Analysis::LFACTOR)
                              ? "lfactor analysis requested without an "
                                "[lfactor] section"
                              : "[lfactor] section present but the analysis "
                                "was not requested");
  if (seen.contains(Analysis::COMPLEMENTARY) != complementary.has_value())
    throw ValidationError(seen.contains(Analysis::COMPLEMENTARY)
                              ? "complementary analysis requested without a "
                                "[complementary] section"
                              : "[complementary] section present but the "
                                "analysis was not requested");
  if (seen.contains(Analysis::SIEGEL) != siegel.has_value())
    throw ValidationError(seen.contains(Analysis::SIEGEL)
                              ? "siegel analysis requested without a [siegel] "
                                "section"
                              : "[siegel] section present but the analysis "
                                "was not requested");
  if (complementary) complementary->validate();
  if (siegel) siegel->validate();

  const bool needs_rgroup = seen.contains(Analysis::RGROUP) ||
                            seen.contains(Analysis::ELLIPTIC) ||
                            seen.contains(Analysis::COMMALG);
  if (needs_rgroup && group.family == Family::B)
    throw ValidationError(
        "family B is not supported by the decomposition pipeline");
}

ProblemSpec parse_problem(const std::string& text) {
  const Table root = toml::parse(text);
  ProblemSpec spec;

  {
    TableReader group(require_table(root, "group", 0), "group");
    const std::string family = group.text("family");
    if (family.size() != 1)
      throw ValidationError("family must be one letter of A/B/C/D");
    spec.group.family = family_from_letter(family[0]);
    spec.group.rank = static_cast<int>(group.integer("rank"));
    group.finish();
  }

  const Table& character = require_table(root, "character", 0);
  {
    TableReader char_group(require_table(character, "group", character.line),
                           "character.group");
    spec.char_group.free_rank = static_cast<int>(char_group.integer("free_rank"));
    spec.char_group.torsion_orders = char_group.integer_list("torsion_orders");
    char_group.finish();
  }
  {
    auto it = character.table_arrays.find("values");
    if (it == character.table_arrays.end())
      reject(character.line, "missing [[character.values]] entries");
    spec.character.group = spec.char_group;
    for (const Table& entry : it->second) {
      TableReader value(entry, "character.values");
      CharValue v;
      v.free = value.integer_list("free");
      v.torsion = value.integer_list("torsion");
      value.finish();
      if (static_cast<int>(v.free.size()) != spec.char_group.free_rank ||
          v.torsion.size() != spec.char_group.torsion_orders.size())
        reject(entry.line, "character value shape does not match the group");
      spec.character.values.push_back(reduced(spec.char_group, std::move(v)));
    }
    for (const auto& [key, sub] : character.subtables) {
      if (key != "group") reject(sub.line, "unknown section [character." + key + "]");
    }
    for (const auto& [key, arr] : character.table_arrays) {
      if (key != "values")
        reject(arr.front().line, "unknown table array [[character." + key + "]]");
    }
    for (const auto& [key, value] : character.values)
      reject(value.line, "unknown key '" + key + "' in section [character]");
  }

  {
    TableReader options(require_table(root, "options", 0), "options");
    for (const std::string& name : options.string_list("analyses"))
      spec.analyses.push_back(analysis_from_name(name));
    if (const auto rank = options.optional_integer("max_rank"))
      spec.max_rank = static_cast<int>(*rank);
    options.finish();
  }
  std::sort(spec.analyses.begin(), spec.analyses.end());
  spec.analyses.erase(std::unique(spec.analyses.begin(), spec.analyses.end()),
                      spec.analyses.end());

  if (auto it = root.subtables.find("lfactor"); it != root.subtables.end()) {
    TableReader lfactor(it->second, "lfactor");
    std::vector<SatakeValue> values;
    const Value& satake = lfactor.get("satake", Value::Kind::Array);
    for (const Value& e : satake.array) {
      if (e.kind != Value::Kind::String)
        reject(e.line, "satake entries must be strings");
      values.push_back(parse_satake(e.text, e.line));
    }
    lfactor.finish();
    spec.lfactor = std::move(values);
  }

  if (auto it = root.subtables.find("complementary"); it != root.subtables.end()) {
    TableReader comp(it->second, "complementary");
    CompSeriesInput input;
    input.weyl_nontrivial = comp.boolean("weyl_nontrivial");
    input.self_conjugate = comp.boolean("self_conjugate");
    input.vanishing_index = vanishing_from_name(
        comp.text("vanishing_index"), it->second.line);
    input.ind_reducible_at_zero = comp.boolean("ind_reducible_at_zero");
    comp.finish();
    spec.complementary = input;
  }

  if (auto it = root.subtables.find("siegel"); it != root.subtables.end()) {
    TableReader siegel(it->second, "siegel");
    SiegelInput input;
    input.family = siegel_family_from_name(siegel.text("family"), it->second.line);
    input.n = static_cast<int>(siegel.integer("n"));
    input.self_dual = siegel.boolean("self_dual");
    input.origin = origin_from_name(siegel.text("origin"), it->second.line);
    siegel.finish();
    spec.siegel = input;
  }

  for (const auto& [key, sub] : root.subtables) {
    static const std::set<std::string> known{"group", "character", "options",
                                             "lfactor", "complementary", "siegel"};
    if (!known.contains(key)) reject(sub.line, "unknown section [" + key + "]");
  }
  if (!root.values.empty())
    reject(root.values.begin()->second.line,
           "top-level keys are not allowed, use a section");
  if (!root.table_arrays.empty())
    reject(root.table_arrays.begin()->second.front().line,
           "unknown top-level table array");

  try {
    spec.validate();
  } catch (const InconsistentInput& e) {
    throw ValidationError(e.what());
  }
  return spec;
}

std::string serialize_problem(const ProblemSpec& spec) {
  std::ostringstream os;
  os << "[group]\n";
  os << "family = \"" << family_letter(spec.group.family) << "\"\n";
  os << "rank = " << spec.group.rank << "\n\n";

  os << "[character.group]\n";
  os << "free_rank = " << spec.char_group.free_rank << "\n";
  os << "torsion_orders = [";
  for (std::size_t k = 0; k < spec.char_group.torsion_orders.size(); ++k) {
    if (k) os << ", ";
    os << spec.char_group.torsion_orders[k];
  }
  os << "]\n";
  for (const CharValue& v : spec.character.values) {
    os << "\n[[character.values]]\n";
    os << "free = [";
    for (std::size_t k = 0; k < v.free.size(); ++k) {
      if (k) os << ", ";
      os << v.free[k];
    }
    os << "]\n";
    os << "torsion = [";
    for (std::size_t k = 0; k < v.torsion.size(); ++k) {
      if (k) os << ", ";
      os << v.torsion[k];
    }
    os << "]\n";
  }

  os << "\n[options]\n";
  os << "analyses = [";
  for (std::size_t k = 0; k < spec.analyses.size(); ++k) {
    if (k) os << ", ";
    os << '"' << analysis_name(spec.analyses[k]) << '"';
  }
  os << "]\n";
  os << "max_rank = " << spec.max_rank << "\n";

  if (spec.lfactor) {
    os << "\n[lfactor]\n";
    os << "satake = [";
    for (std::size_t k = 0; k < spec.lfactor->size(); ++k) {
      if (k) os << ", ";
      os << '"' << satake_to_string((*spec.lfactor)[k]) << '"';
    }
    os << "]\n";
  }
  if (spec.complementary) {
    os << "\n[complementary]\n";
    os << "weyl_nontrivial = "
       << (spec.complementary->weyl_nontrivial ? "true" : "false") << "\n";
    os << "self_conjugate = "
       << (spec.complementary->self_conjugate ? "true" : "false") << "\n";
    os << "vanishing_index = \""
       << vanishing_name(spec.complementary->vanishing_index) << "\"\n";
    os << "ind_reducible_at_zero = "
       << (spec.complementary->ind_reducible_at_zero ? "true" : "false") << "\n";
  }
  if (spec.siegel) {
    os << "\n[siegel]\n";
    os << "family = \"" << siegel_family_name(spec.siegel->family) << "\"\n";
    os << "n = " << spec.siegel->n << "\n";
    os << "self_dual = " << (spec.siegel->self_dual ? "true" : "false") << "\n";
    os << "origin = \"" << origin_name(spec.siegel->origin) << "\"\n";
  }
  return os.str();
}

namespace {

ordered_json json_root(const Root& r) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < r.size(); ++i) arr.push_back(r[i]);
  return arr;
}

ordered_json json_element(const WeylElement& w) {
  ordered_json arr = ordered_json::array();
  for (int entry : w.one_line()) arr.push_back(entry);
  return arr;
}

ordered_json json_rational(const Rational& r) {
  if (r.denominator() == 1) return ordered_json(r.numerator());
  return ordered_json(rational_to_string(r));
}

ordered_json json_subspace(const Subspace& s) {
  ordered_json out;
  out["dim"] = s.dim();
  ordered_json basis = ordered_json::array();
  for (Eigen::Index r = 0; r < s.basis.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < s.basis.cols(); ++c)
      row.push_back(json_rational(s.basis(r, c)));
    basis.push_back(std::move(row));
  }
  out["basis"] = std::move(basis);
  return out;
}

ordered_json json_lfactor(const LFactor& l) {
  ordered_json denom = ordered_json::array();
  for (const Cyclotomic& c : l.denominator()) {
    ordered_json coeff = ordered_json::array();
    for (const auto& [a, m] : c.unit_terms()) coeff.push_back({a, m});
    denom.push_back(std::move(coeff));
  }
  ordered_json out;
  out["denominator"] = std::move(denom);
  out["pole_order_at_zero"] = pole_order_at_zero(l);
  return out;
}

ordered_json json_problem(const ProblemSpec& spec) {
  ordered_json p;
  p["group"] = {{"family", std::string(1, family_letter(spec.group.family))},
                {"rank", spec.group.rank}};
  p["char_group"] = {{"free_rank", spec.char_group.free_rank},
                     {"torsion_orders", spec.char_group.torsion_orders}};
  ordered_json values = ordered_json::array();
  for (const CharValue& v : spec.character.values)
    values.push_back({{"free", v.free}, {"torsion", v.torsion}});
  p["character"] = std::move(values);
  ordered_json names = ordered_json::array();
  for (Analysis a : spec.analyses) names.push_back(analysis_name(a));
  p["analyses"] = std::move(names);
  p["max_rank"] = spec.max_rank;
  if (spec.lfactor) {
    ordered_json satake = ordered_json::array();
    for (const SatakeValue& v : *spec.lfactor)
      satake.push_back(satake_to_string(v));
    p["lfactor"] = {{"satake", std::move(satake)}};
  }
  if (spec.complementary) {
    p["complementary"] = {
        {"weyl_nontrivial", spec.complementary->weyl_nontrivial},
        {"self_conjugate", spec.complementary->self_conjugate},
        {"vanishing_index", vanishing_name(spec.complementary->vanishing_index)},
        {"ind_reducible_at_zero", spec.complementary->ind_reducible_at_zero}};
  }
  if (spec.siegel) {
    p["siegel"] = {{"family", siegel_family_name(spec.siegel->family)},
                   {"n", spec.siegel->n},
                   {"self_dual", spec.siegel->self_dual},
                   {"origin", origin_name(spec.siegel->origin)}};
  }
  return p;
}

class InvariantLedger {
 public:
  void record(const std::string& check, bool ok) {
    entries_.push_back({{"check", check}, {"ok", ok}});
    if (!ok)
      throw DecompositionViolation("invariant check failed: " + check);
  }
  ordered_json json() const {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries_) arr.push_back(e);
    return arr;
  }

 private:
  std::vector<ordered_json> entries_;
};

bool element_in(const std::vector<WeylElement>& sorted_set, const WeylElement& w) {
  auto it = std::lower_bound(sorted_set.begin(), sorted_set.end(), w, one_line_less);
  return it != sorted_set.end() && *it == w;
}

}  // namespace

nlohmann::ordered_json run(const ProblemSpec& spec, const RunOptions& options) {
  spec.validate();
  const int max_rank = options.max_rank_override.value_or(spec.max_rank);

  ordered_json report;
  report["tool_version"] = kToolVersion;
  report["problem"] = json_problem(spec);
  InvariantLedger ledger;

  auto requested = [&spec](Analysis a) {
    return std::find(spec.analyses.begin(), spec.analyses.end(), a) !=
           spec.analyses.end();
  };
  const bool needs_rgroup = requested(Analysis::RGROUP) ||
                            requested(Analysis::ELLIPTIC) ||
                            requested(Analysis::COMMALG);

  std::optional<RootSystem> rs;
  std::optional<RGroupReport> kst;
  if (needs_rgroup) {
    rs = build_root_system(spec.group);
    kst = knapp_stein(*rs, spec.character, max_rank);

    ledger.record("delta_prime_is_sub_root_system",
                  is_sub_root_system(*rs, kst->delta_prime));
    std::vector<WeylElement> sorted_w_prime = kst->w_prime;
    std::sort(sorted_w_prime.begin(), sorted_w_prime.end(), one_line_less);
    bool trivial_meet = true;
    for (const WeylElement& r : kst->r_group)
      trivial_meet &= r.is_identity() || !element_in(sorted_w_prime, r);
    ledger.record("r_meets_w_prime_trivially", trivial_meet);
    ledger.record("order_product_matches",
                  kst->r_group.size() * kst->w_prime.size() == kst->w_sigma.size());
    ledger.record("commuting_dim_bounded",
                  kst->commuting_dim <= kst->w_sigma.size());
    std::size_t squares = 0;
    for (int m : kst->multiplicities) squares += static_cast<std::size_t>(m) * m;
    ledger.record("multiplicity_squares_sum", squares == kst->r_group.size());

    if (options.oracle) {
      const RGroupReport recomputed = oracle::knapp_stein(*rs, spec.character);
      ledger.record("oracle_recomputation_matches",
                    oracle::reports_match(*kst, recomputed));
    }
  }

  if (requested(Analysis::RGROUP)) {
    ordered_json r;
    r["w_order"] = enumerate_weyl(*rs, max_rank).size();
    r["w_sigma_order"] = kst->w_sigma.size();
    ordered_json delta = ordered_json::array();
    for (const Root& beta : kst->delta_prime) delta.push_back(json_root(beta));
    r["delta_prime"] = std::move(delta);
    r["w_prime_order"] = kst->w_prime.size();
    ordered_json rg = ordered_json::array();
    for (const WeylElement& w : kst->r_group) rg.push_back(json_element(w));
    r["r_group"] = std::move(rg);
    r["r_group_order"] = kst->r_group.size();
    r["is_abelian"] = kst->is_abelian;
    r["r_group_is_sign_changes"] = r_group_is_sign_changes(*kst);
    r["commuting_dim"] = kst->commuting_dim;
    r["component_count"] = kst->component_count;
    r["multiplicities"] = kst->multiplicities;
    if (spec.group.family == Family::C) {
      const int d = keys_d_invariant(spec.character);
      r["keys_d_invariant"] = d;
      ledger.record("keys_order_formula",
                    kst->r_group.size() == (1u << d));
    }
    report["rgroup"] = std::move(r);
  }

  if (requested(Analysis::ELLIPTIC)) {
    ordered_json e;
    const Subspace z = weyl_invariant_subspace(*rs);
    const Subspace a_r = r_fixed_space(*kst, rs->dim());
    e["z"] = json_subspace(z);
    e["a_r"] = json_subspace(a_r);
    ordered_json fixed = ordered_json::array();
    for (const WeylElement& w : kst->r_group) {
      ordered_json item;
      item["element"] = json_element(w);
      item["fixed_space"] = json_subspace(fixed_space(w));
      fixed.push_back(std::move(item));
    }
    e["fixed_spaces"] = std::move(fixed);
    e["arthur_elliptic"] = arthur_elliptic(*kst, z);
    e["herb_induced"] = herb_induced(*kst, rs->dim());
    report["elliptic"] = std::move(e);
  }

  if (requested(Analysis::COMMALG)) {
    const FiniteGroupTable table = FiniteGroupTable::from_elements(kst->r_group);
    const ProjectionSet projections = build_projections(table);
    const ProjectionChecks checks = verify_projections(projections);
    const DimensionCensus census = dimension_census(table);
    ledger.record("projections_idempotent", checks.idempotent);
    ledger.record("projections_orthogonal", checks.orthogonal);
    ledger.record("projections_central", checks.central);
    ledger.record("projections_partition_identity", checks.partition_of_identity);
    ordered_json c;
    c["group_order"] = census.group_order;
    c["irrep_count"] = census.irrep_count;
    c["sum_of_squares"] = census.sum_of_squares;
    c["checks"] = {{"idempotent", checks.idempotent},
                   {"orthogonal", checks.orthogonal},
                   {"central", checks.central},
                   {"partition_of_identity", checks.partition_of_identity},
                   {"max_defect", checks.max_defect}};
    report["commalg"] = std::move(c);
  }

  if (requested(Analysis::LFACTOR)) {
    ordered_json l;
    ordered_json values = ordered_json::array();
    ordered_json factors = ordered_json::array();
    bool all_unramified = true;
    for (const SatakeValue& v : *spec.lfactor) {
      values.push_back(satake_to_string(v));
      factors.push_back(json_lfactor(tate_l(v)));
      all_unramified &= !v.ramified;
    }
    l["values"] = std::move(values);
    l["tate"] = std::move(factors);
    if (all_unramified) {
      l["gl"] = json_lfactor(gl_unramified_l(*spec.lfactor));
    } else {
      l["gl"] = nullptr;
      l["gl_skipped_reason"] = "ramified_component";
    }
    report["l_factors"] = std::move(l);
  }

  if (requested(Analysis::COMPLEMENTARY)) {
    const CompSeriesVerdict verdict = complementary_series(*spec.complementary);
    ordered_json c;
    if (verdict.complementary_upper) {
      c["complementary_interval"] = {
          {"open_lower", "0"},
          {"open_upper", rational_to_string(*verdict.complementary_upper)}};
    } else {
      c["complementary_interval"] = nullptr;
    }
    c["reducibility_point"] =
        verdict.reducibility_point
            ? ordered_json(rational_to_string(*verdict.reducibility_point))
            : ordered_json(nullptr);
    c["special_subrep_generic"] = verdict.special_subrep_generic;
    c["beyond_point"] = verdict.beyond_point
                            ? ordered_json("irreducible_nonunitary")
                            : ordered_json(nullptr);
    c["tail_l_factors_trivial"] = verdict.tail_l_factors_trivial;
    report["complementary"] = std::move(c);
  }

  if (requested(Analysis::SIEGEL)) {
    const SiegelVerdict verdict = siegel_reducibility(*spec.siegel);
    ordered_json s;
    s["reducible_at_zero"] = verdict.reducible_at_zero;
    ordered_json pieces = ordered_json::array();
    for (AdjointPiece p : verdict.adjoint_pieces)
      pieces.push_back(adjoint_piece_name(p));
    s["adjoint_pieces"] = std::move(pieces);
    s["wedge_l_trivial"] = wedge_l_trivial(spec.siegel->n);
    report["siegel"] = std::move(s);
  }

  report["invariant_ledger"] = ledger.json();
  return report;
}

std::string render_summary(const nlohmann::ordered_json& report) {
  std::ostringstream os;
  const auto& problem = report.at("problem");
  os << "group " << problem.at("group").at("family").get<std::string>()
     << problem.at("group").at("rank").get<int>() << "\n";
  if (report.contains("rgroup")) {
    const auto& r = report.at("rgroup");
    os << "rgroup: |W(chi)| = " << r.at("w_sigma_order").get<std::size_t>()
       << ", |Delta'| = " << r.at("delta_prime").size()
       << ", |W'| = " << r.at("w_prime_order").get<std::size_t>()
       << ", |R| = " << r.at("r_group_order").get<std::size_t>()
       << ", components = " << r.at("component_count").get<std::size_t>() << "\n";
  }
  if (report.contains("elliptic")) {
    const auto& e = report.at("elliptic");
    os << "elliptic: arthur = " << e.at("arthur_elliptic").get<bool>()
       << ", herb = " << e.at("herb_induced").get<bool>() << "\n";
  }
  if (report.contains("commalg")) {
    const auto& c = report.at("commalg");
    os << "commalg: |R| = " << c.at("group_order").get<long long>()
       << ", irreducibles = " << c.at("irrep_count").get<long long>()
       << ", max defect = " << c.at("checks").at("max_defect").get<double>()
       << "\n";
  }
  if (report.contains("l_factors")) {
    const auto& l = report.at("l_factors");
    os << "l_factors: " << l.at("tate").size() << " abelian factors";
    if (!l.at("gl").is_null()) {
      os << ", det-formula pole order "
         << l.at("gl").at("pole_order_at_zero").get<int>();
    }
    os << "\n";
  }
  if (report.contains("complementary")) {
    const auto& c = report.at("complementary");
    if (!c.at("complementary_interval").is_null()) {
      os << "complementary: interval (0, "
         << c.at("complementary_interval").at("open_upper").get<std::string>()
         << "), reducibility at "
         << c.at("reducibility_point").get<std::string>() << "\n";
    } else {
      os << "complementary: no complementary series\n";
    }
  }
  if (report.contains("siegel")) {
    os << "siegel: reducible_at_zero = "
       << report.at("siegel").at("reducible_at_zero").get<bool>() << "\n";
  }
  std::size_t checks = report.at("invariant_ledger").size();
  os << "invariant checks passed: " << checks << "\n";
  return os.str();
}

}  // namespace indrep
