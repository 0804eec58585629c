#include <doctest.h>

#include <fstream>
#include <sstream>

#include "indrep/problem.hpp"
#include "test_support.hpp"

using namespace indrep;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(INDREP_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ProblemSpec random_spec(testing::Rng& rng) {
  ProblemSpec spec;
  spec.group = testing::random_cd_spec(rng, 4);
  if (testing::pick(rng, 0, 3) == 0) {
    spec.group.family = Family::A;
    spec.group.rank = testing::pick(rng, 1, 3);
  }
  spec.char_group = testing::random_char_group(rng);
  spec.character =
      testing::random_character(rng, spec.char_group, spec.group.ambient_dim());
  spec.analyses = {Analysis::RGROUP};
  if (testing::pick(rng, 0, 1)) spec.analyses.push_back(Analysis::ELLIPTIC);
  if (testing::pick(rng, 0, 1)) spec.analyses.push_back(Analysis::COMMALG);
  if (testing::pick(rng, 0, 1)) {
    spec.analyses.push_back(Analysis::LFACTOR);
    std::vector<SatakeValue> values;
    for (int k = testing::pick(rng, 0, 3); k-- > 0;) {
      values.push_back(testing::pick(rng, 0, 3) == 0
                           ? SatakeValue::ramified_value()
                           : SatakeValue::unramified(testing::pick(rng, 0, 11),
                                                     testing::pick(rng, 1, 12)));
    }
    spec.lfactor = std::move(values);
  }
  if (testing::pick(rng, 0, 1)) {
    spec.analyses.push_back(Analysis::COMPLEMENTARY);
    const int shape = testing::pick(rng, 0, 3);
    CompSeriesInput input;
    input.weyl_nontrivial = true;
    input.self_conjugate = shape != 3;
    input.vanishing_index = shape == 0   ? VanishingIndex::I1
                            : shape == 1 ? VanishingIndex::I2
                                         : VanishingIndex::NONE;
    input.ind_reducible_at_zero = shape == 2;
    spec.complementary = input;
  }
  if (testing::pick(rng, 0, 1)) {
    spec.analyses.push_back(Analysis::SIEGEL);
    SiegelInput input;
    input.family = static_cast<SiegelFamily>(testing::pick(rng, 0, 2));
    if (testing::pick(rng, 0, 1)) {
      input.n = 2 * testing::pick(rng, 1, 4) + 1;
      input.self_dual = testing::pick(rng, 0, 1) == 1;
      input.origin = SiegelOrigin::SP_N_MINUS_1;
    } else {
      input.n = 2 * testing::pick(rng, 1, 4);
      input.self_dual = testing::pick(rng, 0, 1) == 1;
      input.origin = input.self_dual ? (testing::pick(rng, 0, 1)
                                            ? SiegelOrigin::SO_N_PLUS_1
                                            : SiegelOrigin::SO_N_STAR)
                                     : SiegelOrigin::NONE;
    }
    spec.siegel = input;
  }
  return spec;
}

}  // namespace

TEST_CASE("the rank-two fixture parses into the expected spec") {
  const ProblemSpec spec = parse_problem(fixture("sp4_keys.toml"));
  CHECK(spec.group == CartanSpec{Family::C, 2});
  CHECK(spec.char_group == CharGroup{0, {2, 2, 8}});
  REQUIRE(spec.character.values.size() == 2);
  CHECK(spec.character.values[0].torsion == std::vector<long long>{1, 0, 0});
  CHECK(spec.character.values[1].torsion == std::vector<long long>{0, 1, 0});
  CHECK(spec.analyses == std::vector<Analysis>{Analysis::RGROUP,
                                               Analysis::ELLIPTIC,
                                               Analysis::COMMALG});
  CHECK(spec.max_rank == kDefaultEnumerationBound);
}

TEST_CASE("parse and validation failures carry diagnostics") {
  CHECK_THROWS_AS(parse_problem(fixture("bad_family.toml")), ValidationError);
  CHECK_THROWS_AS(parse_problem(fixture("missing_siegel.toml")), ValidationError);
  CHECK_THROWS_AS(parse_problem(fixture("malformed.toml")), ParseError);

  CHECK_THROWS_WITH_AS(
      parse_problem("[group]\nfamily = \"C\"\nrank = 2\nbogus = 1\n"),
      doctest::Contains("bogus"), ValidationError);

  // Wrong number of character values for the rank.
  const std::string wrong_count =
      "[group]\nfamily = \"C\"\nrank = 3\n"
      "[character.group]\nfree_rank = 0\ntorsion_orders = [2]\n"
      "[[character.values]]\nfree = []\ntorsion = [0]\n"
      "[options]\nanalyses = [\"rgroup\"]\n";
  CHECK_THROWS_AS(parse_problem(wrong_count), ValidationError);
}

TEST_CASE("parse of serialize is the identity on generated specs") {
  testing::Rng rng(321);
  for (int t = 0; t < 200; ++t) {
    const ProblemSpec spec = random_spec(rng);
    CHECK(parse_problem(serialize_problem(spec)) == spec);
  }
}

TEST_CASE("running the rank-two fixture reproduces the decomposition") {
  const ProblemSpec spec = parse_problem(fixture("sp4_keys.toml"));
  RunOptions options;
  options.oracle = true;
  const auto report = run(spec, options);
  CHECK(report.at("rgroup").at("r_group_order") == 4);
  CHECK(report.at("rgroup").at("component_count") == 4);
  CHECK(report.at("rgroup").at("keys_d_invariant") == 2);
  CHECK(report.at("elliptic").at("arthur_elliptic") == true);
  CHECK(report.at("commalg").at("group_order") == 4);
  bool oracle_checked = false;
  for (const auto& entry : report.at("invariant_ledger")) {
    CHECK(entry.at("ok") == true);
    if (entry.at("check") == "oracle_recomputation_matches") oracle_checked = true;
  }
  CHECK(oracle_checked);
}

TEST_CASE("running the SO6 fixture reproduces the four components") {
  const auto report = run(parse_problem(fixture("so6_herb.toml")));
  CHECK(report.at("rgroup").at("r_group_order") == 4);
  CHECK(report.at("rgroup").at("component_count") == 4);
  CHECK(report.at("rgroup").at("r_group_is_sign_changes") == true);
  CHECK(report.at("elliptic").at("arthur_elliptic") == false);
  CHECK(report.at("elliptic").at("herb_induced") == false);
  CHECK(report.at("elliptic").at("a_r").at("dim") == 0);
}

TEST_CASE("the trivial-character fixture collapses to one component") {
  const auto report = run(parse_problem(fixture("c3_trivial.toml")));
  CHECK(report.at("rgroup").at("r_group_order") == 1);
  CHECK(report.at("rgroup").at("component_count") == 1);
}

TEST_CASE("the full pipeline emits every requested record") {
  const auto report = run(parse_problem(fixture("full_pipeline.toml")));
  CHECK(report.contains("rgroup"));
  CHECK(report.contains("elliptic"));
  CHECK(report.contains("commalg"));
  CHECK(report.at("l_factors").at("tate").size() == 3);
  CHECK(report.at("l_factors").at("gl").at("pole_order_at_zero") == 1);
  CHECK(report.at("complementary").at("reducibility_point") == "1/2");
  CHECK(report.at("siegel").at("reducible_at_zero") == false);
  CHECK(report.at("siegel").at("wedge_l_trivial") == false);
}

TEST_CASE("reports are byte-identical across runs") {
  const ProblemSpec spec = parse_problem(fixture("full_pipeline.toml"));
  CHECK(run(spec).dump(2) == run(spec).dump(2));
}

TEST_CASE("ramified entries skip the determinant factor") {
  ProblemSpec spec = parse_problem(fixture("c3_trivial.toml"));
  spec.analyses.push_back(Analysis::LFACTOR);
  spec.lfactor = {{SatakeValue::ramified_value(), SatakeValue::unramified(0, 1)}};
  const auto report = run(spec);
  CHECK(report.at("l_factors").at("gl").is_null());
  CHECK(report.at("l_factors").at("gl_skipped_reason") == "ramified_component");
}

TEST_CASE("serialization of satake values round-trips exactly") {
  ProblemSpec spec = parse_problem(fixture("c3_trivial.toml"));
  spec.analyses.push_back(Analysis::LFACTOR);
  spec.lfactor = {{SatakeValue::unramified(7, 12), SatakeValue::ramified_value(),
                   SatakeValue::unramified(2, 4)}};
  const ProblemSpec reparsed = parse_problem(serialize_problem(spec));
  REQUIRE(reparsed.lfactor.has_value());
  CHECK((*reparsed.lfactor)[0] == SatakeValue::unramified(7, 12));
  CHECK((*reparsed.lfactor)[1].ramified);
  CHECK((*reparsed.lfactor)[2] == SatakeValue::unramified(1, 2));
}
