#include <doctest.h>

#include "indrep/plancherel.hpp"
#include "test_support.hpp"

using namespace indrep;

namespace {

Root rt(std::initializer_list<int> coords) {
  Root r(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index k = 0;
  for (int c : coords) r[k++] = c;
  return r;
}

const CharGroup kKlein{0, {2, 2}};
const CharGroup kZ2Z2Z8{0, {2, 2, 8}};

TorusCharacter chi_of(const CharGroup& g,
                      std::vector<std::vector<long long>> torsions) {
  TorusCharacter chi;
  chi.group = g;
  for (auto& t : torsions)
    chi.values.push_back(reduced(g, CharValue{{}, std::move(t)}));
  return chi;
}

}  // namespace

TEST_CASE("rank-one classification") {
  const RootSystem c2 = build_root_system({Family::C, 2});
  CHECK(rank_one_class(c2, rt({1, -1})) == RankOneKind::GL2_TYPE);
  CHECK(rank_one_class(c2, rt({1, 1})) == RankOneKind::GL2_TYPE);
  CHECK(rank_one_class(c2, rt({0, 2})) == RankOneKind::SL2_TYPE);

  const RootSystem b3 = build_root_system({Family::B, 3});
  CHECK(rank_one_class(b3, rt({0, 0, 1})) == RankOneKind::UNSUPPORTED);
  CHECK(rank_one_class(b3, rt({1, -1, 0})) == RankOneKind::GL2_TYPE);

  const RootSystem d3 = build_root_system({Family::D, 3});
  for (const Root& beta : d3.positive_roots)
    CHECK(rank_one_class(d3, beta) == RankOneKind::GL2_TYPE);

  CHECK_THROWS_AS(rank_one_class(c2, rt({1, 0})), ForeignRoot);
}

TEST_CASE("vanishing rules on the rank-two symplectic example") {
  const RootSystem rs = build_root_system({Family::C, 2});
  // chi_1 trivial, chi_2 of order 8.
  const TorusCharacter chi = chi_of(kZ2Z2Z8, {{0, 0, 0}, {0, 0, 1}});
  CHECK(mu_is_zero(rs, rt({2, 0}), chi));
  CHECK_FALSE(mu_is_zero(rs, rt({0, 2}), chi));

  // Equal nontrivial values on both coordinates.
  const TorusCharacter equal = chi_of(kZ2Z2Z8, {{1, 0, 0}, {1, 0, 0}});
  CHECK(mu_is_zero(rs, rt({1, -1}), equal));
}

TEST_CASE("distinct involutions keep the plus root alive in D3") {
  const RootSystem rs = build_root_system({Family::D, 3});
  const TorusCharacter chi =
      testing::two_torsion_character({{1, 0}, {0, 1}, {1, 1}});
  CHECK_FALSE(mu_is_zero(rs, rt({1, 1, 0}), chi));
}

TEST_CASE("vanishing sets of the worked rank-two cases") {
  const RootSystem rs = build_root_system({Family::C, 2});

  const TorusCharacter distinct = chi_of(kZ2Z2Z8, {{1, 0, 0}, {0, 1, 0}});
  CHECK(delta_prime(rs, distinct).empty());

  TorusCharacter trivial;
  trivial.group = kZ2Z2Z8;
  trivial.values.assign(2, zero_value(kZ2Z2Z8));
  CHECK(delta_prime(rs, trivial).size() == 4);

  const RootSystem d3 = build_root_system({Family::D, 3});
  const TorusCharacter herb =
      testing::two_torsion_character({{1, 0}, {0, 1}, {1, 1}});
  CHECK(delta_prime(d3, herb).empty());
}

TEST_CASE("family B needs a plug-in rule for its short roots") {
  const RootSystem rs = build_root_system({Family::B, 2});
  const TorusCharacter chi = chi_of(kKlein, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(mu_is_zero(rs, rt({0, 1}), chi), UnsupportedRankOne);
  CHECK_THROWS_AS(delta_prime(rs, chi), UnsupportedRankOne);

  RuleTable rules;
  rules.short_root_rule = [](const RootSystem&, const Root&,
                             const TorusCharacter&) { return false; };
  CHECK_FALSE(mu_is_zero(rs, rt({0, 1}), chi, rules));
  CHECK_NOTHROW(delta_prime(rs, chi, rules));
}

TEST_CASE("a broken plug-in rule is caught by the closure assertion") {
  const RootSystem rs = build_root_system({Family::B, 2});
  TorusCharacter trivial;
  trivial.group = kKlein;
  trivial.values.assign(2, zero_value(kKlein));
  RuleTable rules;
  // Killing the short roots while the long ones all vanish breaks closure:
  // reflecting e1-e2 in e1+e2 stays inside, but reflecting e1 does not.
  rules.short_root_rule = [](const RootSystem&, const Root& beta,
                             const TorusCharacter&) {
    return beta[0] == 1 && beta[1] == 0;
  };
  CHECK_THROWS_AS(delta_prime(rs, trivial, rules), SubRootSystemViolation);
}

TEST_CASE("master criterion: vanishing = fixed point + rank-one irreducibility") {
  testing::Rng rng(2024);
  for (int instance = 0; instance < 1000; ++instance) {
    const CartanSpec spec = testing::random_cd_spec(rng, 5);
    const RootSystem rs = build_root_system(spec);
    const TorusCharacter chi = testing::random_character(rng, spec);
    for (const Root& beta : rs.positive_roots) {
      const bool direct = mu_is_zero(rs, beta, chi);
      const bool criterion = act(reflection(rs, beta), chi) == chi &&
                             rank_one_irreducible(rs, beta, chi);
      REQUIRE(direct == criterion);
    }
  }
}

TEST_CASE("the vanishing set is stable under the stabilizer, up to sign") {
  testing::Rng rng(31);
  for (Family f : {Family::A, Family::C, Family::D}) {
    for (int trial = 0; trial < 25; ++trial) {
      const int rank = f == Family::D ? 2 + trial % 2 : 1 + trial % 3;
      const RootSystem rs = build_root_system({f, rank});
      const TorusCharacter chi = testing::random_character(rng, rs.spec);
      const auto zeros = delta_prime(rs, chi);
      for (const WeylElement& w : stabilizer(rs, chi)) {
        std::vector<Root> image;
        for (const Root& beta : zeros)
          image.push_back(sign_normalized(w.apply(beta)));
        std::sort(image.begin(), image.end(), lex_less);
        REQUIRE(image.size() == zeros.size());
        for (std::size_t k = 0; k < zeros.size(); ++k)
          CHECK(same_root(image[k], zeros[k]));
      }
    }
  }
}
