#include <doctest.h>

#include "indrep/maximal.hpp"

using namespace indrep;

namespace {

CompSeriesInput comp(bool self_conjugate, VanishingIndex vanishing,
                     bool reducible) {
  return CompSeriesInput{true, self_conjugate, vanishing, reducible};
}

SiegelInput siegel(SiegelFamily family, int n, bool self_dual,
                   SiegelOrigin origin) {
  return SiegelInput{family, n, self_dual, origin};
}

}  // namespace

TEST_CASE("first-index vanishing opens the unit interval") {
  const CompSeriesVerdict v =
      complementary_series(comp(true, VanishingIndex::I1, false));
  REQUIRE(v.complementary_upper.has_value());
  CHECK(*v.complementary_upper == Rational(1));
  REQUIRE(v.reducibility_point.has_value());
  CHECK(*v.reducibility_point == Rational(1));
  CHECK(v.special_subrep_generic);
  CHECK(v.beyond_point == BeyondPoint::IRREDUCIBLE_NONUNITARY);
  CHECK(v.tail_l_factors_trivial);
  // The open interval never contains its endpoint.
  CHECK_FALSE(*v.reducibility_point < *v.complementary_upper);
}

TEST_CASE("second-index vanishing halves the interval") {
  const CompSeriesVerdict v =
      complementary_series(comp(true, VanishingIndex::I2, false));
  CHECK(*v.complementary_upper == Rational(1, 2));
  CHECK(*v.reducibility_point == Rational(1, 2));
  CHECK(v.special_subrep_generic);
}

TEST_CASE("reducibility on the unitary axis kills the complementary series") {
  const CompSeriesVerdict v =
      complementary_series(comp(true, VanishingIndex::NONE, true));
  CHECK_FALSE(v.complementary_upper.has_value());
  CHECK_FALSE(v.reducibility_point.has_value());
  CHECK_FALSE(v.special_subrep_generic);
  CHECK(v.beyond_point == BeyondPoint::IRREDUCIBLE_NONUNITARY);
  CHECK(v.tail_l_factors_trivial);
}

TEST_CASE("a non-self-conjugate input carries no deformation claims") {
  const CompSeriesVerdict v =
      complementary_series(comp(false, VanishingIndex::NONE, false));
  CHECK_FALSE(v.complementary_upper.has_value());
  CHECK_FALSE(v.reducibility_point.has_value());
  CHECK_FALSE(v.beyond_point.has_value());
  CHECK(v.tail_l_factors_trivial);
}

TEST_CASE("inconsistent structural inputs are rejected") {
  CHECK_THROWS_AS(complementary_series(comp(false, VanishingIndex::I1, false)),
                  InconsistentInput);
  CHECK_THROWS_AS(complementary_series(comp(true, VanishingIndex::I1, true)),
                  InconsistentInput);
  CHECK_THROWS_AS(complementary_series(comp(false, VanishingIndex::NONE, true)),
                  InconsistentInput);
  CHECK_THROWS_AS(complementary_series(comp(true, VanishingIndex::NONE, false)),
                  InconsistentInput);
  CHECK_THROWS_AS(
      complementary_series({false, true, VanishingIndex::I1, false}),
      InconsistentInput);
}

TEST_CASE("the Siegel table over all legal inputs") {
  struct Row {
    SiegelFamily family;
    SiegelOrigin origin;
    bool reducible;
  };
  const Row rows[] = {
      {SiegelFamily::SO2nPlus1, SiegelOrigin::SP_N_MINUS_1, false},
      {SiegelFamily::SO2nPlus1, SiegelOrigin::SO_N_PLUS_1, true},
      {SiegelFamily::SO2nPlus1, SiegelOrigin::SO_N_STAR, false},
      {SiegelFamily::Sp2n, SiegelOrigin::SP_N_MINUS_1, true},
      {SiegelFamily::Sp2n, SiegelOrigin::SO_N_PLUS_1, false},
      {SiegelFamily::Sp2n, SiegelOrigin::SO_N_STAR, true},
      {SiegelFamily::SO2n, SiegelOrigin::SP_N_MINUS_1, false},
      {SiegelFamily::SO2n, SiegelOrigin::SO_N_PLUS_1, false},
      {SiegelFamily::SO2n, SiegelOrigin::SO_N_STAR, true},
  };
  for (const Row& row : rows) {
    const int n = row.origin == SiegelOrigin::SP_N_MINUS_1 ? 3 : 4;
    const SiegelVerdict v =
        siegel_reducibility(siegel(row.family, n, true, row.origin));
    CHECK(v.reducible_at_zero == row.reducible);
  }
}

TEST_CASE("adjoint decompositions per family") {
  CHECK(siegel_reducibility(siegel(SiegelFamily::Sp2n, 4, true,
                                   SiegelOrigin::SO_N_PLUS_1))
            .adjoint_pieces ==
        std::vector<AdjointPiece>{AdjointPiece::STANDARD,
                                  AdjointPiece::EXTERIOR_SQUARE});
  CHECK(siegel_reducibility(siegel(SiegelFamily::SO2n, 4, true,
                                   SiegelOrigin::SO_N_PLUS_1))
            .adjoint_pieces ==
        std::vector<AdjointPiece>{AdjointPiece::EXTERIOR_SQUARE});
  CHECK(siegel_reducibility(siegel(SiegelFamily::SO2nPlus1, 3, true,
                                   SiegelOrigin::SP_N_MINUS_1))
            .adjoint_pieces ==
        std::vector<AdjointPiece>{AdjointPiece::SYMMETRIC_SQUARE});
}

TEST_CASE("odd self-dual Siegel inputs on the symplectic group reduce") {
  for (int n = 1; n <= 9; n += 2) {
    const SiegelVerdict v = siegel_reducibility(
        siegel(SiegelFamily::Sp2n, n, true, SiegelOrigin::SP_N_MINUS_1));
    CHECK(v.reducible_at_zero);
  }
}

TEST_CASE("illegal Siegel combinations are rejected, never coerced") {
  CHECK_THROWS_AS(
      siegel_reducibility(siegel(SiegelFamily::Sp2n, 4, true,
                                 SiegelOrigin::SP_N_MINUS_1)),
      InconsistentInput);
  CHECK_THROWS_AS(
      siegel_reducibility(siegel(SiegelFamily::Sp2n, 3, true,
                                 SiegelOrigin::SO_N_PLUS_1)),
      InconsistentInput);
  CHECK_THROWS_AS(
      siegel_reducibility(siegel(SiegelFamily::Sp2n, 4, false,
                                 SiegelOrigin::SO_N_STAR)),
      InconsistentInput);
  CHECK_THROWS_AS(
      siegel_reducibility(siegel(SiegelFamily::Sp2n, 3, false,
                                 SiegelOrigin::NONE)),
      InconsistentInput);
  CHECK_THROWS_AS(
      siegel_reducibility(siegel(SiegelFamily::Sp2n, 4, true,
                                 SiegelOrigin::NONE)),
      InconsistentInput);
  CHECK_THROWS_AS(siegel_reducibility(siegel(SiegelFamily::Sp2n, 0, true,
                                             SiegelOrigin::NONE)),
                  InconsistentInput);
  // Legal bookkeeping but no reducibility question without self-duality.
  CHECK_THROWS_AS(
      siegel_reducibility(siegel(SiegelFamily::Sp2n, 4, false,
                                 SiegelOrigin::NONE)),
      NotSelfDual);
}

TEST_CASE("exterior-square triviality follows the parity of n") {
  CHECK(wedge_l_trivial(1));
  CHECK(wedge_l_trivial(3));
  CHECK_FALSE(wedge_l_trivial(4));
  CHECK_THROWS_AS(wedge_l_trivial(0), InconsistentInput);
}
