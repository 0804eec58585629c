#include "indrep/maximal.hpp"

#include "indrep/errors.hpp"

namespace indrep {

void CompSeriesInput::validate() const {
  if (vanishing_index != VanishingIndex::NONE && !self_conjugate)
    throw InconsistentInput("a vanishing index requires self-conjugacy");
  if (ind_reducible_at_zero && vanishing_index != VanishingIndex::NONE)
    throw InconsistentInput(
        "reducibility at zero excludes a vanishing index");
  if (ind_reducible_at_zero && !self_conjugate)
    throw InconsistentInput(
        "reducibility at zero requires self-conjugacy");
  if (self_conjugate && vanishing_index == VanishingIndex::NONE &&
      !ind_reducible_at_zero)
    throw InconsistentInput(
        "a self-conjugate input with irreducible induction must carry a "
        "vanishing index");
}

CompSeriesVerdict complementary_series(const CompSeriesInput& input) {
  if (!input.weyl_nontrivial)
    throw InconsistentInput(
        "the decision procedure assumes a nontrivial relative Weyl group");
  input.validate();

  CompSeriesVerdict verdict;
  verdict.tail_l_factors_trivial = true;

  if (input.vanishing_index != VanishingIndex::NONE) {
    const long long i = input.vanishing_index == VanishingIndex::I1 ? 1 : 2;
    verdict.complementary_upper = Rational(1, i);
    verdict.reducibility_point = Rational(1, i);
    verdict.special_subrep_generic = true;
    verdict.beyond_point = BeyondPoint::IRREDUCIBLE_NONUNITARY;
    return verdict;
  }
  if (input.ind_reducible_at_zero) {
    // Reducible on the unitary axis: every positive deformation is
    // irreducible and never unitarizable.
    verdict.beyond_point = BeyondPoint::IRREDUCIBLE_NONUNITARY;
    return verdict;
  }
  // Not self-conjugate: no deformation claims are made.
  return verdict;
}

void SiegelInput::validate() const {
  if (n < 1) throw InconsistentInput("the Levi rank n must be >= 1");
  const bool odd = n % 2 != 0;
  switch (origin) {
    case SiegelOrigin::SP_N_MINUS_1:
      if (!odd) throw InconsistentInput("origin Sp_{n-1} requires odd n");
      break;
    case SiegelOrigin::SO_N_PLUS_1:
    case SiegelOrigin::SO_N_STAR:
      if (odd)
        throw InconsistentInput("origins SO_{n+1} and SO_n^* require even n");
      if (!self_dual)
        throw InconsistentInput(
            "origins SO_{n+1} and SO_n^* require a self-dual input");
      break;
    case SiegelOrigin::NONE:
      if (odd)
        throw InconsistentInput("odd n always has origin Sp_{n-1}");
      if (self_dual)
        throw InconsistentInput(
            "a self-dual input with even n comes from exactly one of "
            "SO_{n+1} and SO_n^*");
      break;
  }
}

SiegelVerdict siegel_reducibility(const SiegelInput& input) {
  input.validate();
  if (!input.self_dual)
    throw NotSelfDual("reducibility of the Siegel induction requires a "
                      "self-dual input");

  SiegelVerdict verdict;
  bool irreducible = false;
  switch (input.family) {
    case SiegelFamily::SO2nPlus1:
      irreducible = input.origin == SiegelOrigin::SO_N_STAR ||
                    input.origin == SiegelOrigin::SP_N_MINUS_1;
      verdict.adjoint_pieces = {AdjointPiece::SYMMETRIC_SQUARE};
      break;
    case SiegelFamily::Sp2n:
      irreducible = input.origin == SiegelOrigin::SO_N_PLUS_1;
      verdict.adjoint_pieces = {AdjointPiece::STANDARD,
                                AdjointPiece::EXTERIOR_SQUARE};
      break;
    case SiegelFamily::SO2n:
      irreducible = input.origin == SiegelOrigin::SO_N_PLUS_1 ||
                    input.origin == SiegelOrigin::SP_N_MINUS_1;
      verdict.adjoint_pieces = {AdjointPiece::EXTERIOR_SQUARE};
      break;
  }
  verdict.reducible_at_zero = !irreducible;
  return verdict;
}

bool wedge_l_trivial(int n) {
  if (n < 1) throw InconsistentInput("n must be >= 1");
  return n % 2 != 0;
}

}  // namespace indrep
