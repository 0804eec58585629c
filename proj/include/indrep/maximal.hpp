#pragma once

#include <optional>
#include <vector>

#include "indrep/errors.hpp"
#include "indrep/linalg.hpp"

namespace indrep {

/// Which of the first two gamma-factor numerators vanishes at t = 1.
enum class VanishingIndex { NONE, I1, I2 };

/// Structural facts about a generic supercuspidal on the Levi of a maximal
/// parabolic, as consumed by the complementary-series decision procedure.
struct CompSeriesInput {
  bool weyl_nontrivial = true;       // W(G, A) != {1}
  bool self_conjugate = false;       // w0.sigma ~ sigma
  VanishingIndex vanishing_index = VanishingIndex::NONE;
  bool ind_reducible_at_zero = false;

  /// Enforces the coupled constraints: a vanishing index needs
  /// self-conjugacy and excludes reducibility at zero; a self-conjugate
  /// irreducible induction forces a vanishing index; reducibility at zero
  /// forces self-conjugacy. Throws InconsistentInput.
  void validate() const;

  friend bool operator==(const CompSeriesInput&, const CompSeriesInput&) = default;
};

enum class BeyondPoint { IRREDUCIBLE_NONUNITARY };

struct CompSeriesVerdict {
  /// Open interval (0, upper) of irreducible unitarizable deformations.
  std::optional<Rational> complementary_upper;
  std::optional<Rational> reducibility_point;
  bool special_subrep_generic = false;
  /// Claim for s past the interval (or for all s > 0 when reducible at zero).
  std::optional<BeyondPoint> beyond_point;
  bool tail_l_factors_trivial = true;

  friend bool operator==(const CompSeriesVerdict&, const CompSeriesVerdict&) = default;
};

/// Decision table:
///   vanishing index i  -> complementary series on (0, 1/i), reducibility at
///                         s = 1/i with a generic special subrepresentation,
///                         irreducible non-unitarizable beyond;
///   reducible at zero  -> no complementary series, irreducible and never
///                         unitarizable for every s > 0;
///   not self-conjugate -> no claims besides the trivial tail factors.
CompSeriesVerdict complementary_series(const CompSeriesInput& input);

enum class SiegelFamily { Sp2n, SO2n, SO2nPlus1 };
enum class SiegelOrigin { SO_N_PLUS_1, SO_N_STAR, SP_N_MINUS_1, NONE };
enum class AdjointPiece { STANDARD, EXTERIOR_SQUARE, SYMMETRIC_SQUARE };

/// A supercuspidal of the Siegel Levi GL_n, described by its self-duality
/// and its transfer origin.
struct SiegelInput {
  SiegelFamily family = SiegelFamily::Sp2n;
  int n = 1;
  bool self_dual = false;
  SiegelOrigin origin = SiegelOrigin::NONE;

  /// Origin bookkeeping is total: n odd forces SP_N_MINUS_1; n even and
  /// self-dual forces exactly one of SO_N_PLUS_1 / SO_N_STAR; n even without
  /// self-duality forces NONE. Throws InconsistentInput.
  void validate() const;

  friend bool operator==(const SiegelInput&, const SiegelInput&) = default;
};

struct SiegelVerdict {
  bool reducible_at_zero = false;
  std::vector<AdjointPiece> adjoint_pieces;

  friend bool operator==(const SiegelVerdict&, const SiegelVerdict&) = default;
};

/// The three-case reducibility table for the Siegel parabolic. Requires a
/// self-dual input (NotSelfDual otherwise):
///   SO_{2n+1}: irreducible iff origin in {SO_N_STAR, SP_N_MINUS_1}
///   Sp_{2n}  : irreducible iff origin =  SO_N_PLUS_1
///   SO_{2n}  : irreducible iff origin in {SO_N_PLUS_1, SP_N_MINUS_1}
SiegelVerdict siegel_reducibility(const SiegelInput& input);

/// Whether the exterior-square factor of a GL_n supercuspidal is forced to
/// be 1; true exactly for odd n.
bool wedge_l_trivial(int n);

}  // namespace indrep
