#pragma once

#include <cstddef>

#include "indrep/plancherel.hpp"

namespace indrep {

/// Knapp-Stein decomposition data for a principal series Ind_B^G(chi):
/// the stabilizer W(chi), the vanishing set Delta', the reflection subgroup
/// W' it generates, and the R-group, together with the component census of
/// the induced representation (split cocycle).
struct RGroupReport {
  std::vector<WeylElement> w_sigma;   // W(chi), canonical order
  std::vector<Root> delta_prime;      // canonical order
  std::vector<WeylElement> w_prime;   // <w_beta : beta in Delta'>
  std::vector<WeylElement> r_group;   // {w in W(chi) : w Delta' > 0}
  bool is_abelian = true;
  std::size_t commuting_dim = 1;      // dim C(chi) = |R|
  std::size_t component_count = 1;
  std::vector<int> multiplicities;    // dim rho per irreducible rho of R
};

/// Runs the full construction and validates the semidirect decomposition
/// W(chi) = R x| W' before returning:
///   R and W' meet trivially, |R|*|W'| = |W(chi)|, W' is normal in W(chi),
///   every element of R is an involution, sum of multiplicities^2 = |R|.
/// Any failed invariant throws DecompositionViolation. Families A, C, D only.
RGroupReport knapp_stein(const RootSystem& rs, const TorusCharacter& chi,
                         int max_rank = kDefaultEnumerationBound);

/// Number of distinct nontrivial involutions among the coordinate values;
/// for family C the R-group has order 2^d.
int keys_d_invariant(const TorusCharacter& chi);

/// True when every R-group element is a pure sign change (trivial
/// permutation part), the shape forced in family D.
bool r_group_is_sign_changes(const RGroupReport& report);

}  // namespace indrep
