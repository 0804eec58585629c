#pragma once

#include "indrep/rgroup.hpp"

namespace indrep::oracle {

/// Direct enumeration of the signed permutations of the family, by running
/// through all permutations and sign masks. Independent of the generator
/// walk in enumerate_weyl; sorted in one-line order.
std::vector<WeylElement> enumerate_weyl_direct(const CartanSpec& spec);

/// Stabilizer, vanishing set, reflection subgroup, and R-group recomputed
/// from the raw definitions. The vanishing set goes through the fixed-point
/// criterion combined with rank-one irreducibility instead of the pattern
/// rules, and the subgroup closure is a product-saturation fixpoint.
std::vector<WeylElement> stabilizer(const RootSystem& rs, const TorusCharacter& chi);
std::vector<Root> delta_prime(const RootSystem& rs, const TorusCharacter& chi);
RGroupReport knapp_stein(const RootSystem& rs, const TorusCharacter& chi);

/// Set-wise comparison of two reports (order-insensitive).
bool reports_match(const RGroupReport& a, const RGroupReport& b);

}  // namespace indrep::oracle
