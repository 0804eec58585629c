#pragma once

#include <functional>
#include <optional>

#include "indrep/torus_char.hpp"

namespace indrep {

/// Isomorphism class of the rank-one subgroup attached to a reduced root.
enum class RankOneKind { GL2_TYPE, SL2_TYPE, UNSUPPORTED };

/// Families A and D only see GL2-type roots e_i +- e_j; family C adds the
/// SL2-type roots 2e_i; the short roots e_i of family B have no built-in rule.
RankOneKind rank_one_class(const RootSystem& rs, const Root& beta);

/// Vanishing rules for the rank-one Plancherel measure. The built-in table
/// covers GL2/SL2 kinds; a rule for family B short roots can be plugged in.
/// Value semantics: configure once, then treat as frozen.
struct RuleTable {
  using ZeroRule =
      std::function<bool(const RootSystem&, const Root&, const TorusCharacter&)>;
  std::optional<ZeroRule> short_root_rule;
};

const RuleTable& default_rules();

/// Whether the rank-one induced representation attached to beta is
/// irreducible: always for GL2 kind, and for SL2 kind unless the coordinate
/// value is a nontrivial involution. Throws UnsupportedRankOne for kinds with
/// no built-in rule.
bool rank_one_irreducible(const RootSystem& rs, const Root& beta,
                          const TorusCharacter& chi);

/// mu_beta(chi) = 0, decided per rank-one kind:
///   e_i - e_j : chi_i = chi_j
///   e_i + e_j : chi_i + chi_j = 0   (derived from the fixed-point criterion
///               together with GL2 irreducibility; covered by a property test)
///   2e_i      : chi_i = 0
bool mu_is_zero(const RootSystem& rs, const Root& beta, const TorusCharacter& chi,
                const RuleTable& rules = default_rules());

/// The set of positive roots where the Plancherel measure vanishes, in
/// canonical order. Verified to be closed under its own reflections before
/// returning; a failure throws SubRootSystemViolation.
std::vector<Root> delta_prime(const RootSystem& rs, const TorusCharacter& chi,
                              const RuleTable& rules = default_rules());

}  // namespace indrep
