#include "indrep/plancherel.hpp"

namespace indrep {

RankOneKind rank_one_class(const RootSystem& rs, const Root& beta) {
  if (!rs.contains_positive(beta))
    throw ForeignRoot("root " + root_to_string(beta) +
                      " is not a positive root of the system");
  int support = 0;
  for (Eigen::Index i = 0; i < beta.size(); ++i)
    if (beta[i] != 0) ++support;
  if (support == 2) return RankOneKind::GL2_TYPE;
  return rs.spec.family == Family::C ? RankOneKind::SL2_TYPE
                                     : RankOneKind::UNSUPPORTED;
}

const RuleTable& default_rules() {
  static const RuleTable table{};
  return table;
}

namespace {

// Indices and orientation of a two-coordinate root.
struct PairSupport {
  int i, j;
  bool same_sign;
};

PairSupport pair_support(const Root& beta) {
  PairSupport s{-1, -1, false};
  for (Eigen::Index k = 0; k < beta.size(); ++k) {
    if (beta[k] == 0) continue;
    if (s.i < 0) {
      s.i = static_cast<int>(k);
    } else {
      s.j = static_cast<int>(k);
      s.same_sign = beta[s.i] == beta[k];
    }
  }
  return s;
}

int single_support(const Root& beta) {
  for (Eigen::Index k = 0; k < beta.size(); ++k)
    if (beta[k] != 0) return static_cast<int>(k);
  return -1;
}

}  // namespace

bool rank_one_irreducible(const RootSystem& rs, const Root& beta,
                          const TorusCharacter& chi) {
  switch (rank_one_class(rs, beta)) {
    case RankOneKind::GL2_TYPE:
      return true;
    case RankOneKind::SL2_TYPE: {
      const CharValue& v = chi.values[single_support(beta)];
      const auto p = value_predicates(chi.group, v);
      return !(p.is_quadratic && !p.is_trivial);
    }
    case RankOneKind::UNSUPPORTED:
      break;
  }
  throw UnsupportedRankOne("no rank-one reducibility rule for root " +
                           root_to_string(beta));
}

bool mu_is_zero(const RootSystem& rs, const Root& beta, const TorusCharacter& chi,
                const RuleTable& rules) {
  if (chi.dim() != rs.dim())
    throw DimensionMismatch("character dimension does not match the root system");
  switch (rank_one_class(rs, beta)) {
    case RankOneKind::GL2_TYPE: {
      const auto s = pair_support(beta);
      if (s.same_sign)
        return is_zero(add(chi.group, chi.values[s.i], chi.values[s.j]));
      return chi.values[s.i] == chi.values[s.j];
    }
    case RankOneKind::SL2_TYPE:
      return is_zero(chi.values[single_support(beta)]);
    case RankOneKind::UNSUPPORTED:
      if (rules.short_root_rule) return (*rules.short_root_rule)(rs, beta, chi);
      break;
  }
  throw UnsupportedRankOne("no vanishing rule registered for root " +
                           root_to_string(beta));
}

std::vector<Root> delta_prime(const RootSystem& rs, const TorusCharacter& chi,
                              const RuleTable& rules) {
  std::vector<Root> zeros;
  for (const Root& beta : rs.positive_roots) {
    if (mu_is_zero(rs, beta, chi, rules)) zeros.push_back(beta);
  }
  if (!is_sub_root_system(rs, zeros))
    throw SubRootSystemViolation(
        "vanishing set is not closed under its own reflections");
  return zeros;
}

}  // namespace indrep
