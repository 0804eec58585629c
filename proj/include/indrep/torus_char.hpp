#pragma once

#include <tuple>
#include <vector>

#include "indrep/weyl.hpp"

namespace indrep {

/// Finitely generated abelian group Z^f + Z/m_1 + ... + Z/m_k, written
/// additively. Character values of the torus coordinates live here.
struct CharGroup {
  int free_rank = 0;
  std::vector<long long> torsion_orders;  // each >= 2

  void validate() const;  // throws ValidationError
  friend bool operator==(const CharGroup&, const CharGroup&) = default;
};

/// Element of a CharGroup. Torsion entry j is kept reduced into [0, m_j).
struct CharValue {
  std::vector<long long> free;
  std::vector<long long> torsion;

  friend bool operator==(const CharValue&, const CharValue&) = default;
  friend bool operator<(const CharValue& a, const CharValue& b) {
    return std::tie(a.free, a.torsion) < std::tie(b.free, b.torsion);
  }
};

CharValue zero_value(const CharGroup& g);
CharValue reduced(const CharGroup& g, CharValue v);  // canonical residues
CharValue add(const CharGroup& g, const CharValue& a, const CharValue& b);
CharValue negated(const CharGroup& g, const CharValue& v);
bool is_zero(const CharValue& v);

struct ValuePredicates {
  bool is_trivial;
  bool is_quadratic;  // 2v = 0 (includes the trivial value)
};

ValuePredicates value_predicates(const CharGroup& g, const CharValue& v);

/// Character of the maximal split torus: one CharValue per coordinate.
struct TorusCharacter {
  CharGroup group;
  std::vector<CharValue> values;

  int dim() const { return static_cast<int>(values.size()); }
  void validate() const;  // shape of every value matches the group

  friend bool operator==(const TorusCharacter&, const TorusCharacter&) = default;
};

/// Left action: if w sends e_j to s*e_i then (w chi)_i = s*chi_j.
TorusCharacter act(const WeylElement& w, const TorusCharacter& chi);

/// W(chi) = subgroup of Weyl elements fixing chi, in canonical order.
std::vector<WeylElement> stabilizer(const RootSystem& rs, const TorusCharacter& chi,
                                    int max_rank = kDefaultEnumerationBound);

}  // namespace indrep
