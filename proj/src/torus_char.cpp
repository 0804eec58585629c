#include "indrep/torus_char.hpp"

#include <string>

namespace indrep {

void CharGroup::validate() const {
  if (free_rank < 0) throw ValidationError("free_rank must be >= 0");
  for (long long m : torsion_orders) {
    if (m < 2)
      throw ValidationError("torsion orders must be >= 2, got " + std::to_string(m));
  }
}

CharValue zero_value(const CharGroup& g) {
  return CharValue{std::vector<long long>(g.free_rank, 0),
                   std::vector<long long>(g.torsion_orders.size(), 0)};
}

CharValue reduced(const CharGroup& g, CharValue v) {
  if (static_cast<int>(v.free.size()) != g.free_rank ||
      v.torsion.size() != g.torsion_orders.size())
    throw ValidationError("character value shape does not match its group");
  for (std::size_t j = 0; j < v.torsion.size(); ++j) {
    const long long m = g.torsion_orders[j];
    v.torsion[j] = ((v.torsion[j] % m) + m) % m;
  }
  return v;
}

CharValue add(const CharGroup& g, const CharValue& a, const CharValue& b) {
  CharValue out = a;
  for (std::size_t j = 0; j < out.free.size(); ++j) out.free[j] += b.free[j];
  for (std::size_t j = 0; j < out.torsion.size(); ++j) out.torsion[j] += b.torsion[j];
  return reduced(g, std::move(out));
}

CharValue negated(const CharGroup& g, const CharValue& v) {
  CharValue out = v;
  for (auto& x : out.free) x = -x;
  for (auto& x : out.torsion) x = -x;
  return reduced(g, std::move(out));
}

bool is_zero(const CharValue& v) {
  for (long long x : v.free)
    if (x != 0) return false;
  for (long long x : v.torsion)
    if (x != 0) return false;
  return true;
}

ValuePredicates value_predicates(const CharGroup& g, const CharValue& v) {
  const CharValue twice = add(g, v, v);
  return ValuePredicates{is_zero(v), is_zero(twice)};
}

void TorusCharacter::validate() const {
  group.validate();
  for (const CharValue& v : values) {
    if (static_cast<int>(v.free.size()) != group.free_rank ||
        v.torsion.size() != group.torsion_orders.size())
      throw ValidationError("character value shape does not match its group");
    for (std::size_t j = 0; j < v.torsion.size(); ++j) {
      if (v.torsion[j] < 0 || v.torsion[j] >= group.torsion_orders[j])
        throw ValidationError("torsion entry out of range");
    }
  }
}

TorusCharacter act(const WeylElement& w, const TorusCharacter& chi) {
  if (w.dim() != chi.dim())
    throw DimensionMismatch("Weyl element and character dimensions differ");
  TorusCharacter out = chi;
  for (int j = 0; j < w.dim(); ++j) {
    const CharValue& v = chi.values[j];
    out.values[w.perm()[j]] = w.signs()[j] == 1 ? v : negated(chi.group, v);
  }
  return out;
}

std::vector<WeylElement> stabilizer(const RootSystem& rs, const TorusCharacter& chi,
                                    int max_rank) {
  if (chi.dim() != rs.dim())
    throw DimensionMismatch("character dimension does not match the root system");
  std::vector<WeylElement> fixers;
  for (const WeylElement& w : enumerate_weyl(rs, max_rank)) {
    if (act(w, chi) == chi) fixers.push_back(w);
  }
  return fixers;
}

}  // namespace indrep
