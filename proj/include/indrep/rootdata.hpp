#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "indrep/errors.hpp"

namespace indrep {

enum class Family { A, B, C, D };

char family_letter(Family f);
Family family_from_letter(char c);  // throws ValidationError on anything but A/B/C/D

/// Cartan type of the ambient split group: family letter plus rank.
struct CartanSpec {
  Family family = Family::A;
  int rank = 1;

  /// rank >= 1 everywhere, rank >= 2 for family D. Throws UnsupportedRank.
  void validate() const;

  /// Family A of rank n is realized in n+1 coordinates (GL-style); the other
  /// families act on `rank` coordinates.
  int ambient_dim() const;

  friend bool operator==(const CartanSpec&, const CartanSpec&) = default;
};

/// A root as an integer coordinate vector in the e_i basis.
using Root = Eigen::VectorXi;

bool same_root(const Root& a, const Root& b);
bool lex_less(const Root& a, const Root& b);
std::string root_to_string(const Root& r);

/// Sign of a root: positive roots have a positive leading coordinate in all
/// supported families. Only meaningful on vectors that are actual roots.
bool is_positive(const Root& r);
Root sign_normalized(const Root& r);

bool is_root_of(const CartanSpec& spec, const Root& r);

struct RootSystem {
  CartanSpec spec;
  std::vector<Root> positive_roots;  // canonical lexicographic order
  std::vector<Root> simple_roots;    // canonical lexicographic order

  int dim() const { return spec.ambient_dim(); }
  bool contains_positive(const Root& r) const;
};

RootSystem build_root_system(const CartanSpec& spec);

/// Type-level duality A<->A, B<->C, D<->D; an involution. Only the Cartan
/// type of the dual is computed; which group realizes it is up to the caller.
CartanSpec dual_type(const CartanSpec& spec);

/// True when `subset` of the positive roots is closed under the reflections it
/// contains: for all beta, gamma in the subset, w_beta(gamma) sign-normalized
/// lies in the subset again. Throws ForeignRoot when an entry is not a
/// positive root of `rs`.
bool is_sub_root_system(const RootSystem& rs, const std::vector<Root>& subset);

}  // namespace indrep
