#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indrep/rootdata.hpp"

namespace indrep {

/// Element of a classical Weyl group as a signed permutation of coordinates:
/// w(e_j) = signs[j] * e_{perm[j]} (0-based internally).
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<int> perm, std::vector<int> signs);

  static WeylElement identity(int n);

  /// Builds with the family constraint checked eagerly: family A admits no
  /// sign flips, family D only an even number of them.
  static WeylElement checked(Family family, std::vector<int> perm,
                             std::vector<int> signs);

  int dim() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  bool is_identity() const;
  bool is_sign_change_only() const;  // trivial permutation part
  int flip_count() const;

  WeylElement compose(const WeylElement& other) const;  // this after other
  WeylElement inverse() const;

  Root apply(const Root& beta) const;  // throws DimensionMismatch
  Eigen::MatrixXi matrix() const;      // coordinate action

  /// Signed one-line notation, 1-based: entry j is signs[j]*(perm[j]+1).
  std::vector<int> one_line() const;
  std::string to_string() const;  // "[-2, 1, 3]"
  static WeylElement from_one_line(const std::vector<int>& word);

  /// Injective packing for dim <= 12, used as a visited key.
  std::uint64_t code() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

bool one_line_less(const WeylElement& a, const WeylElement& b);

bool family_admits(Family family, const WeylElement& w);

/// The reflection in a reduced root beta. Throws ForeignRoot.
WeylElement reflection(const RootSystem& rs, const Root& beta);

/// Number of positive roots sent to negative ones.
int length(const RootSystem& rs, const WeylElement& w);

WeylElement longest_element(const RootSystem& rs);

inline constexpr int kDefaultEnumerationBound = 8;
inline constexpr int kPackingDimLimit = 12;

/// The full Weyl group, generated breadth-first from the simple reflections,
/// returned in canonical order: by length, then lexicographically on the
/// signed one-line notation. Throws EnumerationBoundExceeded when the rank is
/// above `max_rank` (or the packing limit).
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs,
                                        int max_rank = kDefaultEnumerationBound);

}  // namespace indrep
