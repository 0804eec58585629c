#pragma once

#include <span>

#include "indrep/linalg.hpp"
#include "indrep/rgroup.hpp"

namespace indrep {

/// Rational subspace of the coordinate space, held as a canonical reduced
/// row echelon basis so that equality of subspaces is equality of data.
struct Subspace {
  int ambient_dim = 0;
  RationalMatrix basis;  // rows; 0 rows encode the zero subspace

  int dim() const { return static_cast<int>(basis.rows()); }
  bool is_zero() const { return basis.rows() == 0; }

  static Subspace full(int n);
  static Subspace zero(int n);
  static Subspace row_space(int n, RationalMatrix rows);  // canonicalizes

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim || a.basis.rows() != b.basis.rows())
      return false;
    for (Eigen::Index r = 0; r < a.basis.rows(); ++r) {
      for (Eigen::Index c = 0; c < a.basis.cols(); ++c) {
        if (a.basis(r, c) != b.basis(r, c)) return false;
      }
    }
    return true;
  }
};

/// {H : w.H = H}, the exact kernel of (action matrix - identity).
Subspace fixed_space(const WeylElement& w);

Subspace intersect(const Subspace& a, const Subspace& b);

/// Intersection of all spaces; the empty intersection is the full space.
Subspace intersect_all(int ambient_dim, std::span<const Subspace> spaces);

/// Common fixed space of the whole Weyl group: the diagonal line for the
/// GL-style family A, zero for the semisimple families.
Subspace weyl_invariant_subspace(const RootSystem& rs);

/// Intersection of the fixed spaces over the R-group.
Subspace r_fixed_space(const RGroupReport& report, int ambient_dim);

/// Some w in R has fixed space exactly z. Requires abelian R (NonAbelianR).
bool arthur_elliptic(const RGroupReport& report, const Subspace& z);
bool arthur_elliptic(const RootSystem& rs, const RGroupReport& report);

/// Some w in R has fixed space equal to the common fixed space of R.
bool herb_induced(const RGroupReport& report, int ambient_dim);

}  // namespace indrep
