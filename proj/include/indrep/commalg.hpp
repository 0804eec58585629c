#pragma once

#include <Eigen/Core>
#include <vector>

#include "indrep/weyl.hpp"

namespace indrep {

/// Finite group given by a multiplication table together with its character
/// table. Character values are stored as complex doubles; for the built-in
/// groups (two-groups, cyclic 4, dihedral 8) every entry is exact.
struct FiniteGroupTable {
  Eigen::MatrixXi mult;         // mult(i,j) = index of g_i * g_j
  Eigen::MatrixXcd char_table;  // one row per irreducible, one column per element

  int order() const { return static_cast<int>(mult.rows()); }
  int identity() const;  // throws InvalidGroupTable when there is none

  /// Group axioms plus row orthogonality of the character table.
  void validate(double tol = 1e-9) const;

  std::vector<std::vector<int>> conjugacy_classes() const;

  static FiniteGroupTable trivial();
  static FiniteGroupTable cyclic(int m);
  static FiniteGroupTable elementary_abelian_two(int d);
  static FiniteGroupTable dihedral_8();

  /// Builds the table of a subgroup of a Weyl group given as an element list.
  /// Characters are constructed as sign homomorphisms, so the elements must
  /// all be involutions (the shape every supported R-group has).
  static FiniteGroupTable from_elements(const std::vector<WeylElement>& elements);
};

/// The projections A_rho = (dim rho / |R|) sum_r conj(chi_rho(r)) L_r built in
/// the regular representation L of the group.
struct ProjectionSet {
  std::vector<Eigen::MatrixXcd> matrices;
  std::vector<Eigen::MatrixXcd> element_matrices;  // regular representation
  double tolerance = 1e-9;
};

ProjectionSet build_projections(const FiniteGroupTable& tbl);

struct ProjectionChecks {
  bool idempotent = false;
  bool orthogonal = false;
  bool central = false;
  bool partition_of_identity = false;
  double max_defect = 0.0;
};

/// Measures ||A^2 - A||, ||A B|| for distinct projections, commutators with
/// every group element, and ||sum A - I||, all in the max-entry norm.
ProjectionChecks verify_projections(const ProjectionSet& ps);

struct DimensionCensus {
  long long group_order = 0;
  long long sum_of_squares = 0;
  long long irrep_count = 0;
};

/// Checks sum (dim rho)^2 = |R| and counts conjugacy classes. A mismatch
/// throws CensusMismatch.
DimensionCensus dimension_census(const FiniteGroupTable& tbl);

}  // namespace indrep
