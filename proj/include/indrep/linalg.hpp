#pragma once

#include <Eigen/Core>
#include <boost/rational.hpp>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<boost::rational<long long>>
    : GenericNumTraits<boost::rational<long long>> {
  typedef boost::rational<long long> Real;
  typedef boost::rational<long long> NonInteger;
  typedef boost::rational<long long> Nested;
  typedef long long Literal;
  static inline Real epsilon() { return {}; }
  static inline Real dummy_precision() { return {}; }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 8
  };
};

}  // namespace Eigen

namespace indrep {

using Rational = boost::rational<long long>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = DenseMatrix<Rational>;

std::string rational_to_string(const Rational& r);

/// Gauss-Jordan reduction to the canonical reduced row echelon form: unit
/// pivots, zeros above and below, rows ordered by pivot column, zero rows at
/// the bottom. Returns the pivot columns.
template <typename Scalar>
std::vector<int> rref_in_place(DenseMatrix<Scalar>& m) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar lead = m(row, col);
    m.row(row) /= lead;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Scalar factor = m(r, col);
      if (factor != Scalar(0)) m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

/// Rows spanning {x : m x = 0}, themselves in reduced row echelon form, so
/// equal kernels produce identical matrices.
template <typename Scalar>
DenseMatrix<Scalar> kernel_basis(DenseMatrix<Scalar> m) {
  const Eigen::Index n = m.cols();
  const std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;

  DenseMatrix<Scalar> basis(n - static_cast<Eigen::Index>(pivots.size()), n);
  basis.setZero();
  Eigen::Index out = 0;
  for (Eigen::Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(out, free_col) = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      basis(out, pivots[k]) = -m(static_cast<Eigen::Index>(k), free_col);
    ++out;
  }
  rref_in_place(basis);
  return basis;
}

}  // namespace indrep
