#include "indrep/elliptic.hpp"

#include <sstream>

namespace indrep {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Subspace Subspace::full(int n) {
  Subspace s;
  s.ambient_dim = n;
  s.basis = RationalMatrix::Identity(n, n);
  return s;
}

Subspace Subspace::zero(int n) {
  Subspace s;
  s.ambient_dim = n;
  s.basis = RationalMatrix(0, n);
  return s;
}

Subspace Subspace::row_space(int n, RationalMatrix rows) {
  const std::vector<int> pivots = rref_in_place(rows);
  Subspace s;
  s.ambient_dim = n;
  s.basis = rows.topRows(static_cast<Eigen::Index>(pivots.size()));
  return s;
}

Subspace fixed_space(const WeylElement& w) {
  const int n = w.dim();
  const Eigen::MatrixXi action = w.matrix();
  RationalMatrix shifted(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      shifted(r, c) = Rational(action(r, c) - (r == c ? 1 : 0));
  }
  Subspace s;
  s.ambient_dim = n;
  s.basis = kernel_basis(std::move(shifted));
  return s;
}

namespace {

// Rows spanning the annihilator {c : b.c = 0 for every basis row b}.
RationalMatrix annihilator(const Subspace& s) {
  if (s.basis.rows() == 0) return RationalMatrix::Identity(s.ambient_dim, s.ambient_dim);
  return kernel_basis(RationalMatrix(s.basis));
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw DimensionMismatch("intersecting subspaces of different ambient spaces");
  const RationalMatrix ann_a = annihilator(a);
  const RationalMatrix ann_b = annihilator(b);
  RationalMatrix constraints(ann_a.rows() + ann_b.rows(), a.ambient_dim);
  constraints << ann_a, ann_b;
  Subspace s;
  s.ambient_dim = a.ambient_dim;
  s.basis = kernel_basis(std::move(constraints));
  return s;
}

Subspace intersect_all(int ambient_dim, std::span<const Subspace> spaces) {
  Subspace acc = Subspace::full(ambient_dim);
  for (const Subspace& s : spaces) acc = intersect(acc, s);
  return acc;
}

Subspace weyl_invariant_subspace(const RootSystem& rs) {
  std::vector<Subspace> fixed;
  fixed.reserve(rs.simple_roots.size());
  for (const Root& alpha : rs.simple_roots)
    fixed.push_back(fixed_space(reflection(rs, alpha)));
  return intersect_all(rs.dim(), fixed);
}

Subspace r_fixed_space(const RGroupReport& report, int ambient_dim) {
  std::vector<Subspace> fixed;
  fixed.reserve(report.r_group.size());
  for (const WeylElement& w : report.r_group) fixed.push_back(fixed_space(w));
  return intersect_all(ambient_dim, fixed);
}

namespace {

void require_abelian(const RGroupReport& report) {
  if (!report.is_abelian)
    throw NonAbelianR("the fixed-space criteria assume an abelian R-group");
}

}  // namespace

bool arthur_elliptic(const RGroupReport& report, const Subspace& z) {
  require_abelian(report);
  for (const WeylElement& w : report.r_group) {
    if (fixed_space(w) == z) return true;
  }
  return false;
}

bool arthur_elliptic(const RootSystem& rs, const RGroupReport& report) {
  return arthur_elliptic(report, weyl_invariant_subspace(rs));
}

bool herb_induced(const RGroupReport& report, int ambient_dim) {
  require_abelian(report);
  const Subspace target = r_fixed_space(report, ambient_dim);
  for (const WeylElement& w : report.r_group) {
    if (fixed_space(w) == target) return true;
  }
  return false;
}

}  // namespace indrep
