#include "indrep/commalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

namespace indrep {

namespace {

constexpr std::complex<double> kOne{1.0, 0.0};

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

int FiniteGroupTable::identity() const {
  const int n = order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mult(e, x) == x && mult(x, e) == x;
    if (ok) return e;
  }
  throw InvalidGroupTable("multiplication table has no identity");
}

void FiniteGroupTable::validate(double tol) const {
  const int n = order();
  if (n == 0 || mult.cols() != n)
    throw InvalidGroupTable("multiplication table is not square");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mult(i, j) < 0 || mult(i, j) >= n)
        throw InvalidGroupTable("multiplication table entry out of range");
    }
  }
  const int e = identity();
  (void)e;
  // Latin square: rows and columns are permutations, so inverses exist.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[mult(i, j)] || col[mult(j, i)])
        throw InvalidGroupTable("multiplication table is not a Latin square");
      row[mult(i, j)] = true;
      col[mult(j, i)] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (mult(mult(i, j), k) != mult(i, mult(j, k)))
          throw InvalidGroupTable("multiplication table is not associative");
      }
    }
  }
  if (char_table.cols() != n)
    throw InvalidGroupTable("character table width does not match the order");
  for (Eigen::Index a = 0; a < char_table.rows(); ++a) {
    for (Eigen::Index b = 0; b < char_table.rows(); ++b) {
      std::complex<double> inner{0.0, 0.0};
      for (int g = 0; g < n; ++g)
        inner += char_table(a, g) * std::conj(char_table(b, g));
      inner /= static_cast<double>(n);
      const double expected = a == b ? 1.0 : 0.0;
      if (std::abs(inner - expected) > tol)
        throw InvalidGroupTable("character table rows are not orthonormal");
    }
  }
}

std::vector<std::vector<int>> FiniteGroupTable::conjugacy_classes() const {
  const int n = order();
  std::vector<int> inverse(n, -1);
  const int e = identity();
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (mult(g, h) == e) inverse[g] = h;
    }
  }
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(n, false);
  for (int g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      const int conj = mult(mult(h, g), inverse[h]);
      if (!seen[conj]) {
        seen[conj] = true;
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

FiniteGroupTable FiniteGroupTable::trivial() {
  FiniteGroupTable t;
  t.mult = Eigen::MatrixXi::Zero(1, 1);
  t.char_table = Eigen::MatrixXcd::Constant(1, 1, kOne);
  return t;
}

FiniteGroupTable FiniteGroupTable::cyclic(int m) {
  if (m < 1) throw InvalidGroupTable("cyclic group order must be >= 1");
  FiniteGroupTable t;
  t.mult.resize(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) t.mult(i, j) = (i + j) % m;
  }
  t.char_table.resize(m, m);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      const double angle = 2.0 * std::numbers::pi * k * j / m;
      t.char_table(k, j) = std::polar(1.0, angle);
    }
  }
  // Pin the exact values where the angle is a multiple of pi/2.
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      const long long num = 4LL * k * j;
      if (num % m == 0) {
        switch ((num / m) % 4) {
          case 0: t.char_table(k, j) = {1.0, 0.0}; break;
          case 1: t.char_table(k, j) = {0.0, 1.0}; break;
          case 2: t.char_table(k, j) = {-1.0, 0.0}; break;
          case 3: t.char_table(k, j) = {0.0, -1.0}; break;
        }
      }
    }
  }
  return t;
}

FiniteGroupTable FiniteGroupTable::elementary_abelian_two(int d) {
  if (d < 0) throw InvalidGroupTable("rank must be >= 0");
  const int n = 1 << d;
  FiniteGroupTable t;
  t.mult.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t.mult(i, j) = i ^ j;
  }
  t.char_table.resize(n, n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const int parity = std::popcount(static_cast<unsigned>(k & j)) % 2;
      t.char_table(k, j) = parity ? -kOne : kOne;
    }
  }
  return t;
}

FiniteGroupTable FiniteGroupTable::dihedral_8() {
  // Elements r^a s^b at index a + 4b, with s r = r^{-1} s.
  FiniteGroupTable t;
  t.mult.resize(8, 8);
  auto index = [](int a, int b) { return ((a % 4) + 4) % 4 + 4 * (b % 2); };
  for (int a1 = 0; a1 < 4; ++a1) {
    for (int b1 = 0; b1 < 2; ++b1) {
      for (int a2 = 0; a2 < 4; ++a2) {
        for (int b2 = 0; b2 < 2; ++b2) {
          // (r^{a1} s^{b1})(r^{a2} s^{b2}) = r^{a1 + (-1)^{b1} a2} s^{b1+b2}
          const int a = b1 ? a1 - a2 : a1 + a2;
          t.mult(index(a1, b1), index(a2, b2)) = index(a, b1 + b2);
        }
      }
    }
  }
  t.char_table.resize(5, 8);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 2; ++b) {
      const int g = index(a, b);
      t.char_table(0, g) = kOne;
      t.char_table(1, g) = (b % 2) ? -kOne : kOne;
      t.char_table(2, g) = (a % 2) ? -kOne : kOne;
      t.char_table(3, g) = ((a + b) % 2) ? -kOne : kOne;
      const double two_dim[4] = {2.0, 0.0, -2.0, 0.0};
      t.char_table(4, g) = b ? 0.0 : two_dim[a];
    }
  }
  return t;
}

FiniteGroupTable FiniteGroupTable::from_elements(
    const std::vector<WeylElement>& elements) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw InvalidGroupTable("empty element list");
  auto find = [&elements, n](const WeylElement& w) {
    for (int k = 0; k < n; ++k) {
      if (elements[k] == w) return k;
    }
    throw InvalidGroupTable("element list is not closed under composition");
  };

  FiniteGroupTable t;
  t.mult.resize(n, n);
  for (int i = 0; i < n; ++i) {
    if (!elements[i].compose(elements[i]).is_identity())
      throw InvalidGroupTable(
          "character construction requires a group of involutions");
    for (int j = 0; j < n; ++j)
      t.mult(i, j) = find(elements[i].compose(elements[j]));
  }

  // Coordinates over F_2: greedily pick independent generators, then express
  // every element as a product of them.
  std::vector<int> generators;
  std::vector<std::vector<int>> coords(n);
  std::vector<int> reachable{t.identity()};
  coords[t.identity()] = {};
  auto reached = [&reachable](int g) {
    return std::find(reachable.begin(), reachable.end(), g) != reachable.end();
  };
  for (int g = 0; g < n; ++g) {
    if (reached(g)) continue;
    generators.push_back(g);
    const std::vector<int> snapshot = reachable;
    for (int h : snapshot) {
      const int gh = t.mult(g, h);
      std::vector<int> c = coords[h];
      c.push_back(static_cast<int>(generators.size()) - 1);
      coords[gh] = std::move(c);
      reachable.push_back(gh);
    }
  }
  const int d = static_cast<int>(generators.size());
  if ((1 << d) != n)
    throw InvalidGroupTable("element list does not form a two-group");

  t.char_table.resize(n, n);
  for (int mask = 0; mask < n; ++mask) {
    for (int g = 0; g < n; ++g) {
      int parity = 0;
      for (int gen : coords[g]) parity ^= (mask >> gen) & 1;
      t.char_table(mask, g) = parity ? -kOne : kOne;
    }
  }
  return t;
}

ProjectionSet build_projections(const FiniteGroupTable& tbl) {
  tbl.validate();
  const int n = tbl.order();
  ProjectionSet ps;
  ps.element_matrices.reserve(n);
  for (int r = 0; r < n; ++r) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int s = 0; s < n; ++s) m(tbl.mult(r, s), s) = kOne;
    ps.element_matrices.push_back(std::move(m));
  }
  const int e = tbl.identity();
  for (Eigen::Index rho = 0; rho < tbl.char_table.rows(); ++rho) {
    const double dim = tbl.char_table(rho, e).real();
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int r = 0; r < n; ++r)
      a += std::conj(tbl.char_table(rho, r)) * ps.element_matrices[r];
    a *= dim / static_cast<double>(n);
    ps.matrices.push_back(std::move(a));
  }
  return ps;
}

ProjectionChecks verify_projections(const ProjectionSet& ps) {
  ProjectionChecks checks;
  if (ps.matrices.empty()) return checks;
  const Eigen::Index n = ps.matrices.front().rows();

  double idem = 0.0, ortho = 0.0, central = 0.0;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t a = 0; a < ps.matrices.size(); ++a) {
    const Eigen::MatrixXcd& A = ps.matrices[a];
    sum += A;
    idem = std::max(idem, max_abs(A * A - A));
    for (std::size_t b = 0; b < ps.matrices.size(); ++b) {
      if (a != b) ortho = std::max(ortho, max_abs(A * ps.matrices[b]));
    }
    for (const Eigen::MatrixXcd& g : ps.element_matrices)
      central = std::max(central, max_abs(A * g - g * A));
  }
  const double partition =
      max_abs(sum - Eigen::MatrixXcd::Identity(n, n));

  checks.idempotent = idem <= ps.tolerance;
  checks.orthogonal = ortho <= ps.tolerance;
  checks.central = central <= ps.tolerance;
  checks.partition_of_identity = partition <= ps.tolerance;
  checks.max_defect = std::max({idem, ortho, central, partition});
  return checks;
}

DimensionCensus dimension_census(const FiniteGroupTable& tbl) {
  tbl.validate();
  DimensionCensus census;
  census.group_order = tbl.order();
  const int e = tbl.identity();
  for (Eigen::Index rho = 0; rho < tbl.char_table.rows(); ++rho) {
    const double dim = tbl.char_table(rho, e).real();
    const long long rounded = std::llround(dim);
    if (std::abs(dim - static_cast<double>(rounded)) > 1e-9 || rounded < 1)
      throw CensusMismatch("character degree is not a positive integer");
    census.sum_of_squares += rounded * rounded;
  }
  census.irrep_count = static_cast<long long>(tbl.conjugacy_classes().size());
  if (census.sum_of_squares != census.group_order)
    throw CensusMismatch("sum of squared degrees is " +
                         std::to_string(census.sum_of_squares) +
                         " but the group order is " +
                         std::to_string(census.group_order));
  return census;
}

}  // namespace indrep
