#include <doctest.h>

#include "indrep/commalg.hpp"

using namespace indrep;

TEST_CASE("order-two group gives the two averaging projections") {
  const FiniteGroupTable z2 = FiniteGroupTable::elementary_abelian_two(1);
  const ProjectionSet ps = build_projections(z2);
  REQUIRE(ps.matrices.size() == 2);

  Eigen::MatrixXcd swap(2, 2);
  swap << 0, 1, 1, 0;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  CHECK(((ps.matrices[0] - (id + swap) / 2.0).cwiseAbs().maxCoeff()) == 0.0);
  CHECK(((ps.matrices[1] - (id - swap) / 2.0).cwiseAbs().maxCoeff()) == 0.0);
  for (const auto& a : ps.matrices)
    CHECK(std::abs(a.trace().real() - 1.0) == 0.0);  // rank one
}

TEST_CASE("Klein group yields four rank-one projections summing to identity") {
  const ProjectionSet ps =
      build_projections(FiniteGroupTable::elementary_abelian_two(2));
  REQUIRE(ps.matrices.size() == 4);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(4, 4);
  for (const auto& a : ps.matrices) {
    sum += a;
    CHECK(std::abs(a.trace().real() - 1.0) == 0.0);
  }
  CHECK((sum - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  const ProjectionChecks checks = verify_projections(ps);
  CHECK(checks.idempotent);
  CHECK(checks.orthogonal);
  CHECK(checks.central);
  CHECK(checks.partition_of_identity);
  CHECK(checks.max_defect == 0.0);
}

TEST_CASE("the trivial group projects with the identity") {
  const ProjectionSet ps = build_projections(FiniteGroupTable::trivial());
  REQUIRE(ps.matrices.size() == 1);
  CHECK(ps.matrices[0](0, 0) == std::complex<double>(1.0, 0.0));
  CHECK(verify_projections(ps).max_defect == 0.0);
}

TEST_CASE("perturbed projections fail idempotency") {
  ProjectionSet ps = build_projections(FiniteGroupTable::elementary_abelian_two(2));
  ps.matrices[0](0, 0) += 1e-3;
  const ProjectionChecks checks = verify_projections(ps);
  CHECK_FALSE(checks.idempotent);
  CHECK(checks.max_defect > 1e-4);
}

TEST_CASE("projection trace equals squared degree") {
  for (const FiniteGroupTable& tbl :
       {FiniteGroupTable::elementary_abelian_two(3), FiniteGroupTable::dihedral_8(),
        FiniteGroupTable::cyclic(4)}) {
    const ProjectionSet ps = build_projections(tbl);
    const int e = tbl.identity();
    for (std::size_t rho = 0; rho < ps.matrices.size(); ++rho) {
      const double dim = tbl.char_table(static_cast<Eigen::Index>(rho), e).real();
      CHECK(std::abs(ps.matrices[rho].trace().real() - dim * dim) < 1e-9);
    }
  }
}

TEST_CASE("complex cyclic characters stay within tolerance") {
  const ProjectionChecks checks =
      verify_projections(build_projections(FiniteGroupTable::cyclic(3)));
  CHECK(checks.idempotent);
  CHECK(checks.orthogonal);
  CHECK(checks.central);
  CHECK(checks.partition_of_identity);
  CHECK(checks.max_defect < 1e-9);
}

TEST_CASE("dimension census") {
  for (int d = 0; d <= 3; ++d) {
    const DimensionCensus census =
        dimension_census(FiniteGroupTable::elementary_abelian_two(d));
    CHECK(census.group_order == (1 << d));
    CHECK(census.sum_of_squares == (1 << d));
    CHECK(census.irrep_count == (1 << d));
  }
  const DimensionCensus trivial = dimension_census(FiniteGroupTable::trivial());
  CHECK(trivial.group_order == 1);
  CHECK(trivial.sum_of_squares == 1);
  CHECK(trivial.irrep_count == 1);

  const DimensionCensus dihedral = dimension_census(FiniteGroupTable::dihedral_8());
  CHECK(dihedral.group_order == 8);
  CHECK(dihedral.sum_of_squares == 8);
  CHECK(dihedral.irrep_count == 5);
  int two_dimensional = 0;
  const FiniteGroupTable d8 = FiniteGroupTable::dihedral_8();
  for (Eigen::Index rho = 0; rho < d8.char_table.rows(); ++rho) {
    if (std::abs(d8.char_table(rho, d8.identity()).real() - 2.0) < 1e-12)
      ++two_dimensional;
  }
  CHECK(two_dimensional == 1);
}

TEST_CASE("a short character table fails the census") {
  FiniteGroupTable broken = FiniteGroupTable::elementary_abelian_two(1);
  broken.char_table = broken.char_table.topRows(1).eval();
  CHECK_THROWS_AS(dimension_census(broken), CensusMismatch);
}

TEST_CASE("invalid tables are rejected") {
  FiniteGroupTable bad = FiniteGroupTable::elementary_abelian_two(1);
  bad.mult(0, 0) = 1;  // breaks the identity row
  CHECK_THROWS_AS(build_projections(bad), InvalidGroupTable);

  FiniteGroupTable skewed = FiniteGroupTable::elementary_abelian_two(1);
  skewed.char_table(1, 1) = 1.0;  // rows no longer orthogonal
  CHECK_THROWS_AS(build_projections(skewed), InvalidGroupTable);

  // Latin square that is not associative.
  FiniteGroupTable loop;
  loop.mult.resize(5, 5);
  const int rows[5][5] = {{0, 1, 2, 3, 4},
                          {1, 0, 3, 4, 2},
                          {2, 4, 0, 1, 3},
                          {3, 2, 4, 0, 1},
                          {4, 3, 1, 2, 0}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) loop.mult(i, j) = rows[i][j];
  loop.char_table = Eigen::MatrixXcd::Zero(1, 5);
  CHECK_THROWS_AS(loop.validate(), InvalidGroupTable);
}

TEST_CASE("tables built from Weyl subgroups") {
  const RootSystem rs = build_root_system({Family::C, 2});
  const std::vector<WeylElement> klein = {
      WeylElement::identity(2), WeylElement::from_one_line({-1, 2}),
      WeylElement::from_one_line({1, -2}), WeylElement::from_one_line({-1, -2})};
  const FiniteGroupTable tbl = FiniteGroupTable::from_elements(klein);
  CHECK(tbl.order() == 4);
  CHECK_NOTHROW(tbl.validate());
  CHECK(dimension_census(tbl).irrep_count == 4);
  CHECK(verify_projections(build_projections(tbl)).max_defect == 0.0);

  // Not closed under composition.
  const std::vector<WeylElement> partial = {WeylElement::identity(2),
                                            WeylElement::from_one_line({-1, 2}),
                                            WeylElement::from_one_line({1, -2})};
  CHECK_THROWS_AS(FiniteGroupTable::from_elements(partial), InvalidGroupTable);

  // Contains an element of order four.
  const std::vector<WeylElement> cyclic4 = {
      WeylElement::identity(2), WeylElement::from_one_line({-2, 1}),
      WeylElement::from_one_line({-1, -2}), WeylElement::from_one_line({2, -1})};
  CHECK_THROWS_AS(FiniteGroupTable::from_elements(cyclic4), InvalidGroupTable);
}
