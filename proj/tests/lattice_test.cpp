#include "fixtures.hpp"
#include "oracles.hpp"

#include "idpcheck/lattice.hpp"
#include "idpcheck/random_ideals.hpp"

#include <gtest/gtest.h>

using namespace idpcheck;

namespace {

IntegerMatrix matrix(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

Rational determinant(const IntegerMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

void expect_valid_smith(const IntegerMatrix& input) {
  auto snf = smith_normal_form(input);
  EXPECT_EQ(snf.left * input * snf.right, snf.diagonal);
  EXPECT_EQ(abs(determinant(snf.left)), 1);
  EXPECT_EQ(abs(determinant(snf.right)), 1);
  for (std::size_t r = 0; r < snf.diagonal.rows(); ++r)
    for (std::size_t c = 0; c < snf.diagonal.cols(); ++c)
      if (r != c) EXPECT_EQ(snf.diagonal.at(r, c), 0);
  for (std::size_t i = 0; i < snf.invariant_factors.size(); ++i) {
    EXPECT_GT(snf.invariant_factors[i], 0);
    EXPECT_EQ(snf.diagonal.at(i, i), snf.invariant_factors[i]);
    if (i > 0) EXPECT_EQ(snf.invariant_factors[i] % snf.invariant_factors[i - 1], 0);
  }
}

}  // namespace

TEST(Smith, SmallMatrices) {
  expect_valid_smith(matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  auto snf = smith_normal_form(matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  EXPECT_EQ(snf.invariant_factors, (std::vector<Integer>{2, 6, 12}));
  expect_valid_smith(matrix({{0, 0}, {0, 0}}));
  expect_valid_smith(matrix({{1, 1, 0, 1}}));
  expect_valid_smith(matrix({{3}, {6}, {9}}));
}

TEST(Smith, HomogenizedFixtures) {
  for (const auto& i : {testkit::tri(), testkit::k24(), testkit::rem32(), testkit::solv3(), testkit::ih1()})
    expect_valid_smith(homogenized_vertex_matrix(polytope_from_ideal(i)));
}

TEST(Lattice, Membership) {
  Lattice l(matrix({{2, 0}, {0, 3}}));
  EXPECT_EQ(l.rank(), 2u);
  EXPECT_TRUE(l.contains({4, 9}));
  EXPECT_FALSE(l.contains({1, 3}));
  EXPECT_FALSE(l.contains({2, 1}));
  Lattice line(matrix({{1}, {1}}));
  EXPECT_TRUE(line.contains({-5, -5}));
  EXPECT_FALSE(line.contains({1, 2}));
  EXPECT_THROW(line.contains({1}), std::invalid_argument);
}

TEST(Lattice, BasisIsEchelon) {
  Lattice l(homogenized_vertex_matrix(polytope_from_ideal(testkit::k24())));
  for (std::size_t i = 0; i < l.rank(); ++i) {
    EXPECT_GT(l.basis()[i][l.pivots()[i]], 0);
    for (std::size_t j = 0; j < l.pivots()[i]; ++j) EXPECT_EQ(l.basis()[i][j], 0);
    if (i > 0) EXPECT_GT(l.pivots()[i], l.pivots()[i - 1]);
  }
}

TEST(Torsion, Rem32HasFactorTwo) {
  auto p = polytope_from_ideal(testkit::rem32());
  auto cert = torsion_check(p);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->multiplier, 2);
  EXPECT_FALSE(torsion_certificate_violation(p, *cert).has_value());
}

TEST(Torsion, TriangleHasNone) { EXPECT_FALSE(torsion_check(polytope_from_ideal(testkit::tri())).has_value()); }

TEST(Torsion, TamperedCertificateIsRejected) {
  auto p = polytope_from_ideal(testkit::rem32());
  auto cert = *torsion_check(p);
  auto bad = cert;
  bad.multiplier = 1;
  EXPECT_TRUE(torsion_certificate_violation(p, bad).has_value());
  bad = cert;
  bad.combination[0] += 1;
  EXPECT_TRUE(torsion_certificate_violation(p, bad).has_value());
}

TEST(Torsion, AgreesWithMinorGcd) {
  for (const auto& i : random_ideals(11, 60, {.max_variables = 6, .max_generators = 5})) {
    auto p = polytope_from_ideal(i);
    auto cert = torsion_check(p);
    EXPECT_EQ(cert.has_value(), testkit::has_torsion_by_minors(p)) << i.generators_string();
    if (cert) EXPECT_FALSE(torsion_certificate_violation(p, *cert).has_value()) << i.generators_string();
  }
}
