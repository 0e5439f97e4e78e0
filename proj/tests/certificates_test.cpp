#include "fixtures.hpp"

#include "idpcheck/certificates.hpp"
#include "idpcheck/engine.hpp"
#include "idpcheck/errors.hpp"
#include "idpcheck/lattice.hpp"
#include "idpcheck/oracle.hpp"

#include <gtest/gtest.h>

using namespace idpcheck;

namespace {

LabeledHypergraph hg(const SquarefreeIdeal& i) { return build_from_ideal(i); }

bool verifies(const SquarefreeIdeal& i, const Witness& w) {
  return verify_witness(polytope_from_ideal(i), w).valid;
}

}  // namespace

TEST(ConnectedOdd, BothDirections) {
  auto tri = decide_connected_odd(hg(testkit::tri()));
  EXPECT_EQ(tri.verdict, RuleVerdict::normal);
  EXPECT_EQ(tri.reason, "odd vertex count 3");

  auto six = decide_connected_odd(hg(testkit::sixtri()));
  EXPECT_EQ(six.verdict, RuleVerdict::normal);
  EXPECT_EQ(six.reason, "even-dimensional edge {4,5,6}");

  auto hex = decide_connected_odd(hg(testkit::hex6()));
  ASSERT_EQ(hex.verdict, RuleVerdict::not_normal);
  EXPECT_EQ(hex.reason, "even vertex count, no even-dimensional edge");
  ASSERT_TRUE(hex.witness.has_value());
  EXPECT_EQ(hex.witness->degree, 3);
  EXPECT_EQ(hex.witness->coefficients, std::vector<Rational>(6, Rational(1, 2)));
  EXPECT_TRUE(verifies(testkit::hex6(), *hex.witness));
}

TEST(ConnectedOdd, Inapplicable) {
  EXPECT_EQ(decide_connected_odd(hg(testkit::c4())).verdict, RuleVerdict::inapplicable);
  EXPECT_EQ(decide_connected_odd(hg(testkit::fig1())).reason, "1-skeleton is not connected");
  EXPECT_THROW(decide_connected_odd(LabeledHypergraph(2, {{"a", {0, 1}}})), NotSeparatedError);
}

TEST(BalancedUniform, Outcomes) {
  EXPECT_EQ(balanced_uniform_rule(hg(testkit::c4())).verdict, RuleVerdict::normal);
  auto k24 = balanced_uniform_rule(hg(testkit::k24()));
  EXPECT_EQ(k24.verdict, RuleVerdict::inapplicable);
  EXPECT_NE(k24.reason.find("4,4,2,2,2,2"), std::string::npos) << k24.reason;
  auto tri = balanced_uniform_rule(hg(testkit::tri()));
  EXPECT_EQ(tri.verdict, RuleVerdict::inapplicable);
  EXPECT_EQ(tri.reason.rfind("special odd cycle", 0), 0u);
  EXPECT_EQ(balanced_uniform_rule(hg(testkit::tri()), 1).verdict, RuleVerdict::budget_exceeded);
}

TEST(TwoSolvable, Primes) {
  auto solv = two_solvable_certificate(hg(testkit::solv3()));
  ASSERT_TRUE(solv.has_value());
  EXPECT_EQ(solv->prime, 3);
  EXPECT_EQ(solv->color[0], 0);
  EXPECT_EQ(solv->red + solv->blue, 6u);

  auto k24 = two_solvable_certificate(hg(testkit::k24()));
  ASSERT_TRUE(k24.has_value());
  EXPECT_EQ(k24->prime, 2);
  EXPECT_EQ(k24->red, 2u);
  EXPECT_EQ(k24->blue, 4u);

  EXPECT_FALSE(two_solvable_certificate(hg(testkit::ideal("a*b, b*c, c*d"))).has_value());
  EXPECT_FALSE(two_solvable_certificate(hg(testkit::tri())).has_value());
  EXPECT_FALSE(two_solvable_certificate(hg(testkit::fig1())).has_value());
}

TEST(Bicolor, Solv3Witness) {
  auto h = hg(testkit::solv3());
  auto obs = bicolor_obstruction(h);
  ASSERT_TRUE(obs.has_value());
  EXPECT_EQ(obs->witness.degree, 3);
  for (std::size_t v = 0; v < 6; ++v)
    EXPECT_EQ(obs->witness.coefficients[v], obs->coloring.color[v] == 0 ? Rational(1, 3) : Rational(2, 3));
  EXPECT_TRUE(verifies(testkit::solv3(), obs->witness));
}

TEST(Exceptional, Bowtie) {
  auto h = hg(testkit::bowtie());
  auto r = find_exceptional_pair(h);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_EQ(r.pair->first.vertex_set(), (VertexSet{0, 1, 2}));
  EXPECT_EQ(r.pair->second.vertex_set(), (VertexSet{5, 6, 7}));
  EXPECT_EQ(r.pair->first_edge, (VertexSet{1, 2, 3}));
  EXPECT_EQ(r.pair->second_edge, (VertexSet{4, 5, 6}));
  EXPECT_EQ(r.pair->connection, (std::vector<VertexSet>{{3, 4}}));
  EXPECT_FALSE(exceptional_pair_violation(h, *r.pair).has_value());
  auto w = exceptional_witness(h, *r.pair);
  EXPECT_EQ(w.degree, 3);
  EXPECT_TRUE(verifies(testkit::bowtie(), w));
}

TEST(Exceptional, IhFamilies) {
  for (const auto& i : {testkit::ih1(), testkit::ih2()}) {
    auto h = hg(i);
    auto r = find_exceptional_pair(h);
    ASSERT_EQ(r.status, SearchStatus::found);
    auto w = exceptional_witness(h, *r.pair);
    EXPECT_EQ(w.degree, 5);
    EXPECT_TRUE(verify_witness(hypergraph_polytope(h), w).valid);
  }
}

TEST(Exceptional, DegeneratePairsAreRejected) {
  auto h = hg(testkit::bowtie());
  auto pair = *find_exceptional_pair(h).pair;

  auto same = pair;
  same.second = same.first;
  same.second_edge = same.first_edge;
  EXPECT_TRUE(exceptional_pair_violation(h, same).has_value());
  EXPECT_THROW(exceptional_witness(h, same), CertificateError);

  auto no_link = pair;
  no_link.connection = {{0, 1}};
  EXPECT_TRUE(exceptional_pair_violation(h, no_link).has_value());

  auto even = pair;
  even.first.vertices.pop_back();
  even.first.edges.pop_back();
  EXPECT_TRUE(exceptional_pair_violation(h, even).has_value());
}

TEST(Exceptional, AbsentOnSmallCases) {
  EXPECT_EQ(find_exceptional_pair(hg(testkit::tri())).status, SearchStatus::none);
  EXPECT_EQ(find_exceptional_pair(hg(testkit::k24())).status, SearchStatus::none);
  EXPECT_EQ(find_exceptional_pair(hg(testkit::hex6())).status, SearchStatus::none);
  EXPECT_EQ(find_exceptional_pair(hg(testkit::ih1()), false, 1).status, SearchStatus::budget_exceeded);
}

TEST(Exceptional, RelaxedConnectionFindsChains) {
  // The two triangles are linked only through a path of two edges.
  auto i = testkit::ideal("u1*u2, u1*u3, u2*u3, u3*u4, u4*w, w*u5, u5*u6, u5*u7, u6*u7");
  auto h = hg(i);
  EXPECT_EQ(find_exceptional_pair(h, false).status, SearchStatus::none);
  auto r = find_exceptional_pair(h, true);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_GE(r.pair->connection.size(), 2u);
  EXPECT_FALSE(exceptional_pair_violation(h, *r.pair, true).has_value());
  EXPECT_TRUE(exceptional_pair_violation(h, *r.pair, false).has_value());
  EXPECT_TRUE(verifies(i, exceptional_witness(h, *r.pair, true)));
}

TEST(Torsion, CoefficientsAreCombinationOverMultiplier) {
  auto p = polytope_from_ideal(testkit::rem32());
  auto cert = *torsion_check(p);
  auto c = torsion_coefficients(cert);
  ASSERT_EQ(c.size(), cert.combination.size());
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c[i], Rational(cert.combination[i]) / cert.multiplier);
  EXPECT_TRUE(verify_coefficients(p, c).valid);
}
