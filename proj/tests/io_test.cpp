#include "fixtures.hpp"

#include "idpcheck/errors.hpp"
#include "idpcheck/io.hpp"
#include "idpcheck/random_ideals.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace idpcheck;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(IDPCHECK_TEST_DATA) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    parse_ideal_text(text);
  } catch (const InputError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST(ParseIdeal, ImplicitVariablesAreSorted) {
  auto p = parse_ideal_text("u*v, w*u\nv*w  # comment\n");
  EXPECT_EQ(p.ideal.variables(), (std::vector<std::string>{"u", "v", "w"}));
  EXPECT_EQ(p.ideal.generators_string(), "u*v, u*w, v*w");
  EXPECT_TRUE(p.warnings.empty());
}

TEST(ParseIdeal, DeclarationFixesOrder) {
  auto p = parse_ideal_text("vars: z y x\nx*y, y*z");
  EXPECT_EQ(p.ideal.variables(), (std::vector<std::string>{"z", "y", "x"}));
  EXPECT_EQ(p.ideal.generator_string(0), "y*x");
}

TEST(ParseIdeal, UndeclaredNamesAreAppendedWithWarning) {
  auto p = parse_ideal_text("vars: b a\na*c, b*d");
  EXPECT_EQ(p.ideal.variables(), (std::vector<std::string>{"b", "a", "c", "d"}));
  EXPECT_FALSE(p.warnings.empty());
}

TEST(ParseIdeal, MinimalizesWithWarning) {
  auto p = parse_ideal_text("a*b, a*b*c, c");
  EXPECT_EQ(p.ideal.generators_string(), "a*b, c");
  EXPECT_EQ(p.warnings.size(), 1u);
}

TEST(ParseIdeal, ErrorsCarryPositions) {
  EXPECT_EQ(error_position("x*x*y"), (std::pair<std::size_t, std::size_t>{1, 3}));
  EXPECT_EQ(error_position("a*b\nc**d"), (std::pair<std::size_t, std::size_t>{2, 3}));
  EXPECT_EQ(error_position("a*b,\n"), (std::pair<std::size_t, std::size_t>{1, 4}));
  EXPECT_EQ(error_position("a*b\nvars: a b\n").first, 2u);
  EXPECT_EQ(error_position("# nothing\n"), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(error_position("vars: a a\na").first, 1u);
  EXPECT_EQ(error_position("a*1b").first, 1u);
}

TEST(ParseIdeal, DataFilesMatchFixtures) {
  EXPECT_EQ(parse_ideal_text(slurp("fig1.ideal")).ideal, testkit::fig1());
  EXPECT_EQ(parse_ideal_text(slurp("k24.ideal")).ideal, testkit::k24());
  EXPECT_EQ(parse_ideal_text(slurp("bowtie.ideal")).ideal, testkit::bowtie());
  EXPECT_EQ(parse_ideal_text(slurp("ih1.ideal")).ideal, testkit::ih1());
  EXPECT_EQ(parse_ideal_text(slurp("ih2.ideal")).ideal, testkit::ih2());
  EXPECT_EQ(parse_ideal_text(slurp("solv3.ideal")).ideal, testkit::solv3());
  EXPECT_EQ(polytope_from_ideal(testkit::rem32()), parse_matrix_file(slurp("rem32.mat")));
}

TEST(FormatIdeal, RoundTrip) {
  for (const auto& i : {testkit::fig1(), testkit::ih1(), testkit::ideal("vars: q p\np*q")}) {
    EXPECT_EQ(parse_ideal_text(format_ideal_text(i)).ideal, i);
  }
  for (const auto& i : random_ideals(3, 50)) EXPECT_EQ(parse_ideal_text(format_ideal_text(i)).ideal, i);
  EXPECT_EQ(format_ideal_text(testkit::tri()), "vars: u v w\nu*v\nu*w\nv*w\n");
}

TEST(Matrix, ParsesAndValidates) {
  auto p = parse_matrix_file("# comment\n2 3\n1 0 1\n0 1 1\n");
  EXPECT_EQ(p.vertex_count(), 2u);
  EXPECT_EQ(p.vertex(1), (Point{0, 1, 1}));
  EXPECT_THROW(parse_matrix_file("2 3\n1 0 1\n"), InputError);
  EXPECT_THROW(parse_matrix_file("1 3\n1 0\n"), InputError);
  EXPECT_THROW(parse_matrix_file("1 2\n1 2\n"), InputError);
  EXPECT_THROW(parse_matrix_file("2 2\n1 0\n1 0\n"), InputError);
  EXPECT_THROW(parse_matrix_file("1 2\n1 0\n0 1\n"), InputError);
  EXPECT_THROW(parse_matrix_file(""), InputError);
  try {
    parse_matrix_file("1 2\n1 x\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Matrix, Detection) {
  EXPECT_TRUE(looks_like_matrix("a.mat", "x*y"));
  EXPECT_TRUE(looks_like_matrix("a.txt", "# c\n6 7\n"));
  EXPECT_FALSE(looks_like_matrix("a.ideal", "a*b, c"));
  EXPECT_FALSE(looks_like_matrix("a.ideal", "vars: a b\na*b"));
}

TEST(WitnessFile, Parses) {
  auto c = parse_witness_file(slurp("bad.w"));
  EXPECT_EQ(c, (std::vector<Rational>{Rational(1, 2), Rational(1, 2), 0}));
  EXPECT_EQ(parse_witness_file("# c\n\n2/4\n0\n"), (std::vector<Rational>{Rational(1, 2), 0}));
  EXPECT_THROW(parse_witness_file("1/2 1/2\n"), InputError);
  EXPECT_THROW(parse_witness_file("1/0\n"), InputError);
  EXPECT_THROW(parse_witness_file("\n"), InputError);
}
