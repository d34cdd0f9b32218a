#include <gtest/gtest.h>

#include "diophant/error.hpp"
#include "diophant/search.hpp"
#include "diophant/syntax.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace diophant;

namespace {

const RingDescriptor kZ = RingDescriptor::integers();

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

std::vector<std::int64_t> members_on(const DiophantineSet& s, std::int64_t hi, std::uint64_t witness_radius) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 0; v <= hi; ++v) {
    const std::vector<RingElement> pt{RingElement::integer(v)};
    if (is_member(membership(s, pt, SearchDomain::naturals(witness_radius)))) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(ParsePolynomial, Examples) {
  const auto p = parse_polynomial("x0^2 - 2*x1^2 - 1", kZ);
  EXPECT_EQ(p.terms().size(), 3u);
  EXPECT_EQ(p.arity(), 2u);
  const auto sq = parse_polynomial("(x0 + x1)^2", kZ);
  const Polynomial x0 = Polynomial::variable(kZ, 0, 2), x1 = Polynomial::variable(kZ, 1, 2);
  EXPECT_EQ(sq, x0 * x0 + (x0 * x1).scaled(RingElement::integer(2)) + x1 * x1);
  EXPECT_EQ(code_of([] { parse_polynomial("x0 -", kZ); }), ErrorCode::SyntaxError);
}

TEST(ParsePolynomial, ReportsPositions) {
  try {
    parse_polynomial("x0 +\n  * x1", kZ);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParsePolynomial, ErrorKinds) {
  EXPECT_EQ(code_of([] { parse_polynomial("y + 1", kZ); }), ErrorCode::UnknownVariable);
  EXPECT_EQ(code_of([] { parse_polynomial("sqrtd*x0", kZ); }), ErrorCode::RingLiteralError);
  EXPECT_EQ(code_of([] { parse_polynomial("i", RingDescriptor::quadratic(2)); }), ErrorCode::RingLiteralError);
  EXPECT_EQ(code_of([] { parse_polynomial("(x0", kZ); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_polynomial("x0^", kZ); }), ErrorCode::SyntaxError);
}

TEST(ParsePolynomial, RingLiterals) {
  const auto q = RingDescriptor::quadratic(2);
  const auto p = parse_polynomial("(1 + sqrtd)*x0", q);
  const std::vector<RingElement> pt{RingElement(q, 1, -1)};
  EXPECT_EQ(p.evaluate(pt), RingElement(q, -1, 0));
  const auto g = RingDescriptor::gaussian();
  EXPECT_EQ(parse_polynomial("i^2", g).constant_term(), RingElement(g, -1));
}

TEST(ParsePolynomial, PrintParseRoundTripCorpus) {
  gen::Source src(31337);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const auto ring = src.ring();
    const auto p = src.polynomial(ring, 4, 6, 3, 20);
    ASSERT_EQ(parse_polynomial(to_text(p), ring, 4), p) << to_text(p);
    ++checked;
  }
  EXPECT_GE(checked, 50);
}

TEST(ParseFormula, StructureAndPrinting) {
  const auto f = parse_formula("exists y (x0 = 2*y)", kZ);
  EXPECT_EQ(f.free_count, 1u);
  EXPECT_EQ(f.arity, 2u);
  EXPECT_EQ(f.root.kind, Formula::Kind::Exists);
  EXPECT_EQ(f.root.bound_name, "y");
  EXPECT_EQ(parse_formula(to_text(f), kZ), f);
}

TEST(ParseFormula, RoundTripCorpus) {
  for (const char* text : {"x0 = x1", "exists y (x0 = y^2) and x1 = 3", "exists a (exists b (x0 = a^2 + b^2))",
                           "x0 = 1 and x0 = 2", "(x0 = 1 and x1 = 2) and x2 = x0 + x1",
                           "exists x5 (x0 = x5 + 1)"}) {
    const auto f = parse_formula(text, kZ);
    EXPECT_EQ(parse_formula(to_text(f), kZ), f) << text;
  }
}

TEST(CompileFormula, Evens) {
  const auto s = compile_formula(parse_formula("exists y (x0 = 2*y)", kZ));
  EXPECT_EQ(s.params(), 1u);
  EXPECT_EQ(members_on(s, 10, 10), (std::vector<std::int64_t>{0, 2, 4, 6, 8, 10}));
}

TEST(CompileFormula, TautologyIsFull) {
  const auto s = compile_formula(parse_formula("x0 = x0", kZ));
  EXPECT_EQ(members_on(s, 20, 0).size(), 21u);
}

TEST(CompileFormula, ContradictionIsEmpty) {
  const auto s = compile_formula(parse_formula("x0=1 and x0=2", kZ));
  EXPECT_TRUE(members_on(s, 100, 0).empty());
}

TEST(CompileFormula, RejectsNonPositiveConnectives) {
  for (const char* text : {"not x0 = 1", "x0 = 1 or x0 = 2", "forall y (x0 = y)"}) {
    try {
      compile_formula(parse_formula(text, kZ));
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedConnective);
      EXPECT_NE(std::string(e.what()).find("cannot be compiled"), std::string::npos) << e.what();
    }
  }
}

// Compiled sets agree with bounded direct evaluation of the formula.
TEST(CompileFormula, SoundAgainstDirectEvaluation) {
  const std::int64_t radius = 4;
  for (const char* text : {"exists y (x0 = 2*y)", "exists y (x0 = y^2)", "exists a (exists b (x0 = a^2 + b^2))",
                           "exists y (x0 = y + 3) and exists z (x0 = 2*z)", "x0 = x1 + 1",
                           "exists y (x0 + y = x1)", "exists y (x0*y = 6)"}) {
    const auto f = parse_formula(text, kZ);
    const auto s = compile_formula(f);
    const auto points = box_points(SearchDomain::naturals(radius), f.free_count);
    for (const auto& pt : points) {
      const bool direct = oracle::evaluate_formula(f, pt, radius, false);
      const auto state = membership(s, pt, SearchDomain::naturals(radius));
      ASSERT_FALSE(is_nonmember(state) && direct) << text;
      ASSERT_EQ(is_member(state), direct) << text << " at " << pt[0].to_string();
    }
  }
}

TEST(CompileFormula, IntegerDomainSoundness) {
  const std::int64_t radius = 3;
  for (const char* text : {"exists y (x0 = y^2 - 2)", "exists y (x0 = 3*y) and exists z (x0 = z + z)"}) {
    const auto f = parse_formula(text, kZ);
    const auto s = compile_formula(f, SetDomain::Integers);
    for (const auto& pt : box_points(SearchDomain::integers(radius), f.free_count)) {
      ASSERT_EQ(is_member(membership(s, pt, SearchDomain::integers(radius))),
                oracle::evaluate_formula(f, pt, radius, true))
          << text;
    }
  }
}
