#include <gtest/gtest.h>

#include "diophant/error.hpp"
#include "diophant/search.hpp"
#include "diophant/syntax.hpp"
#include "generators.hpp"

using namespace diophant;

namespace {

const RingDescriptor kZ = RingDescriptor::integers();

Polynomial zp(const char* text, std::size_t arity = 0) { return parse_polynomial(text, kZ, arity); }

}  // namespace

TEST(SolveBounded, Examples) {
  const auto st = solve_bounded(zp("x0^2 - 9"), SearchDomain::integers(5), 1);
  ASSERT_TRUE(is_member(st));
  EXPECT_EQ(std::get<Member>(st).witness[0], RingElement::integer(-3));
  EXPECT_TRUE(is_nonmember(solve_bounded(zp("1"), SearchDomain::integers(5), 0)));
  const auto far = solve_bounded(zp("x0 - 10"), SearchDomain::integers(5), 1);
  ASSERT_TRUE(is_unknown(far));
  EXPECT_EQ(std::get<Unknown>(far).radius, 5u);
}

TEST(SolveBounded, FixedPrefix) {
  const std::vector<RingElement> fixed{RingElement::integer(12)};
  const auto st = solve_bounded(zp("x0 - x1*x2"), SearchDomain::naturals(6), 2, fixed);
  ASSERT_TRUE(is_member(st));
  const auto& w = std::get<Member>(st).witness;
  EXPECT_EQ(w[1], RingElement::integer(2));
  EXPECT_EQ(w[2], RingElement::integer(6));
}

TEST(SolveBounded, ArityChecked) {
  try {
    solve_bounded(zp("x0 + x1"), SearchDomain::integers(1), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
  }
}

TEST(SolveBounded, RingBoxOrder) {
  const auto g = RingDescriptor::gaussian();
  const auto q = parse_polynomial("x0^2 + 1", g);
  const auto st = solve_bounded(q, SearchDomain::ring_box(g, 2), 1);
  ASSERT_TRUE(is_member(st));
  EXPECT_EQ(std::get<Member>(st).witness[0], RingElement(g, 0, -1));
}

TEST(SearchDomain, Validation) {
  EXPECT_THROW((SearchDomain{RingDescriptor::gaussian(), ScanKind::Naturals, 3}.validate()), Error);
  EXPECT_EQ(SearchDomain::naturals(3).values().size(), 4u);
  EXPECT_EQ(SearchDomain::integers(3).values().size(), 7u);
  EXPECT_EQ(SearchDomain::ring_box(RingDescriptor::quadratic(2), 1).values().size(), 9u);
}

TEST(EnumerateMembers, Examples) {
  const auto evens = DiophantineSet::from_polynomial(zp("x0 - 2*x1"), 1);
  const auto got = enumerate_members(evens, SearchDomain::naturals(10), 10);
  std::vector<RingElement> pts;
  for (const auto& m : got) pts.push_back(m.point[0]);
  std::vector<RingElement> want;
  for (long v : {0, 2, 4, 6, 8, 10}) want.push_back(RingElement::integer(v));
  EXPECT_EQ(pts, want);
  EXPECT_TRUE(enumerate_members(emptyset(kZ, 1), SearchDomain::naturals(3), 5).empty());
  const auto single = enumerate_members(set_singleton({RingElement::integer(3), RingElement::integer(5)}),
                                        SearchDomain::naturals(0), 6);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].point, (Assignment{RingElement::integer(3), RingElement::integer(5)}));
}

TEST(SearchProperties, WitnessEchoDeterminismMonotonicity) {
  gen::Source src(8080);
  for (int i = 0; i < 60; ++i) {
    const RingDescriptor ring = src.ring();
    const auto q = src.polynomial(ring, 3, 3, 2, 3);
    const auto dom = ring.is_integers() ? SearchDomain::integers(3) : SearchDomain::ring_box(ring, 2);
    const auto one = solve_bounded(q, dom, 3);
    SearchOptions many;
    many.workers = 4;
    const auto four = solve_bounded(q, dom, 3, {}, many);
    ASSERT_EQ(state_name(one), state_name(four));
    if (const auto* m = std::get_if<Member>(&one)) {
      ASSERT_TRUE(q.evaluate(m->witness).is_zero());
      ASSERT_EQ(m->witness, std::get<Member>(four).witness);
      auto bigger = dom;
      bigger.radius += 1;
      ASSERT_TRUE(is_member(solve_bounded(q, bigger, 3)));
    }
  }
}

TEST(SearchProperties, ExpressionAndPolynomialAgree) {
  const auto p = zp("x0 + x1 - 4", 2);
  const auto e = PolynomialExpr::sum({PolynomialExpr::square(p), PolynomialExpr::square(zp("x0 - x1", 2))});
  const auto a = solve_bounded(e, SearchDomain::naturals(5), 2);
  ASSERT_TRUE(is_member(a));
  EXPECT_EQ(std::get<Member>(a).witness, (Assignment{RingElement::integer(2), RingElement::integer(2)}));
}
