#include <gtest/gtest.h>

#include "diophant/error.hpp"
#include "diophant/json_io.hpp"
#include "diophant/syntax.hpp"
#include "generators.hpp"

using namespace diophant;
using namespace diophant::json_io;

TEST(JsonRing, RoundTrip) {
  for (const auto& r : {RingDescriptor::integers(), RingDescriptor::quadratic(2), RingDescriptor::quadratic(7),
                        RingDescriptor::gaussian()}) {
    EXPECT_EQ(ring_from_json(ring_to_json(r)), r);
  }
  EXPECT_EQ(ring_to_json(RingDescriptor::integers()), json("Z"));
  EXPECT_EQ(ring_to_json(RingDescriptor::gaussian()), json("gauss"));
  EXPECT_THROW(ring_from_json(json("Q")), Error);
  EXPECT_THROW(ring_from_json(json{{"quad", 4}}), Error);
}

TEST(JsonBigInt, LargeValuesAreStrings) {
  EXPECT_EQ(bigint_to_json(BigInt(-42)), json(-42));
  const BigInt big("123456789012345678901234567890");
  const auto j = bigint_to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(bigint_from_json(j), big);
  EXPECT_EQ(bigint_from_json(json("-17")), BigInt(-17));
  EXPECT_THROW(bigint_from_json(json("12x")), Error);
  EXPECT_THROW(bigint_from_json(json(1.5)), Error);
}

TEST(JsonPolynomial, SeededRoundTrip) {
  gen::Source src(20241);
  for (int i = 0; i < 200; ++i) {
    const auto ring = src.ring();
    const auto p = src.polynomial(ring, static_cast<std::size_t>(src.integer(1, 4)));
    const auto back = polynomial_from_json(json::parse(polynomial_to_json(p).dump()));
    ASSERT_EQ(back, p);
  }
}

TEST(JsonPolynomial, HugeCoefficient) {
  const auto p = parse_polynomial("99999999999999999999999*x0 - 1", RingDescriptor::integers());
  EXPECT_EQ(polynomial_from_json(json::parse(polynomial_to_json(p).dump())), p);
}

TEST(JsonPolynomial, MalformedInput) {
  EXPECT_THROW(polynomial_from_json(json{{"ring", "Z"}}), Error);
  EXPECT_THROW(polynomial_from_json(json::parse(R"({"ring":"Z","arity":1,"terms":[{"c":[1,0],"e":[1,2]}]})")),
               Error);
}

TEST(JsonSet, RoundTrip) {
  const auto z = RingDescriptor::integers();
  const auto s = DiophantineSet::from_polynomial(parse_polynomial("x0 - 2*x1", z, 2), 1);
  const auto back = set_from_json(set_to_json(s));
  EXPECT_EQ(back.q(), s.q());
  EXPECT_EQ(back.params(), 1u);
  EXPECT_EQ(back.aux(), 1u);
  EXPECT_EQ(back.domain(), SetDomain::Naturals);
}

TEST(JsonGaussWitness, RoundTrip) {
  const auto w = gauss_witness(3);
  const auto back = gauss_witness_from_json(json::parse(gauss_witness_to_json(w).dump()));
  EXPECT_EQ(back.values, w.values);
  EXPECT_TRUE(gauss_verify(back).holds);
  const auto report = gauss_report_to_json(gauss_verify(w));
  EXPECT_EQ(report.at("holds"), json(true));
}

TEST(JsonSystem, RoundTripAndValidation) {
  FormalSystem sys;
  sys.formulas = 2;
  sys.sentences = {true, true};
  sys.names = 2;
  sys.naming = {1, 0};
  sys.subst = {0, 1, 1, 1};
  const auto back = system_from_json(system_to_json(sys));
  EXPECT_EQ(back.formulas, sys.formulas);
  EXPECT_EQ(back.sentences, sys.sentences);
  EXPECT_EQ(back.naming, sys.naming);
  EXPECT_EQ(back.subst, sys.subst);
  auto bad = system_to_json(sys);
  bad["naming"] = json::array({0, 0});
  EXPECT_THROW(system_from_json(bad), Error);
}

TEST(JsonFunction2, RoundTrip) {
  FiniteFunction2 g{2, 3, {0, 1, 2, 0}};
  const auto back = function2_from_json(function2_to_json(g));
  EXPECT_EQ(back.table, g.table);
  EXPECT_EQ(back.codomain_size, 3u);
  EXPECT_THROW(function2_from_json(json::parse(R"({"T":2,"Y":2,"table":[[0,1],[2,0]]})")), Error);
}

TEST(JsonTriState, Shapes) {
  EXPECT_EQ(tristate_to_json(TriState{NonMember{}}).at("state"), json("nonmember"));
}
