#include <gtest/gtest.h>

#include "diophant/error.hpp"
#include "diophant/numtheory.hpp"
#include "oracles.hpp"

using namespace diophant;

TEST(PellSequence, Examples) {
  auto p0 = pell_sequence(2, 0);
  EXPECT_EQ(p0.x, 1);
  EXPECT_EQ(p0.y, 0);
  auto p1 = pell_sequence(2, 1);
  EXPECT_EQ(p1.x, 2);
  EXPECT_EQ(p1.y, 1);
  auto p3 = pell_sequence(2, 3);
  EXPECT_EQ(p3.x, 26);
  EXPECT_EQ(p3.y, 15);
  EXPECT_EQ(p3.x * p3.x - 3 * p3.y * p3.y, 1);
  EXPECT_THROW(pell_sequence(1, 3), Error);
}

TEST(PellSequence, MatchesScanAndRingPowers) {
  for (std::int64_t a = 2; a <= 5; ++a) {
    for (unsigned n = 0; n <= 6; ++n) {
      const auto [x, y] = oracle::pell_by_scan(a, n);
      const auto p = pell_sequence(a, n);
      ASSERT_EQ(p.x, x);
      ASSERT_EQ(p.y, y);
    }
  }
  // (2 + sqrt 3)^n in Z[sqrt 3].
  const auto ring = RingDescriptor::quadratic(3);
  RingElement acc = RingElement::one(ring);
  for (unsigned n = 0; n <= 40; ++n) {
    const auto p = pell_sequence(2, n);
    ASSERT_EQ(p.x, acc.a());
    ASSERT_EQ(p.y, acc.b());
    acc = oracle::matrix_product(acc, RingElement(ring, 2, 1));
  }
}

TEST(PellCongruence, Examples) {
  const auto r = check_lemma5(2, 2, 3);
  EXPECT_EQ(r.y_n, 4);
  EXPECT_EQ(r.y_nk, 780);
  EXPECT_EQ(r.modulus, 256);
  EXPECT_EQ(r.lhs_residue, 144);
  EXPECT_EQ(r.rhs_residue, 144);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(check_lemma5(4, 3, 1).holds);
  const auto t = check_lemma5(3, 1, 5);
  EXPECT_EQ(t.modulus, 1);
  EXPECT_TRUE(t.holds);
}

TEST(FourSquares, Examples) {
  EXPECT_EQ(four_squares(0), (std::array<BigInt, 4>{0, 0, 0, 0}));
  EXPECT_EQ(four_squares(7), (std::array<BigInt, 4>{2, 1, 1, 1}));
  const auto s = four_squares(310);
  EXPECT_EQ(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3], 310);
  EXPECT_THROW(four_squares(-1), Error);
}

TEST(FourSquares, AgreesWithBruteForce) {
  for (std::int64_t n = 0; n <= 1000; ++n) {
    const auto want = oracle::four_squares_by_scan(n);
    const auto got = four_squares(n);
    for (int i = 0; i < 4; ++i) ASSERT_EQ(got[i], want[i]) << n;
  }
}

TEST(FourSquares, LargeInput) {
  const BigInt n("123456789012345678901");
  const auto s = four_squares(n);
  EXPECT_EQ(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3], n);
}

TEST(PellFundamental, Examples) {
  EXPECT_EQ(pell_fundamental(2), (std::pair<BigInt, BigInt>{3, 2}));
  EXPECT_EQ(pell_fundamental(3), (std::pair<BigInt, BigInt>{2, 1}));
  EXPECT_EQ(pell_fundamental(5), (std::pair<BigInt, BigInt>{9, 4}));
  EXPECT_EQ(pell_fundamental(61), (std::pair<BigInt, BigInt>{BigInt(1766319049), BigInt(226153980)}));
  EXPECT_THROW(pell_fundamental(12), Error);
}

TEST(PellFundamental, AgreesWithScan) {
  for (std::int64_t d = 2; d <= 60; ++d) {
    if (!is_square_free(d)) continue;
    const auto [x, y] = oracle::pell_fundamental_by_scan(d);
    const auto [a, b] = pell_fundamental(d);
    ASSERT_EQ(a, x) << d;
    ASSERT_EQ(b, y) << d;
  }
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(0), 0);
  EXPECT_EQ(alpha(1), 1);
  EXPECT_EQ(alpha(5), 209);
  EXPECT_EQ(alpha(8, BigInt(16)), 0);
  EXPECT_EQ(alpha(-3), -15);
  EXPECT_THROW(alpha(3, BigInt(1)), Error);
}

TEST(Alpha, TableAndPellAgree) {
  const auto ref = oracle::alpha_table(60);
  for (std::int64_t n = 0; n < 60; ++n) {
    ASSERT_EQ(alpha(n), ref[n]);
    ASSERT_EQ(alpha(n, BigInt(97)), ref[n] % 97);
  }
  for (unsigned n = 0; n <= 30; ++n) ASSERT_EQ(alpha(n), pell_sequence(2, n).y);
}

TEST(Alpha, PurelyPeriodic) {
  for (long p : {1, 3, 5}) {
    const BigInt m = 4 * (3 * p * p + 1);
    const auto period = alpha_period(m);
    EXPECT_EQ(alpha(static_cast<std::int64_t>(period), m), 0);
    EXPECT_EQ(alpha(static_cast<std::int64_t>(period) + 1, m), 1);
  }
}

TEST(FindOddIndex, Examples) {
  EXPECT_EQ(find_odd_index(1), 9u);
  const BigInt m = 112;
  const auto ref = oracle::alpha_table(400);
  std::uint64_t want = 0;
  for (std::uint64_t n = 5; n < 400; n += 2) {
    if (ref[n - 1] % m == 0) {
      want = n;
      break;
    }
  }
  ASSERT_NE(want, 0u);
  EXPECT_EQ(find_odd_index(3), want);
  for (long p : {-7, -3, -1, 1, 5, 9, 11}) {
    const auto n = find_odd_index(p);
    EXPECT_EQ(n % 2, 1u);
    EXPECT_GT(n, 3u);
    EXPECT_EQ(alpha(static_cast<std::int64_t>(n) - 1, BigInt(4 * (3 * p * p + 1))), 0);
  }
}

TEST(ExtGcd, Examples) {
  const auto a = ext_gcd(10864, 3);
  EXPECT_EQ(a.g, 1);
  EXPECT_EQ(a.r * 10864 + a.t * 3, 1);
  EXPECT_EQ(a.r, 1);
  EXPECT_EQ(a.t, -3621);
  const auto b = ext_gcd(6, 4);
  EXPECT_EQ(b.g, 2);
  EXPECT_EQ(b.r * 6 + b.t * 4, 2);
  const auto c = ext_gcd(0, 5);
  EXPECT_EQ(c.g, 5);
  EXPECT_EQ(c.r, 0);
  EXPECT_EQ(c.t, 1);
  try {
    ext_gcd(0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BothZero);
  }
}

TEST(ExtGcd, BezoutOnRange) {
  for (long u = -30; u <= 30; ++u) {
    for (long v = -30; v <= 30; ++v) {
      if (u == 0 && v == 0) continue;
      const auto r = ext_gcd(u, v);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), BigInt(u).get_mpz_t(), BigInt(v).get_mpz_t());
      ASSERT_EQ(r.g, g);
      ASSERT_EQ(r.r * u + r.t * v, r.g);
    }
  }
}

TEST(AlphaMultiplication, Examples) {
  const auto a = check_alpha_multiplication(1, 2);
  EXPECT_EQ(a.modulus, 4);
  EXPECT_EQ(a.lhs, 0);
  EXPECT_EQ(a.rhs, 3);
  EXPECT_FALSE(a.holds);
  const auto b = check_alpha_multiplication(3, 2);
  EXPECT_EQ(b.lhs, 0);
  EXPECT_EQ(b.rhs, 1);
  EXPECT_TRUE(check_alpha_multiplication(7, 1).holds);
  EXPECT_THROW(check_alpha_multiplication(2, 3), Error);
}
