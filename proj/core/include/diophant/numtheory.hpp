#pragma once

// Pell sequences, four squares, continued fractions of sqrt(d), the
// alpha recurrence and Bezout coefficients.

#include <array>
#include <cstdint>
#include <optional>

#include "diophant/rings.hpp"

namespace diophant {

/// (x_n(a), y_n(a)) with x + y*sqrt(a^2-1) = (a + sqrt(a^2-1))^n.
struct PellPair {
  std::int64_t a = 2;
  std::uint64_t n = 0;
  BigInt x;
  BigInt y;
};

/// DomainError if a < 2. Checks x^2 - (a^2-1) y^2 = 1 before returning.
PellPair pell_sequence(std::int64_t a, std::uint64_t n);

struct Lemma5Report {
  bool holds = false;
  BigInt y_n;
  BigInt y_nk;
  BigInt modulus;      // y_n^4
  BigInt lhs_residue;  // y_nk^2 mod y_n^4
  BigInt rhs_residue;  // y_n^2 k^2 mod y_n^4
};

/// y_nk^2 == y_n^2 k^2 (mod y_n^4). DomainError unless a >= 2, n >= 1, k >= 1.
Lemma5Report check_lemma5(std::int64_t a, std::uint64_t n, std::uint64_t k);

/// k1 >= k2 >= k3 >= k4 >= 0 with k1^2 + k2^2 + k3^2 + k4^2 = n; the
/// lexicographically greatest such tuple. DomainError if n < 0.
std::array<BigInt, 4> four_squares(const BigInt& n);

/// Least (a, b) with b >= 1 and a^2 - d b^2 = 1, from the continued fraction
/// of sqrt(d). DomainError unless d >= 2 is square-free.
std::pair<BigInt, BigInt> pell_fundamental(std::int64_t d);

/// alpha(0) = 0, alpha(1) = 1, alpha(n+1) = 4 alpha(n) - alpha(n-1), extended
/// to negative n by alpha(-n) = -alpha(n). With a modulus (>= 2) the result is
/// reduced into [0, modulus).
BigInt alpha(std::int64_t n, const std::optional<BigInt>& modulus = std::nullopt);

/// Length of the period of (alpha(j), alpha(j+1)) mod m. PeriodExhausted if
/// the pair does not return to (0, 1) within 6m steps.
std::uint64_t alpha_period(const BigInt& modulus);

/// Least odd n > 3 with alpha(n-1) == 0 mod 4(3p^2+1).
std::uint64_t find_odd_index(const BigInt& p);

struct ExtGcd {
  BigInt g;
  BigInt r;
  BigInt t;
};

/// g = gcd(u, v) >= 0 and r*u + t*v = g. BothZero if u = v = 0.
ExtGcd ext_gcd(const BigInt& u, const BigInt& v);

struct AlphaMultiplicationReport {
  /// The reading with exponent n-1, as the congruence is printed.
  bool holds = false;
  /// Exponent p-1 instead of n-1.
  bool holds_exponent_p = false;
  /// alpha(pn) == (-1)^(p-1) p alpha(n-1)^(p-1) alpha(n) mod alpha(n)^2.
  bool holds_mod_square = false;
  BigInt modulus;
  BigInt lhs;
  BigInt rhs;
  BigInt rhs_exponent_p;
};

/// alpha(pn) == (-1)^p p alpha(n-1)^(n-1) (mod alpha(n)). DomainError unless
/// p is odd and positive and n >= 1.
AlphaMultiplicationReport check_alpha_multiplication(std::int64_t p, std::int64_t n);

/// Least representative of x mod m in [0, m).
BigInt mod_floor(const BigInt& x, const BigInt& m);

}  // namespace diophant
