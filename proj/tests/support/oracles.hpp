#pragma once

// Independent reference computations. None of these call into the library
// routine they check; most are brute force.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "diophant/polynomial.hpp"
#include "diophant/syntax.hpp"

namespace oracle {

using diophant::BigInt;
using diophant::RingElement;

/// Product through the 2x2 matrix [[a, d*b], [b, a]] representing a + b*sqrt(d).
RingElement matrix_product(const RingElement& x, const RingElement& y);
/// Determinant of the representing matrix.
BigInt matrix_norm(const RingElement& x);

/// Polynomial evaluation by expanding each monomial with repeated multiplication.
RingElement naive_evaluate(const diophant::Polynomial& p, const std::vector<RingElement>& values);

/// n-th solution (x, y), n >= 0, of x^2 - (a^2-1) y^2 = 1 in naturals by scanning y.
std::pair<std::int64_t, std::int64_t> pell_by_scan(std::int64_t a, unsigned n);

/// Smallest y >= 1 with d*y^2 + 1 a square, with that root.
std::pair<std::int64_t, std::int64_t> pell_fundamental_by_scan(std::int64_t d);

/// Lexicographically greatest a >= b >= c >= d with a^2+b^2+c^2+d^2 = n.
std::array<std::int64_t, 4> four_squares_by_scan(std::int64_t n);

/// alpha(0)=0, alpha(1)=1, alpha(k+1) = 4 alpha(k) - alpha(k-1), k >= 0.
std::vector<BigInt> alpha_table(std::size_t count);

/// Cantor pairing read off by walking the diagonals x+y = 2, 3, ...
struct PairingTable {
  explicit PairingTable(std::uint64_t max_z);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> unpair;  // index z-1
  std::uint64_t pair(std::uint64_t x, std::uint64_t y) const;
};

/// Truth of a parsed formula at `point`, quantifiers ranging over [0, radius]
/// (naturals) or [-radius, radius] (integers). Only rational-integer rings.
bool evaluate_formula(const diophant::ParsedFormula& f, const std::vector<RingElement>& point,
                      std::int64_t radius, bool integers);

/// Certificate that the polynomial, with x0 fixed, has no root in naturals:
/// nonzero constant, one strict sign, or no root modulo 2.
bool naturals_nonroot_certificate(const diophant::Polynomial& p, const RingElement& x0);

}  // namespace oracle
