#pragma once

// Pairing functions on the positive integers, the enumeration P_1, P_2, ...
// of all polynomials with positive coefficients, the one-parameter sets D_n
// and the diagonal set V = {n : n not in D_n}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "diophant/dioset.hpp"
#include "diophant/polynomial.hpp"
#include "diophant/search.hpp"

namespace diophant {

/// Cantor pairing on positive integers: (x+y-2)(x+y-1)/2 + x.
/// DomainError if an argument is 0 or the result overflows.
std::uint64_t pairing(std::uint64_t x, std::uint64_t y);
/// Inverses: pairing(pairing_left(z), pairing_right(z)) = z.
std::uint64_t pairing_left(std::uint64_t z);
std::uint64_t pairing_right(std::uint64_t z);

/// P_1 = 1, P_{3i-1} = x_{i-1}, P_{3i} = P_{L(i)} + P_{R(i)},
/// P_{3i+1} = P_{L(i)} * P_{R(i)}; arity n. Memoized and thread-safe.
Polynomial nth_polynomial(std::uint64_t n);
/// Indices the recursion for P_n reads directly (empty for the base cases).
std::vector<std::uint64_t> recursion_children(std::uint64_t n);

/// D_n = {x0 : exists x1..xn, P_{L(n)} = P_{R(n)}} over N.
DiophantineSet universal_set(std::uint64_t n);

/// Searches for a witness that n is in D_n over growing shells [0, b]^k,
/// b = 1..budget, where k counts the variables that actually occur.
/// NonMember only with a certificate: the equation is a nonzero constant,
/// its coefficients all share one sign with a nonzero constant term, or it
/// has no root mod 2.
TriState diagonal_membership(std::uint64_t n, std::uint64_t budget);

struct DiagonalRow {
  std::uint64_t n = 0;
  TriState state;
  /// 1 when n is in V, i.e. when n was shown not to be in D_n. Empty when
  /// membership stayed unresolved.
  std::optional<int> chi_v;
};

std::vector<DiagonalRow> diagonal_report(std::uint64_t max_n, std::uint64_t budget,
                                         unsigned workers = 1);

}  // namespace diophant
