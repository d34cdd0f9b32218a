#pragma once

// N as a Diophantine subset of Z[sqrt d], and Z as a Diophantine subset of
// Z[i]: the equation systems, witness constructors and exact verifiers.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diophant/polynomial.hpp"
#include "diophant/polynomial_expr.hpp"

namespace diophant {

// ---- Z[sqrt d] -------------------------------------------------------------

/// Variable order of the system: t x y u v z w h q r s.
enum SigmaVar : std::size_t { kT, kX, kY, kU, kV, kZ, kW, kH, kQ, kR, kS, kSigmaArity };

/// Names in variable order.
const std::array<std::string, kSigmaArity>& sigma_names();

/// e = a^2 - 1 where (a, b) is the fundamental Pell solution for d.
BigInt sigma_e(std::int64_t d);

/// The five equations in 11 variables over Z[sqrt d]:
///   x^2 - e y^2 - 1,  u^2 - e v^2 - 1,  v^2 - y^2 t - z y^4,  t - w^2,
///   y^2 - t - 1 - h^2 - q^2 - r^2 - s^2.
std::vector<Polynomial> build_sigma(std::int64_t d);

struct SigmaWitness {
  std::int64_t d = 2;
  /// Pell index used for (x, y); 0 when the witness did not come from sigma_witness.
  std::uint64_t n = 0;
  std::array<RingElement, kSigmaArity> values;

  const RingElement& operator[](SigmaVar v) const { return values[v]; }
  Assignment assignment() const { return {values.begin(), values.end()}; }
};

/// Per-equation verdicts of the system at a witness.
std::array<bool, 5> sigma_check(const SigmaWitness& w);
bool sigma_verify(const SigmaWitness& w);

/// Witness with t = k^2: n least with y_n(a) > k, x = x_n, y = y_n,
/// u = x_nk, v = y_nk, w = k, z = (v^2 - y^2 t) / y^4, (h, q, r, s) the four
/// squares of y^2 - t - 1. InternalInconsistency if it does not verify.
SigmaWitness sigma_witness(std::int64_t d, std::uint64_t k);

/// Every solution with all eleven components in the box |a|, |b| <= radius,
/// sorted lexicographically in variable order. When `fixed_t` is given, t is
/// pinned to it (and need not lie in the box). Stops after `limit` solutions.
std::vector<SigmaWitness> sigma_box_solutions(std::int64_t d, std::uint64_t radius,
                                              const std::optional<RingElement>& fixed_t = std::nullopt,
                                              std::size_t limit = SIZE_MAX);

/// Arity of nat_definition: t, k1..k4 and four blocks of ten.
inline constexpr std::size_t kNatArity = 45;

/// Q(t, k1..k4, block_1..block_4), vanishing for some values of the other
/// variables exactly when t is a natural number. Copy i of the system has t
/// replaced by k_i^2; block i holds its x y u v z w h q r s. The copies and
/// t - k1^2 - k2^2 - k3^2 - k4^2 are joined with the norm-form fold.
PolynomialExpr nat_definition(std::int64_t d);

/// The point at which nat_definition(d) vanishes for a natural t.
Assignment nat_definition_witness(std::int64_t d, const BigInt& t);

/// Searches the box of the given radius for values of the 44 bound variables
/// making nat_definition(d) vanish at t. Complete over the box: the fold
/// vanishes exactly when each of its parts does, so the copies are scanned
/// independently once (k1..k4) is fixed.
std::optional<Assignment> nat_definition_box_search(std::int64_t d, const RingElement& t,
                                                    std::uint64_t radius);

/// R(a_0..a_{n-1}, blocks): P(a) folded with a copy of nat_definition for each
/// a_i, the bound variables of copy i at n + 44 i. P must be over Z.
PolynomialExpr reduce_equation_quad(const Polynomial& p, std::int64_t d);

/// The point at which reduce_equation_quad(p, d) vanishes, given a solution
/// of p in naturals. DomainError if `solution` does not solve p.
Assignment reduce_equation_witness(const Polynomial& p, std::int64_t d,
                                   const std::vector<BigInt>& solution);

/// Box search for R: a ranges over the ring box, each a_i is then checked
/// with nat_definition_box_search. Complete over the box.
std::optional<Assignment> reduce_equation_box_search(const Polynomial& p, std::int64_t d,
                                                     std::uint64_t radius);

// ---- Z[i] ------------------------------------------------------------------

/// Variable order of the seven-equation system.
enum GaussVar : std::size_t { gA, gP, gR, gX, gT, gS, gW, gQ, gZ, gY, gV, gU, kGaussArity };

const std::array<std::string, kGaussArity>& gauss_names();

/// The seven equations as polynomials over Z[i] (right-hand sides moved left):
///   2a + 1 - p,  r x + t (8 s + 3) - 1,  x - 4 (3 p^2 + 1) w,  p - q - z y,
///   v - q y,  u^2 - 4 u v + v^2 - 1,  x^2 - 4 x y + y^2 - 1.
std::vector<Polynomial> build_gauss();

struct GaussWitness {
  /// Index with x = alpha(n-1), y = alpha(n); 0 when not constructed here.
  std::uint64_t n = 0;
  std::array<RingElement, kGaussArity> values;

  const RingElement& operator[](GaussVar v) const { return values[v]; }
  Assignment assignment() const { return {values.begin(), values.end()}; }
};

struct GaussReport {
  bool holds = false;
  std::array<bool, 7> equations{};
  /// 1-based numbers of the failing equations.
  std::vector<int> failing;
};

GaussReport gauss_verify(const GaussWitness& w);

/// p = 2a + 1, n = find_odd_index(p), x = alpha(n-1), y = alpha(n),
/// u = alpha(pn + 1), v = alpha(pn), w = x / (4(3p^2 + 1)), q = v / y,
/// z = (p - q) / y, s least with gcd(x, 8s + 3) = 1 and (r, t) Bezout.
GaussWitness gauss_witness(const BigInt& a);

struct AlphaSolution {
  RingElement x;
  RingElement y;
  /// 0: (alpha(n+1), alpha(n)), 1: (alpha(n), alpha(n+1)),
  /// 2: (-alpha(n+1), -alpha(n)), 3: (-alpha(n), -alpha(n+1)); n >= 0.
  std::optional<int> family;
  std::uint64_t index = 0;
};

/// Which family (x, y) belongs to, if any.
std::optional<std::pair<int, std::uint64_t>> alpha_family(const RingElement& x, const RingElement& y);

/// All Gaussian (x, y) with every component in [-bound, bound] and
/// x^2 - 4xy + y^2 = 1, lexicographic by (x.a, x.b, y.a, y.b).
std::vector<AlphaSolution> alpha_equation_solutions(std::uint64_t bound);

}  // namespace diophant
