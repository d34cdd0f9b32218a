#pragma once

// Diophantine sets {x : exists y, q(x, y) = 0} and their closure operations.
//
// A set keeps the list of equations it was built from; q is their
// conjunction. Conjunction is a sum of squares over Z and the norm form
// p^2 - d' q^2 over the quadratic rings. A product of the equations would
// describe their union instead, which is why none of the constructors below
// multiply defining polynomials together.

#include <cstddef>
#include <span>
#include <vector>

#include "diophant/polynomial.hpp"

namespace diophant {

/// Which values the variables of a set over Z range over. Sets over the
/// quadratic rings always range over the whole ring and report Integers.
enum class SetDomain { Naturals, Integers };

class DiophantineSet {
 public:
  /// Every conjunct must be over `ring` with arity params + aux.
  DiophantineSet(RingDescriptor ring, std::size_t params, std::size_t aux,
                 std::vector<Polynomial> conjuncts, SetDomain domain = SetDomain::Naturals);

  /// Single defining polynomial; its arity must be params + aux.
  static DiophantineSet from_polynomial(const Polynomial& q, std::size_t params,
                                        SetDomain domain = SetDomain::Naturals);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t params() const noexcept { return params_; }
  std::size_t aux() const noexcept { return aux_; }
  std::size_t arity() const noexcept { return params_ + aux_; }
  SetDomain domain() const noexcept { return domain_; }
  const std::vector<Polynomial>& conjuncts() const noexcept { return conjuncts_; }
  /// The defining polynomial.
  const Polynomial& q() const noexcept { return q_; }

 private:
  RingDescriptor ring_;
  std::size_t params_;
  std::size_t aux_;
  SetDomain domain_;
  std::vector<Polynomial> conjuncts_;
  Polynomial q_;
};

/// Vanishes exactly where both p and q vanish: p^2 + q^2 over Z,
/// p^2 - d' q^2 over Z[sqrt d] and Z[i].
Polynomial conjoin(const Polynomial& p, const Polynomial& q);

/// n-ary form. Over Z the flat sum of squares; elsewhere the nested fold
/// ((c1^2 - d' c2^2)^2 - d' c3^2)^2 ... Zero conjuncts are skipped; an empty
/// list gives the zero polynomial.
Polynomial conjoin_all(RingDescriptor ring, std::size_t arity, std::span<const Polynomial> parts);

/// 1-based strictly increasing subset of {1, ..., n}.
struct IndexSet {
  std::size_t n = 0;
  std::vector<std::size_t> s;

  /// BadIndexSet unless 1 <= s_1 < ... < s_l <= n.
  void validate() const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

DiophantineSet set_singleton(const std::vector<RingElement>& point,
                             SetDomain domain = SetDomain::Naturals);
/// All of ring^params (no equations).
DiophantineSet fullset(RingDescriptor ring, std::size_t params,
                       SetDomain domain = SetDomain::Naturals);
/// Defined by the constant 1.
DiophantineSet emptyset(RingDescriptor ring, std::size_t params,
                        SetDomain domain = SetDomain::Naturals);

/// A x B; layout [A params, B params, A aux, B aux].
DiophantineSet set_product(const DiophantineSet& a, const DiophantineSet& b);
/// Same parameter count required; layout [params, A aux, B aux].
DiophantineSet set_intersect(const DiophantineSet& a, const DiophantineSet& b);
/// Image under pi_S; dropped parameters become the first aux variables.
DiophantineSet set_project(const DiophantineSet& a, const IndexSet& keep);
/// {(x, pi_S(x))} with n + |S| parameters.
DiophantineSet proj_graph(std::size_t n, const IndexSet& keep,
                          RingDescriptor ring = RingDescriptor::integers(),
                          SetDomain domain = SetDomain::Naturals);
/// f^-1(V) = pi_{1..r}(f cap (full(r) x V)) for a relation f with r + s
/// parameters and V with s parameters.
DiophantineSet set_preimage(const DiophantineSet& f, const DiophantineSet& v);
/// g(h_1, ..., h_n): each h_i has k inputs and one value, g has n inputs and
/// s values. The result has k + s parameters.
DiophantineSet set_compose(const DiophantineSet& g, const std::vector<DiophantineSet>& hs);
/// Parameter i of the result is parameter order[i] of `a`.
DiophantineSet set_reorder_params(const DiophantineSet& a, std::span<const std::size_t> order);

/// Graphs {(x, y, x + y)}, {(x, y, x * y)} and {(x, x)}.
DiophantineSet graph_add(RingDescriptor ring = RingDescriptor::integers(),
                         SetDomain domain = SetDomain::Naturals);
DiophantineSet graph_mul(RingDescriptor ring = RingDescriptor::integers(),
                         SetDomain domain = SetDomain::Naturals);
DiophantineSet graph_identity(RingDescriptor ring = RingDescriptor::integers(),
                              SetDomain domain = SetDomain::Naturals);

namespace debug {
/// Fault injection for the self-check: when set, conjoin multiplies instead.
void set_conjoin_fault(bool enabled);
bool conjoin_fault();
}  // namespace debug

}  // namespace diophant
