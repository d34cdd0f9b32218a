#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diophant/rings.hpp"

namespace diophant {

using Exponents = std::vector<std::uint32_t>;
using Assignment = std::vector<RingElement>;

struct Term {
  RingElement coeff;
  Exponents exponents;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Graded lexicographic order, largest monomial first.
bool grlex_before(const Exponents& lhs, const Exponents& rhs);

/// Multivariate polynomial over a ring in canonical sparse form.
///
/// Variables are v0..v(arity-1). Terms are kept with nonzero coefficients,
/// distinct exponent vectors and in graded-lex order, so `==` is equality of
/// polynomials (of the same arity). Arity is explicit and may exceed the
/// highest variable actually used.
class Polynomial {
 public:
  /// Zero polynomial over Z with arity 0.
  Polynomial() = default;
  /// Zero polynomial.
  Polynomial(RingDescriptor ring, std::size_t arity);

  static Polynomial constant(const RingElement& c, std::size_t arity);
  static Polynomial variable(RingDescriptor ring, std::size_t index, std::size_t arity);
  /// Builds the canonical form: sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingDescriptor ring, std::size_t arity, std::vector<Term> terms);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (zero if absent).
  RingElement constant_term() const;
  std::uint32_t total_degree() const noexcept;
  bool uses_variable(std::size_t index) const noexcept;
  /// Indices of variables with a nonzero exponent in some term, ascending.
  std::vector<std::size_t> used_variables() const;

  /// Same polynomial with a larger arity; IndexOutOfRange if a used variable
  /// would be dropped.
  Polynomial with_arity(std::size_t arity) const;

  /// Exact value at `values` (at least `arity()` entries, all in ring()).
  RingElement evaluate(std::span<const RingElement> values) const;

  /// Fix the variables listed in `indices` to `values`; arity is unchanged.
  Polynomial partial_evaluate(std::span<const std::size_t> indices,
                              std::span<const RingElement> values) const;

  Polynomial pow(unsigned exponent) const;
  Polynomial scaled(const RingElement& c) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Polynomial& q) { return p *= q; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  void require_same_ring(const Polynomial& other) const;

  RingDescriptor ring_;
  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

// Named forms used by the rest of the library.
RingElement poly_eval(const Polynomial& p, std::span<const RingElement> values);
Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_neg(const Polynomial& p);

/// Renames variable i to map[i]; the result has arity new_arity.
/// NonInjectiveMap if two variables collide, IndexOutOfRange if a target is
/// >= new_arity or the map is shorter than p.arity().
Polynomial remap_variables(const Polynomial& p, std::span<const std::size_t> map,
                           std::size_t new_arity);

/// p(images[0], ..., images[arity-1]); every image must share ring and
/// arity `arity`.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, std::size_t arity);

/// Writes the polynomial in the expression grammar ("x0^2 - 2*x1^2 - 1").
std::string to_text(const Polynomial& p);
/// Same, writing variable i as names[i].
std::string to_text(const Polynomial& p, std::span<const std::string> names);

}  // namespace diophant
