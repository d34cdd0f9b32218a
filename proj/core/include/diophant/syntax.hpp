#pragma once

// Text syntax for polynomials and positive-existential formulas.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | factor
//   factor  := atom ('^' nat)?
//   atom    := nat | 'x' nat | name | 'sqrtd' | 'i' | '(' expr ')'
//   formula := conj ('or' conj)*
//   conj    := prim ('and' prim)*
//   prim    := 'exists' name '(' formula ')' | 'forall' name '(' formula ')'
//            | 'not' prim | '(' formula ')' | expr '=' expr
//
// Free variables are x0, x1, ...; a quantifier may bind any name, including
// one of the form xK. Bound variables are renamed apart and numbered after
// the free ones. `or`, `not` and `forall` parse but do not compile.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "diophant/dioset.hpp"
#include "diophant/polynomial.hpp"

namespace diophant {

/// SyntaxError (with line and column), UnknownVariable for names other than
/// xK, RingLiteralError for sqrtd or i outside their ring. The arity is one
/// more than the highest variable index, raised to `min_arity`.
Polynomial parse_polynomial(std::string_view text, RingDescriptor ring, std::size_t min_arity = 0);

struct Formula {
  enum class Kind { Atom, And, Or, Not, Exists, Forall };

  Kind kind = Kind::Atom;
  Polynomial lhs;
  Polynomial rhs;
  /// Variable bound by Exists / Forall, after renaming.
  std::size_t bound = 0;
  /// The name written in the source for the bound variable.
  std::string bound_name;
  std::vector<Formula> children;

  friend bool operator==(const Formula&, const Formula&) = default;
};

struct ParsedFormula {
  RingDescriptor ring;
  /// Free variables are 0 .. free_count-1 (at least one).
  std::size_t free_count = 1;
  /// free_count plus the number of bound variables.
  std::size_t arity = 1;
  Formula root;

  friend bool operator==(const ParsedFormula&, const ParsedFormula&) = default;
};

ParsedFormula parse_formula(std::string_view text, RingDescriptor ring);

/// Set of free-variable tuples making the formula true. Conjunction becomes
/// set intersection and each quantifier a projection. UnsupportedConnective
/// for or / not / forall.
DiophantineSet compile_formula(const ParsedFormula& formula, SetDomain domain = SetDomain::Naturals);

/// Prints a formula so that parse_formula gives back an equal value. Bound
/// variable k is written xk.
std::string to_text(const ParsedFormula& formula);

}  // namespace diophant
