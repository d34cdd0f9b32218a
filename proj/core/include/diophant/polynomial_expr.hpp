#pragma once

// Unexpanded polynomial expressions. Nested norm-form folds reach degrees in
// the hundreds, far beyond what a sparse expansion can hold, so they are kept
// as a tree over sparse leaves and evaluated directly.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "diophant/polynomial.hpp"

namespace diophant {

class PolynomialExpr {
 public:
  enum class Kind { Leaf, Sum, Difference, Product, Square, Scale };

  PolynomialExpr() : PolynomialExpr(Polynomial()) {}
  /// Implicit so a Polynomial can be passed wherever an expression is expected.
  PolynomialExpr(Polynomial leaf);  // NOLINT(google-explicit-constructor)

  static PolynomialExpr sum(std::vector<PolynomialExpr> children);
  static PolynomialExpr difference(const PolynomialExpr& lhs, const PolynomialExpr& rhs);
  static PolynomialExpr product(const PolynomialExpr& lhs, const PolynomialExpr& rhs);
  static PolynomialExpr square(const PolynomialExpr& inner);
  static PolynomialExpr scale(const RingElement& factor, const PolynomialExpr& inner);

  Kind kind() const noexcept { return node_->kind; }
  const RingDescriptor& ring() const noexcept { return node_->ring; }
  std::size_t arity() const noexcept { return node_->arity; }
  /// Upper bound on the total degree of the expanded polynomial.
  std::uint32_t degree_bound() const noexcept { return node_->degree; }

  /// The sparse leaf; only valid for Kind::Leaf.
  const Polynomial& leaf() const;
  const std::vector<PolynomialExpr>& children() const noexcept { return node_->children; }
  /// Multiplier of a Kind::Scale node.
  const RingElement& scale_factor() const noexcept { return node_->factor; }

  bool is_constant() const;
  bool uses_variable(std::size_t index) const;
  std::vector<std::size_t> used_variables() const;
  std::size_t node_count() const;

  RingElement evaluate(std::span<const RingElement> values) const;
  PolynomialExpr partial_evaluate(std::span<const std::size_t> indices,
                                  std::span<const RingElement> values) const;
  PolynomialExpr remap_variables(std::span<const std::size_t> map, std::size_t new_arity) const;
  PolynomialExpr with_arity(std::size_t arity) const;

  /// Expands to canonical sparse form. ExhaustionBudgetExceeded once an
  /// intermediate result has more than `term_budget` terms.
  Polynomial expand(std::size_t term_budget = 100000) const;

  /// Structure-preserving text, e.g. "(x0 - 1)^2 - 3*(x1)^2".
  std::string to_string() const;

 private:
  struct Node {
    Kind kind = Kind::Leaf;
    RingDescriptor ring;
    std::size_t arity = 0;
    std::uint32_t degree = 0;
    Polynomial leaf;
    RingElement factor;
    std::vector<PolynomialExpr> children;
  };

  explicit PolynomialExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static PolynomialExpr make(Kind kind, std::vector<PolynomialExpr> children,
                             RingElement factor = RingElement());

  std::shared_ptr<const Node> node_;
};

}  // namespace diophant
