#include "diophant/polynomial_expr.hpp"

#include <algorithm>
#include <set>

#include "diophant/error.hpp"

namespace diophant {

PolynomialExpr::PolynomialExpr(Polynomial leaf) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Leaf;
  node->ring = leaf.ring();
  node->arity = leaf.arity();
  node->degree = leaf.total_degree();
  node->leaf = std::move(leaf);
  node_ = std::move(node);
}

PolynomialExpr PolynomialExpr::make(Kind kind, std::vector<PolynomialExpr> children,
                                    RingElement factor) {
  if (children.empty()) fail(ErrorCode::ArityMismatch, "expression node without operands");
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->ring = children.front().ring();
  for (const auto& c : children) {
    if (!(c.ring() == node->ring)) {
      fail(ErrorCode::RingMismatch, c.ring().name() + " vs " + node->ring.name());
    }
    node->arity = std::max(node->arity, c.arity());
  }
  switch (kind) {
    case Kind::Sum:
    case Kind::Difference:
    case Kind::Scale:
      for (const auto& c : children) node->degree = std::max(node->degree, c.degree_bound());
      break;
    case Kind::Product:
      for (const auto& c : children) node->degree += c.degree_bound();
      break;
    case Kind::Square:
      node->degree = 2 * children.front().degree_bound();
      break;
    case Kind::Leaf:
      break;
  }
  if (kind == Kind::Scale && !(factor.ring() == node->ring)) {
    fail(ErrorCode::RingMismatch, "scale factor ring");
  }
  node->factor = std::move(factor);
  node->children = std::move(children);
  return PolynomialExpr(std::shared_ptr<const Node>(std::move(node)));
}

PolynomialExpr PolynomialExpr::sum(std::vector<PolynomialExpr> children) {
  if (children.size() == 1) return children.front();
  return make(Kind::Sum, std::move(children));
}

PolynomialExpr PolynomialExpr::difference(const PolynomialExpr& lhs, const PolynomialExpr& rhs) {
  return make(Kind::Difference, {lhs, rhs});
}

PolynomialExpr PolynomialExpr::product(const PolynomialExpr& lhs, const PolynomialExpr& rhs) {
  return make(Kind::Product, {lhs, rhs});
}

PolynomialExpr PolynomialExpr::square(const PolynomialExpr& inner) {
  return make(Kind::Square, {inner});
}

PolynomialExpr PolynomialExpr::scale(const RingElement& factor, const PolynomialExpr& inner) {
  return make(Kind::Scale, {inner}, factor);
}

const Polynomial& PolynomialExpr::leaf() const {
  if (node_->kind != Kind::Leaf) fail(ErrorCode::InternalInconsistency, "not a leaf expression");
  return node_->leaf;
}

bool PolynomialExpr::is_constant() const {
  if (kind() == Kind::Leaf) return leaf().is_constant();
  return std::all_of(children().begin(), children().end(),
                     [](const PolynomialExpr& c) { return c.is_constant(); });
}

bool PolynomialExpr::uses_variable(std::size_t index) const {
  if (kind() == Kind::Leaf) return leaf().uses_variable(index);
  return std::any_of(children().begin(), children().end(),
                     [index](const PolynomialExpr& c) { return c.uses_variable(index); });
}

std::vector<std::size_t> PolynomialExpr::used_variables() const {
  std::set<std::size_t> used;
  auto visit = [&used](const PolynomialExpr& e, auto&& self) -> void {
    if (e.kind() == Kind::Leaf) {
      for (auto i : e.leaf().used_variables()) used.insert(i);
      return;
    }
    for (const auto& c : e.children()) self(c, self);
  };
  visit(*this, visit);
  return {used.begin(), used.end()};
}

std::size_t PolynomialExpr::node_count() const {
  std::size_t count = 1;
  for (const auto& c : children()) count += c.node_count();
  return count;
}

RingElement PolynomialExpr::evaluate(std::span<const RingElement> values) const {
  if (values.size() < arity()) {
    fail(ErrorCode::ArityMismatch, "assignment has " + std::to_string(values.size()) +
                                       " values, expression needs " + std::to_string(arity()));
  }
  switch (kind()) {
    case Kind::Leaf:
      return leaf().evaluate(values);
    case Kind::Sum: {
      RingElement total = RingElement::zero(ring());
      for (const auto& c : children()) total += c.evaluate(values);
      return total;
    }
    case Kind::Difference:
      return children()[0].evaluate(values) - children()[1].evaluate(values);
    case Kind::Product:
      return children()[0].evaluate(values) * children()[1].evaluate(values);
    case Kind::Square: {
      const RingElement v = children()[0].evaluate(values);
      return v * v;
    }
    case Kind::Scale:
      return node_->factor * children()[0].evaluate(values);
  }
  fail(ErrorCode::InternalInconsistency, "unknown expression node");
}

namespace {

template <typename LeafFn>
PolynomialExpr rebuild(const PolynomialExpr& e, const LeafFn& on_leaf) {
  using Kind = PolynomialExpr::Kind;
  if (e.kind() == Kind::Leaf) return PolynomialExpr(on_leaf(e.leaf()));
  std::vector<PolynomialExpr> kids;
  kids.reserve(e.children().size());
  for (const auto& c : e.children()) kids.push_back(rebuild(c, on_leaf));
  switch (e.kind()) {
    case Kind::Sum:
      return PolynomialExpr::sum(std::move(kids));
    case Kind::Difference:
      return PolynomialExpr::difference(kids[0], kids[1]);
    case Kind::Product:
      return PolynomialExpr::product(kids[0], kids[1]);
    case Kind::Square:
      return PolynomialExpr::square(kids[0]);
    case Kind::Scale:
      return PolynomialExpr::scale(e.scale_factor(), kids[0]);
    case Kind::Leaf:
      break;
  }
  fail(ErrorCode::InternalInconsistency, "unknown expression node");
}

}  // namespace

PolynomialExpr PolynomialExpr::partial_evaluate(std::span<const std::size_t> indices,
                                                std::span<const RingElement> values) const {
  if (indices.size() != values.size()) fail(ErrorCode::ArityMismatch, "partial_evaluate");
  return rebuild(*this, [&](const Polynomial& p) {
    std::vector<std::size_t> idx;
    std::vector<RingElement> vals;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (indices[k] < p.arity()) {
        idx.push_back(indices[k]);
        vals.push_back(values[k]);
      }
    }
    return p.partial_evaluate(idx, vals);
  });
}

PolynomialExpr PolynomialExpr::remap_variables(std::span<const std::size_t> map,
                                               std::size_t new_arity) const {
  if (map.size() < arity()) {
    fail(ErrorCode::IndexOutOfRange, "variable map shorter than expression arity");
  }
  return rebuild(*this, [&](const Polynomial& p) {
    return diophant::remap_variables(p, map.first(p.arity()), new_arity);
  });
}

PolynomialExpr PolynomialExpr::with_arity(std::size_t arity) const {
  return rebuild(*this, [arity](const Polynomial& p) { return p.with_arity(arity); });
}

Polynomial PolynomialExpr::expand(std::size_t term_budget) const {
  auto check = [term_budget](Polynomial p) {
    if (p.terms().size() > term_budget) {
      fail(ErrorCode::ExhaustionBudgetExceeded,
           "expansion exceeds " + std::to_string(term_budget) + " terms");
    }
    return p;
  };
  switch (kind()) {
    case Kind::Leaf:
      return check(leaf().with_arity(arity()));
    case Kind::Sum: {
      Polynomial total(ring(), arity());
      for (const auto& c : children()) total = check(total + c.expand(term_budget));
      return total;
    }
    case Kind::Difference:
      return check(children()[0].expand(term_budget) - children()[1].expand(term_budget));
    case Kind::Product:
      return check(children()[0].expand(term_budget) * children()[1].expand(term_budget));
    case Kind::Square: {
      const Polynomial inner = children()[0].expand(term_budget);
      return check(inner * inner);
    }
    case Kind::Scale:
      return check(children()[0].expand(term_budget).scaled(node_->factor)).with_arity(arity());
  }
  fail(ErrorCode::InternalInconsistency, "unknown expression node");
}

namespace {

std::string wrapped(const PolynomialExpr& e) {
  if (e.kind() == PolynomialExpr::Kind::Leaf && e.leaf().terms().size() <= 1) {
    const std::string text = e.to_string();
    if (text.empty() || text.front() != '-') return text;
  }
  return "(" + e.to_string() + ")";
}

}  // namespace

std::string PolynomialExpr::to_string() const {
  switch (kind()) {
    case Kind::Leaf:
      return to_text(leaf());
    case Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i != 0) out += " + ";
        out += wrapped(children()[i]);
      }
      return out;
    }
    case Kind::Difference:
      return wrapped(children()[0]) + " - " + wrapped(children()[1]);
    case Kind::Product:
      return wrapped(children()[0]) + "*" + wrapped(children()[1]);
    case Kind::Square:
      return "(" + children()[0].to_string() + ")^2";
    case Kind::Scale:
      return node_->factor.to_string() + "*" + wrapped(children()[0]);
  }
  return {};
}

}  // namespace diophant
