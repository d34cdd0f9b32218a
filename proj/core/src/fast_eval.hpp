#pragma once

// Overflow-checked 128-bit evaluation used to skip exact arithmetic on the
// hot path of box scans. Any overflow makes the caller fall back to BigInt.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "diophant/polynomial.hpp"
#include "diophant/polynomial_expr.hpp"

namespace diophant::detail {

__extension__ typedef __int128 i128;

struct SmallValue {
  i128 a = 0;
  i128 b = 0;
};

inline bool small_add(const SmallValue& x, const SmallValue& y, SmallValue& out) {
  return !__builtin_add_overflow(x.a, y.a, &out.a) && !__builtin_add_overflow(x.b, y.b, &out.b);
}

inline bool small_sub(const SmallValue& x, const SmallValue& y, SmallValue& out) {
  return !__builtin_sub_overflow(x.a, y.a, &out.a) && !__builtin_sub_overflow(x.b, y.b, &out.b);
}

inline bool small_mul(const SmallValue& x, const SmallValue& y, i128 radicand, SmallValue& out) {
  if (x.b == 0 && y.b == 0) {
    out.b = 0;
    return !__builtin_mul_overflow(x.a, y.a, &out.a);
  }
  i128 aa, bb, dbb, ab, ba;
  if (__builtin_mul_overflow(x.a, y.a, &aa) || __builtin_mul_overflow(x.b, y.b, &bb) ||
      __builtin_mul_overflow(bb, radicand, &dbb) || __builtin_mul_overflow(x.a, y.b, &ab) ||
      __builtin_mul_overflow(x.b, y.a, &ba)) {
    return false;
  }
  return !__builtin_add_overflow(aa, dbb, &out.a) && !__builtin_add_overflow(ab, ba, &out.b);
}

inline std::optional<SmallValue> to_small(const RingElement& x) {
  if (!fits_int64(x.a()) || !fits_int64(x.b())) return std::nullopt;
  return SmallValue{static_cast<i128>(x.a().get_si()), static_cast<i128>(x.b().get_si())};
}

class FastEvaluator {
 public:
  explicit FastEvaluator(const Polynomial& p) : radicand_(p.ring().radicand()) {
    root_ = add_leaf(p);
  }
  explicit FastEvaluator(const PolynomialExpr& e) : radicand_(e.ring().radicand()) {
    root_ = add_expr(e);
  }

  bool usable() const noexcept { return usable_; }

  /// Value at `point` (indexed by variable), or nullopt on overflow.
  std::optional<SmallValue> evaluate(std::span<const SmallValue> point) const {
    if (!usable_) return std::nullopt;
    SmallValue out;
    if (!eval(root_, point, out)) return std::nullopt;
    return out;
  }

  /// True/false when the value fits, nullopt when exact arithmetic is needed.
  std::optional<bool> is_zero(std::span<const SmallValue> point) const {
    auto v = evaluate(point);
    if (!v) return std::nullopt;
    return v->a == 0 && v->b == 0;
  }

 private:
  struct FastTerm {
    SmallValue coeff;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
  };
  struct Node {
    PolynomialExpr::Kind kind = PolynomialExpr::Kind::Leaf;
    std::vector<FastTerm> terms;
    std::vector<std::size_t> children;
    SmallValue factor;
  };

  std::size_t add_leaf(const Polynomial& p) {
    Node node;
    for (const auto& t : p.terms()) {
      auto c = to_small(t.coeff);
      if (!c) {
        usable_ = false;
        break;
      }
      FastTerm ft{*c, {}};
      for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        if (t.exponents[i] != 0) ft.factors.emplace_back(static_cast<std::uint32_t>(i), t.exponents[i]);
      }
      node.terms.push_back(std::move(ft));
    }
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  std::size_t add_expr(const PolynomialExpr& e) {
    if (e.kind() == PolynomialExpr::Kind::Leaf) return add_leaf(e.leaf());
    Node node;
    node.kind = e.kind();
    for (const auto& c : e.children()) node.children.push_back(add_expr(c));
    if (e.kind() == PolynomialExpr::Kind::Scale) {
      auto f = to_small(e.scale_factor());
      if (!f) usable_ = false;
      else node.factor = *f;
    }
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  bool eval(std::size_t index, std::span<const SmallValue> point, SmallValue& out) const {
    using Kind = PolynomialExpr::Kind;
    const Node& node = nodes_[index];
    switch (node.kind) {
      case Kind::Leaf: {
        SmallValue total;
        for (const auto& t : node.terms) {
          SmallValue term = t.coeff;
          for (const auto& [var, exp] : t.factors) {
            for (std::uint32_t k = 0; k < exp; ++k) {
              if (!small_mul(term, point[var], radicand_, term)) return false;
            }
          }
          if (!small_add(total, term, total)) return false;
        }
        out = total;
        return true;
      }
      case Kind::Sum: {
        SmallValue total;
        for (auto c : node.children) {
          SmallValue v;
          if (!eval(c, point, v) || !small_add(total, v, total)) return false;
        }
        out = total;
        return true;
      }
      case Kind::Difference: {
        SmallValue x, y;
        return eval(node.children[0], point, x) && eval(node.children[1], point, y) &&
               small_sub(x, y, out);
      }
      case Kind::Product: {
        SmallValue x, y;
        return eval(node.children[0], point, x) && eval(node.children[1], point, y) &&
               small_mul(x, y, radicand_, out);
      }
      case Kind::Square: {
        SmallValue x;
        return eval(node.children[0], point, x) && small_mul(x, x, radicand_, out);
      }
      case Kind::Scale: {
        SmallValue x;
        return eval(node.children[0], point, x) && small_mul(node.factor, x, radicand_, out);
      }
    }
    return false;
  }

  i128 radicand_;
  bool usable_ = true;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

}  // namespace diophant::detail
