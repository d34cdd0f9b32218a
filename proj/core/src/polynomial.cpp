#include "diophant/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "diophant/error.hpp"

namespace diophant {

namespace {

std::uint32_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

struct GrlexBefore {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const { return grlex_before(lhs, rhs); }
};

using TermMap = std::map<Exponents, RingElement, GrlexBefore>;

Polynomial from_map(RingDescriptor ring, std::size_t arity, TermMap&& map) {
  std::vector<Term> terms;
  terms.reserve(map.size());
  for (auto& [exps, coeff] : map) {
    if (!coeff.is_zero()) terms.push_back(Term{coeff, exps});
  }
  // Already in canonical order; from_terms re-checks cheaply.
  return Polynomial::from_terms(ring, arity, std::move(terms));
}

}  // namespace

bool grlex_before(const Exponents& lhs, const Exponents& rhs) {
  const auto dl = degree_of(lhs);
  const auto dr = degree_of(rhs);
  if (dl != dr) return dl > dr;
  return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

Polynomial::Polynomial(RingDescriptor ring, std::size_t arity) : ring_(ring), arity_(arity) {}

Polynomial Polynomial::constant(const RingElement& c, std::size_t arity) {
  Polynomial p(c.ring(), arity);
  if (!c.is_zero()) p.terms_.push_back(Term{c, Exponents(arity, 0)});
  return p;
}

Polynomial Polynomial::variable(RingDescriptor ring, std::size_t index, std::size_t arity) {
  if (index >= arity) {
    fail(ErrorCode::IndexOutOfRange,
         "variable x" + std::to_string(index) + " outside arity " + std::to_string(arity));
  }
  Polynomial p(ring, arity);
  Exponents e(arity, 0);
  e[index] = 1;
  p.terms_.push_back(Term{RingElement::one(ring), std::move(e)});
  return p;
}

Polynomial Polynomial::from_terms(RingDescriptor ring, std::size_t arity, std::vector<Term> terms) {
  Polynomial p(ring, arity);
  for (const auto& t : terms) {
    if (!(t.coeff.ring() == ring)) fail(ErrorCode::RingMismatch, "term coefficient ring");
    if (t.exponents.size() != arity) {
      fail(ErrorCode::ArityMismatch, "term exponent vector length " +
                                         std::to_string(t.exponents.size()) + " != arity " +
                                         std::to_string(arity));
    }
  }
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return grlex_before(x.exponents, y.exponents); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) {
    fail(ErrorCode::RingMismatch, ring_.name() + " vs " + other.ring_.name());
  }
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.front().exponents) == 0);
}

RingElement Polynomial::constant_term() const {
  if (!terms_.empty() && degree_of(terms_.back().exponents) == 0) return terms_.back().coeff;
  return RingElement::zero(ring_);
}

std::uint32_t Polynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : degree_of(terms_.front().exponents);
}

bool Polynomial::uses_variable(std::size_t index) const noexcept {
  if (index >= arity_) return false;
  return std::any_of(terms_.begin(), terms_.end(),
                     [index](const Term& t) { return t.exponents[index] != 0; });
}

std::vector<std::size_t> Polynomial::used_variables() const {
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (uses_variable(i)) used.push_back(i);
  }
  return used;
}

Polynomial Polynomial::with_arity(std::size_t arity) const {
  if (arity == arity_) return *this;
  for (std::size_t i = arity; i < arity_; ++i) {
    if (uses_variable(i)) {
      fail(ErrorCode::IndexOutOfRange,
           "cannot shrink arity below used variable x" + std::to_string(i));
    }
  }
  Polynomial p(ring_, arity);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(arity, 0);
    std::copy_n(t.exponents.begin(), std::min(arity, arity_), e.begin());
    p.terms_.push_back(Term{t.coeff, std::move(e)});
  }
  return p;
}

RingElement Polynomial::evaluate(std::span<const RingElement> values) const {
  if (values.size() < arity_) {
    fail(ErrorCode::ArityMismatch, "assignment has " + std::to_string(values.size()) +
                                       " values, polynomial needs " + std::to_string(arity_));
  }
  for (std::size_t i = 0; i < arity_; ++i) {
    if (!(values[i].ring() == ring_)) {
      fail(ErrorCode::RingMismatch, "value x" + std::to_string(i) + " in " +
                                        values[i].ring().name() + ", polynomial over " +
                                        ring_.name());
    }
  }
  RingElement sum = RingElement::zero(ring_);
  for (const auto& t : terms_) {
    RingElement term = t.coeff;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (t.exponents[i] != 0) term *= values[i].pow(t.exponents[i]);
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::partial_evaluate(std::span<const std::size_t> indices,
                                        std::span<const RingElement> values) const {
  if (indices.size() != values.size()) fail(ErrorCode::ArityMismatch, "partial_evaluate");
  TermMap acc;
  for (const auto& t : terms_) {
    RingElement c = t.coeff;
    Exponents e = t.exponents;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      const auto idx = indices[k];
      if (idx >= arity_) fail(ErrorCode::IndexOutOfRange, "partial_evaluate index");
      if (e[idx] != 0) {
        c *= values[k].pow(e[idx]);
        e[idx] = 0;
      }
    }
    auto [it, inserted] = acc.try_emplace(std::move(e), c);
    if (!inserted) it->second += c;
  }
  return from_map(ring_, arity_, std::move(acc));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(RingElement::one(ring_), arity_);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::scaled(const RingElement& c) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  p.normalize();
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  const std::size_t arity = std::max(arity_, other.arity_);
  if (arity_ != arity) *this = with_arity(arity);
  const Polynomial rhs = other.arity_ == arity ? other : other.with_arity(arity);
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  require_same_ring(other);
  const std::size_t arity = std::max(arity_, other.arity_);
  const Polynomial lhs = arity_ == arity ? *this : with_arity(arity);
  const Polynomial rhs = other.arity_ == arity ? other : other.with_arity(arity);
  TermMap acc;
  for (const auto& x : lhs.terms_) {
    for (const auto& y : rhs.terms_) {
      Exponents e(arity);
      for (std::size_t i = 0; i < arity; ++i) e[i] = x.exponents[i] + y.exponents[i];
      RingElement c = x.coeff * y.coeff;
      auto [it, inserted] = acc.try_emplace(std::move(e), c);
      if (!inserted) it->second += c;
    }
  }
  *this = from_map(ring_, arity, std::move(acc));
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

RingElement poly_eval(const Polynomial& p, std::span<const RingElement> values) {
  return p.evaluate(values);
}
Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial poly_neg(const Polynomial& p) { return -p; }

Polynomial remap_variables(const Polynomial& p, std::span<const std::size_t> map,
                           std::size_t new_arity) {
  if (map.size() < p.arity()) {
    fail(ErrorCode::IndexOutOfRange, "variable map shorter than polynomial arity");
  }
  std::vector<bool> hit(new_arity, false);
  for (std::size_t i = 0; i < p.arity(); ++i) {
    if (map[i] >= new_arity) {
      fail(ErrorCode::IndexOutOfRange, "x" + std::to_string(i) + " -> x" +
                                           std::to_string(map[i]) + " outside arity " +
                                           std::to_string(new_arity));
    }
    if (hit[map[i]]) {
      fail(ErrorCode::NonInjectiveMap, "two variables map to x" + std::to_string(map[i]));
    }
    hit[map[i]] = true;
  }
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Exponents e(new_arity, 0);
    for (std::size_t i = 0; i < p.arity(); ++i) e[map[i]] = t.exponents[i];
    terms.push_back(Term{t.coeff, std::move(e)});
  }
  return Polynomial::from_terms(p.ring(), new_arity, std::move(terms));
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, std::size_t arity) {
  if (images.size() < p.arity()) fail(ErrorCode::ArityMismatch, "substitute: too few images");
  Polynomial result(p.ring(), arity);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(t.coeff, arity);
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (images[i].arity() != arity) fail(ErrorCode::ArityMismatch, "substitute: image arity");
      term *= images[i].pow(t.exponents[i]);
    }
    result += term;
  }
  return result;
}

namespace {

struct CoefficientText {
  bool negative = false;
  std::string magnitude;
};

CoefficientText coefficient_text(const RingElement& c) {
  const std::string unit = c.ring().kind() == RingKind::GaussianIntegers ? "i" : "sqrtd";
  if (c.b() == 0) return {c.a() < 0, BigInt(abs(c.a())).get_str()};
  if (c.a() == 0) {
    const BigInt mag = abs(c.b());
    return {c.b() < 0, mag == 1 ? unit : mag.get_str() + "*" + unit};
  }
  return {false, c.to_string()};
}

std::string monomial_text(const Exponents& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_text(const Polynomial& p) { return to_text(p, {}); }

std::string to_text(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const auto coeff = coefficient_text(t.coeff);
    const auto mono = monomial_text(t.exponents, names);
    std::string body;
    if (mono.empty()) {
      body = coeff.magnitude;
    } else if (coeff.magnitude == "1") {
      body = mono;
    } else {
      body = coeff.magnitude + "*" + mono;
    }
    if (first) {
      out += coeff.negative ? "-" + body : body;
    } else {
      out += coeff.negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace diophant
