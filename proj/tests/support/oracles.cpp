#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

using diophant::Polynomial;
using diophant::RingDescriptor;
using diophant::RingKind;

namespace {

BigInt radicand_of(const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::RationalIntegers: return 0;
    case RingKind::GaussianIntegers: return -1;
    case RingKind::QuadReal: return static_cast<long>(ring.radicand());
  }
  return 0;
}

std::int64_t isqrt_scan(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

RingElement matrix_product(const RingElement& x, const RingElement& y) {
  const BigInt d = radicand_of(x.ring());
  // [[a, d b], [b, a]] * [[c, d e], [e, c]]; the first column determines the result.
  const BigInt m00 = x.a() * y.a() + d * x.b() * y.b();
  const BigInt m10 = x.b() * y.a() + x.a() * y.b();
  return RingElement(x.ring(), m00, m10);
}

BigInt matrix_norm(const RingElement& x) {
  const BigInt d = radicand_of(x.ring());
  return x.a() * x.a() - d * x.b() * x.b();
}

RingElement naive_evaluate(const Polynomial& p, const std::vector<RingElement>& values) {
  RingElement total = RingElement::zero(p.ring());
  for (const auto& t : p.terms()) {
    RingElement m = t.coeff;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      for (std::uint32_t k = 0; k < t.exponents[i]; ++k) m = matrix_product(m, values[i]);
    }
    total = RingElement(p.ring(), total.a() + m.a(), total.b() + m.b());
  }
  return total;
}

std::pair<std::int64_t, std::int64_t> pell_by_scan(std::int64_t a, unsigned n) {
  const std::int64_t d = a * a - 1;
  unsigned seen = 0;
  for (std::int64_t y = 0;; ++y) {
    const std::int64_t rhs = d * y * y + 1;
    const std::int64_t x = isqrt_scan(rhs);
    if (x * x == rhs) {
      if (seen == n) return {x, y};
      ++seen;
    }
  }
}

std::pair<std::int64_t, std::int64_t> pell_fundamental_by_scan(std::int64_t d) {
  for (std::int64_t y = 1;; ++y) {
    const std::int64_t rhs = d * y * y + 1;
    const std::int64_t x = isqrt_scan(rhs);
    if (x * x == rhs) return {x, y};
  }
}

std::array<std::int64_t, 4> four_squares_by_scan(std::int64_t n) {
  for (std::int64_t a = isqrt_scan(n); a >= 0; --a) {
    for (std::int64_t b = a; b >= 0; --b) {
      for (std::int64_t c = b; c >= 0; --c) {
        const std::int64_t rest = n - a * a - b * b - c * c;
        if (rest < 0) continue;
        const std::int64_t d = isqrt_scan(rest);
        if (d * d == rest && d <= c) return {a, b, c, d};
      }
    }
  }
  throw std::logic_error("no decomposition");
}

std::vector<BigInt> alpha_table(std::size_t count) {
  std::vector<BigInt> out{0, 1};
  while (out.size() < count) out.push_back(4 * out[out.size() - 1] - out[out.size() - 2]);
  out.resize(count);
  return out;
}

PairingTable::PairingTable(std::uint64_t max_z) {
  for (std::uint64_t s = 2; unpair.size() < max_z; ++s) {
    for (std::uint64_t x = 1; x < s && unpair.size() < max_z; ++x) unpair.emplace_back(x, s - x);
  }
}

std::uint64_t PairingTable::pair(std::uint64_t x, std::uint64_t y) const {
  const auto it = std::find(unpair.begin(), unpair.end(), std::make_pair(x, y));
  if (it == unpair.end()) throw std::out_of_range("pair beyond table");
  return static_cast<std::uint64_t>(it - unpair.begin()) + 1;
}

namespace {

bool eval_node(const diophant::Formula& f, std::vector<RingElement>& env, std::int64_t radius, bool integers,
               const RingDescriptor& ring) {
  using Kind = diophant::Formula::Kind;
  switch (f.kind) {
    case Kind::Atom: return naive_evaluate(f.lhs, env) == naive_evaluate(f.rhs, env);
    case Kind::And:
      return std::all_of(f.children.begin(), f.children.end(),
                         [&](const auto& c) { return eval_node(c, env, radius, integers, ring); });
    case Kind::Or:
      return std::any_of(f.children.begin(), f.children.end(),
                         [&](const auto& c) { return eval_node(c, env, radius, integers, ring); });
    case Kind::Not: return !eval_node(f.children.at(0), env, radius, integers, ring);
    case Kind::Exists:
    case Kind::Forall: {
      const bool want_all = f.kind == Kind::Forall;
      const RingElement saved = env[f.bound];
      bool result = want_all;
      for (std::int64_t v = integers ? -radius : 0; v <= radius; ++v) {
        env[f.bound] = RingElement(ring, v);
        const bool r = eval_node(f.children.at(0), env, radius, integers, ring);
        if (r != want_all) {
          result = r;
          break;
        }
      }
      env[f.bound] = saved;
      return result;
    }
  }
  return false;
}

}  // namespace

bool evaluate_formula(const diophant::ParsedFormula& f, const std::vector<RingElement>& point, std::int64_t radius,
                      bool integers) {
  std::vector<RingElement> env(f.arity, RingElement::zero(f.ring));
  std::copy(point.begin(), point.end(), env.begin());
  return eval_node(f.root, env, radius, integers, f.ring);
}

bool naturals_nonroot_certificate(const Polynomial& p, const RingElement& x0) {
  // Fix x0 by hand: collect coefficients of the remaining monomials.
  std::vector<std::pair<diophant::Exponents, BigInt>> reduced;
  for (const auto& t : p.terms()) {
    BigInt c = t.coeff.a();
    for (std::uint32_t k = 0; k < t.exponents[0]; ++k) c *= x0.a();
    diophant::Exponents rest(t.exponents.begin() + 1, t.exponents.end());
    auto it = std::find_if(reduced.begin(), reduced.end(), [&](const auto& e) { return e.first == rest; });
    if (it == reduced.end()) {
      reduced.emplace_back(rest, c);
    } else {
      it->second += c;
    }
  }
  std::erase_if(reduced, [](const auto& e) { return e.second == 0; });
  const auto is_const = [](const diophant::Exponents& e) {
    return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
  };
  BigInt constant = 0;
  bool all_pos = true, all_neg = true;
  for (const auto& [e, c] : reduced) {
    if (is_const(e)) constant = c;
    if (c < 0) all_pos = false;
    if (c > 0) all_neg = false;
  }
  if (reduced.size() == 1 && is_const(reduced[0].first)) return true;
  if ((all_pos && constant > 0) || (all_neg && constant < 0)) return true;

  // Parity: try every assignment of variable residues mod 2.
  std::vector<std::size_t> used;
  for (const auto& [e, c] : reduced) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0 && std::find(used.begin(), used.end(), i) == used.end()) used.push_back(i);
    }
  }
  if (used.size() > 16) return false;
  for (std::uint32_t mask = 0; mask < (1u << used.size()); ++mask) {
    BigInt total = 0;
    for (const auto& [e, c] : reduced) {
      bool odd = true;
      for (std::size_t j = 0; j < used.size(); ++j) {
        if (e[used[j]] != 0 && !(mask >> j & 1u)) odd = false;
      }
      if (odd) total += c;
    }
    if (total % 2 == 0) return false;
  }
  return true;
}

}  // namespace oracle
