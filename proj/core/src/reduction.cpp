#include "diophant/reduction.hpp"

#include <algorithm>
#include <map>

#include "diophant/error.hpp"
#include "diophant/numtheory.hpp"

namespace diophant {

namespace {

RingDescriptor quad_ring(std::int64_t d) { return RingDescriptor::quadratic(d); }

// Small elements of Z[sqrt d] for the box scans; the boxes keep every value
// far from the int64 range.
struct Small {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const Small&, const Small&) = default;
  friend auto operator<=>(const Small&, const Small&) = default;
};

struct SmallRing {
  std::int64_t d;
  Small add(Small x, Small y) const { return {x.a + y.a, x.b + y.b}; }
  Small sub(Small x, Small y) const { return {x.a - y.a, x.b - y.b}; }
  Small mul(Small x, Small y) const { return {x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a}; }
  std::optional<Small> divide(Small x, Small y) const {
    const std::int64_t norm = y.a * y.a - d * y.b * y.b;
    if (norm == 0) return std::nullopt;
    const Small num = mul(x, {y.a, -y.b});
    if (num.a % norm != 0 || num.b % norm != 0) return std::nullopt;
    return Small{num.a / norm, num.b / norm};
  }
};

std::vector<Small> small_box(std::uint64_t radius) {
  const auto r = static_cast<std::int64_t>(radius);
  std::vector<Small> out;
  for (std::int64_t a = -r; a <= r; ++a) {
    for (std::int64_t b = -r; b <= r; ++b) out.push_back({a, b});
  }
  return out;
}

bool in_box(Small x, std::uint64_t radius) {
  const auto r = static_cast<std::int64_t>(radius);
  return x.a >= -r && x.a <= r && x.b >= -r && x.b <= r;
}

RingElement to_ring(RingDescriptor ring, Small x) { return RingElement(ring, x.a, x.b); }

std::optional<Small> to_small(const RingElement& x) {
  if (!fits_int64(x.a()) || !fits_int64(x.b())) return std::nullopt;
  return Small{x.a().get_si(), x.b().get_si()};
}

bool lex_less(const Assignment& lhs, const Assignment& rhs) {
  for (std::size_t i = 0; i < std::min(lhs.size(), rhs.size()); ++i) {
    if (lhs[i].a() != rhs[i].a()) return lhs[i].a() < rhs[i].a();
    if (lhs[i].b() != rhs[i].b()) return lhs[i].b() < rhs[i].b();
  }
  return lhs.size() < rhs.size();
}

PolynomialExpr norm_fold(const std::vector<PolynomialExpr>& parts) {
  if (parts.empty()) fail(ErrorCode::InternalInconsistency, "empty fold");
  PolynomialExpr acc = parts.front();
  if (parts.size() == 1) return acc;
  const RingElement dprime(acc.ring(), acc.ring().conjoin_multiplier());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = PolynomialExpr::difference(PolynomialExpr::square(acc),
                                     PolynomialExpr::scale(dprime, PolynomialExpr::square(parts[i])));
  }
  return acc;
}

}  // namespace

const std::array<std::string, kSigmaArity>& sigma_names() {
  static const std::array<std::string, kSigmaArity> names = {"t", "x", "y", "u", "v", "z",
                                                             "w", "h", "q", "r", "s"};
  return names;
}

BigInt sigma_e(std::int64_t d) {
  const auto [a, b] = pell_fundamental(d);
  return a * a - 1;
}

std::vector<Polynomial> build_sigma(std::int64_t d) {
  const RingDescriptor ring = quad_ring(d);
  const BigInt e = sigma_e(d);
  auto v = [ring](SigmaVar i) { return Polynomial::variable(ring, i, kSigmaArity); };
  const Polynomial one = Polynomial::constant(RingElement::one(ring), kSigmaArity);
  const RingElement ee(ring, e);
  const Polynomial y2 = v(kY) * v(kY);
  return {
      v(kX) * v(kX) - (v(kY) * v(kY)).scaled(ee) - one,
      v(kU) * v(kU) - (v(kV) * v(kV)).scaled(ee) - one,
      v(kV) * v(kV) - y2 * v(kT) - v(kZ) * y2 * y2,
      v(kT) - v(kW) * v(kW),
      y2 - v(kT) - one - v(kH) * v(kH) - v(kQ) * v(kQ) - v(kR) * v(kR) - v(kS) * v(kS),
  };
}

std::array<bool, 5> sigma_check(const SigmaWitness& w) {
  const auto eqs = build_sigma(w.d);
  const Assignment point = w.assignment();
  std::array<bool, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = eqs[i].evaluate(point).is_zero();
  return out;
}

bool sigma_verify(const SigmaWitness& w) {
  const auto checks = sigma_check(w);
  return std::all_of(checks.begin(), checks.end(), [](bool b) { return b; });
}

SigmaWitness sigma_witness(std::int64_t d, std::uint64_t k) {
  const RingDescriptor ring = quad_ring(d);
  const auto [a_big, b_big] = pell_fundamental(d);
  if (!fits_int64(a_big)) fail(ErrorCode::DomainError, "Pell solution for d too large");
  const std::int64_t a = a_big.get_si();
  const BigInt kk = static_cast<unsigned long>(k);

  std::uint64_t n = 1;
  while (pell_sequence(a, n).y <= kk) ++n;
  const PellPair base = pell_sequence(a, n);
  const PellPair scaled = pell_sequence(a, n * k);
  const BigInt t = kk * kk;
  const BigInt y2 = base.y * base.y;
  const BigInt numerator = scaled.y * scaled.y - y2 * t;
  const BigInt y4 = y2 * y2;
  if (numerator % y4 != 0) {
    fail(ErrorCode::InternalInconsistency, "y^4 does not divide v^2 - y^2 t");
  }
  const BigInt z = numerator / y4;
  const auto squares = four_squares(y2 - t - 1);

  SigmaWitness w;
  w.d = d;
  w.n = n;
  auto set = [&](SigmaVar v, const BigInt& value) { w.values[v] = RingElement(ring, value); };
  set(kT, t);
  set(kX, base.x);
  set(kY, base.y);
  set(kU, scaled.x);
  set(kV, scaled.y);
  set(kZ, z);
  set(kW, kk);
  set(kH, squares[0]);
  set(kQ, squares[1]);
  set(kR, squares[2]);
  set(kS, squares[3]);
  if (!sigma_verify(w)) fail(ErrorCode::InternalInconsistency, "constructed witness fails the system");
  return w;
}

std::vector<SigmaWitness> sigma_box_solutions(std::int64_t d, std::uint64_t radius,
                                              const std::optional<RingElement>& fixed_t,
                                              std::size_t limit) {
  const RingDescriptor ring = quad_ring(d);
  const BigInt e_big = sigma_e(d);
  if (!fits_int64(e_big) || radius > 1000) fail(ErrorCode::DomainError, "box too large for the scan");
  const SmallRing sr{d};
  const Small e{e_big.get_si(), 0};
  const Small one{1, 0};
  const auto box = small_box(radius);

  std::optional<Small> t_pin;
  if (fixed_t) {
    if (!(fixed_t->ring() == ring)) fail(ErrorCode::RingMismatch, "t must lie in " + ring.name());
    t_pin = to_small(*fixed_t);
    if (!t_pin) return {};
  }

  // Pairs solving the two Pell equations.
  std::vector<std::pair<Small, Small>> pell_pairs;
  for (const auto& x : box) {
    for (const auto& y : box) {
      if (sr.sub(sr.mul(x, x), sr.mul(e, sr.mul(y, y))) == one) pell_pairs.emplace_back(x, y);
    }
  }
  // Sums of two squares over the box, for the last equation.
  std::map<Small, std::vector<std::pair<Small, Small>>> two_square;
  for (const auto& h : box) {
    for (const auto& q : box) two_square[sr.add(sr.mul(h, h), sr.mul(q, q))].emplace_back(h, q);
  }

  std::vector<SigmaWitness> out;
  auto emit = [&](const std::array<Small, kSigmaArity>& vals) {
    SigmaWitness w;
    w.d = d;
    for (std::size_t i = 0; i < kSigmaArity; ++i) w.values[i] = to_ring(ring, vals[i]);
    out.push_back(std::move(w));
  };

  for (const auto& [x, y] : pell_pairs) {
    const Small y2 = sr.mul(y, y);
    const Small y4 = sr.mul(y2, y2);
    for (const auto& [u, v] : pell_pairs) {
      const Small v2 = sr.mul(v, v);
      for (const auto& w : box) {
        const Small t = sr.mul(w, w);
        if (t_pin ? !(t == *t_pin) : !in_box(t, radius)) continue;
        const Small numerator = sr.sub(v2, sr.mul(y2, t));
        std::vector<Small> zs;
        if (y4 == Small{}) {
          if (numerator == Small{}) zs = box;
        } else if (auto z = sr.divide(numerator, y4); z && in_box(*z, radius)) {
          zs.push_back(*z);
        }
        if (zs.empty()) continue;
        const Small m = sr.sub(sr.sub(y2, t), one);
        for (const auto& r : box) {
          for (const auto& s : box) {
            const auto it = two_square.find(sr.sub(m, sr.add(sr.mul(r, r), sr.mul(s, s))));
            if (it == two_square.end()) continue;
            for (const auto& [h, q] : it->second) {
              for (const auto& z : zs) {
                emit({t, x, y, u, v, z, w, h, q, r, s});
                if (out.size() >= limit) return out;
              }
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SigmaWitness& l, const SigmaWitness& r) {
    return lex_less(l.assignment(), r.assignment());
  });
  return out;
}

PolynomialExpr nat_definition(std::int64_t d) {
  const RingDescriptor ring = quad_ring(d);
  const auto sigma = build_sigma(d);
  auto var = [ring](std::size_t i) { return Polynomial::variable(ring, i, kNatArity); };

  std::vector<PolynomialExpr> parts;
  Polynomial four_square_sum(ring, kNatArity);
  for (std::size_t i = 0; i < 4; ++i) {
    const Polynomial k = var(1 + i);
    four_square_sum += k * k;
    const std::size_t base = 5 + 10 * i;
    std::vector<Polynomial> images;
    images.push_back(k * k);
    for (std::size_t j = 0; j < 10; ++j) images.push_back(var(base + j));
    std::vector<PolynomialExpr> copy;
    for (const auto& eq : sigma) copy.emplace_back(substitute(eq, images, kNatArity));
    parts.push_back(norm_fold(copy));
  }
  parts.emplace_back(var(0) - four_square_sum);
  return norm_fold(parts);
}

Assignment nat_definition_witness(std::int64_t d, const BigInt& t) {
  if (t < 0) fail(ErrorCode::DomainError, "t must be a natural number");
  const RingDescriptor ring = quad_ring(d);
  const auto k = four_squares(t);
  Assignment out(kNatArity, RingElement::zero(ring));
  out[0] = RingElement(ring, t);
  for (std::size_t i = 0; i < 4; ++i) {
    out[1 + i] = RingElement(ring, k[i]);
    const SigmaWitness w = sigma_witness(d, k[i].get_ui());
    for (std::size_t j = 0; j < 10; ++j) out[5 + 10 * i + j] = w.values[1 + j];
  }
  return out;
}

std::optional<Assignment> nat_definition_box_search(std::int64_t d, const RingElement& t,
                                                    std::uint64_t radius) {
  const RingDescriptor ring = quad_ring(d);
  if (!(t.ring() == ring)) fail(ErrorCode::RingMismatch, "t must lie in " + ring.name());
  const auto t_small = to_small(t);
  if (!t_small) return std::nullopt;
  const SmallRing sr{d};
  const auto box = small_box(radius);

  std::map<Small, std::vector<std::pair<Small, Small>>> two_square;
  for (const auto& k1 : box) {
    for (const auto& k2 : box) two_square[sr.add(sr.mul(k1, k1), sr.mul(k2, k2))].emplace_back(k1, k2);
  }
  std::map<Small, std::optional<SigmaWitness>> copy_cache;
  auto copy_for = [&](Small k) -> const std::optional<SigmaWitness>& {
    auto it = copy_cache.find(k);
    if (it != copy_cache.end()) return it->second;
    auto found = sigma_box_solutions(d, radius, to_ring(ring, sr.mul(k, k)), 1);
    std::optional<SigmaWitness> first;
    if (!found.empty()) first = found.front();
    return copy_cache.emplace(k, std::move(first)).first->second;
  };

  const PolynomialExpr q = nat_definition(d);
  for (const auto& [sum12, heads] : two_square) {
    const auto tail = two_square.find(sr.sub(*t_small, sum12));
    if (tail == two_square.end()) continue;
    for (const auto& [k1, k2] : heads) {
      for (const auto& [k3, k4] : tail->second) {
        const std::array<Small, 4> ks = {k1, k2, k3, k4};
        Assignment point(kNatArity, RingElement::zero(ring));
        point[0] = t;
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i) {
          const auto& copy = copy_for(ks[i]);
          if (!copy) {
            ok = false;
            break;
          }
          point[1 + i] = to_ring(ring, ks[i]);
          for (std::size_t j = 0; j < 10; ++j) point[5 + 10 * i + j] = copy->values[1 + j];
        }
        if (!ok) continue;
        if (!q.evaluate(point).is_zero()) {
          fail(ErrorCode::InternalInconsistency, "assembled point does not solve the definition");
        }
        return point;
      }
    }
  }
  return std::nullopt;
}

PolynomialExpr reduce_equation_quad(const Polynomial& p, std::int64_t d) {
  if (!p.ring().is_integers()) fail(ErrorCode::DomainError, "the equation must have coefficients in Z");
  const RingDescriptor ring = quad_ring(d);
  const std::size_t n = p.arity();
  const std::size_t arity = n * kNatArity;
  std::vector<Term> lifted;
  for (const auto& t : p.terms()) lifted.push_back(Term{t.coeff.in_ring(ring), t.exponents});
  const Polynomial p_lift = Polynomial::from_terms(ring, n, std::move(lifted)).with_arity(arity);
  std::vector<PolynomialExpr> parts{PolynomialExpr(p_lift)};
  if (n == 0) return parts.front();
  const PolynomialExpr q = nat_definition(d);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> map(kNatArity);
    map[0] = i;
    for (std::size_t j = 1; j < kNatArity; ++j) map[j] = n + (kNatArity - 1) * i + (j - 1);
    parts.push_back(q.remap_variables(map, arity));
  }
  return norm_fold(parts);
}

Assignment reduce_equation_witness(const Polynomial& p, std::int64_t d, const std::vector<BigInt>& solution) {
  const std::size_t n = p.arity();
  if (solution.size() != n) {
    fail(ErrorCode::ArityMismatch, "solution has " + std::to_string(solution.size()) +
                                       " values, equation has " + std::to_string(n) + " variables");
  }
  Assignment values;
  for (const auto& s : solution) {
    if (s < 0) fail(ErrorCode::DomainError, "solution values must be natural numbers");
    values.push_back(RingElement::integer(s));
  }
  if (!p.evaluate(values).is_zero()) fail(ErrorCode::DomainError, "the given values do not solve the equation");
  const RingDescriptor ring = quad_ring(d);
  Assignment out(n * kNatArity, RingElement::zero(ring));
  for (std::size_t i = 0; i < n; ++i) {
    const Assignment block = nat_definition_witness(d, solution[i]);
    out[i] = block[0];
    for (std::size_t j = 1; j < kNatArity; ++j) out[n + (kNatArity - 1) * i + (j - 1)] = block[j];
  }
  return out;
}

std::optional<Assignment> reduce_equation_box_search(const Polynomial& p, std::int64_t d,
                                                     std::uint64_t radius) {
  if (!p.ring().is_integers()) fail(ErrorCode::DomainError, "the equation must have coefficients in Z");
  const RingDescriptor ring = quad_ring(d);
  const std::size_t n = p.arity();
  std::vector<Term> lifted;
  for (const auto& t : p.terms()) lifted.push_back(Term{t.coeff.in_ring(ring), t.exponents});
  const Polynomial p_lift = Polynomial::from_terms(ring, n, std::move(lifted));
  const auto box = small_box(radius);

  std::map<Small, std::optional<Assignment>> cache;
  std::vector<std::size_t> idx(n, 0);
  const PolynomialExpr r = reduce_equation_quad(p, d);
  while (true) {
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = to_ring(ring, box[idx[i]]);
    if (p_lift.evaluate(a).is_zero()) {
      Assignment point(n * kNatArity, RingElement::zero(ring));
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        auto it = cache.find(box[idx[i]]);
        if (it == cache.end()) {
          it = cache.emplace(box[idx[i]], nat_definition_box_search(d, a[i], radius)).first;
        }
        if (!it->second) {
          ok = false;
          break;
        }
        point[i] = a[i];
        for (std::size_t j = 1; j < kNatArity; ++j) point[n + (kNatArity - 1) * i + (j - 1)] = (*it->second)[j];
      }
      if (ok) {
        if (!r.evaluate(point).is_zero()) {
          fail(ErrorCode::InternalInconsistency, "assembled point does not solve the reduced equation");
        }
        return point;
      }
    }
    std::size_t j = n;
    bool done = true;
    while (j > 0) {
      --j;
      if (++idx[j] < box.size()) {
        done = false;
        break;
      }
      idx[j] = 0;
    }
    if (done) break;
  }
  return std::nullopt;
}

// ---- Z[i] ------------------------------------------------------------------

const std::array<std::string, kGaussArity>& gauss_names() {
  static const std::array<std::string, kGaussArity> names = {"a", "p", "r", "x", "t", "s",
                                                             "w", "q", "z", "y", "v", "u"};
  return names;
}

std::vector<Polynomial> build_gauss() {
  const RingDescriptor ring = RingDescriptor::gaussian();
  auto v = [ring](GaussVar i) { return Polynomial::variable(ring, i, kGaussArity); };
  auto c = [ring](long value) { return Polynomial::constant(RingElement(ring, value), kGaussArity); };
  return {
      c(2) * v(gA) + c(1) - v(gP),
      v(gR) * v(gX) + v(gT) * (c(8) * v(gS) + c(3)) - c(1),
      v(gX) - c(4) * (c(3) * v(gP) * v(gP) + c(1)) * v(gW),
      v(gP) - v(gQ) - v(gZ) * v(gY),
      v(gV) - v(gQ) * v(gY),
      v(gU) * v(gU) - c(4) * v(gU) * v(gV) + v(gV) * v(gV) - c(1),
      v(gX) * v(gX) - c(4) * v(gX) * v(gY) + v(gY) * v(gY) - c(1),
  };
}

GaussReport gauss_verify(const GaussWitness& w) {
  static const std::vector<Polynomial> eqs = build_gauss();
  const Assignment point = w.assignment();
  GaussReport report;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    report.equations[i] = eqs[i].evaluate(point).is_zero();
    if (!report.equations[i]) report.failing.push_back(static_cast<int>(i + 1));
  }
  report.holds = report.failing.empty();
  return report;
}

GaussWitness gauss_witness(const BigInt& a) {
  const RingDescriptor ring = RingDescriptor::gaussian();
  const BigInt p = 2 * a + 1;
  if (abs(p) > BigInt(1) << 20) fail(ErrorCode::DomainError, "a is too large");
  const std::uint64_t n = find_odd_index(p);
  const std::int64_t pn = p.get_si() * static_cast<std::int64_t>(n);
  const auto ni = static_cast<std::int64_t>(n);
  const BigInt x = alpha(ni - 1), y = alpha(ni), u = alpha(pn + 1), v = alpha(pn);
  const BigInt modulus = 4 * (3 * p * p + 1);
  auto exact = [](const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0 || num % den != 0) fail(ErrorCode::InternalInconsistency, std::string(what) + " is not exact");
    return BigInt(num / den);
  };
  const BigInt w = exact(x, modulus, "x / 4(3p^2+1)");
  const BigInt q = exact(v, y, "v / y");
  const BigInt z = exact(p - q, y, "(p - q) / y");
  BigInt s = 0;
  while (ext_gcd(x, 8 * s + 3).g != 1) ++s;
  const ExtGcd bez = ext_gcd(x, 8 * s + 3);

  GaussWitness out;
  out.n = n;
  auto set = [&](GaussVar var, const BigInt& value) { out.values[var] = RingElement(ring, value); };
  set(gA, a);
  set(gP, p);
  set(gR, bez.r);
  set(gX, x);
  set(gT, bez.t);
  set(gS, s);
  set(gW, w);
  set(gQ, q);
  set(gZ, z);
  set(gY, y);
  set(gV, v);
  set(gU, u);
  const GaussReport report = gauss_verify(out);
  if (!report.holds) fail(ErrorCode::InternalInconsistency, "constructed Gaussian witness fails");
  return out;
}

std::optional<std::pair<int, std::uint64_t>> alpha_family(const RingElement& x, const RingElement& y) {
  if (x.b() != 0 || y.b() != 0) return std::nullopt;
  const BigInt limit = BigInt(abs(x.a())) + BigInt(abs(y.a())) + 1;
  BigInt prev = 0, cur = 1;  // alpha(n), alpha(n+1)
  for (std::uint64_t n = 0; prev <= limit; ++n) {
    if (x.a() == cur && y.a() == prev) return std::make_pair(0, n);
    if (x.a() == prev && y.a() == cur) return std::make_pair(1, n);
    if (x.a() == -cur && y.a() == -prev) return std::make_pair(2, n);
    if (x.a() == -prev && y.a() == -cur) return std::make_pair(3, n);
    BigInt next = 4 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return std::nullopt;
}

std::vector<AlphaSolution> alpha_equation_solutions(std::uint64_t bound) {
  if (bound < 1) fail(ErrorCode::DomainError, "bound must be >= 1");
  if (bound > 2000) fail(ErrorCode::DomainError, "bound too large for the scan");
  const RingDescriptor ring = RingDescriptor::gaussian();
  const auto b = static_cast<std::int64_t>(bound);
  std::vector<AlphaSolution> out;
  for (std::int64_t xa = -b; xa <= b; ++xa) {
    for (std::int64_t xb = -b; xb <= b; ++xb) {
      for (std::int64_t ya = -b; ya <= b; ++ya) {
        for (std::int64_t yb = -b; yb <= b; ++yb) {
          // x^2 - 4xy + y^2 with i^2 = -1.
          const std::int64_t re = xa * xa - xb * xb - 4 * (xa * ya - xb * yb) + ya * ya - yb * yb;
          const std::int64_t im = 2 * xa * xb - 4 * (xa * yb + xb * ya) + 2 * ya * yb;
          if (re != 1 || im != 0) continue;
          AlphaSolution sol;
          sol.x = RingElement(ring, xa, xb);
          sol.y = RingElement(ring, ya, yb);
          if (auto fam = alpha_family(sol.x, sol.y)) {
            sol.family = fam->first;
            sol.index = fam->second;
          }
          out.push_back(std::move(sol));
        }
      }
    }
  }
  return out;
}

}  // namespace diophant
