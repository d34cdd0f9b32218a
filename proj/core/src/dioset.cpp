#include "diophant/dioset.hpp"

#include <atomic>
#include <numeric>

#include "diophant/error.hpp"

namespace diophant {

namespace debug {
namespace {
std::atomic<bool> g_conjoin_fault{false};
}
void set_conjoin_fault(bool enabled) { g_conjoin_fault.store(enabled); }
bool conjoin_fault() { return g_conjoin_fault.load(); }
}  // namespace debug

namespace {

SetDomain effective_domain(const RingDescriptor& ring, SetDomain domain) {
  return ring.is_integers() ? domain : SetDomain::Integers;
}

void require_compatible(const DiophantineSet& a, const DiophantineSet& b) {
  if (!(a.ring() == b.ring())) fail(ErrorCode::RingMismatch, a.ring().name() + " vs " + b.ring().name());
  if (a.domain() != b.domain()) {
    fail(ErrorCode::DomainError, "cannot combine a set over N with a set over Z");
  }
}

std::vector<Polynomial> remapped(const std::vector<Polynomial>& parts,
                                 const std::vector<std::size_t>& map, std::size_t arity) {
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(remap_variables(p, map, arity));
  return out;
}

}  // namespace

DiophantineSet::DiophantineSet(RingDescriptor ring, std::size_t params, std::size_t aux,
                               std::vector<Polynomial> conjuncts, SetDomain domain)
    : ring_(ring),
      params_(params),
      aux_(aux),
      domain_(effective_domain(ring, domain)),
      conjuncts_(std::move(conjuncts)) {
  if (params_ == 0) fail(ErrorCode::ArityMismatch, "a set needs at least one parameter");
  for (auto& c : conjuncts_) {
    if (!(c.ring() == ring_)) fail(ErrorCode::RingMismatch, "conjunct over " + c.ring().name());
    if (c.arity() != arity()) {
      fail(ErrorCode::ArityMismatch, "conjunct arity " + std::to_string(c.arity()) +
                                         " != params + aux = " + std::to_string(arity()));
    }
  }
  q_ = conjoin_all(ring_, arity(), conjuncts_);
}

DiophantineSet DiophantineSet::from_polynomial(const Polynomial& q, std::size_t params,
                                               SetDomain domain) {
  if (q.arity() < params) {
    fail(ErrorCode::ArityMismatch, "polynomial arity " + std::to_string(q.arity()) +
                                       " below parameter count " + std::to_string(params));
  }
  return DiophantineSet(q.ring(), params, q.arity() - params, {q}, domain);
}

Polynomial conjoin(const Polynomial& p, const Polynomial& q) {
  if (!(p.ring() == q.ring())) fail(ErrorCode::RingMismatch, p.ring().name() + " vs " + q.ring().name());
  if (debug::conjoin_fault()) return p * q;
  if (p.ring().is_integers()) return p * p + q * q;
  const RingElement dprime(p.ring(), p.ring().conjoin_multiplier());
  return p * p - (q * q).scaled(dprime);
}

Polynomial conjoin_all(RingDescriptor ring, std::size_t arity, std::span<const Polynomial> parts) {
  std::vector<Polynomial> kept;
  for (const auto& p : parts) {
    if (!(p.ring() == ring)) fail(ErrorCode::RingMismatch, "conjunct over " + p.ring().name());
    if (!p.is_zero()) kept.push_back(p.with_arity(std::max(arity, p.arity())));
  }
  if (kept.empty()) return Polynomial(ring, arity);
  if (kept.size() == 1) return kept.front();
  if (debug::conjoin_fault()) {
    Polynomial acc = kept.front();
    for (std::size_t i = 1; i < kept.size(); ++i) acc *= kept[i];
    return acc;
  }
  if (ring.is_integers()) {
    Polynomial acc(ring, arity);
    for (const auto& p : kept) acc += p * p;
    return acc;
  }
  Polynomial acc = kept.front();
  for (std::size_t i = 1; i < kept.size(); ++i) acc = conjoin(acc, kept[i]);
  return acc;
}

void IndexSet::validate() const {
  if (s.empty()) fail(ErrorCode::BadIndexSet, "index set is empty");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) {
      fail(ErrorCode::BadIndexSet, "index " + std::to_string(s[i]) + " outside 1.." + std::to_string(n));
    }
    if (i > 0 && s[i] <= s[i - 1]) fail(ErrorCode::BadIndexSet, "indices must be strictly increasing");
  }
}

DiophantineSet set_singleton(const std::vector<RingElement>& point, SetDomain domain) {
  if (point.empty()) fail(ErrorCode::ArityMismatch, "singleton needs a non-empty point");
  const RingDescriptor ring = point.front().ring();
  const std::size_t n = point.size();
  std::vector<Polynomial> parts;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(point[k].ring() == ring)) fail(ErrorCode::RingMismatch, "singleton coordinates differ in ring");
    parts.push_back(Polynomial::variable(ring, k, n) - Polynomial::constant(point[k], n));
  }
  return DiophantineSet(ring, n, 0, std::move(parts), domain);
}

DiophantineSet fullset(RingDescriptor ring, std::size_t params, SetDomain domain) {
  return DiophantineSet(ring, params, 0, {}, domain);
}

DiophantineSet emptyset(RingDescriptor ring, std::size_t params, SetDomain domain) {
  return DiophantineSet(ring, params, 0, {Polynomial::constant(RingElement::one(ring), params)},
                        domain);
}

DiophantineSet set_product(const DiophantineSet& a, const DiophantineSet& b) {
  require_compatible(a, b);
  const std::size_t pa = a.params(), pb = b.params(), ma = a.aux(), mb = b.aux();
  const std::size_t arity = pa + pb + ma + mb;
  std::vector<std::size_t> map_a(pa + ma), map_b(pb + mb);
  for (std::size_t i = 0; i < pa; ++i) map_a[i] = i;
  for (std::size_t j = 0; j < ma; ++j) map_a[pa + j] = pa + pb + j;
  for (std::size_t i = 0; i < pb; ++i) map_b[i] = pa + i;
  for (std::size_t j = 0; j < mb; ++j) map_b[pb + j] = pa + pb + ma + j;
  auto parts = remapped(a.conjuncts(), map_a, arity);
  auto more = remapped(b.conjuncts(), map_b, arity);
  parts.insert(parts.end(), more.begin(), more.end());
  return DiophantineSet(a.ring(), pa + pb, ma + mb, std::move(parts), a.domain());
}

DiophantineSet set_intersect(const DiophantineSet& a, const DiophantineSet& b) {
  require_compatible(a, b);
  if (a.params() != b.params()) {
    fail(ErrorCode::ArityMismatch, "intersection of sets with " + std::to_string(a.params()) +
                                       " and " + std::to_string(b.params()) + " parameters");
  }
  const std::size_t p = a.params(), ma = a.aux(), mb = b.aux();
  const std::size_t arity = p + ma + mb;
  std::vector<std::size_t> map_a(p + ma), map_b(p + mb);
  std::iota(map_a.begin(), map_a.end(), 0);
  for (std::size_t i = 0; i < p; ++i) map_b[i] = i;
  for (std::size_t j = 0; j < mb; ++j) map_b[p + j] = p + ma + j;
  auto parts = remapped(a.conjuncts(), map_a, arity);
  auto more = remapped(b.conjuncts(), map_b, arity);
  parts.insert(parts.end(), more.begin(), more.end());
  return DiophantineSet(a.ring(), p, ma + mb, std::move(parts), a.domain());
}

DiophantineSet set_project(const DiophantineSet& a, const IndexSet& keep) {
  keep.validate();
  if (keep.n != a.params()) {
    fail(ErrorCode::BadIndexSet, "index set over " + std::to_string(keep.n) + " coordinates, set has " +
                                     std::to_string(a.params()) + " parameters");
  }
  const std::size_t p = a.params(), l = keep.s.size();
  std::vector<std::size_t> map(a.arity());
  std::vector<bool> kept(p, false);
  for (std::size_t k = 0; k < l; ++k) {
    map[keep.s[k] - 1] = k;
    kept[keep.s[k] - 1] = true;
  }
  std::size_t next = l;
  for (std::size_t i = 0; i < p; ++i) {
    if (!kept[i]) map[i] = next++;
  }
  for (std::size_t j = 0; j < a.aux(); ++j) map[p + j] = p + j;
  return DiophantineSet(a.ring(), l, a.aux() + (p - l), remapped(a.conjuncts(), map, a.arity()),
                        a.domain());
}

DiophantineSet proj_graph(std::size_t n, const IndexSet& keep, RingDescriptor ring, SetDomain domain) {
  keep.validate();
  if (keep.n != n) fail(ErrorCode::BadIndexSet, "index set size does not match n");
  const std::size_t l = keep.s.size();
  std::vector<Polynomial> parts;
  for (std::size_t k = 0; k < l; ++k) {
    parts.push_back(Polynomial::variable(ring, keep.s[k] - 1, n + l) -
                    Polynomial::variable(ring, n + k, n + l));
  }
  return DiophantineSet(ring, n + l, 0, std::move(parts), domain);
}

DiophantineSet set_preimage(const DiophantineSet& f, const DiophantineSet& v) {
  if (f.params() <= v.params()) {
    fail(ErrorCode::ArityMismatch, "relation has " + std::to_string(f.params()) +
                                       " parameters, needs more than the target's " +
                                       std::to_string(v.params()));
  }
  const std::size_t r = f.params() - v.params();
  const DiophantineSet joined = set_intersect(f, set_product(fullset(f.ring(), r, f.domain()), v));
  IndexSet first{f.params(), {}};
  for (std::size_t i = 1; i <= r; ++i) first.s.push_back(i);
  return set_project(joined, first);
}

DiophantineSet set_compose(const DiophantineSet& g, const std::vector<DiophantineSet>& hs) {
  if (hs.empty()) fail(ErrorCode::ArityMismatch, "composition needs at least one inner relation");
  const std::size_t n = hs.size();
  const std::size_t k = hs.front().params() - 1;
  if (hs.front().params() < 2) fail(ErrorCode::ArityMismatch, "inner relation needs inputs and a value");
  for (const auto& h : hs) {
    require_compatible(g, h);
    if (h.params() != k + 1) fail(ErrorCode::ArityMismatch, "inner relations differ in input count");
  }
  if (g.params() <= n) {
    fail(ErrorCode::ArityMismatch, "outer relation has " + std::to_string(g.params()) +
                                       " parameters, needs " + std::to_string(n) + " inputs and a value");
  }
  const std::size_t s = g.params() - n;
  const std::size_t total = k + n + s;  // (x_1..x_k, y_1..y_n, z_1..z_s)

  DiophantineSet acc = set_product(hs.front(), fullset(g.ring(), n - 1 + s, g.domain()));
  for (std::size_t i = 1; i < n; ++i) {
    IndexSet pick{total, {}};
    for (std::size_t j = 1; j <= k; ++j) pick.s.push_back(j);
    pick.s.push_back(k + i + 1);
    acc = set_intersect(acc, set_preimage(proj_graph(total, pick, g.ring(), g.domain()), hs[i]));
  }
  acc = set_intersect(acc, set_product(fullset(g.ring(), k, g.domain()), g));

  IndexSet keep{total, {}};
  for (std::size_t j = 1; j <= k; ++j) keep.s.push_back(j);
  for (std::size_t j = 1; j <= s; ++j) keep.s.push_back(k + n + j);
  return set_project(acc, keep);
}

DiophantineSet set_reorder_params(const DiophantineSet& a, std::span<const std::size_t> order) {
  if (order.size() != a.params()) fail(ErrorCode::ArityMismatch, "reorder needs one entry per parameter");
  std::vector<std::size_t> map(a.arity(), a.arity());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= a.params()) fail(ErrorCode::IndexOutOfRange, "reorder index out of range");
    if (map[order[i]] != a.arity()) fail(ErrorCode::NonInjectiveMap, "reorder repeats a parameter");
    map[order[i]] = i;
  }
  for (std::size_t j = a.params(); j < a.arity(); ++j) map[j] = j;
  return DiophantineSet(a.ring(), a.params(), a.aux(), remapped(a.conjuncts(), map, a.arity()),
                        a.domain());
}

DiophantineSet graph_add(RingDescriptor ring, SetDomain domain) {
  auto x = [ring](std::size_t i) { return Polynomial::variable(ring, i, 3); };
  return DiophantineSet(ring, 3, 0, {x(0) + x(1) - x(2)}, domain);
}

DiophantineSet graph_mul(RingDescriptor ring, SetDomain domain) {
  auto x = [ring](std::size_t i) { return Polynomial::variable(ring, i, 3); };
  return DiophantineSet(ring, 3, 0, {x(0) * x(1) - x(2)}, domain);
}

DiophantineSet graph_identity(RingDescriptor ring, SetDomain domain) {
  auto x = [ring](std::size_t i) { return Polynomial::variable(ring, i, 2); };
  return DiophantineSet(ring, 2, 0, {x(0) - x(1)}, domain);
}

}  // namespace diophant
