#include "diophant/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <thread>

#include "diophant/error.hpp"
#include "fast_eval.hpp"

namespace diophant {

SearchDomain SearchDomain::for_set(const DiophantineSet& set, std::uint64_t radius) {
  if (!set.ring().is_integers()) return ring_box(set.ring(), radius);
  return set.domain() == SetDomain::Naturals ? naturals(radius) : integers(radius);
}

void SearchDomain::validate() const {
  if (kind == ScanKind::Naturals && !ring.is_integers()) {
    fail(ErrorCode::DomainError, "a naturals scan needs ring Z, got " + ring.name());
  }
  if (kind != ScanKind::RingBox && !ring.is_integers()) {
    fail(ErrorCode::DomainError, "scan over " + ring.name() + " must be a ring box");
  }
}

std::vector<RingElement> SearchDomain::values() const {
  validate();
  const long r = static_cast<long>(radius);
  std::vector<RingElement> out;
  if (kind == ScanKind::Naturals) {
    for (long a = 0; a <= r; ++a) out.emplace_back(ring, a);
  } else if (ring.is_integers()) {
    for (long a = -r; a <= r; ++a) out.emplace_back(ring, a);
  } else {
    for (long a = -r; a <= r; ++a) {
      for (long b = -r; b <= r; ++b) out.emplace_back(ring, a, b);
    }
  }
  return out;
}

std::string state_name(const TriState& s) {
  if (is_member(s)) return "member";
  if (is_nonmember(s)) return "nonmember";
  return "unknown";
}

namespace {

template <typename Q>
TriState scan(const Q& q, const SearchDomain& dom, std::span<const std::size_t> free_indices,
              const Assignment& base, const SearchOptions& options) {
  dom.validate();
  if (!(dom.ring == q.ring())) {
    fail(ErrorCode::RingMismatch, "search over " + dom.ring.name() + " for a polynomial over " +
                                      q.ring().name());
  }
  if (base.size() < q.arity()) {
    fail(ErrorCode::ArityMismatch, "assignment has " + std::to_string(base.size()) +
                                       " entries, polynomial arity is " + std::to_string(q.arity()));
  }
  std::vector<bool> is_free(base.size(), false);
  for (auto f : free_indices) {
    if (f >= base.size()) fail(ErrorCode::IndexOutOfRange, "free variable index out of range");
    if (is_free[f]) fail(ErrorCode::NonInjectiveMap, "free variable listed twice");
    is_free[f] = true;
  }

  std::vector<std::size_t> fixed_idx;
  std::vector<RingElement> fixed_vals;
  for (std::size_t i = 0; i < q.arity(); ++i) {
    if (!is_free[i]) {
      if (!(base[i].ring() == q.ring())) fail(ErrorCode::RingMismatch, "fixed value in the wrong ring");
      fixed_idx.push_back(i);
      fixed_vals.push_back(base[i]);
    }
  }
  const Q reduced = q.partial_evaluate(fixed_idx, fixed_vals);

  const std::vector<RingElement> values = dom.values();
  Assignment start = base;
  for (auto f : free_indices) start[f] = values.front();

  auto confirm = [&q](const Assignment& witness) -> TriState {
    if (!q.evaluate(witness).is_zero()) {
      fail(ErrorCode::InternalInconsistency, "search witness does not re-verify");
    }
    return Member{witness};
  };

  if (reduced.is_constant()) {
    if (reduced.evaluate(start).is_zero()) return confirm(start);
    return NonMember{};
  }

  std::vector<std::size_t> used;
  for (auto f : free_indices) {
    if (reduced.uses_variable(f)) used.push_back(f);
  }

  const detail::FastEvaluator fast(reduced);
  std::vector<detail::SmallValue> small_values;
  bool small_ok = fast.usable();
  for (const auto& v : values) {
    auto s = detail::to_small(v);
    if (!s) {
      small_ok = false;
      break;
    }
    small_values.push_back(*s);
  }

  const std::size_t width = values.size();
  const std::size_t u = used.size();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(options.workers, width));
  std::vector<std::optional<Assignment>> found(chunks);
  std::atomic<std::size_t> best{chunks};

  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = width * c / chunks;
    const std::size_t hi = width * (c + 1) / chunks;
    if (lo == hi) return;
    std::vector<std::size_t> idx(u, 0);
    idx[0] = lo;
    std::vector<detail::SmallValue> point(reduced.arity());
    std::uint64_t counter = 0;
    while (true) {
      if ((++counter & 0xFFF) == 0 && best.load(std::memory_order_relaxed) < c) return;
      std::optional<bool> zero;
      if (small_ok) {
        for (std::size_t j = 0; j < u; ++j) {
          if (used[j] < point.size()) point[used[j]] = small_values[idx[j]];
        }
        zero = fast.is_zero(point);
      }
      if (!zero.has_value() || *zero) {
        Assignment candidate = start;
        for (std::size_t j = 0; j < u; ++j) candidate[used[j]] = values[idx[j]];
        if (reduced.evaluate(candidate).is_zero()) {
          found[c] = std::move(candidate);
          std::size_t expected = best.load();
          while (c < expected && !best.compare_exchange_weak(expected, c)) {
          }
          return;
        }
      }
      std::size_t j = u;
      while (j > 0) {
        --j;
        ++idx[j];
        const std::size_t limit = j == 0 ? hi : width;
        if (idx[j] < limit) break;
        if (j == 0) return;
        idx[j] = 0;
      }
    }
  };

  if (chunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t c = 0; c < chunks; ++c) threads.emplace_back(run_chunk, c);
    for (auto& t : threads) t.join();
  }
  for (auto& f : found) {
    if (f) return confirm(*f);
  }
  return Unknown{dom.radius};
}

template <typename Q>
TriState scan_trailing(const Q& q, const SearchDomain& dom, std::size_t free_count,
                       std::span<const RingElement> fixed, const SearchOptions& options) {
  if (free_count > q.arity()) {
    fail(ErrorCode::ArityMismatch, "free_count " + std::to_string(free_count) + " exceeds arity " +
                                       std::to_string(q.arity()));
  }
  const std::size_t n_fixed = q.arity() - free_count;
  if (fixed.size() != n_fixed) {
    fail(ErrorCode::ArityMismatch, "expected " + std::to_string(n_fixed) + " fixed values, got " +
                                       std::to_string(fixed.size()));
  }
  Assignment base(fixed.begin(), fixed.end());
  base.resize(q.arity(), RingElement::zero(q.ring()));
  std::vector<std::size_t> free(free_count);
  for (std::size_t j = 0; j < free_count; ++j) free[j] = n_fixed + j;
  return scan(q, dom, free, base, options);
}

}  // namespace

TriState solve_bounded(const Polynomial& q, const SearchDomain& dom, std::size_t free_count,
                       std::span<const RingElement> fixed, const SearchOptions& options) {
  return scan_trailing(q, dom, free_count, fixed, options);
}

TriState solve_bounded(const PolynomialExpr& q, const SearchDomain& dom, std::size_t free_count,
                       std::span<const RingElement> fixed, const SearchOptions& options) {
  return scan_trailing(q, dom, free_count, fixed, options);
}

TriState solve_bounded_at(const Polynomial& q, const SearchDomain& dom,
                          std::span<const std::size_t> free_indices, const Assignment& base,
                          const SearchOptions& options) {
  return scan(q, dom, free_indices, base, options);
}

TriState solve_bounded_at(const PolynomialExpr& q, const SearchDomain& dom,
                          std::span<const std::size_t> free_indices, const Assignment& base,
                          const SearchOptions& options) {
  return scan(q, dom, free_indices, base, options);
}

TriState membership(const DiophantineSet& set, std::span<const RingElement> point,
                    const SearchDomain& dom, const SearchOptions& options) {
  if (point.size() != set.params()) {
    fail(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) +
                                       " coordinates, set has " + std::to_string(set.params()) +
                                       " parameters");
  }
  return solve_bounded(set.q(), dom, set.aux(), point, options);
}

std::vector<Assignment> box_points(const SearchDomain& dom, std::size_t dimension) {
  const auto values = dom.values();
  std::vector<Assignment> out;
  if (dimension == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::size_t> idx(dimension, 0);
  while (true) {
    Assignment p(dimension);
    for (std::size_t j = 0; j < dimension; ++j) p[j] = values[idx[j]];
    out.push_back(std::move(p));
    std::size_t j = dimension;
    while (j > 0) {
      --j;
      if (++idx[j] < values.size()) break;
      if (j == 0) return out;
      idx[j] = 0;
    }
  }
}

std::vector<MemberPoint> enumerate_members(const DiophantineSet& set, const SearchDomain& dom,
                                           std::uint64_t param_radius, const SearchOptions& options) {
  SearchDomain param_dom = dom;
  param_dom.radius = param_radius;
  const auto points = box_points(param_dom, set.params());
  std::vector<std::optional<MemberPoint>> results(points.size());
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(options.workers, points.size()));
  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = points.size() * c / chunks;
    const std::size_t hi = points.size() * (c + 1) / chunks;
    for (std::size_t i = lo; i < hi; ++i) {
      auto state = membership(set, points[i], dom);
      if (auto* m = std::get_if<Member>(&state)) results[i] = MemberPoint{points[i], m->witness};
    }
  };
  if (chunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t c = 0; c < chunks; ++c) threads.emplace_back(run_chunk, c);
    for (auto& t : threads) t.join();
  }
  std::vector<MemberPoint> out;
  for (auto& r : results) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace diophant
