#include "diophant/enumeration.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

#include "diophant/error.hpp"
#include "fast_eval.hpp"

namespace diophant {

namespace {

std::uint64_t triangular(std::uint64_t m) { return m % 2 == 0 ? (m / 2) * (m + 1) : m * ((m + 1) / 2); }

// Least s with s(s+1)/2 >= z.
std::uint64_t diagonal_of(std::uint64_t z) {
  auto s = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  while (s > 0 && triangular(s - 1) >= z) --s;
  while (triangular(s) < z) ++s;
  return s;
}

void require_positive(std::uint64_t v, const char* what) {
  if (v < 1) fail(ErrorCode::DomainError, std::string(what) + " must be >= 1");
}

}  // namespace

std::uint64_t pairing(std::uint64_t x, std::uint64_t y) {
  require_positive(x, "pairing argument");
  require_positive(y, "pairing argument");
  if (x > (1ULL << 31) || y > (1ULL << 31)) fail(ErrorCode::DomainError, "pairing argument too large");
  return triangular(x + y - 2) + x;
}

std::uint64_t pairing_left(std::uint64_t z) {
  require_positive(z, "pairing code");
  const std::uint64_t s = diagonal_of(z);
  return z - triangular(s - 1);
}

std::uint64_t pairing_right(std::uint64_t z) {
  require_positive(z, "pairing code");
  const std::uint64_t s = diagonal_of(z);
  return s + 1 - (z - triangular(s - 1));
}

namespace {

std::shared_mutex g_memo_mutex;
std::unordered_map<std::uint64_t, Polynomial>& memo() {
  static std::unordered_map<std::uint64_t, Polynomial> table;
  return table;
}

}  // namespace

std::vector<std::uint64_t> recursion_children(std::uint64_t n) {
  if (n < 1) fail(ErrorCode::DomainError, "index must be ≥ 1");
  if (n == 1 || n % 3 == 2) return {};
  const std::uint64_t i = n / 3;
  return {pairing_left(i), pairing_right(i)};
}

namespace {

// P_n with arity one past its highest variable; the public form pads to n.
Polynomial compact_polynomial(std::uint64_t n) {
  {
    std::shared_lock lock(g_memo_mutex);
    auto it = memo().find(n);
    if (it != memo().end()) return it->second;
  }
  const RingDescriptor z = RingDescriptor::integers();
  Polynomial result;
  if (n == 1) {
    result = Polynomial::constant(RingElement::one(z), 0);
  } else if (n % 3 == 2) {
    const std::uint64_t index = (n + 1) / 3 - 1;
    result = Polynomial::variable(z, index, index + 1);
  } else {
    const auto kids = recursion_children(n);
    const Polynomial lhs = compact_polynomial(kids[0]);
    const Polynomial rhs = compact_polynomial(kids[1]);
    result = n % 3 == 0 ? lhs + rhs : lhs * rhs;
  }
  std::unique_lock lock(g_memo_mutex);
  return memo().try_emplace(n, std::move(result)).first->second;
}

}  // namespace

Polynomial nth_polynomial(std::uint64_t n) {
  if (n < 1) fail(ErrorCode::DomainError, "index must be ≥ 1");
  return compact_polynomial(n).with_arity(n);
}

DiophantineSet universal_set(std::uint64_t n) {
  if (n < 1) fail(ErrorCode::DomainError, "index must be ≥ 1");
  const Polynomial lhs = compact_polynomial(pairing_left(n)).with_arity(n + 1);
  const Polynomial rhs = compact_polynomial(pairing_right(n)).with_arity(n + 1);
  return DiophantineSet(RingDescriptor::integers(), 1, n, {lhs - rhs}, SetDomain::Naturals);
}

namespace {

bool sign_certificate(const Polynomial& p) {
  if (p.constant_term().is_zero()) return false;
  const int sign = sgn(p.terms().front().coeff.a());
  for (const auto& t : p.terms()) {
    if (sgn(t.coeff.a()) != sign) return false;
  }
  return true;
}

bool parity_certificate(const Polynomial& p, const std::vector<std::size_t>& used) {
  if (used.size() > 20) return false;
  Assignment point(p.arity(), RingElement::zero(p.ring()));
  for (std::uint64_t mask = 0; mask < (1ULL << used.size()); ++mask) {
    for (std::size_t j = 0; j < used.size(); ++j) {
      point[used[j]] = RingElement::integer((mask >> j) & 1U);
    }
    if (p.evaluate(point).a() % 2 == 0) return false;
  }
  return true;
}

}  // namespace

TriState diagonal_membership(std::uint64_t n, std::uint64_t budget) {
  const DiophantineSet set = universal_set(n);
  const Polynomial& q = set.q();
  const RingDescriptor z = RingDescriptor::integers();
  const RingElement x0 = RingElement::integer(BigInt(std::to_string(n)));
  const std::size_t fix[] = {0};
  const Polynomial reduced = q.partial_evaluate(fix, std::span<const RingElement>(&x0, 1));

  Assignment witness(q.arity(), RingElement::zero(z));
  witness[0] = x0;
  if (reduced.is_constant()) {
    if (reduced.is_zero()) return Member{witness};
    return NonMember{};
  }
  const std::vector<std::size_t> used = reduced.used_variables();
  if (sign_certificate(reduced) || parity_certificate(reduced, used)) return NonMember{};

  const detail::FastEvaluator fast(reduced);
  const std::size_t k = used.size();
  std::vector<detail::SmallValue> point(reduced.arity());
  std::vector<std::uint64_t> idx(k);
  for (std::uint64_t b = 1; b <= budget; ++b) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      bool in_shell = b == 1;
      for (auto v : idx) in_shell = in_shell || v == b;
      if (in_shell) {
        for (std::size_t j = 0; j < k; ++j) point[used[j]] = {static_cast<detail::i128>(idx[j]), 0};
        const auto zero = fast.is_zero(point);
        if (!zero.has_value() || *zero) {
          for (std::size_t j = 0; j < k; ++j) {
            witness[used[j]] = RingElement::integer(BigInt(std::to_string(idx[j])));
          }
          if (q.evaluate(witness).is_zero()) return Member{witness};
        }
      }
      std::size_t j = k;
      bool done = true;
      while (j > 0) {
        --j;
        if (++idx[j] <= b) {
          done = false;
          break;
        }
        idx[j] = 0;
      }
      if (done) break;
    }
  }
  return Unknown{budget};
}

std::vector<DiagonalRow> diagonal_report(std::uint64_t max_n, std::uint64_t budget, unsigned workers) {
  if (max_n < 1) fail(ErrorCode::DomainError, "N must be >= 1");
  std::vector<DiagonalRow> rows(max_n);
  auto fill = [&](std::uint64_t n) {
    DiagonalRow row;
    row.n = n;
    row.state = diagonal_membership(n, budget);
    if (is_member(row.state)) row.chi_v = 0;
    if (is_nonmember(row.state)) row.chi_v = 1;
    rows[n - 1] = std::move(row);
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(max_n)));
  if (threads == 1) {
    for (std::uint64_t n = 1; n <= max_n; ++n) fill(n);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t n = 1 + t; n <= max_n; n += threads) fill(n);
      });
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace diophant
