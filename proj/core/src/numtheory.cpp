#include "diophant/numtheory.hpp"

#include "diophant/error.hpp"

namespace diophant {

BigInt mod_floor(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

PellPair pell_sequence(std::int64_t a, std::uint64_t n) {
  if (a < 2) fail(ErrorCode::DomainError, "Pell parameter a must be >= 2, got " + std::to_string(a));
  const BigInt two_a = BigInt(2) * BigInt(static_cast<long>(a));
  BigInt x_prev = 1, y_prev = 0;
  BigInt x = static_cast<long>(a), y = 1;
  if (n == 0) {
    x = 1;
    y = 0;
  }
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt x_next = two_a * x - x_prev;
    BigInt y_next = two_a * y - y_prev;
    x_prev = std::move(x);
    y_prev = std::move(y);
    x = std::move(x_next);
    y = std::move(y_next);
  }
  const BigInt e = BigInt(static_cast<long>(a)) * a - 1;
  if (x * x - e * y * y != 1) fail(ErrorCode::InternalInconsistency, "Pell invariant broken");
  return PellPair{a, n, x, y};
}

Lemma5Report check_lemma5(std::int64_t a, std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 1) fail(ErrorCode::DomainError, "n and k must be >= 1");
  Lemma5Report report;
  report.y_n = pell_sequence(a, n).y;
  report.y_nk = pell_sequence(a, n * k).y;
  const BigInt y2 = report.y_n * report.y_n;
  report.modulus = y2 * y2;
  const BigInt kk = static_cast<unsigned long>(k);
  report.lhs_residue = mod_floor(report.y_nk * report.y_nk, report.modulus);
  report.rhs_residue = mod_floor(y2 * kk * kk, report.modulus);
  report.holds = report.lhs_residue == report.rhs_residue;
  return report;
}

namespace {

// Greatest (k3, k4) with k3 >= k4, k3 <= cap and k3^2 + k4^2 = n.
std::optional<std::pair<BigInt, BigInt>> two_squares(const BigInt& n, const BigInt& cap) {
  BigInt k3 = isqrt(n);
  if (k3 > cap) k3 = cap;
  for (; k3 >= 0; --k3) {
    const BigInt rest = n - k3 * k3;
    if (rest > k3 * k3) break;
    if (is_perfect_square(rest)) return std::make_pair(k3, isqrt(rest));
  }
  return std::nullopt;
}

}  // namespace

std::array<BigInt, 4> four_squares(const BigInt& n) {
  if (n < 0) fail(ErrorCode::DomainError, "four_squares needs n >= 0");
  for (BigInt k1 = isqrt(n); k1 >= 0; --k1) {
    const BigInt r1 = n - k1 * k1;
    if (r1 > 3 * k1 * k1) break;
    BigInt k2 = isqrt(r1);
    if (k2 > k1) k2 = k1;
    for (; k2 >= 0; --k2) {
      const BigInt r2 = r1 - k2 * k2;
      if (r2 > 2 * k2 * k2) break;
      if (auto tail = two_squares(r2, k2)) return {k1, k2, tail->first, tail->second};
    }
  }
  fail(ErrorCode::InternalInconsistency, "no four-square decomposition for " + n.get_str());
}

std::pair<BigInt, BigInt> pell_fundamental(std::int64_t d) {
  if (d < 2 || !is_square_free(d)) {
    fail(ErrorCode::DomainError, "d must be square-free and >= 2, got " + std::to_string(d));
  }
  const BigInt dd = static_cast<long>(d);
  const BigInt a0 = isqrt(dd);
  // Continued fraction of sqrt(d): m, q, a with convergents h/k.
  BigInt m = 0, q = 1, a = a0;
  BigInt h_prev = 1, h = a0;
  BigInt k_prev = 0, k = 1;
  while (h * h - dd * k * k != 1) {
    m = q * a - m;
    q = (dd - m * m) / q;
    a = (a0 + m) / q;
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
  }
  return {h, k};
}

BigInt alpha(std::int64_t n, const std::optional<BigInt>& modulus) {
  if (modulus && *modulus < 2) fail(ErrorCode::DomainError, "alpha modulus must be >= 2");
  if (n < 0) {
    BigInt v = -alpha(-n, std::nullopt);
    return modulus ? mod_floor(v, *modulus) : v;
  }
  BigInt prev = 0, cur = 1;
  if (n == 0) return 0;
  for (std::int64_t i = 1; i < n; ++i) {
    BigInt next = 4 * cur - prev;
    if (modulus) next = mod_floor(next, *modulus);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return modulus ? mod_floor(cur, *modulus) : cur;
}

std::uint64_t alpha_period(const BigInt& modulus) {
  if (modulus < 2) fail(ErrorCode::DomainError, "alpha modulus must be >= 2");
  const BigInt cap = 6 * modulus;
  BigInt prev = 0, cur = 1;
  for (std::uint64_t j = 1; cap >= j; ++j) {
    BigInt next = mod_floor(4 * cur - prev, modulus);
    prev = std::move(cur);
    cur = std::move(next);
    if (prev == 0 && cur == 1) return j;
  }
  fail(ErrorCode::PeriodExhausted, "alpha mod " + modulus.get_str() + " did not return to (0, 1)");
}

std::uint64_t find_odd_index(const BigInt& p) {
  const BigInt modulus = 4 * (3 * p * p + 1);
  const std::uint64_t period = alpha_period(modulus);
  BigInt prev = 0, cur = 1;  // alpha(j), alpha(j+1)
  for (std::uint64_t j = 0; j <= period + 4; ++j) {
    if (j >= 4 && j % 2 == 0 && prev == 0) return j + 1;
    BigInt next = mod_floor(4 * cur - prev, modulus);
    prev = std::move(cur);
    cur = std::move(next);
  }
  fail(ErrorCode::PeriodExhausted,
       "no even j >= 4 with alpha(j) == 0 mod " + modulus.get_str() + " within one period");
}

ExtGcd ext_gcd(const BigInt& u, const BigInt& v) {
  if (u == 0 && v == 0) fail(ErrorCode::BothZero, "ext_gcd(0, 0)");
  BigInt old_r = u, r = v;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt quotient;
    mpz_fdiv_q(quotient.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    BigInt tmp = old_r - quotient * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - quotient * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - quotient * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

AlphaMultiplicationReport check_alpha_multiplication(std::int64_t p, std::int64_t n) {
  if (p < 1 || p % 2 == 0) fail(ErrorCode::DomainError, "p must be odd and positive");
  if (n < 1) fail(ErrorCode::DomainError, "n must be >= 1");
  AlphaMultiplicationReport report;
  const BigInt an = alpha(n);
  const BigInt prev = alpha(n - 1);
  const BigInt sign = (p % 2 == 0) ? 1 : -1;
  const BigInt pp = static_cast<long>(p);
  BigInt pow_n, pow_p;
  mpz_pow_ui(pow_n.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(n - 1));
  mpz_pow_ui(pow_p.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(p - 1));
  const BigInt apn = alpha(p * n);

  report.modulus = an;
  report.lhs = mod_floor(apn, an);
  report.rhs = mod_floor(sign * pp * pow_n, an);
  report.rhs_exponent_p = mod_floor(sign * pp * pow_p, an);
  report.holds = report.lhs == report.rhs;
  report.holds_exponent_p = report.lhs == report.rhs_exponent_p;
  const BigInt square = an * an;
  report.holds_mod_square = mod_floor(apn, square) == mod_floor(-sign * pp * pow_p * an, square);
  return report;
}

}  // namespace diophant
