#include "diophant/rings.hpp"

#include <ostream>

#include "diophant/error.hpp"

namespace diophant {

std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt isqrt(const BigInt& value) {
  if (value < 0) fail(ErrorCode::DomainError, "isqrt of a negative number");
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

bool is_perfect_square(const BigInt& value) {
  return value >= 0 && mpz_perfect_square_p(value.get_mpz_t()) != 0;
}

bool fits_int64(const BigInt& value) {
  static const BigInt lo("-9223372036854775808");
  static const BigInt hi("9223372036854775807");
  return value >= lo && value <= hi;
}

bool is_square_free(std::int64_t d) {
  if (d == 0) return false;
  std::uint64_t n = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

RingDescriptor RingDescriptor::quadratic(std::int64_t d) {
  if (d == -1) fail(ErrorCode::DomainError, "use the Gaussian integers for d = -1");
  if (d < 2) fail(ErrorCode::DomainError, "Z[sqrt d] requires d >= 2, got " + std::to_string(d));
  if (!is_square_free(d)) fail(ErrorCode::DomainError, std::to_string(d) + " is not square-free");
  return RingDescriptor(RingKind::QuadReal, d);
}

std::int64_t RingDescriptor::conjoin_multiplier() const noexcept {
  switch (kind_) {
    case RingKind::RationalIntegers: return 0;
    case RingKind::GaussianIntegers: return 2;
    case RingKind::QuadReal: return radicand_ == 2 ? 3 : 2;
  }
  return 0;
}

std::string RingDescriptor::name() const {
  switch (kind_) {
    case RingKind::RationalIntegers: return "Z";
    case RingKind::GaussianIntegers: return "Z[i]";
    case RingKind::QuadReal: return "Z[sqrt(" + std::to_string(radicand_) + ")]";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const RingDescriptor& ring) { return os << ring.name(); }

RingElement::RingElement(RingDescriptor ring, BigInt a, BigInt b)
    : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
  if (ring_.is_integers() && b_ != 0) {
    fail(ErrorCode::DomainError, "element of Z must have zero omega-component");
  }
}

RingElement RingElement::omega(RingDescriptor ring) {
  if (ring.is_integers()) fail(ErrorCode::DomainError, "Z has no omega");
  return RingElement(ring, 0, 1);
}

void RingElement::require_same_ring(const RingElement& other) const {
  if (!(ring_ == other.ring_)) {
    fail(ErrorCode::RingMismatch, ring_.name() + " vs " + other.ring_.name());
  }
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_ring(other);
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_ring(other);
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  require_same_ring(other);
  // (a + b w)(c + e w) = ac + be w^2 + (ae + bc) w
  BigInt a = a_ * other.a_ + b_ * other.b_ * ring_.radicand();
  BigInt b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

RingElement RingElement::operator-() const { return RingElement(ring_, -a_, -b_); }

RingElement RingElement::conj() const { return RingElement(ring_, a_, -b_); }

RingElement RingElement::norm() const {
  return RingElement(ring_, a_ * a_ - b_ * b_ * ring_.radicand(), 0);
}

RingElement RingElement::pow(unsigned exponent) const {
  RingElement result = one(ring_);
  RingElement base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

RingElement RingElement::in_ring(RingDescriptor target) const {
  if (target == ring_) return *this;
  return RingElement(target, a_, b_);
}

std::string RingElement::to_string() const {
  if (b_ == 0) return a_.get_str();
  const std::string unit = ring_.kind() == RingKind::GaussianIntegers ? "i" : "sqrtd";
  std::string omega_part;
  if (b_ == 1) {
    omega_part = unit;
  } else if (b_ == -1) {
    omega_part = "-" + unit;
  } else {
    omega_part = b_.get_str() + "*" + unit;
  }
  if (a_ == 0) return omega_part;
  if (b_ < 0) {
    BigInt mag = -b_;
    std::string tail = mag == 1 ? unit : mag.get_str() + "*" + unit;
    return "(" + a_.get_str() + " - " + tail + ")";
  }
  return "(" + a_.get_str() + " + " + omega_part + ")";
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.to_string(); }

RingElement ring_add(const RingElement& x, const RingElement& y) { return x + y; }
RingElement ring_mul(const RingElement& x, const RingElement& y) { return x * y; }

std::pair<RingElement, RingElement> conj_norm(const RingElement& x) { return {x.conj(), x.norm()}; }

bool is_rational_integer(const RingElement& x) { return x.b() == 0; }

std::optional<RingElement> exact_divide(const RingElement& x, const RingElement& y) {
  if (!(x.ring() == y.ring())) fail(ErrorCode::RingMismatch, "exact_divide");
  if (y.is_zero()) return std::nullopt;
  // x / y = x * conj(y) / N(y)
  const BigInt n = y.norm().a();
  const RingElement numerator = x * y.conj();
  if (!mpz_divisible_p(numerator.a().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(numerator.b().get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  BigInt qa, qb;
  mpz_divexact(qa.get_mpz_t(), numerator.a().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qb.get_mpz_t(), numerator.b().get_mpz_t(), n.get_mpz_t());
  return RingElement(x.ring(), qa, qb);
}

}  // namespace diophant
