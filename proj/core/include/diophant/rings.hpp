#pragma once

// Exact arithmetic in Z, Z[sqrt d] (d square-free, d >= 2) and Z[i].

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace diophant {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);
/// Floor of the square root; the argument must be non-negative.
BigInt isqrt(const BigInt& value);
bool is_perfect_square(const BigInt& value);
bool fits_int64(const BigInt& value);

bool is_square_free(std::int64_t d);

enum class RingKind { RationalIntegers, QuadReal, GaussianIntegers };

class RingDescriptor {
 public:
  /// Z. Default-constructed descriptors are Z as well.
  RingDescriptor() = default;

  static RingDescriptor integers() { return RingDescriptor{}; }
  /// Z[sqrt d]; throws DomainError unless d >= 2 and d is square-free.
  static RingDescriptor quadratic(std::int64_t d);
  static RingDescriptor gaussian() { return RingDescriptor(RingKind::GaussianIntegers, -1); }

  RingKind kind() const noexcept { return kind_; }
  /// omega^2: d for Z[sqrt d], -1 for Z[i], 0 for Z.
  std::int64_t radicand() const noexcept { return radicand_; }

  /// The d' used by the norm-form conjunction p^2 - d' q^2: the smallest
  /// square-free positive integer different from d (2, or 3 when d = 2).
  /// Z uses the sum of squares instead and reports 0 here.
  std::int64_t conjoin_multiplier() const noexcept;

  bool is_integers() const noexcept { return kind_ == RingKind::RationalIntegers; }

  /// "Z", "Z[sqrt(2)]", "Z[i]".
  std::string name() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

 private:
  RingDescriptor(RingKind kind, std::int64_t radicand) : kind_(kind), radicand_(radicand) {}

  RingKind kind_ = RingKind::RationalIntegers;
  std::int64_t radicand_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RingDescriptor& ring);

/// a + b*omega with omega = sqrt(d) or i. Over Z the b-component is always 0.
class RingElement {
 public:
  RingElement() = default;
  RingElement(RingDescriptor ring, BigInt a, BigInt b = 0);

  static RingElement integer(BigInt a) { return RingElement(RingDescriptor::integers(), std::move(a)); }
  static RingElement zero(RingDescriptor ring) { return RingElement(ring, 0); }
  static RingElement one(RingDescriptor ring) { return RingElement(ring, 1); }
  /// sqrt(d) or i; DomainError over Z.
  static RingElement omega(RingDescriptor ring);

  const RingDescriptor& ring() const noexcept { return ring_; }
  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  RingElement conj() const;
  /// x * conj(x), returned as an element of the same ring with b = 0.
  RingElement norm() const;
  RingElement pow(unsigned exponent) const;

  /// Same value carried into another ring; DomainError if b != 0 and the
  /// target is Z.
  RingElement in_ring(RingDescriptor target) const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator*(RingElement x, const RingElement& y) { return x *= y; }
  RingElement operator-() const;

  friend bool operator==(const RingElement& x, const RingElement& y) {
    return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Text form accepted by the expression parser, e.g. "3", "(1 + 2*sqrtd)", "-i".
  std::string to_string() const;

 private:
  void require_same_ring(const RingElement& other) const;

  RingDescriptor ring_;
  BigInt a_ = 0;
  BigInt b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

// Named forms of the ring operations.
RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_mul(const RingElement& x, const RingElement& y);
/// (conj(x), norm(x)).
std::pair<RingElement, RingElement> conj_norm(const RingElement& x);
bool is_rational_integer(const RingElement& x);

/// x / y when y divides x exactly in the ring, otherwise nullopt.
std::optional<RingElement> exact_divide(const RingElement& x, const RingElement& y);

}  // namespace diophant
