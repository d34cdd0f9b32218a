#pragma once

// Bounded brute-force solving. Membership in a Diophantine set is only
// semidecidable, so an exhausted box answers Unknown rather than "no".

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "diophant/dioset.hpp"
#include "diophant/polynomial.hpp"
#include "diophant/polynomial_expr.hpp"

namespace diophant {

enum class ScanKind { Naturals, Integers, RingBox };

struct SearchDomain {
  RingDescriptor ring;
  ScanKind kind = ScanKind::Naturals;
  std::uint64_t radius = 0;

  static SearchDomain naturals(std::uint64_t radius) { return {RingDescriptor::integers(), ScanKind::Naturals, radius}; }
  static SearchDomain integers(std::uint64_t radius) { return {RingDescriptor::integers(), ScanKind::Integers, radius}; }
  /// a + b*omega with |a|, |b| <= radius; over Z this is the integer range.
  static SearchDomain ring_box(RingDescriptor ring, std::uint64_t radius) { return {ring, ScanKind::RingBox, radius}; }
  /// The natural domain for a set's variables.
  static SearchDomain for_set(const DiophantineSet& set, std::uint64_t radius);

  /// DomainError if Naturals is paired with a ring other than Z.
  void validate() const;
  /// Coordinate values in scan order: 0..R, -R..R, or (a, b) lexicographic.
  std::vector<RingElement> values() const;
};

struct Member {
  /// Full assignment (fixed and free variables) at which q vanishes.
  Assignment witness;
};
struct NonMember {};
struct Unknown {
  std::uint64_t radius = 0;
};

using TriState = std::variant<Member, NonMember, Unknown>;

inline bool is_member(const TriState& s) { return std::holds_alternative<Member>(s); }
inline bool is_nonmember(const TriState& s) { return std::holds_alternative<NonMember>(s); }
inline bool is_unknown(const TriState& s) { return std::holds_alternative<Unknown>(s); }
/// "member", "nonmember" or "unknown".
std::string state_name(const TriState& s);

struct SearchOptions {
  /// Threads used for one scan. The answer does not depend on this.
  unsigned workers = 1;
};

/// Fixes the first arity - free_count variables to `fixed` and scans the
/// last free_count over the domain box. Member carries the first root in scan
/// order; NonMember only when q is a nonzero constant once the fixed values
/// are substituted; Unknown otherwise.
TriState solve_bounded(const Polynomial& q, const SearchDomain& dom, std::size_t free_count,
                       std::span<const RingElement> fixed = {}, const SearchOptions& options = {});
TriState solve_bounded(const PolynomialExpr& q, const SearchDomain& dom, std::size_t free_count,
                       std::span<const RingElement> fixed = {}, const SearchOptions& options = {});

/// General form: `base` supplies every variable, the entries at
/// `free_indices` are scanned (earlier indices vary slowest).
TriState solve_bounded_at(const Polynomial& q, const SearchDomain& dom,
                          std::span<const std::size_t> free_indices, const Assignment& base,
                          const SearchOptions& options = {});
TriState solve_bounded_at(const PolynomialExpr& q, const SearchDomain& dom,
                          std::span<const std::size_t> free_indices, const Assignment& base,
                          const SearchOptions& options = {});

/// Membership of one parameter point; witness values range over `dom`.
TriState membership(const DiophantineSet& set, std::span<const RingElement> point,
                    const SearchDomain& dom, const SearchOptions& options = {});

struct MemberPoint {
  Assignment point;
  Assignment witness;
};

/// Every parameter point in the box of radius `param_radius` (same scan kind
/// as `dom`) that resolves as Member with witnesses of radius dom.radius, in
/// lexicographic scan order.
std::vector<MemberPoint> enumerate_members(const DiophantineSet& set, const SearchDomain& dom,
                                           std::uint64_t param_radius,
                                           const SearchOptions& options = {});

/// All points of the box of the given dimension, in scan order.
std::vector<Assignment> box_points(const SearchDomain& dom, std::size_t dimension);

}  // namespace diophant
