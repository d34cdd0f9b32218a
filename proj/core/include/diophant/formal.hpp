#pragma once

// Finite models of diagonal arguments: functions T x T -> Y, abstract formal
// systems with naming and substitution, the Liar and generalized Liar
// constructions, logical-system audits and a small quoting language with
// self-referential sentences.
//
// Every finite set is {0, ..., size-1}; subsets are boolean masks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diophant {

using Mask = std::vector<bool>;

struct FiniteFunction2 {
  std::size_t domain_size = 0;    // |T|
  std::size_t codomain_size = 0;  // |Y|
  /// g(s, t) at s * domain_size + t.
  std::vector<std::size_t> table;

  std::size_t at(std::size_t s, std::size_t t) const { return table[s * domain_size + t]; }
  /// DomainError unless the table is total and lands in Y.
  void validate() const;
};

struct DiagonalResult {
  /// f(s) = alpha(g(s, s)).
  std::vector<std::size_t> f;
  std::vector<std::size_t> alpha_fixed_points;
  /// For each column t, the first s with f(s) != g(s, t), if any.
  std::vector<std::optional<std::size_t>> separating_point;
  /// Columns equal to f (empty whenever alpha has no fixed point).
  std::vector<std::size_t> matching_columns;
};

DiagonalResult diagonal_construct(const FiniteFunction2& g, std::span<const std::size_t> alpha);

struct FixedPointReport {
  bool exhaustive = true;
  /// Share of the |Y|^|T| functions examined.
  double examined_fraction = 1.0;
  bool budget_exceeded = false;
  /// Every examined f is a column of g.
  bool all_representable = false;
  std::optional<std::vector<std::size_t>> unrepresented;
  /// Checked only when all_representable holds.
  std::optional<bool> every_alpha_has_fixed_point;
};

/// Checks whether every f : T -> Y is a column of g, sampling `budget`
/// functions with the given seed when there are more than that.
FixedPointReport fixed_point_check(const FiniteFunction2& g, std::uint64_t budget = 1'000'000,
                                   std::uint64_t seed = 1);

struct FormalSystem {
  std::size_t formulas = 0;  // |F|
  /// S as a subset of F.
  Mask sentences;
  std::size_t names = 0;  // |N|
  /// g : F -> N, injective.
  std::vector<std::size_t> naming;
  /// phi[n] at phi * names + n; always a sentence.
  std::vector<std::size_t> subst;

  std::size_t apply(std::size_t phi, std::size_t n) const { return subst[phi * names + n]; }
  /// g^-1(n), if n names a formula.
  std::optional<std::size_t> named(std::size_t n) const;
  /// DomainError when an invariant fails.
  void validate() const;
};

/// First phi with phi[n] in A exactly when n is in X, for every name n.
std::optional<std::size_t> representable(const FormalSystem& sys, const Mask& a, const Mask& x);

struct LiarVerdict {
  /// {n in g(F) : g^-1(n)[n] not in T}.
  Mask antidiagonal;
  /// True when the anti-diagonal set is not T-representable.
  bool confirmed = false;
  std::optional<std::size_t> counterexample;
};

LiarVerdict liar_check(const FormalSystem& sys, const Mask& truth);

struct GeneralizedLiar {
  /// B-represents the complement of the names of A.
  std::size_t complement_witness = 0;
  /// B-represents {n : g^-1(n)[n] not in A}.
  std::size_t pi = 0;
  /// pi[g(pi)].
  std::size_t lambda = 0;
  bool in_b = false;
  bool in_a = false;
};

/// Both hypotheses are checked constructively; HypothesisFailure names the
/// one that fails. The self-reference hypothesis is checked for the single
/// set the construction needs.
GeneralizedLiar generalized_liar(const FormalSystem& sys, const Mask& a, const Mask& b);

struct LogicalSystem {
  FormalSystem base;
  Mask provable;
  Mask truth;
  /// phi -> phi'.
  std::vector<std::size_t> negation;

  /// DomainError unless phi in S iff phi' in S, phi in T iff phi' not in T
  /// for sentences, and phi[n] in T iff phi'[n] not in T.
  void validate() const;
};

struct AuditReport {
  bool consistent = false;
  bool complete = false;
  bool sound = false;
};

AuditReport logical_system_audit(const LogicalSystem& l);

struct ExhaustiveSummary {
  std::uint64_t instances = 0;
  std::uint64_t counterexamples = 0;
};

/// Liar check on every system with 1 <= |F| <= |N| <= max_size, every
/// nonempty S, injective naming, substitution table and T.
ExhaustiveSummary liar_exhaustive(std::size_t max_size);

/// Every g on |T| <= max_t, |Y| <= max_y and every fixed-point-free alpha:
/// counts the cases where the diagonal f equals some column.
ExhaustiveSummary diagonal_exhaustive(std::size_t max_t, std::size_t max_y);

// ---- Quoting language ------------------------------------------------------

inline constexpr std::string_view kHole = "⟨hole⟩";
inline constexpr std::string_view kQuoteOpen = "⟦";
inline constexpr std::string_view kQuoteClose = "⟧";

/// Wraps in quotation brackets.
std::string quote(std::string_view text);
/// Replaces the single hole with `filler`.
std::string splice(std::string_view tmpl, std::string_view filler);
/// Replaces the first diag(QUOTED) term by the quotation of QUOTED spliced
/// with QUOTED.
std::string resolve_diag(std::string_view sentence);

struct QuineResult {
  std::string sentence;
  std::string resolved;
  std::string expected;
  bool holds = false;
};

/// sigma = template[diag(quote(template[diag(hole)]))], so that resolving the
/// diag term gives template[quote(sigma)]. MalformedTemplate unless the
/// template has exactly one hole and no diag( or quotation brackets.
QuineResult quine_sentence(std::string_view tmpl);

}  // namespace diophant
