#include "diophant/formal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "diophant/error.hpp"

namespace diophant {

namespace {

void check_mask(const Mask& m, std::size_t size, const char* what) {
  if (m.size() != size) {
    fail(ErrorCode::DomainError, std::string(what) + " has " + std::to_string(m.size()) +
                                     " entries, expected " + std::to_string(size));
  }
}

void check_subset_of_sentences(const FormalSystem& sys, const Mask& m, const char* what) {
  check_mask(m, sys.formulas, what);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] && !sys.sentences[i]) {
      fail(ErrorCode::DomainError,
           std::string(what) + " contains formula " + std::to_string(i) + " which is not a sentence");
    }
  }
}

// Saturating power for feasibility checks.
std::uint64_t capped_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Advances a base-`radix` counter; false on wrap-around.
bool next_tuple(std::vector<std::size_t>& digits, std::size_t radix) {
  for (auto& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

std::size_t count_occurrences(std::string_view hay, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string_view::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

void FiniteFunction2::validate() const {
  if (table.size() != domain_size * domain_size) {
    fail(ErrorCode::DomainError, "table must have |T|^2 = " +
                                     std::to_string(domain_size * domain_size) + " entries");
  }
  for (auto y : table) {
    if (y >= codomain_size) fail(ErrorCode::DomainError, "table value outside Y");
  }
}

DiagonalResult diagonal_construct(const FiniteFunction2& g, std::span<const std::size_t> alpha) {
  g.validate();
  if (alpha.size() != g.codomain_size) fail(ErrorCode::DomainError, "alpha must be defined on all of Y");
  for (auto y : alpha) {
    if (y >= g.codomain_size) fail(ErrorCode::DomainError, "alpha value outside Y");
  }
  const std::size_t n = g.domain_size;
  DiagonalResult r;
  r.f.resize(n);
  for (std::size_t s = 0; s < n; ++s) r.f[s] = alpha[g.at(s, s)];
  for (std::size_t y = 0; y < alpha.size(); ++y) {
    if (alpha[y] == y) r.alpha_fixed_points.push_back(y);
  }
  r.separating_point.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) {
      if (r.f[s] != g.at(s, t)) {
        r.separating_point[t] = s;
        break;
      }
    }
    if (!r.separating_point[t]) r.matching_columns.push_back(t);
  }
  return r;
}

FixedPointReport fixed_point_check(const FiniteFunction2& g, std::uint64_t budget,
                                   std::uint64_t seed) {
  g.validate();
  const std::size_t n = g.domain_size;
  const std::size_t y = g.codomain_size;
  std::set<std::vector<std::size_t>> columns;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::size_t> col(n);
    for (std::size_t s = 0; s < n; ++s) col[s] = g.at(s, t);
    columns.insert(std::move(col));
  }

  FixedPointReport rep;
  const std::uint64_t total = capped_pow(y, n, budget);
  rep.all_representable = true;
  auto examine = [&](const std::vector<std::size_t>& f) {
    if (!columns.contains(f)) {
      rep.all_representable = false;
      rep.unrepresented = f;
      return false;
    }
    return true;
  };

  if (total == 0) {
    // Y empty with T nonempty: there are no functions at all.
    rep.all_representable = true;
  } else if (total <= budget) {
    std::vector<std::size_t> f(n, 0);
    do {
      if (!examine(f)) break;
    } while (next_tuple(f, y));
  } else {
    rep.exhaustive = false;
    rep.budget_exceeded = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, y - 1);
    std::vector<std::size_t> f(n);
    std::uint64_t done = 0;
    for (; done < budget; ++done) {
      for (auto& v : f) v = pick(rng);
      if (!examine(f)) {
        ++done;
        break;
      }
    }
    // The true total may be astronomically large; a lower bound is enough here.
    const double exact_total = std::pow(static_cast<double>(y), static_cast<double>(n));
    rep.examined_fraction = static_cast<double>(done) / exact_total;
  }

  if (rep.all_representable && rep.exhaustive) {
    const std::uint64_t alphas = capped_pow(y, y, budget);
    if (alphas > budget) {
      rep.budget_exceeded = true;
    } else if (y > 0) {
      bool every = true;
      std::vector<std::size_t> alpha(y, 0);
      do {
        bool has_fixed = false;
        for (std::size_t i = 0; i < y; ++i) has_fixed = has_fixed || alpha[i] == i;
        if (!has_fixed) {
          every = false;
          break;
        }
      } while (next_tuple(alpha, y));
      rep.every_alpha_has_fixed_point = every;
    } else {
      rep.every_alpha_has_fixed_point = true;
    }
  }
  return rep;
}

std::optional<std::size_t> FormalSystem::named(std::size_t n) const {
  for (std::size_t phi = 0; phi < naming.size(); ++phi) {
    if (naming[phi] == n) return phi;
  }
  return std::nullopt;
}

void FormalSystem::validate() const {
  check_mask(sentences, formulas, "sentence mask");
  if (std::none_of(sentences.begin(), sentences.end(), [](bool b) { return b; })) {
    fail(ErrorCode::DomainError, "the set of sentences must be nonempty");
  }
  if (naming.size() != formulas) fail(ErrorCode::DomainError, "naming must be defined on every formula");
  std::vector<bool> used(names, false);
  for (auto n : naming) {
    if (n >= names) fail(ErrorCode::DomainError, "naming value outside N");
    if (used[n]) fail(ErrorCode::DomainError, "naming is not injective at name " + std::to_string(n));
    used[n] = true;
  }
  if (subst.size() != formulas * names) {
    fail(ErrorCode::DomainError, "substitution table must have |F|*|N| entries");
  }
  for (auto s : subst) {
    if (s >= formulas || !sentences[s]) fail(ErrorCode::DomainError, "substitution must land in S");
  }
}

std::optional<std::size_t> representable(const FormalSystem& sys, const Mask& a, const Mask& x) {
  check_mask(a, sys.formulas, "A");
  check_mask(x, sys.names, "X");
  for (std::size_t phi = 0; phi < sys.formulas; ++phi) {
    bool ok = true;
    for (std::size_t n = 0; n < sys.names && ok; ++n) ok = a[sys.apply(phi, n)] == x[n];
    if (ok) return phi;
  }
  return std::nullopt;
}

LiarVerdict liar_check(const FormalSystem& sys, const Mask& truth) {
  check_subset_of_sentences(sys, truth, "T");
  LiarVerdict v;
  v.antidiagonal.assign(sys.names, false);
  for (std::size_t phi = 0; phi < sys.formulas; ++phi) {
    const std::size_t n = sys.naming[phi];
    v.antidiagonal[n] = !truth[sys.apply(phi, n)];
  }
  v.counterexample = representable(sys, truth, v.antidiagonal);
  v.confirmed = !v.counterexample.has_value();
  return v;
}

GeneralizedLiar generalized_liar(const FormalSystem& sys, const Mask& a, const Mask& b) {
  check_mask(a, sys.formulas, "A");
  check_subset_of_sentences(sys, b, "B");

  Mask not_named_in_a(sys.names, true);
  for (std::size_t phi = 0; phi < sys.formulas; ++phi) {
    if (a[phi]) not_named_in_a[sys.naming[phi]] = false;
  }
  auto complement = representable(sys, b, not_named_in_a);
  if (!complement) {
    fail(ErrorCode::HypothesisFailure,
         "complement: the names outside A are not B-representable by any of the " +
             std::to_string(sys.formulas) + " formulas");
  }

  Mask diagonal_outside_a(sys.names, false);
  for (std::size_t phi = 0; phi < sys.formulas; ++phi) {
    const std::size_t n = sys.naming[phi];
    diagonal_outside_a[n] = !a[sys.apply(phi, n)];
  }
  auto pi = representable(sys, b, diagonal_outside_a);
  if (!pi) {
    std::string members;
    for (std::size_t n = 0; n < sys.names; ++n) {
      if (diagonal_outside_a[n]) members += (members.empty() ? "" : ",") + std::to_string(n);
    }
    fail(ErrorCode::HypothesisFailure,
         "self-reference: no formula B-represents {n : g^-1(n)[n] not in A} = {" + members + "}");
  }

  GeneralizedLiar r;
  r.complement_witness = *complement;
  r.pi = *pi;
  r.lambda = sys.apply(*pi, sys.naming[*pi]);
  r.in_b = b[r.lambda];
  r.in_a = a[r.lambda];
  if (r.in_b == r.in_a) {
    fail(ErrorCode::InternalInconsistency, "lambda is in B exactly when it is in A");
  }
  return r;
}

void LogicalSystem::validate() const {
  base.validate();
  check_subset_of_sentences(base, provable, "P");
  check_subset_of_sentences(base, truth, "T");
  if (negation.size() != base.formulas) fail(ErrorCode::DomainError, "negation must be total on F");
  for (auto v : negation) {
    if (v >= base.formulas) fail(ErrorCode::DomainError, "negation value outside F");
  }
  for (std::size_t phi = 0; phi < base.formulas; ++phi) {
    const std::size_t neg = negation[phi];
    const std::string at = " at formula " + std::to_string(phi);
    if (base.sentences[phi] != base.sentences[neg]) {
      fail(ErrorCode::DomainError, "negation must preserve sentencehood" + at);
    }
    if (base.sentences[phi] && truth[phi] == truth[neg]) {
      fail(ErrorCode::DomainError, "exactly one of a sentence and its negation must be true" + at);
    }
    for (std::size_t n = 0; n < base.names; ++n) {
      if (truth[base.apply(phi, n)] == truth[base.apply(neg, n)]) {
        fail(ErrorCode::DomainError, "substitution must commute with negation on truth" + at);
      }
    }
  }
}

AuditReport logical_system_audit(const LogicalSystem& l) {
  l.validate();
  const auto& s = l.base.sentences;
  Mask refutable(l.base.formulas, false);
  for (std::size_t phi = 0; phi < l.base.formulas; ++phi) {
    if (l.provable[phi]) refutable[l.negation[phi]] = true;
  }
  AuditReport r{true, true, true};
  for (std::size_t phi = 0; phi < l.base.formulas; ++phi) {
    if (l.provable[phi] && refutable[phi]) r.consistent = false;
    if (s[phi] && !l.provable[phi] && !refutable[phi]) r.complete = false;
    if (l.provable[phi] && !l.truth[phi]) r.sound = false;
  }
  return r;
}

ExhaustiveSummary liar_exhaustive(std::size_t max_size) {
  ExhaustiveSummary out;
  for (std::size_t f = 1; f <= max_size; ++f) {
    for (std::size_t m = f; m <= max_size; ++m) {
      for (std::uint32_t smask = 1; smask < (1u << f); ++smask) {
        FormalSystem sys;
        sys.formulas = f;
        sys.names = m;
        sys.sentences.assign(f, false);
        std::vector<std::size_t> sentence_ids;
        for (std::size_t i = 0; i < f; ++i) {
          if (smask >> i & 1u) {
            sys.sentences[i] = true;
            sentence_ids.push_back(i);
          }
        }
        const std::size_t s = sentence_ids.size();
        // Injective namings: ordered choices of f distinct names out of m.
        std::vector<std::size_t> pool(m);
        for (std::size_t i = 0; i < m; ++i) pool[i] = i;
        std::set<std::vector<std::size_t>> namings;
        do {
          namings.insert(std::vector<std::size_t>(pool.begin(), pool.begin() + f));
        } while (std::next_permutation(pool.begin(), pool.end()));
        for (const auto& naming : namings) {
          sys.naming = naming;
          std::vector<std::size_t> digits(f * m, 0);
          sys.subst.assign(f * m, 0);
          do {
            for (std::size_t k = 0; k < digits.size(); ++k) sys.subst[k] = sentence_ids[digits[k]];
            for (std::uint32_t tmask = 0; tmask < (1u << s); ++tmask) {
              Mask truth(f, false);
              for (std::size_t i = 0; i < s; ++i) truth[sentence_ids[i]] = (tmask >> i & 1u) != 0;
              ++out.instances;
              if (!liar_check(sys, truth).confirmed) ++out.counterexamples;
            }
          } while (next_tuple(digits, s));
        }
      }
    }
  }
  return out;
}

ExhaustiveSummary diagonal_exhaustive(std::size_t max_t, std::size_t max_y) {
  ExhaustiveSummary out;
  for (std::size_t t = 1; t <= max_t; ++t) {
    for (std::size_t y = 1; y <= max_y; ++y) {
      std::vector<std::vector<std::size_t>> free_alphas;
      std::vector<std::size_t> alpha(y, 0);
      do {
        bool fixed = false;
        for (std::size_t i = 0; i < y; ++i) fixed = fixed || alpha[i] == i;
        if (!fixed) free_alphas.push_back(alpha);
      } while (next_tuple(alpha, y));
      FiniteFunction2 g{t, y, std::vector<std::size_t>(t * t, 0)};
      do {
        for (const auto& a : free_alphas) {
          ++out.instances;
          if (!diagonal_construct(g, a).matching_columns.empty()) ++out.counterexamples;
        }
      } while (next_tuple(g.table, y));
    }
  }
  return out;
}

std::string quote(std::string_view text) {
  std::string r(kQuoteOpen);
  r += text;
  r += kQuoteClose;
  return r;
}

std::string splice(std::string_view tmpl, std::string_view filler) {
  if (count_occurrences(tmpl, kHole) != 1) {
    fail(ErrorCode::MalformedTemplate, "template must contain exactly one hole");
  }
  const auto pos = tmpl.find(kHole);
  std::string r(tmpl.substr(0, pos));
  r += filler;
  r += tmpl.substr(pos + kHole.size());
  return r;
}

std::string resolve_diag(std::string_view sentence) {
  const std::string opener = std::string("diag(") + std::string(kQuoteOpen);
  const auto start = sentence.find(opener);
  if (start == std::string_view::npos) fail(ErrorCode::MalformedTemplate, "no diag term to resolve");
  std::size_t pos = start + opener.size();
  const std::size_t body = pos;
  int depth = 1;
  while (pos < sentence.size()) {
    if (sentence.substr(pos, kQuoteOpen.size()) == kQuoteOpen) {
      ++depth;
      pos += kQuoteOpen.size();
    } else if (sentence.substr(pos, kQuoteClose.size()) == kQuoteClose) {
      if (--depth == 0) break;
      pos += kQuoteClose.size();
    } else {
      ++pos;
    }
  }
  if (depth != 0) fail(ErrorCode::MalformedTemplate, "unterminated quotation in diag term");
  const std::string_view content = sentence.substr(body, pos - body);
  pos += kQuoteClose.size();
  if (pos >= sentence.size() || sentence[pos] != ')') {
    fail(ErrorCode::MalformedTemplate, "diag term must close right after its quotation");
  }
  std::string r(sentence.substr(0, start));
  r += quote(splice(content, quote(content)));
  r += sentence.substr(pos + 1);
  return r;
}

QuineResult quine_sentence(std::string_view tmpl) {
  const std::size_t holes = count_occurrences(tmpl, kHole);
  if (holes != 1) {
    fail(ErrorCode::MalformedTemplate,
         "template must contain exactly one hole, found " + std::to_string(holes));
  }
  if (tmpl.find("diag(") != std::string_view::npos || tmpl.find(kQuoteOpen) != std::string_view::npos ||
      tmpl.find(kQuoteClose) != std::string_view::npos) {
    fail(ErrorCode::MalformedTemplate, "template may not contain diag( or quotation brackets");
  }
  const std::string self_applied = splice(tmpl, "diag(" + std::string(kHole) + ")");
  QuineResult r;
  r.sentence = splice(self_applied, quote(self_applied));
  r.resolved = resolve_diag(r.sentence);
  r.expected = splice(tmpl, quote(r.sentence));
  r.holds = r.resolved == r.expected;
  return r;
}

}  // namespace diophant
