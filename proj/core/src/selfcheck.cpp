#include "diophant/selfcheck.hpp"

#include <functional>
#include <random>

#include "diophant/dioset.hpp"
#include "diophant/enumeration.hpp"
#include "diophant/error.hpp"
#include "diophant/formal.hpp"
#include "diophant/numtheory.hpp"
#include "diophant/reduction.hpp"
#include "diophant/search.hpp"
#include "diophant/syntax.hpp"

namespace diophant {

namespace {

using Rng = std::mt19937_64;

std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

RingElement random_element(Rng& rng, RingDescriptor ring, std::int64_t r) {
  return RingElement(ring, draw(rng, -r, r), ring.is_integers() ? 0 : draw(rng, -r, r));
}

Polynomial random_polynomial(Rng& rng, RingDescriptor ring, std::size_t arity) {
  std::vector<Term> terms;
  const auto count = draw(rng, 0, 4);
  for (std::int64_t i = 0; i < count; ++i) {
    Exponents e(arity);
    for (auto& x : e) x = static_cast<std::uint32_t>(draw(rng, 0, 2));
    terms.push_back({random_element(rng, ring, 5), std::move(e)});
  }
  return Polynomial::from_terms(ring, arity, std::move(terms));
}

const std::vector<RingDescriptor>& sample_rings() {
  static const std::vector<RingDescriptor> rings{RingDescriptor::integers(), RingDescriptor::quadratic(2),
                                                 RingDescriptor::gaussian()};
  return rings;
}

// Each check returns its case count and throws or sets `detail` on failure.
struct Check {
  const char* module;
  const char* name;
  std::function<std::uint64_t(Rng&, std::string&)> body;
};

std::vector<Check> checks() {
  std::vector<Check> out;

  out.push_back({"rings", "norm is multiplicative", [](Rng& rng, std::string& detail) {
    std::uint64_t n = 0;
    for (const auto& ring : sample_rings()) {
      for (int i = 0; i < 200; ++i, ++n) {
        const auto x = random_element(rng, ring, 50);
        const auto y = random_element(rng, ring, 50);
        if (!((x * y).norm() == x.norm() * y.norm())) {
          detail = "N(xy) != N(x)N(y) for " + x.to_string() + ", " + y.to_string();
          return n;
        }
      }
    }
    return n;
  }});

  out.push_back({"polynomial", "evaluation is a ring homomorphism", [](Rng& rng, std::string& detail) {
    std::uint64_t n = 0;
    for (const auto& ring : sample_rings()) {
      for (int i = 0; i < 100; ++i, ++n) {
        const auto p = random_polynomial(rng, ring, 3);
        const auto q = random_polynomial(rng, ring, 3);
        Assignment x{random_element(rng, ring, 4), random_element(rng, ring, 4), random_element(rng, ring, 4)};
        if (!((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)) ||
            !((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x))) {
          detail = "mismatch for p = " + to_text(p) + ", q = " + to_text(q);
          return n;
        }
      }
    }
    return n;
  }});

  out.push_back({"syntax", "printed polynomials parse back", [](Rng& rng, std::string& detail) {
    std::uint64_t n = 0;
    for (const auto& ring : sample_rings()) {
      for (int i = 0; i < 100; ++i, ++n) {
        const auto p = random_polynomial(rng, ring, 3);
        if (!(parse_polynomial(to_text(p), ring, 3) == p)) {
          detail = "round trip failed for " + to_text(p);
          return n;
        }
      }
    }
    return n;
  }});

  out.push_back({"dioset", "conjoin vanishes exactly on common zeros", [](Rng&, std::string& detail) {
    std::uint64_t n = 0;
    for (const auto& ring : sample_rings()) {
      const auto p = Polynomial::variable(ring, 0, 2);
      const auto q = Polynomial::variable(ring, 1, 2);
      const auto c = conjoin(p, q);
      const auto values = SearchDomain::for_set(fullset(ring, 1, SetDomain::Integers), 2).values();
      for (const auto& x : values) {
        for (const auto& y : values) {
          ++n;
          const Assignment at{x, y};
          if (c.evaluate(at).is_zero() != (x.is_zero() && y.is_zero())) {
            detail = "conjoin over " + ring.name() + " misbehaves at (" + x.to_string() + ", " + y.to_string() + ")";
            return n;
          }
        }
      }
    }
    return n;
  }});

  out.push_back({"dioset", "intersection matches both members", [](Rng&, std::string& detail) {
    const RingDescriptor z = RingDescriptor::integers();
    // x0 even, x0 a multiple of 3.
    const auto evens = DiophantineSet::from_polynomial(parse_polynomial("x0 - 2*x1", z), 1);
    const auto threes = DiophantineSet::from_polynomial(parse_polynomial("x0 - 3*x1", z), 1);
    const auto both = set_intersect(evens, threes);
    std::uint64_t n = 0;
    for (std::int64_t v = 0; v <= 12; ++v, ++n) {
      const Assignment pt{RingElement::integer(v)};
      const bool member = is_member(membership(both, pt, SearchDomain::naturals(12)));
      if (member != (v % 6 == 0)) {
        detail = "wrong verdict at " + std::to_string(v);
        return n;
      }
    }
    return n;
  }});

  out.push_back({"search", "witnesses re-evaluate to zero", [](Rng&, std::string& detail) {
    const RingDescriptor z = RingDescriptor::integers();
    const auto q = parse_polynomial("x0^2 + x1^2 - x2", z);
    std::uint64_t n = 0;
    for (std::int64_t v = 0; v <= 25; ++v, ++n) {
      const Assignment fixed{RingElement::integer(v)};
      const auto s = solve_bounded_at(q, SearchDomain::naturals(5), std::vector<std::size_t>{0, 1},
                                      Assignment{RingElement::integer(0), RingElement::integer(0), fixed[0]});
      if (const auto* m = std::get_if<Member>(&s); m && !q.evaluate(m->witness).is_zero()) {
        detail = "bad witness at " + std::to_string(v);
        return n;
      }
    }
    return n;
  }});

  out.push_back({"enumeration", "pairing inverts", [](Rng&, std::string& detail) {
    std::uint64_t n = 0;
    for (std::uint64_t z = 1; z <= 2000; ++z, ++n) {
      const auto l = pairing_left(z);
      const auto r = pairing_right(z);
      if (pairing(l, r) != z || l > z || r > z) {
        detail = "pairing fails at " + std::to_string(z);
        return n;
      }
    }
    return n;
  }});

  out.push_back({"enumeration", "diagonal rows disagree with their sets", [](Rng&, std::string& detail) {
    std::uint64_t n = 0;
    for (const auto& row : diagonal_report(12, 4)) {
      ++n;
      const auto* m = std::get_if<Member>(&row.state);
      if (m && (m->witness.empty() || !(m->witness[0] == RingElement::integer(static_cast<long>(row.n))) ||
                !universal_set(row.n).q().evaluate(m->witness).is_zero())) {
        detail = "row " + std::to_string(row.n) + " has a bad witness";
        return n;
      }
      if (row.chi_v && *row.chi_v != (m ? 0 : 1)) {
        detail = "row " + std::to_string(row.n) + " agrees with D_n";
        return n;
      }
    }
    return n;
  }});

  out.push_back({"numtheory", "Pell invariant", [](Rng&, std::string& detail) {
    std::uint64_t n = 0;
    for (std::int64_t a = 2; a <= 5; ++a) {
      for (std::uint64_t k = 0; k <= 20; ++k, ++n) {
        const auto p = pell_sequence(a, k);
        if (p.x * p.x - BigInt(a * a - 1) * p.y * p.y != 1) {
          detail = "invariant fails at a=" + std::to_string(a) + ", n=" + std::to_string(k);
          return n;
        }
      }
    }
    return n;
  }});

  out.push_back({"numtheory", "four squares", [](Rng&, std::string& detail) {
    std::uint64_t n = 0;
    for (std::int64_t v = 0; v <= 500; ++v, ++n) {
      const auto s = four_squares(v);
      if (s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3] != v) {
        detail = "bad decomposition of " + std::to_string(v);
        return n;
      }
    }
    return n;
  }});

  out.push_back({"numtheory", "y_nk congruence", [](Rng&, std::string& detail) {
    std::uint64_t n = 0;
    for (std::int64_t a = 2; a <= 4; ++a) {
      for (std::uint64_t i = 1; i <= 4; ++i) {
        for (std::uint64_t k = 1; k <= 4; ++k, ++n) {
          if (!check_lemma5(a, i, k).holds) {
            detail = "fails at a=" + std::to_string(a);
            return n;
          }
        }
      }
    }
    return n;
  }});

  out.push_back({"reduction", "sigma witnesses verify", [](Rng&, std::string& detail) {
    std::uint64_t n = 0;
    for (std::int64_t d : {2, 3, 5}) {
      for (std::uint64_t k = 0; k <= 3; ++k, ++n) {
        if (!sigma_verify(sigma_witness(d, k))) {
          detail = "d=" + std::to_string(d) + ", k=" + std::to_string(k);
          return n;
        }
      }
    }
    return n;
  }});

  out.push_back({"reduction", "Gaussian witnesses verify", [](Rng&, std::string& detail) {
    std::uint64_t n = 0;
    for (std::int64_t a = -3; a <= 3; ++a, ++n) {
      if (!gauss_verify(gauss_witness(a)).holds) {
        detail = "a=" + std::to_string(a);
        return n;
      }
    }
    return n;
  }});

  out.push_back({"reduction", "alpha equation solutions are real", [](Rng&, std::string& detail) {
    std::uint64_t n = 0;
    for (const auto& s : alpha_equation_solutions(6)) {
      ++n;
      if (s.x.b() != 0 || s.y.b() != 0 || !s.family) {
        detail = "stray solution " + s.x.to_string() + ", " + s.y.to_string();
        return n;
      }
    }
    return n;
  }});

  out.push_back({"formal", "liar on systems of size 2", [](Rng&, std::string& detail) {
    const auto s = liar_exhaustive(2);
    if (s.counterexamples != 0) detail = std::to_string(s.counterexamples) + " counterexamples";
    return s.instances;
  }});

  out.push_back({"formal", "diagonal construction", [](Rng&, std::string& detail) {
    const auto s = diagonal_exhaustive(2, 3);
    if (s.counterexamples != 0) detail = std::to_string(s.counterexamples) + " counterexamples";
    return s.instances;
  }});

  out.push_back({"formal", "quine sentences", [](Rng&, std::string& detail) {
    std::uint64_t n = 0;
    for (const char* t : {"⟨hole⟩", "is unprovable: ⟨hole⟩", "⟨hole⟩ is false"}) {
      ++n;
      if (!quine_sentence(t).holds) {
        detail = std::string("template ") + t;
        return n;
      }
    }
    return n;
  }});

  return out;
}

}  // namespace

bool SelfcheckReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::map<std::string, std::pair<std::size_t, std::size_t>> SelfcheckReport::per_module() const {
  std::map<std::string, std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : checks) {
    auto& [ok, total] = out[c.module];
    ok += c.passed ? 1 : 0;
    ++total;
  }
  return out;
}

SelfcheckReport run_selfcheck(std::uint64_t seed) {
  SelfcheckReport report;
  Rng rng(seed);
  for (const auto& check : checks()) {
    CheckResult r{check.module, check.name, false, 0, {}};
    try {
      r.cases = check.body(rng, r.detail);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace diophant
