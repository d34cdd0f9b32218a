#include <gtest/gtest.h>

#include "diophant/dioset.hpp"
#include "diophant/error.hpp"
#include "diophant/search.hpp"
#include "diophant/syntax.hpp"
#include "generators.hpp"

using namespace diophant;

namespace {

const RingDescriptor kZ = RingDescriptor::integers();

RingElement zi(long v) { return RingElement::integer(v); }

DiophantineSet from_text(const char* text, std::size_t params, std::size_t arity = 0,
                         SetDomain domain = SetDomain::Naturals) {
  return DiophantineSet::from_polynomial(parse_polynomial(text, kZ, arity), params, domain);
}

bool in(const DiophantineSet& s, std::vector<long> point, std::uint64_t witness_radius = 10) {
  std::vector<RingElement> pt;
  for (auto v : point) pt.push_back(zi(v));
  return is_member(membership(s, pt, SearchDomain::for_set(s, witness_radius)));
}

const DiophantineSet& evens() {
  static const DiophantineSet s = from_text("x0 - 2*x1", 1);
  return s;
}

}  // namespace

TEST(Conjoin, IntegerBoxExample) {
  const auto c = conjoin(parse_polynomial("x0 - 1", kZ, 2), parse_polynomial("x1 - 2", kZ, 2));
  int zeros = 0;
  for (long a = -5; a <= 5; ++a) {
    for (long b = -5; b <= 5; ++b) {
      if (c.evaluate(std::vector{zi(a), zi(b)}).is_zero()) {
        ++zeros;
        EXPECT_EQ(a, 1);
        EXPECT_EQ(b, 2);
      }
    }
  }
  EXPECT_EQ(zeros, 1);
}

TEST(Conjoin, ZeroWithZeroIsZero) {
  for (auto ring : {kZ, RingDescriptor::quadratic(2), RingDescriptor::gaussian()}) {
    EXPECT_TRUE(conjoin(Polynomial(ring, 2), Polynomial(ring, 2)).is_zero());
  }
}

TEST(Conjoin, NormFormInQuadraticRing) {
  const auto ring = RingDescriptor::quadratic(2);
  const auto c = conjoin(Polynomial::variable(ring, 0, 2), Polynomial::variable(ring, 1, 2));
  const auto one = RingElement::one(ring);
  EXPECT_EQ(c.evaluate(std::vector{one, one}), RingElement(ring, -2));
}

TEST(Conjoin, RingMismatch) {
  EXPECT_THROW(conjoin(Polynomial::variable(kZ, 0, 1), Polynomial::variable(RingDescriptor::gaussian(), 0, 1)), Error);
}

TEST(Singleton, Examples) {
  const auto three = set_singleton({zi(3)}, SetDomain::Integers);
  EXPECT_EQ(three.aux(), 0u);
  for (long v = -10; v <= 10; ++v) {
    const auto st = membership(three, std::vector{zi(v)}, SearchDomain::integers(0));
    EXPECT_EQ(is_member(st), v == 3);
    EXPECT_EQ(is_nonmember(st), v != 3);
  }
  const auto origin = set_singleton({zi(0), zi(0)});
  EXPECT_TRUE(in(origin, {0, 0}));
  EXPECT_FALSE(in(origin, {0, 1}));
  const auto g = RingDescriptor::gaussian();
  const auto gs = set_singleton({RingElement(g, 1, 1)});
  for (const auto& x : SearchDomain::ring_box(g, 3).values()) {
    EXPECT_EQ(is_member(membership(gs, std::vector{x}, SearchDomain::ring_box(g, 0))), x == RingElement(g, 1, 1));
  }
}

TEST(Product, Examples) {
  const auto s = set_product(evens(), set_singleton({zi(3)}));
  EXPECT_EQ(s.params(), 2u);
  EXPECT_TRUE(in(s, {4, 3}));
  EXPECT_FALSE(in(s, {3, 3}));
  const auto with_full = set_product(evens(), fullset(kZ, 1));
  for (long y = 0; y <= 4; ++y) {
    EXPECT_TRUE(in(with_full, {2, y}));
    EXPECT_FALSE(in(with_full, {1, y}));
  }
  const auto zeros = set_product(set_singleton({zi(0)}), set_singleton({zi(0)}));
  for (long a = 0; a <= 2; ++a) {
    for (long b = 0; b <= 2; ++b) EXPECT_EQ(in(zeros, {a, b}), a == 0 && b == 0);
  }
}

TEST(Product, RingMismatch) {
  EXPECT_THROW(set_product(evens(), fullset(RingDescriptor::gaussian(), 1)), Error);
}

TEST(Intersect, Examples) {
  const auto threes = from_text("x0 - 3*x1", 1);
  const auto both = set_intersect(evens(), threes);
  std::vector<long> got;
  for (long v = 0; v <= 10; ++v) {
    if (in(both, {v})) got.push_back(v);
  }
  EXPECT_EQ(got, (std::vector<long>{0, 6}));
  const auto self = set_intersect(evens(), evens());
  for (long v = 0; v <= 10; ++v) EXPECT_EQ(in(self, {v}), in(evens(), {v}));
  const auto none = set_intersect(evens(), emptyset(kZ, 1));
  for (long v = 0; v <= 10; ++v) EXPECT_FALSE(in(none, {v}));
}

TEST(Intersect, ParamMismatch) {
  try {
    set_intersect(evens(), fullset(kZ, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
  }
}

TEST(Project, Examples) {
  const auto graph = from_text("x1 - x0^2", 2);
  const auto squares = set_project(graph, IndexSet{2, {2}});
  EXPECT_EQ(squares.params(), 1u);
  for (long v = 0; v <= 20; ++v) EXPECT_EQ(in(squares, {v}), v == 0 || v == 1 || v == 4 || v == 9 || v == 16);
  const auto same = set_project(graph, IndexSet{2, {1, 2}});
  EXPECT_TRUE(in(same, {3, 9}));
  EXPECT_FALSE(in(same, {3, 8}));
  const auto first = set_project(set_singleton({zi(3), zi(5)}), IndexSet{2, {1}});
  for (long v = 0; v <= 6; ++v) EXPECT_EQ(in(first, {v}), v == 3);
}

TEST(Project, BadIndexSets) {
  for (const IndexSet& bad : {IndexSet{2, {}}, IndexSet{2, {0}}, IndexSet{2, {2, 1}}, IndexSet{2, {3}},
                              IndexSet{3, {1}}}) {
    try {
      set_project(from_text("x1 - x0^2", 2), bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadIndexSet);
    }
  }
}

TEST(ProjGraph, Examples) {
  const auto g = proj_graph(2, IndexSet{2, {1}});
  EXPECT_EQ(g.params(), 3u);
  EXPECT_TRUE(in(g, {1, 2, 1}));
  EXPECT_FALSE(in(g, {1, 2, 2}));
  const auto diag = proj_graph(1, IndexSet{1, {1}});
  for (long a = 0; a <= 3; ++a) {
    for (long b = 0; b <= 3; ++b) EXPECT_EQ(in(diag, {a, b}), a == b);
  }
  const auto g3 = proj_graph(3, IndexSet{3, {1, 3}});
  for (const auto& pt : box_points(SearchDomain::naturals(2), 5)) {
    const bool expect = pt[3] == pt[0] && pt[4] == pt[2];
    EXPECT_EQ(is_member(membership(g3, pt, SearchDomain::naturals(0))), expect);
  }
}

TEST(Preimage, Examples) {
  const auto succ = from_text("x1 - x0 - 1", 2);
  const auto odds = set_preimage(succ, evens());
  for (long v = 0; v <= 10; ++v) EXPECT_EQ(in(odds, {v}), v % 2 == 1) << v;
  const auto all = set_preimage(succ, fullset(kZ, 1));
  for (long v = 0; v <= 5; ++v) EXPECT_TRUE(in(all, {v}));
  const auto same = set_preimage(graph_identity(), evens());
  for (long v = 0; v <= 10; ++v) EXPECT_EQ(in(same, {v}), v % 2 == 0);
}

TEST(Preimage, ArityMismatch) {
  EXPECT_THROW(set_preimage(from_text("x1 - x0", 2), fullset(kZ, 2)), Error);
}

TEST(Compose, Examples) {
  const auto doubling = set_compose(graph_add(), {graph_identity(), graph_identity()});
  EXPECT_EQ(doubling.params(), 2u);
  EXPECT_TRUE(in(doubling, {3, 6}, 8));
  EXPECT_FALSE(in(doubling, {3, 5}, 8));
  const auto same = set_compose(graph_identity(), {from_text("x1 - x0 - 2", 2)});
  EXPECT_TRUE(in(same, {1, 3}, 8));
  EXPECT_FALSE(in(same, {1, 4}, 8));
  const auto squaring = set_compose(graph_mul(), {graph_identity(), graph_identity()});
  EXPECT_TRUE(in(squaring, {4, 16}, 20));
  EXPECT_FALSE(in(squaring, {4, 15}, 20));
}

TEST(Compose, ArityMismatch) {
  // The inner functions must agree on their input count.
  EXPECT_THROW(set_compose(graph_add(), {graph_identity(), graph_add()}), Error);
  EXPECT_THROW(set_compose(graph_add(), {}), Error);
}

TEST(Graphs, ArithmeticGraphs) {
  for (long a = 0; a <= 3; ++a) {
    for (long b = 0; b <= 3; ++b) {
      EXPECT_TRUE(in(graph_add(), {a, b, a + b}, 0));
      EXPECT_FALSE(in(graph_add(), {a, b, a + b + 1}, 0));
      EXPECT_TRUE(in(graph_mul(), {a, b, a * b}, 0));
    }
  }
}

TEST(ReorderParams, Permutes) {
  const auto g = from_text("x1 - x0 - 1", 2);
  const std::vector<std::size_t> swap{1, 0};
  const auto r = set_reorder_params(g, swap);
  EXPECT_TRUE(in(r, {4, 3}, 0));
  EXPECT_FALSE(in(r, {3, 4}, 0));
}

TEST(DiophantineSet, DomainMismatchIsRejected) {
  const auto a = from_text("x0 - 2*x1", 1, 0, SetDomain::Integers);
  try {
    set_product(a, evens());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
}

TEST(DiophantineSet, ArityInvariant) {
  EXPECT_THROW(DiophantineSet(kZ, 0, 0, {}), Error);
  const auto s = set_product(evens(), from_text("x0 - x1^2", 1));
  EXPECT_EQ(s.q().arity(), s.params() + s.aux());
}

// Projection of A x B onto the first block equals A when B is nonempty on the box.
TEST(DiosetProperties, ProjectionOfProduct) {
  const auto squares = from_text("x0 - x1^2", 1);
  const auto p = set_project(set_product(evens(), squares), IndexSet{2, {1}});
  for (long v = 0; v <= 10; ++v) EXPECT_EQ(in(p, {v}, 6), in(evens(), {v}, 6)) << v;
}

TEST(DiosetProperties, ConjoinExhaustiveOnRandomPolynomials) {
  gen::Source src(77);
  for (int i = 0; i < 40; ++i) {
    const RingDescriptor ring = src.ring();
    const auto p = src.polynomial(ring, 2, 2, 1, 2);
    const auto q = src.polynomial(ring, 2, 2, 1, 2);
    const auto c = conjoin(p, q);
    const auto values = SearchDomain::for_set(fullset(ring, 1, SetDomain::Integers), 2).values();
    for (const auto& a : values) {
      for (const auto& b : values) {
        const std::vector<RingElement> pt{a, b};
        ASSERT_EQ(c.evaluate(pt).is_zero(), p.evaluate(pt).is_zero() && q.evaluate(pt).is_zero());
      }
    }
  }
}
