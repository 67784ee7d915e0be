#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rlat/blp.hpp"
#include "rlat/construct.hpp"
#include "rlat/enumerate.hpp"
#include "rlat/fixtures.hpp"
#include "rlat/iso.hpp"

using namespace rlat;

namespace {

std::vector<Algebra> corpus(std::size_t max_n) {
  std::vector<Algebra> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& a : enumerate_algebras(n)) out.push_back(a);
  return out;
}

ConstructionError::Kind kind_of(auto&& f) {
  try {
    f();
  } catch (const ConstructionError& e) {
    return e.kind();
  }
  FAIL("no ConstructionError");
  return ConstructionError::Kind::kTooLarge;
}

}  // namespace

TEST_CASE("Goedel chains") {
  const Algebra c = godel_chain(3);
  CHECK(all_filters(c).size() == 3);
  CHECK(godel_chain(1).trivial());
  CHECK(are_isomorphic(godel_chain(2), fixtures::b2()));
  CHECK(element_classes(godel_chain(2)).booleans == godel_chain(2).universe());
  for (Elem x = 0; x < 5; ++x)
    for (Elem y = 0; y < 5; ++y) CHECK(godel_chain(5).mult(x, y) == std::min(x, y));
}

TEST_CASE("Lukasiewicz chains") {
  const Algebra l = lukasiewicz_chain(5);
  CHECK(l.mult(2, 3) == 1);
  CHECK(l.mult(1, 2) == 0);
  CHECK(element_classes(l).involutive);
  CHECK(are_isomorphic(lukasiewicz_chain(3), fixtures::l3()));
}

TEST_CASE("Boolean algebras") {
  CHECK(boolean_algebra(0).trivial());
  CHECK(are_isomorphic(boolean_algebra(1), fixtures::b2()));
  const Algebra b = boolean_algebra(3);
  CHECK(b.size() == 8);
  CHECK(element_classes(b).booleans == b.universe());
  CHECK(algebra_has_blp(boolean_algebra(2)).verdict);
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      CHECK(b.mult(x, y) == (x & y));
      CHECK(b.imp(x, y) == ((~x & 7) | y));
    }
}

TEST_CASE("direct products") {
  const Algebra b2 = fixtures::b2();
  CHECK(are_isomorphic(direct_product(b2, b2).algebra, fixtures::b4()));
  const Algebra c3 = fixtures::c3(), l3 = fixtures::l3();
  auto cc = direct_product(c3, c3);
  CHECK(cc.algebra.size() == 9);
  CHECK(algebra_has_blp(cc.algebra).verdict);
  CHECK(algebra_has_blp(direct_product(c3, l3).algebra).verdict);
  CHECK(kind_of([] { direct_product(std::span<const Algebra>{}); }) == ConstructionError::Kind::kEmptyList);
}

TEST_CASE("product encoding and componentwise operations") {
  const Algebra a = fixtures::ex5(), b = fixtures::l3();
  auto p = direct_product(a, b);
  CHECK(p.factor_sizes == std::vector<std::size_t>{5, 3});
  const Algebra& ab = p.algebra;
  for (Elem x = 0; x < ab.size(); ++x) {
    auto dx = p.decode(x);
    CHECK(p.encode(dx) == x);
    for (Elem y = 0; y < ab.size(); ++y) {
      auto dy = p.decode(y);
      CHECK(p.decode(ab.join(x, y)) == std::vector<Elem>{a.join(dx[0], dy[0]), b.join(dx[1], dy[1])});
      CHECK(p.decode(ab.mult(x, y)) == std::vector<Elem>{a.mult(dx[0], dy[0]), b.mult(dx[1], dy[1])});
      CHECK(p.decode(ab.imp(x, y)) == std::vector<Elem>{a.imp(dx[0], dy[0]), b.imp(dx[1], dy[1])});
    }
  }
  ElementSet expected;
  for (Elem x = 0; x < ab.size(); ++x) {
    auto d = p.decode(x);
    if (complemented_elements(a).contains(d[0]) && complemented_elements(b).contains(d[1])) expected.insert(x);
  }
  CHECK(complemented_elements(ab) == expected);
  std::vector<Algebra> three = {fixtures::b2(), fixtures::b2(), fixtures::b2()};
  CHECK(are_isomorphic(direct_product(three).algebra, boolean_algebra(3)));
}

TEST_CASE("interval algebras") {
  const Algebra b4 = fixtures::b4();
  auto i = interval_algebra(b4, 1);
  CHECK(are_isomorphic(i.algebra, fixtures::b2()));
  CHECK(i.to_parent == std::vector<Elem>{1, 3});
  CHECK(interval_algebra(b4, b4.top()).algebra.trivial());
  const Algebra a = fixtures::ex5();
  auto whole = interval_algebra(a, 0);
  CHECK(whole.algebra.same_tables(a));
  CHECK(whole.algebra.imp_table() == a.imp_table());
  CHECK(kind_of([&] { interval_algebra(a, 3); }) == ConstructionError::Kind::kNotBoolean);
}

TEST_CASE("interval implication is e v (x -> y)") {
  for (const Algebra& a : corpus(5)) {
    complemented_elements(a).for_each([&](Elem e) {
      auto s = interval_algebra(a, e);
      CHECK(s.algebra.size() == a.up_set(e).count());
      for (Elem x = 0; x < s.algebra.size(); ++x)
        for (Elem y = 0; y < s.algebra.size(); ++y) {
          const Elem px = s.to_parent[x], py = s.to_parent[y];
          CHECK(s.to_parent[s.algebra.imp(x, y)] == a.join(e, a.imp(px, py)));
          CHECK(s.to_parent[s.algebra.mult(x, y)] == a.mult(px, py));
        }
    });
  }
}

TEST_CASE("restriction of EX5 below c") {
  const Algebra a = fixtures::ex5();
  auto l = restrict_lower(a, 3);
  CHECK(l.algebra.size() == 4);
  CHECK(l.to_parent == std::vector<Elem>{0, 1, 2, 3});
  CHECK(is_local(l.algebra) == is_local(a));
  CHECK_FALSE(is_local(l.algebra));
  CHECK(spectra(l.algebra).max.size() == 2);
}

TEST_CASE("restrictions of a Goedel chain are Goedel chains") {
  const Algebra g = godel_chain(4);
  CHECK(are_isomorphic(restrict_lower(g, 2).algebra, godel_chain(3)));
  CHECK(are_isomorphic(restrict_upper(g, 1).algebra, godel_chain(2)));
  CHECK(are_isomorphic(restrict_upper(g, 2).algebra, godel_chain(3)));
}

TEST_CASE("restricting at the top returns the algebra") {
  for (const Algebra& a : corpus(4)) {
    auto r = restrict_lower(a, a.top());
    CHECK(r.algebra.same_tables(a));
  }
}

TEST_CASE("restrictions reject the wrong shape") {
  // B4 at an atom: neither [a,1] nor [0,a] together with the other part
  // covers the algebra.
  const Algebra b4 = fixtures::b4();
  CHECK(kind_of([&] { restrict_lower(b4, 1); }) == ConstructionError::Kind::kShapeMismatch);
  CHECK(kind_of([&] { restrict_upper(fixtures::ex5(), 3); }) == ConstructionError::Kind::kShapeMismatch);
}

TEST_CASE("stacking a chain on B4 gives EX5") {
  CHECK(are_isomorphic(stack_chain(fixtures::b4(), 1, StackPosition::kTop), fixtures::ex5()));
}

TEST_CASE("stacking on the trivial algebra gives a chain") {
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(are_isomorphic(stack_chain(godel_chain(1), k, StackPosition::kTop), godel_chain(k + 1)));
    CHECK(are_isomorphic(stack_chain(godel_chain(1), k, StackPosition::kBottom), godel_chain(k + 1)));
  }
}

TEST_CASE("stack then restrict round-trips") {
  for (const Algebra& l : corpus(4)) {
    for (std::size_t k = 1; k <= 2; ++k) {
      const Algebra up = stack_chain(l, k, StackPosition::kTop);
      CHECK(up.size() == l.size() + k);
      if (!l.trivial()) {
        CHECK(are_isomorphic(restrict_lower(up, l.top()).algebra, l));
        CHECK(is_local(up) == is_local(l));
      }
      const Algebra down = stack_chain(l, k, StackPosition::kBottom);
      CHECK(is_local(down));
      CHECK(are_isomorphic(restrict_upper(down, static_cast<Elem>(k)).algebra, godel_chain(k + 1)));
    }
  }
}

TEST_CASE("restriction locality laws on the corpus") {
  for (const Algebra& a : corpus(5)) {
    for (Elem p = 1; p + 1 < a.size(); ++p) {
      try {
        auto l = restrict_lower(a, p);
        CHECK(is_local(a) == is_local(l.algebra));
      } catch (const ConstructionError& e) {
        CHECK(e.kind() == ConstructionError::Kind::kShapeMismatch);
      }
      try {
        restrict_upper(a, p);
        CHECK(is_local(a));
      } catch (const ConstructionError& e) {
        CHECK(e.kind() == ConstructionError::Kind::kShapeMismatch);
      }
    }
  }
}
