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
  std::vector<Algebra> out = fixtures::all();
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& a : enumerate_algebras(n)) out.push_back(a);
  return out;
}

// BLP of a filter by comparing the complemented elements of A/F (lattice
// definition) with the image of B(A).
bool blp_oracle(const Algebra& a, const Filter& f) {
  auto q = quotient(a, f);
  return complemented_elements(q.quotient) == q.image(complemented_elements(a));
}

// S(A) from the definition, with filters as up-sets of powers.
ElementSet s_oracle(const Algebra& a) {
  const ElementSet b = complemented_elements(a);
  auto in_gen = [&](Elem g, Elem y) {
    for (std::size_t k = 1; k <= a.size(); ++k)
      if (a.leq(a.power(g, k), y)) return true;
    return false;
  };
  ElementSet out;
  for (Elem x = 0; x < a.size(); ++x)
    b.for_each([&](Elem e) {
      if (in_gen(x, e) && in_gen(a.neg(x), a.neg(e))) out.insert(x);
    });
  return out;
}

}  // namespace

TEST_CASE("S(A) examples") {
  CHECK(s_set(fixtures::ex5()) == ElementSet{0, 3, 4});
  CHECK(s_set(godel_chain(5)) == godel_chain(5).universe());
  CHECK(s_set(lukasiewicz_chain(4)) == lukasiewicz_chain(4).universe());
  CHECK(s_set(fixtures::b4()) == fixtures::b4().universe());
}

TEST_CASE("S(A) agrees with the definition and both internal forms") {
  for (const Algebra& a : corpus(5)) {
    CHECK(s_set(a) == s_oracle(a));
    CHECK(s_set_biresiduum_form(a) == s_oracle(a));
  }
}

TEST_CASE("filter BLP examples on EX5") {
  const Algebra a = fixtures::ex5();
  auto v = filter_has_blp(a, principal_filter(a, 3));
  CHECK_FALSE(v.holds);
  CHECK(v.witness == std::optional<Elem>(1));
  CHECK(filter_has_blp(a, principal_filter(a, 4)).holds);
  CHECK(filter_has_blp(a, principal_filter(a, 0)).holds);
  CHECK(filter_has_blp(a, principal_filter(a, 1)).holds);

  auto q = quotient(a, principal_filter(a, 3));
  auto lift = lifting_data(a, principal_filter(a, 3), q);
  CHECK(lift.quotient_booleans.count() == 4);
  CHECK(lift.lifted_booleans.count() == 2);
}

TEST_CASE("filter BLP agrees with the quotient oracle") {
  for (const Algebra& a : corpus(5)) {
    auto spec = spectra(a);
    const ElementSet rad = radical(a).members;
    for (const Filter& f : all_filters(a)) {
      const bool expected = blp_oracle(a, f);
      auto v = filter_has_blp(a, f);
      CHECK(v.holds == expected);
      if (!v.holds) {
        REQUIRE(v.witness);
        auto q = quotient(a, f);
        CHECK(f.contains(a.join(*v.witness, a.neg(*v.witness))));
        CHECK_FALSE(q.image(complemented_elements(a)).contains(q.class_of[*v.witness]));
      }
      if (f.members.subset_of(rad)) CHECK(projection_injective_on_booleans(a, f));
    }
    for (const Filter& p : spec.spec) CHECK(filter_has_blp(a, p).holds);
  }
}

TEST_CASE("projection injectivity") {
  const Algebra a = fixtures::ex5();
  CHECK(projection_injective_on_booleans(a, principal_filter(a, 3)));
  const Algebra b = fixtures::b4();
  CHECK_FALSE(projection_injective_on_booleans(b, principal_filter(b, 1)));
  for (const Algebra& x : corpus(5))
    for (const Filter& f : all_filters(x)) {
      auto q = quotient(x, f);
      const ElementSet bs = complemented_elements(x);
      CHECK(projection_injective_on_booleans(x, f) == (q.image(bs).count() == bs.count()));
    }
}

TEST_CASE("algebra BLP examples") {
  CHECK(algebra_has_blp(fixtures::c3()).verdict);
  CHECK_FALSE(algebra_has_blp(fixtures::ex5()).verdict);
  CHECK(algebra_has_blp(fixtures::b4()).verdict);
  CHECK(algebra_has_blp(fixtures::ex5()).route_agreement);
}

TEST_CASE("quasi-locality examples") {
  CHECK_FALSE(is_quasi_local(fixtures::ex5()));
  CHECK(is_quasi_local(fixtures::c3()));
  CHECK(is_quasi_local(fixtures::b4()));
}

TEST_CASE("star conditions examples") {
  CHECK_FALSE(star_star_condition(fixtures::ex5()).holds);
  CHECK(star_condition(fixtures::c3()).holds);
  CHECK(star_condition(fixtures::b4()).holds);
}

TEST_CASE("BLP characterizations agree on the corpus") {
  for (const Algebra& a : corpus(5)) {
    bool every_filter = true;
    for (const Filter& f : all_filters(a)) every_filter = every_filter && blp_oracle(a, f);
    const bool blp = algebra_has_blp(a).verdict;
    CHECK(blp == every_filter);
    CHECK(blp == (s_set(a) == a.universe()));
    CHECK(blp == is_quasi_local(a));
    CHECK(blp == filters_b_normal(a).holds);
    const bool star = star_condition(a).holds, star2 = star_star_condition(a).holds;
    if (star) CHECK(blp);
    if (blp) CHECK(star2);
    if (element_classes(a).mult_is_meet) {
      CHECK(star == blp);
      CHECK(star2 == blp);
    }
    if (!a.trivial()) {
      const bool trivial_center = complemented_elements(a).count() == 2;
      CHECK(is_local(a) == (blp && trivial_center));
      if (is_local(a)) CHECK(star);
    }
  }
}

TEST_CASE("literal B-normality of the reduct is not equivalent to BLP") {
  // Counterexamples in both directions exist already at sizes 5 and 6.
  const Algebra a = fixtures::ex5();
  CHECK(is_b_normal(a));
  CHECK_FALSE(algebra_has_blp(a).verdict);
  bool blp_not_normal = false;
  for (const Algebra& x : enumerate_algebras(5))
    if (algebra_has_blp(x).verdict && !is_b_normal(x)) blp_not_normal = true;
  CHECK(blp_not_normal);
}

TEST_CASE("S(A) closure properties") {
  for (const Algebra& a : corpus(5)) {
    const ElementSet s = s_set(a);
    auto c = element_classes(a);
    CHECK(c.booleans.subset_of(s));
    CHECK(radical(a).members.subset_of(s));
    CHECK(c.dense.subset_of(s));
    for (Elem x = 0; x < a.size(); ++x) {
      if (s.contains(a.neg(x))) CHECK(s.contains(x));
      if (s.contains(a.power(x, 2))) CHECK(s.contains(x));
    }
    for (const Filter& f : all_filters(a)) {
      auto q = quotient(a, f);
      CHECK(q.image(s).subset_of(s_set(q.quotient)));
      if (algebra_has_blp(a).verdict) CHECK(algebra_has_blp(q.quotient).verdict);
    }
    if (c.booleans.count() == 2 || a.trivial()) {
      ElementSet expected = c.nilpotents;
      for (Elem x = 0; x < a.size(); ++x)
        if (c.nilpotents.contains(a.neg(x))) expected.insert(x);
      CHECK(s == expected);
    }
    if (c.mult_is_meet) {
      ElementSet expected, negs;
      for (Elem x = 0; x < a.size(); ++x)
        if (c.booleans.contains(a.neg(x))) expected.insert(x);
      CHECK(s == expected);
      s.for_each([&](Elem x) { negs.insert(a.neg(x)); });
      CHECK(negs == c.booleans);
      if (c.involutive) CHECK(s == c.booleans);
    }
  }
}

TEST_CASE("classify examples") {
  SUBCASE("C3") {
    auto r = classify(fixtures::c3());
    CHECK(r.local);
    CHECK_FALSE(r.simple);
    CHECK_FALSE(r.hyperarchimedean);
    CHECK(r.has_blp);
    CHECK(r.per_filter.size() == 3);
    CHECK(r.radical.members == ElementSet{1, 2});
  }
  SUBCASE("B2") {
    auto r = classify(fixtures::b2());
    CHECK(r.simple);
    CHECK(r.local);
    CHECK(r.has_blp);
  }
  SUBCASE("EX5") {
    auto r = classify(fixtures::ex5());
    CHECK_FALSE(r.local);
    CHECK(r.spectra.max.size() == 2);
    CHECK_FALSE(r.has_blp);
    CHECK(r.classes.booleans == ElementSet{0, 4});
    CHECK_FALSE(r.semiperfect);
    CHECK_FALSE(r.decomposition.has_value());
    CHECK(r.witnesses.count("has_blp") == 1);
  }
}

TEST_CASE("report invariants") {
  for (const Algebra& a : corpus(5)) {
    auto r = classify(a);
    bool all = true;
    for (const auto& f : r.per_filter) all = all && f.has_blp;
    CHECK(r.has_blp == all);
    CHECK(r.has_blp == (r.s_set == a.universe()));
    CHECK(r.s_witness_counts.size() == a.size());
    for (Elem x = 0; x < a.size(); ++x)
      CHECK(r.s_witness_counts[x] == s_witnesses(a, x).count());
  }
}

TEST_CASE("semiperfect decomposition") {
  SUBCASE("B4 splits into two copies of B2") {
    const Algebra b = fixtures::b4();
    auto d = semiperfect_decomposition(b);
    REQUIRE(d);
    CHECK(d->complete_set == std::vector<Elem>{1, 2});
    for (const auto& f : d->factors) CHECK(are_isomorphic(f.algebra, fixtures::b2()));
    CHECK(are_isomorphic(d->product.algebra, b));
  }
  SUBCASE("a local algebra is its own factor") {
    auto d = semiperfect_decomposition(fixtures::c3());
    REQUIRE(d);
    CHECK(d->factors.size() == 1);
  }
  SUBCASE("EX5 has none") { CHECK_FALSE(semiperfect_decomposition(fixtures::ex5()).has_value()); }
  SUBCASE("trivial input") { CHECK_THROWS(semiperfect_decomposition(godel_chain(1))); }
}

TEST_CASE("decomposition exists exactly for BLP algebras and reconstructs them") {
  for (const Algebra& a : corpus(5)) {
    if (a.trivial()) continue;
    auto d = semiperfect_decomposition(a);
    CHECK(d.has_value() == algebra_has_blp(a).verdict);
    if (!d) continue;
    CHECK(are_isomorphic(d->product.algebra, a));
    CHECK(is_isomorphism(a, d->product.algebra, d->to_product));
    for (std::size_t i = 0; i < d->factors.size(); ++i) {
      CHECK(is_local(d->factors[i].algebra));
      CHECK(d->factor_local[i]);
    }
  }
}
