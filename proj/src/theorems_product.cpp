// Checks on binary direct products.

#include "rlat/blp.hpp"
#include "rlat/construct.hpp"
#include "rlat/filters.hpp"
#include "rlat/iso.hpp"
#include "theorems.hpp"

namespace rlat::detail {

namespace {

ElementSet product_set(const Product& p, ElementSet s1, ElementSet s2) {
  ElementSet out;
  s1.for_each([&](Elem x) {
    s2.for_each([&](Elem y) {
      const Elem c[2] = {x, y};
      out.insert(p.encode(c));
    });
  });
  return out;
}

ElementSet projection(const Product& p, ElementSet s, std::size_t i) {
  ElementSet out;
  s.for_each([&](Elem x) { out.insert(p.component(x, i)); });
  return out;
}

void product_basics(const Algebra& a1, const Algebra& a2, Failures& out) {
  Reporter r(out);
  const Product p = direct_product(a1, a2);
  const Algebra& a = p.algebra;
  r.expect(complemented_elements(a) == product_set(p, complemented_elements(a1), complemented_elements(a2)),
           "B(A1 x A2) = B(A1) x B(A2)");
  r.expect(radical(a).members == product_set(p, radical(a1).members, radical(a2).members),
           "Rad(A1 x A2) = Rad(A1) x Rad(A2)");
  r.expect(spectra(a).max.size() == spectra(a1).max.size() + spectra(a2).max.size(),
           "|Max(A1 x A2)| = |Max(A1)| + |Max(A2)|");
  r.expect(element_classes(a).mult_is_meet == (element_classes(a1).mult_is_meet && element_classes(a2).mult_is_meet),
           "* = ^ in the product iff in both factors");
}

void product_blp(const Algebra& a1, const Algebra& a2, Failures& out) {
  Reporter r(out);
  const Algebra a = direct_product(a1, a2).algebra;
  const bool b1 = algebra_has_blp(a1).verdict, b2 = algebra_has_blp(a2).verdict;
  r.expect(algebra_has_blp(a).verdict == (b1 && b2), "A1 x A2 has BLP iff both factors do");
  r.expect(is_quasi_local(a) == (is_quasi_local(a1) && is_quasi_local(a2)),
           "A1 x A2 is quasi-local iff both factors are");
}

void product_s_set(const Algebra& a1, const Algebra& a2, Failures& out) {
  Reporter r(out);
  const Product p = direct_product(a1, a2);
  r.expect(s_set(p.algebra) == product_set(p, s_set(a1), s_set(a2)), "S(A1 x A2) = S(A1) x S(A2)",
           show(p.algebra, s_set(p.algebra)));
}

void product_filters(const Algebra& a1, const Algebra& a2, Failures& out) {
  Reporter r(out);
  const Product p = direct_product(a1, a2);
  const Algebra& a = p.algebra;
  const ElementSet b = complemented_elements(a);
  r.expect(projection(p, b, 0) == complemented_elements(a1) && projection(p, b, 1) == complemented_elements(a2),
           "B(pr_i) is surjective");
  for (const Filter& f : all_filters(a)) {
    const std::string w = show(a, f.members);
    const ElementSet s1 = projection(p, f.members, 0), s2 = projection(p, f.members, 1);
    if (!is_filter(a1, s1) || !is_filter(a2, s2)) {
      r.fail("pr_i(F) is a filter", w);
      continue;
    }
    const Filter f1 = as_filter(a1, s1), f2 = as_filter(a2, s2);
    r.expect(f.members == product_set(p, s1, s2), "F = pr_1(F) x pr_2(F)", w);
    const QuotientPresentation q = quotient(a, f), q1 = quotient(a1, f1), q2 = quotient(a2, f2);
    const Product target = direct_product(q1.quotient, q2.quotient);
    std::vector<Elem> psi(q.quotient.size());
    for (std::size_t c = 0; c < psi.size(); ++c) {
      const Elem x = q.representatives[c];
      const Elem comps[2] = {q1.class_of[p.component(x, 0)], q2.class_of[p.component(x, 1)]};
      psi[c] = target.encode(comps);
    }
    r.expect(q.quotient.size() == target.algebra.size() && is_isomorphism(q.quotient, target.algebra, psi),
             "A/F is isomorphic to A1/F1 x A2/F2", w);
    r.expect(filter_has_blp(a, f).holds == (filter_has_blp(a1, f1).holds && filter_has_blp(a2, f2).holds),
             "F has BLP iff F1 and F2 do", w);
    r.expect(projection_injective_on_booleans(a, f) ==
                 (projection_injective_on_booleans(a1, f1) && projection_injective_on_booleans(a2, f2)),
             "B(p_F) is injective iff B(p_F1) and B(p_F2) are", w);
  }
}

void product_star(const Algebra& a1, const Algebra& a2, Failures& out) {
  Reporter r(out);
  const Algebra a = direct_product(a1, a2).algebra;
  r.expect(star_condition(a).holds == (star_condition(a1).holds && star_condition(a2).holds),
           "A1 x A2 satisfies (star) iff both factors do");
  r.expect(star_star_condition(a).holds == (star_star_condition(a1).holds && star_star_condition(a2).holds),
           "A1 x A2 satisfies (star star) iff both factors do");
}

Theorem pair(std::string id, std::string statement, void (*fn)(const Algebra&, const Algebra&, Failures&)) {
  Theorem t;
  t.id = std::move(id);
  t.statement = std::move(statement);
  t.scope = Scope::kPair;
  t.check_pair = fn;
  return t;
}

}  // namespace

void add_product_theorems(std::vector<Theorem>& out) {
  out.push_back(pair("product-basics",
                     "B, Rad and the maximal filters of A1 x A2 are computed factorwise; * = ^ iff in both.",
                     product_basics));
  out.push_back(pair("product-blp", "A1 x A2 has BLP (is quasi-local) iff both factors do.", product_blp));
  out.push_back(pair("product-s-set", "S(A1 x A2) = S(A1) x S(A2).", product_s_set));
  out.push_back(pair("product-filters",
                     "For F in A1 x A2 with F_i = pr_i(F): B(pr_i) is onto, A/F is A1/F1 x A2/F2, F has BLP iff "
                     "both F_i do, and B(p_F) is injective iff both B(p_Fi) are.",
                     product_filters));
  out.push_back(pair("product-star", "A1 x A2 satisfies (star), resp. (star star), iff both factors do.",
                     product_star));
}

}  // namespace rlat::detail
