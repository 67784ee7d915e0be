// Arithmetic, Boolean center, spectra, radical and quotient checks.

#include <algorithm>

#include "rlat/filters.hpp"
#include "rlat/iso.hpp"
#include "theorems.hpp"

namespace rlat::detail {

namespace {

std::string pair(const Algebra& a, Elem x, Elem y) { return "(" + a.label(x) + "," + a.label(y) + ")"; }

void arithmetic_lemma(const Algebra& a, Failures& out) {
  Reporter r(out);
  const std::size_t n = a.size();
  const Elem one = a.top();
  for (std::size_t i = 0; i < n; ++i) {
    const Elem x = E(i);
    r.expect(a.neg(one) == 0 && a.neg(0) == one, "neg 1 = 0 and neg 0 = 1");
    r.expect((a.neg(x) == one) == (x == 0), "neg x = 1 iff x = 0", show(a, x));
    r.expect(a.mult(x, a.neg(x)) == 0, "x * neg x = 0", show(a, x));
    r.expect(a.leq(x, a.neg(a.neg(x))), "x <= neg neg x", show(a, x));
    r.expect(a.neg(a.neg(a.neg(x))) == a.neg(x), "neg neg neg x = neg x", show(a, x));
    for (std::size_t j = 0; j < n; ++j) {
      const Elem y = E(j);
      const std::string w = pair(a, x, y);
      const Elem xy = a.mult(x, y);
      r.expect(a.leq(xy, a.meet(x, y)), "x * y <= x ^ y", w);
      if (a.join(x, y) == one) r.expect(xy == a.meet(x, y), "x v y = 1 implies x * y = x ^ y", w);
      r.expect(a.leq(xy, a.imp(x, y)), "x * y <= x -> y", w);
      const bool p = xy == 0, q = a.leq(x, a.neg(y)), s = a.leq(y, a.neg(x));
      r.expect(p == q && q == s, "x * y = 0 iff x <= neg y iff y <= neg x", w);
      r.expect(a.leq(y, a.imp(x, y)), "y <= x -> y", w);
      r.expect(a.leq(a.mult(x, a.imp(x, y)), y), "x * (x -> y) <= y", w);
      r.expect(a.leq(x, y) == (a.imp(x, y) == one), "x <= y iff x -> y = 1", w);
      r.expect((x == y) == (a.biresiduum(x, y) == one), "x = y iff x <-> y = 1", w);
      r.expect(a.leq(a.imp(x, y), a.imp(a.neg(y), a.neg(x))), "x -> y <= neg y -> neg x", w);
      if (a.leq(x, y)) r.expect(a.leq(a.neg(y), a.neg(x)), "x <= y implies neg y <= neg x", w);
      const Elem v = a.neg(xy);
      r.expect(v == a.imp(x, a.neg(y)) && v == a.imp(y, a.neg(x)) && v == a.imp(a.neg(a.neg(x)), a.neg(y)) &&
                   v == a.imp(a.neg(a.neg(y)), a.neg(x)),
               "neg (x * y) = x -> neg y = y -> neg x = neg neg x -> neg y = neg neg y -> neg x", w);
      r.expect(a.neg(a.join(x, y)) == a.meet(a.neg(x), a.neg(y)), "neg (x v y) = neg x ^ neg y", w);
      for (std::size_t k = 0; k < n; ++k) {
        const Elem z = E(k);
        if (a.leq(x, y)) {
          r.expect(a.leq(a.imp(y, z), a.imp(x, z)) && a.leq(a.imp(z, x), a.imp(z, y)),
                   "x <= y implies y -> z <= x -> z and z -> x <= z -> y", w + " z=" + a.label(z));
        }
        for (std::size_t l = 0; l < n; ++l) {
          const Elem u = E(l);
          const std::string w4 = w + " " + pair(a, z, u);
          if (a.leq(x, y) && a.leq(z, u)) r.expect(a.leq(a.mult(x, z), a.mult(y, u)), "* is monotone", w4);
          r.expect(a.leq(a.mult(a.imp(x, y), a.imp(z, u)), a.imp(a.meet(x, z), a.meet(y, u))),
                   "(x -> y) * (z -> u) <= (x ^ z) -> (y ^ u)", w4);
        }
      }
    }
  }
}

void negation_power_bound(const Algebra& a, Failures& out) {
  Reporter r(out);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 1; k <= a.size() + 1; ++k) {
      r.expect(a.leq(a.power(a.neg(E(i)), k), a.neg(a.power(E(i), k))), "(neg x)^n <= neg (x^n)",
               show(a, E(i)) + " n=" + std::to_string(k));
    }
  }
}

void boolean_center(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  r.expect(c.booleans == complemented_elements(a), "B(A) = {x | x v neg x = 1}");
  c.booleans.for_each([&](Elem e) {
    const std::string w = show(a, e);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Elem y = E(i);
      const bool complement = a.join(e, y) == a.top() && a.meet(e, y) == 0;
      r.expect(complement == (y == a.neg(e)), "the complement of e is unique and equals neg e", w);
      r.expect(a.mult(y, e) == a.meet(y, e), "x * e = x ^ e", w + " x=" + a.label(y));
      r.expect(a.imp(a.neg(e), y) == a.join(e, y), "neg e -> x = e v x", w + " x=" + a.label(y));
    }
    r.expect(a.neg(a.neg(e)) == e, "neg neg e = e", w);
    r.expect(a.mult(e, e) == e, "e is idempotent", w);
    r.expect((a.neg(e) == 0) == (e == a.top()), "neg e = 0 iff e = 1", w);
    r.expect(principal_filter(a, e).members == a.up_set(e), "[e) = {x | e <= x}", w);
    c.booleans.for_each([&](Elem f) {
      r.expect(a.mult(e, f) == a.meet(e, f), "e * f = e ^ f", pair(a, e, f));
      r.expect(c.booleans.contains(a.join(e, f)) && c.booleans.contains(a.meet(e, f)),
               "B(A) is closed under v and ^", pair(a, e, f));
    });
  });
  // A Boolean lattice reduct forces B(A) = A and * = ^.
  if (complemented_elements(a) == a.universe()) {
    r.expect(c.mult_is_meet, "a Boolean lattice reduct forces * = ^");
  }
}

void maximal_prime(const Algebra& a, Failures& out) {
  Reporter r(out);
  const Spectra sp = spectra(a);
  const std::vector<Filter> filters = all_filters(a);
  for (const Filter& m : sp.max) {
    r.expect(is_prime_filter(a, m), "maximal filters are prime", show(a, m.members));
  }
  if (!a.trivial()) r.expect(!sp.max.empty(), "a non-trivial algebra has a maximal filter");
  for (const Filter& f : filters) {
    if (f.members == a.universe()) continue;
    const bool below_max =
        std::any_of(sp.max.begin(), sp.max.end(), [&](const Filter& m) { return f.members.subset_of(m.members); });
    r.expect(below_max, "every proper filter lies in a maximal filter", show(a, f.members));
    ElementSet meet = a.universe();
    bool any = false;
    for (const Filter& p : sp.spec) {
      if (f.members.subset_of(p.members)) {
        meet &= p.members;
        any = true;
      }
    }
    r.expect(any && meet == f.members, "every proper filter is an intersection of prime filters",
             show(a, f.members));
  }
}

// Rad from the arithmetic description with generous exponent bounds.
ElementSet radical_oracle(const Algebra& a) {
  ElementSet out;
  const std::size_t cap = 2 * a.size() + 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool all = true;
    for (std::size_t m = 1; m <= cap && all; ++m) {
      const Elem t = a.neg(a.power(E(i), m));
      bool some = false;
      for (std::size_t k = 1; k <= cap && !some; ++k) some = a.power(t, k) == 0;
      all = some;
    }
    if (all) out.insert(E(i));
  }
  return out;
}

void radical_routes(const Algebra& a, Failures& out) {
  Reporter r(out);
  const Filter rad = radical(a);
  const Spectra sp = spectra(a);
  ElementSet meet = a.universe();
  for (const Filter& m : sp.max) meet &= m.members;
  r.expect(rad.members == meet, "Rad(A) is the intersection of the maximal filters", show(a, rad.members));
  r.expect(rad.members == radical_oracle(a), "Rad(A) = {x | for all n there is k with (neg x^n)^k = 0}",
           show(a, rad.members));
  const ElementClasses c = element_classes(a);
  rad.members.for_each([&](Elem x) {
    r.expect(c.nilpotents.contains(a.neg(x)), "x in Rad(A) implies neg x nilpotent", show(a, x));
  });
  r.expect(is_filter(a, rad.members), "Rad(A) is a filter");
}

void dense_radical(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  const ElementSet rad = radical(a).members;
  const ElementSet one = ElementSet::single(a.top());
  if (!a.trivial()) r.expect(is_filter(a, c.dense), "D(A) is a filter", show(a, c.dense));
  r.expect(c.dense.subset_of(rad), "D(A) is contained in Rad(A)", show(a, c.dense));
  r.expect((c.booleans & rad) == one, "B(A) meets Rad(A) only in 1", show(a, c.booleans & rad));
  r.expect((c.booleans & c.dense) == one || a.trivial(), "B(A) meets D(A) only in 1", show(a, c.booleans & c.dense));
  r.expect(c.dense.contains(0) == a.trivial(), "0 is dense iff A is trivial");
}

void filter_enumeration(const Algebra& a, Failures& out) {
  Reporter r(out);
  const std::vector<Filter> filters = all_filters(a);
  std::vector<ElementSet> from_filters;
  for (const Filter& f : filters) from_filters.push_back(f.members);
  if (a.size() <= 12) {
    r.expect(from_filters == all_filters_by_subset_scan(a), "principal filters are all the filters");
  }
  for (const Filter& f : filters) {
    const std::string w = show(a, f.members);
    r.expect(is_filter(a, f.members), "each listed set is a filter", w);
    r.expect(principal_filter(a, f.generator).members == f.members, "F = [g) for its generator", w);
    Elem product = a.top();
    f.members.for_each([&](Elem x) { product = a.mult(product, x); });
    r.expect(principal_filter(a, product).members == f.members, "F is generated by the product of its members", w);
    r.expect(generated_filter(a, f.members).members == f.members, "the filter generated by F is F", w);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem x = E(i);
    r.expect(principal_filter(a, x).members == a.up_set(a.stable_power(x)), "[x) = {y | x^n <= y}", show(a, x));
    const ElementSet fx = principal_filter(a, x).members;
    r.expect((fx == a.universe()) == element_classes(a).nilpotents.contains(x), "[x) = A iff x is nilpotent",
             show(a, x));
    r.expect((fx == ElementSet::single(a.top())) == (x == a.top()), "[x) = {1} iff x = 1", show(a, x));
  }
}

void filter_lattice(const Algebra& a, Failures& out) {
  Reporter r(out);
  const std::vector<Filter> filters = all_filters(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const Elem x = E(i), y = E(j);
      const Filter fx = principal_filter(a, x), fy = principal_filter(a, y);
      const ElementSet generated = generated_filter(a, fx.members | fy.members).members;
      r.expect(generated == principal_filter(a, a.mult(x, y)).members, "[x) v [y) = [x * y)", pair(a, x, y));
      r.expect((fx.members & fy.members) == principal_filter(a, a.join(x, y)).members, "[x) ^ [y) = [x v y)",
               pair(a, x, y));
      if (a.leq(x, y)) r.expect(fy.members.subset_of(fx.members), "x <= y implies [y) within [x)", pair(a, x, y));
    }
  }
  for (const Filter& f : filters) {
    for (const Filter& g : filters) {
      for (const Filter& h : filters) {
        const ElementSet lhs = filter_meet(a, f, filter_join(a, g, h)).members;
        const ElementSet rhs = filter_join(a, filter_meet(a, f, g), filter_meet(a, f, h)).members;
        r.expect(lhs == rhs, "the filter lattice is distributive", show(a, f.members));
      }
    }
  }
}

void quotient_laws(const Algebra& a, Failures& out) {
  Reporter r(out);
  for (const Filter& f : all_filters(a)) {
    const std::string w = show(a, f.members);
    const QuotientPresentation q = quotient(a, f);
    const Algebra& b = q.quotient;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        const Elem x = E(i), y = E(j);
        const Elem cx = q.class_of[x], cy = q.class_of[y];
        r.expect((cx == cy) == f.contains(a.biresiduum(x, y)), "x/F = y/F iff x <-> y in F", w);
        r.expect(q.class_of[a.join(x, y)] == b.join(cx, cy) && q.class_of[a.meet(x, y)] == b.meet(cx, cy) &&
                     q.class_of[a.mult(x, y)] == b.mult(cx, cy) && q.class_of[a.imp(x, y)] == b.imp(cx, cy),
                 "x -> x/F is a morphism", w);
      }
    }
    r.expect(q.preimage(ElementSet::single(b.top())) == f.members, "1/F = F", w);
    if (f.members == ElementSet::single(a.top())) {
      r.expect(b.size() == a.size() && is_isomorphism(a, b, q.class_of), "A/{1} is isomorphic to A", w);
    }
    if (f.members == a.universe()) r.expect(b.trivial(), "A/A is trivial", w);
  }
}

void filter_correspondence(const Algebra& a, Failures& out) {
  Reporter r(out);
  const std::vector<Filter> filters = all_filters(a);
  for (const Filter& f : filters) {
    const std::string w = show(a, f.members);
    const QuotientPresentation q = quotient(a, f);
    std::vector<ElementSet> lifted;
    for (const Filter& g : all_filters(q.quotient)) lifted.push_back(q.preimage(g.members));
    std::vector<ElementSet> above;
    for (const Filter& g : filters)
      if (f.members.subset_of(g.members)) above.push_back(g.members);
    std::sort(lifted.begin(), lifted.end(), report_order_less);
    std::sort(above.begin(), above.end(), report_order_less);
    r.expect(lifted == above, "filters of A/F correspond to filters of A containing F", w);
  }
}

void second_isomorphism(const Algebra& a, Failures& out) {
  Reporter r(out);
  const std::vector<Filter> filters = all_filters(a);
  for (const Filter& f : filters) {
    for (const Filter& g : filters) {
      if (!f.members.subset_of(g.members)) continue;
      r.expect(second_isomorphism_check(a, f, g), "A/G is isomorphic to (A/F)/(G/F)",
               show(a, f.members) + " within " + show(a, g.members));
    }
  }
}

Theorem single(std::string id, std::string statement, void (*fn)(const Algebra&, Failures&)) {
  Theorem t;
  t.id = std::move(id);
  t.statement = std::move(statement);
  t.check = fn;
  return t;
}

}  // namespace

void add_core_theorems(std::vector<Theorem>& out) {
  out.push_back(single("arithmetic-lemma",
                       "Basic residuated arithmetic: x*y <= x^y, monotonicity, neg laws, x*(x->y) <= y, "
                       "contraposition, neg(x*y) forms, neg(x v y) = neg x ^ neg y, (x->y)*(z->u) <= (x^z)->(y^u).",
                       arithmetic_lemma));
  out.push_back(single("negation-power-bound", "(neg x)^n <= neg(x^n) for every n >= 1.", negation_power_bound));
  out.push_back(single("boolean-center",
                       "Boolean elements have the unique complement neg e, are idempotent, satisfy x*e = x^e and "
                       "neg e -> x = e v x; B(A) = {x | x v neg x = 1}.",
                       boolean_center));
  out.push_back(single("maximal-prime",
                       "Max(A) is within Spec(A), every proper filter lies in a maximal one and is an "
                       "intersection of primes.",
                       maximal_prime));
  out.push_back(single("radical-routes",
                       "Rad(A) equals the arithmetic set {x | for all n exists k: (neg x^n)^k = 0}, and "
                       "neg x is nilpotent for x in Rad(A).",
                       radical_routes));
  out.push_back(single("dense-radical", "D(A) is a filter inside Rad(A); B(A) meets Rad(A) and D(A) only in 1.",
                       dense_radical));
  out.push_back(single("filter-enumeration",
                       "Every filter is principal, [x) = up-set of the stable power, and the subset scan agrees.",
                       filter_enumeration));
  out.push_back(single("filter-lattice",
                       "[x) v [y) = [x*y), [x) ^ [y) = [x v y), and the filter lattice is distributive.",
                       filter_lattice));
  out.push_back(single("quotient-laws",
                       "x/F = y/F iff x<->y in F; the projection is a morphism; A/{1} is A and A/A is trivial.",
                       quotient_laws));
  out.push_back(single("filter-correspondence", "Filters of A/F correspond to filters of A that contain F.",
                       filter_correspondence));
  out.push_back(single("second-isomorphism", "A/G is isomorphic to (A/F)/(G/F) whenever F is within G.",
                       second_isomorphism));
}

}  // namespace rlat::detail
