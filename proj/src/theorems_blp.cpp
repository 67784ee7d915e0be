// Lifting of Boolean elements, the set S(A) and the first classes with BLP.

#include "rlat/blp.hpp"
#include "rlat/construct.hpp"
#include "rlat/filters.hpp"
#include "theorems.hpp"

namespace rlat::detail {

namespace {

bool is_chain(const Algebra& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!a.leq(E(i), E(j)) && !a.leq(E(j), E(i))) return false;
  return true;
}

bool two_element_center(const Algebra& a, const ElementClasses& c) {
  return !a.trivial() && c.booleans == ElementSet{a.bottom(), a.top()};
}

// BLP of F straight from the definition: B(A/F) read off the quotient table
// against the image of B(A).
bool blp_oracle(const Algebra& a, const Filter& f) {
  const QuotientPresentation q = quotient(a, f);
  return complemented_elements(q.quotient) == q.image(complemented_elements(a));
}

bool injective_oracle(const Algebra& a, const Filter& f) {
  const QuotientPresentation q = quotient(a, f);
  const ElementSet b = complemented_elements(a);
  return q.image(b).count() == b.count();
}

bool blp_by_filters(const Algebra& a) {
  for (const Filter& f : all_filters(a))
    if (!blp_oracle(a, f)) return false;
  return true;
}

void lifted_booleans(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  for (const Filter& f : all_filters(a)) {
    const std::string w = show(a, f.members);
    const QuotientPresentation q = quotient(a, f);
    const LiftingData d = lifting_data(a, f, q);
    ElementSet via_formula;
    ElementSet via_center;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Elem x = E(i);
      if (f.contains(a.join(x, a.neg(x)))) via_formula.insert(q.class_of[x]);
      if (a.join(x, a.neg(x)) == a.top()) via_center.insert(q.class_of[x]);
    }
    r.expect(via_formula == complemented_elements(q.quotient), "B(A/F) = {x/F | x v neg x in F}", w);
    r.expect(via_center == q.image(c.booleans), "B(A)/F = {x/F | x v neg x = 1}", w);
    r.expect(d.lifted_booleans.subset_of(d.quotient_booleans), "B(A)/F is within B(A/F)", w);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem x = E(i);
    const QuotientPresentation q = quotient(a, principal_filter(a, a.join(x, a.neg(x))));
    r.expect(complemented_elements(q.quotient).contains(q.class_of[x]), "x/[x v neg x) is Boolean in the quotient",
             show(a, x));
  }
}

void trivial_filters_blp(const Algebra& a, Failures& out) {
  Reporter r(out);
  const std::vector<Filter> filters = all_filters(a);
  const Filter one = principal_filter(a, a.top());
  const Filter all = principal_filter(a, a.bottom());
  r.expect(filter_has_blp(a, one).holds && blp_oracle(a, one), "{1} has BLP");
  r.expect(injective_oracle(a, one), "B(p_{1}) is injective");
  r.expect(filter_has_blp(a, all).holds && blp_oracle(a, all), "A has BLP as a filter");
  for (const Filter& f : filters) {
    const QuotientPresentation q = quotient(a, f);
    if (complemented_elements(q.quotient).count() <= 2) {
      r.expect(filter_has_blp(a, f).holds, "|B(A/F)| <= 2 implies F has BLP", show(a, f.members));
    }
  }
  if (filters.size() <= 2) r.expect(algebra_has_blp(a).verdict, "trivial and simple algebras have BLP");
}

void prime_filters_blp(const Algebra& a, Failures& out) {
  Reporter r(out);
  const Spectra sp = spectra(a);
  for (const Filter& p : sp.spec) {
    r.expect(filter_has_blp(a, p).holds && blp_oracle(a, p), "prime filters have BLP", show(a, p.members));
  }
  for (const Filter& m : sp.max) {
    r.expect(filter_has_blp(a, m).holds, "maximal filters have BLP", show(a, m.members));
  }
}

void injective_iff_trivial_meet(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  const ElementSet one = ElementSet::single(a.top());
  const ElementSet rad = radical(a).members;
  const std::vector<Filter> filters = all_filters(a);
  for (const Filter& f : filters) {
    const std::string w = show(a, f.members);
    const bool inj = injective_oracle(a, f);
    r.expect(inj == ((c.booleans & f.members) == one), "B(p_F) injective iff B(A) meets F only in 1", w);
    r.expect(inj == projection_injective_on_booleans(a, f), "projection_injective_on_booleans agrees", w);
    if (f.members.subset_of(rad)) r.expect(inj, "F within Rad(A) gives B(p_F) injective", w);
    if (two_element_center(a, c) && f.members != a.universe()) {
      r.expect(inj, "B(A) = {0,1} gives B(p_F) injective for proper F", w);
    }
    for (const Filter& g : filters) {
      if (inj && injective_oracle(a, g)) {
        r.expect(injective_oracle(a, filter_meet(a, f, g)), "injectivity passes to intersections", w);
      }
    }
  }
  if (!a.trivial()) r.expect(injective_oracle(a, as_filter(a, c.dense)), "B(p_D(A)) is injective");
}

void s_set_descriptions(const Algebra& a, Failures& out) {
  Reporter r(out);
  const std::size_t n = a.size();
  const std::size_t cap = n + 1;
  auto exists_power = [&](Elem base, auto pred) {
    for (std::size_t k = 1; k <= cap; ++k)
      if (pred(a.power(base, k))) return true;
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Elem t = E(i), x = E(j);
      const std::string w = "a=" + a.label(t) + " x=" + a.label(x);
      const Elem nx = a.neg(x);
      for (std::size_t k = 1; k <= cap; ++k) {
        r.expect(a.leq(a.power(x, k), a.imp(t, x)), "x^n <= a -> x", w);
        r.expect(a.leq(a.power(nx, k), a.imp(x, t)), "(neg x)^n <= x -> a", w);
      }
      const bool l1 = exists_power(x, [&](Elem p) { return a.leq(p, a.imp(x, t)); });
      const bool r1 = exists_power(x, [&](Elem p) { return a.leq(p, t); });
      r.expect(l1 == r1, "some x^k <= x -> a iff some x^n <= a", w);
      const bool l2 = exists_power(nx, [&](Elem p) { return a.leq(p, a.imp(t, x)); });
      const bool r2 = exists_power(nx, [&](Elem p) { return a.leq(p, a.neg(t)); });
      r.expect(l2 == r2, "some (neg x)^k <= a -> x iff some (neg x)^n <= neg a", w);
      const bool l3 = principal_filter(a, a.join(x, nx)).contains(a.biresiduum(t, x));
      const bool r3 = principal_filter(a, x).contains(t) && principal_filter(a, nx).contains(a.neg(t));
      r.expect(l3 == r3, "a <-> x in [x v neg x) iff a in [x) and neg a in [neg x)", w);
    }
  }
  r.expect(s_set(a) == s_set_biresiduum_form(a), "both descriptions of S(A) agree");
}

void blp_iff_s_full(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementSet b = complemented_elements(a);
  bool all2 = true, all3 = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem x = E(i);
    const ElementSet fx = principal_filter(a, x).members;
    const ElementSet fnx = principal_filter(a, a.neg(x)).members;
    const ElementSet fj = principal_filter(a, a.join(x, a.neg(x))).members;
    bool some2 = false, some3 = false;
    b.for_each([&](Elem e) {
      some2 = some2 || fj.contains(a.biresiduum(e, x));
      some3 = some3 || (fx.contains(e) && fnx.contains(a.neg(e)));
    });
    all2 = all2 && some2;
    all3 = all3 && some3;
  }
  const bool blp = blp_by_filters(a);
  const bool full = s_set(a) == a.universe();
  r.expect(blp == all2, "BLP iff every x has e in B(A) with e <-> x in [x v neg x)");
  r.expect(blp == all3, "BLP iff every x has e in B(A) with e in [x) and neg e in [neg x)");
  r.expect(blp == full, "BLP iff S(A) = A");
  r.expect(blp == algebra_has_blp(a).verdict, "algebra_has_blp agrees with the definition");
}

void s_set_closure(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  const ElementSet s = s_set(a);
  r.expect(c.booleans.subset_of(s), "B(A) is within S(A)", show(a, c.booleans - s));
  r.expect(c.dense.subset_of(s), "D(A) is within S(A)", show(a, c.dense - s));
  r.expect(radical(a).members.subset_of(s), "Rad(A) is within S(A)", show(a, radical(a).members - s));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem x = E(i);
    if (s.contains(a.neg(x))) r.expect(s.contains(x), "neg x in S(A) implies x in S(A)", show(a, x));
    for (std::size_t k = 1; k <= a.size(); ++k) {
      if (s.contains(a.power(x, k))) r.expect(s.contains(x), "x^n in S(A) implies x in S(A)", show(a, x));
    }
  }
  for (const Filter& f : all_filters(a)) {
    const QuotientPresentation q = quotient(a, f);
    r.expect(q.image(s).subset_of(s_set(q.quotient)), "S(A)/F is within S(A/F)", show(a, f.members));
  }
}

void blp_quotients(const Algebra& a, Failures& out) {
  Reporter r(out);
  const std::vector<Filter> filters = all_filters(a);
  bool all_quotients = true;
  for (const Filter& f : filters) {
    const bool qf = algebra_has_blp(quotient(a, f).quotient).verdict;
    all_quotients = all_quotients && qf;
    bool above = true;
    for (const Filter& g : filters) {
      if (f.members.subset_of(g.members)) above = above && algebra_has_blp(quotient(a, g).quotient).verdict;
    }
    r.expect(qf == above, "A/F has BLP iff A/G has BLP for every G containing F", show(a, f.members));
  }
  r.expect(algebra_has_blp(a).verdict == all_quotients, "A has BLP iff every A/F has BLP");
}

void s_set_boolean_trivial(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  if (!two_element_center(a, c)) return;
  ElementSet neg_nil;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (c.nilpotents.contains(a.neg(E(i)))) neg_nil.insert(E(i));
  const ElementSet s = s_set(a);
  r.expect(s == (c.nilpotents | neg_nil), "B(A) = {0,1} gives S(A) = N(A) u {x | neg x in N(A)}", show(a, s));
  if (c.mult_is_meet) {
    r.expect(s == (c.dense | ElementSet::single(0)), "B(A) = {0,1} and * = ^ give S(A) = {0} u D(A)", show(a, s));
  }
}

void s_set_idempotent(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  if (!c.mult_is_meet) return;
  const ElementSet s = s_set(a);
  ElementSet neg_boolean, negs;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (c.booleans.contains(a.neg(E(i)))) neg_boolean.insert(E(i));
  s.for_each([&](Elem x) { negs.insert(a.neg(x)); });
  r.expect(s == neg_boolean, "* = ^ gives S(A) = {x | neg x in B(A)}", show(a, s));
  r.expect(negs == c.booleans, "* = ^ gives {neg x | x in S(A)} = B(A)", show(a, negs));
  if (c.involutive) {
    r.expect(s == c.booleans, "involutive with * = ^ gives S(A) = B(A)", show(a, s));
    const bool blp = algebra_has_blp(a).verdict;
    const bool boolean = c.booleans == a.universe();
    const bool hyper = c.archimedeans == a.universe();
    r.expect(blp == boolean && boolean == hyper, "involutive with * = ^: BLP iff Boolean iff hyperarchimedean");
    r.expect(c.dense == ElementSet::single(a.top()) && radical(a).members == ElementSet::single(a.top()),
             "involutive with * = ^ gives D(A) = Rad(A) = {1}");
  }
}

void hyperarchimedean_blp(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  const bool hyper = c.archimedeans == a.universe();
  const bool blp = algebra_has_blp(a).verdict;
  if (hyper) r.expect(blp, "hyperarchimedean implies BLP");
  if (c.mult_is_meet) {
    r.expect(c.archimedeans == c.booleans, "* = ^ gives H(A) = B(A)", show(a, c.archimedeans));
    r.expect(hyper == (c.booleans == a.universe()), "* = ^: hyperarchimedean iff B(A) = A");
    if (blp && c.booleans != a.universe()) r.expect(!hyper, "BLP, * = ^ and not Boolean exclude hyperarchimedean");
  }
}

void dense_boolean(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  const ElementSet one = ElementSet::single(a.top());
  const ElementSet s = s_set(a);
  const ElementSet rad = radical(a).members;
  if (c.dense.subset_of(c.booleans)) r.expect(c.dense == one, "D(A) within B(A) forces D(A) = {1}", show(a, c.dense));
  if ((c.dense | ElementSet::single(0)) == c.booleans) {
    r.expect(c.dense == one && c.booleans == ElementSet{0, a.top()}, "D(A) u {0} = B(A) forces D(A) = {1}, B(A) = {0,1}");
  }
  if (c.booleans == s) r.expect(c.dense == one && rad == one, "B(A) = S(A) forces D(A) = Rad(A) = {1}");
  if (c.booleans == a.universe()) r.expect(c.dense == one && rad == one, "Boolean algebras have D(A) = Rad(A) = {1}");
  r.expect((c.dense == c.booleans) == a.trivial() && (c.dense == s) == a.trivial(),
           "D(A) = B(A) iff D(A) = S(A) iff A is trivial");
}

void quasi_local_blp_bnormal(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  const std::size_t n = a.size();
  bool ql = true;
  for (std::size_t i = 0; i < n && ql; ++i) {
    const Elem x = E(i);
    bool some = false;
    c.booleans.for_each([&](Elem e) {
      for (std::size_t k = 1; k <= n + 1 && !some; ++k) {
        some = a.mult(a.power(x, k), e) == 0 && a.mult(a.power(a.neg(x), k), a.neg(e)) == 0;
      }
    });
    ql = some;
  }
  // [x) v [y) = A means x*y nilpotent.
  bool split = true;
  for (std::size_t i = 0; i < n && split; ++i) {
    for (std::size_t j = 0; j < n && split; ++j) {
      const Elem x = E(i), y = E(j);
      if (!c.nilpotents.contains(a.mult(x, y))) continue;
      bool some = false;
      c.booleans.for_each([&](Elem e) {
        c.booleans.for_each([&](Elem f) {
          some = some || (a.join(e, f) == a.top() && c.nilpotents.contains(a.mult(x, e)) &&
                          c.nilpotents.contains(a.mult(y, f)));
        });
      });
      split = some;
    }
  }
  const bool blp = blp_by_filters(a);
  r.expect(ql == blp, "quasi-local iff BLP");
  r.expect(ql == is_quasi_local(a), "quasi_local agrees with the definition");
  r.expect(split == blp, "BLP iff [x) v [y) = A splits along e v f = 1 in B(A)");
  r.expect(filters_b_normal(a).holds == blp, "BLP iff the principal filter lattice is (dually) B-normal");
}

void b_normal_literal(const Algebra& a, Failures& out) {
  const PairVerdict bn = b_normal(a);
  const bool blp = algebra_has_blp(a).verdict;
  if (bn.holds == blp) return;
  if (blp) {
    out.push_back("BLP but (A,v,*,0,1) is not B-normal at (" + a.label(bn.witness->first) + "," +
                  a.label(bn.witness->second) + ")");
  } else {
    out.push_back("(A,v,*,0,1) is B-normal but S(A) misses " + a.label((a.universe() - s_set(a)).first()));
  }
}

void complement_split(const Algebra& a, Failures& out) {
  Reporter r(out);
  const bool blp = algebra_has_blp(a).verdict;
  complemented_elements(a).for_each([&](Elem e) {
    const bool lo = algebra_has_blp(interval_algebra(a, e).algebra).verdict;
    const bool hi = algebra_has_blp(interval_algebra(a, a.neg(e)).algebra).verdict;
    r.expect(blp == (lo && hi), "A has BLP iff [e) and [neg e) have BLP", show(a, e));
  });
}

void chains(const Algebra& a, Failures& out) {
  if (!is_chain(a)) return;
  Reporter r(out);
  r.expect(algebra_has_blp(a).verdict, "chains have BLP");
  r.expect(s_set(a) == a.universe(), "chains have S(A) = A");
  r.expect(star_condition(a).holds, "chains satisfy (star)");
  if (a.trivial()) {
    r.expect(injective_oracle(a, principal_filter(a, 0)), "the one-element chain has B(p_A) bijective");
    return;
  }
  r.expect(is_local(a), "non-trivial chains are local");
  for (const Filter& f : all_filters(a)) {
    const bool proper = f.members != a.universe();
    r.expect(injective_oracle(a, f) == proper, "B(p_F) is injective exactly for proper F", show(a, f.members));
    r.expect(blp_oracle(a, f), "B(p_F) is surjective", show(a, f.members));
  }
}

void boolean_algebras(const Algebra& a, Failures& out) {
  const ElementClasses c = element_classes(a);
  if (complemented_elements(a) != a.universe()) return;
  Reporter r(out);
  const ElementSet one = ElementSet::single(a.top());
  r.expect(c.mult_is_meet, "a Boolean lattice reduct forces * = ^");
  r.expect(algebra_has_blp(a).verdict, "Boolean algebras have BLP");
  r.expect(s_set(a) == a.universe(), "Boolean algebras have S(A) = A");
  r.expect(star_condition(a).holds, "Boolean algebras satisfy (star)");
  r.expect(c.dense == one && radical(a).members == one, "Boolean algebras have D(A) = Rad(A) = {1}");
  for (const Filter& f : all_filters(a)) {
    const Algebra q = quotient(a, f).quotient;
    r.expect(complemented_elements(q) == q.universe(), "quotients of Boolean algebras are Boolean",
             show(a, f.members));
  }
}

Theorem single(std::string id, std::string statement, void (*fn)(const Algebra&, Failures&),
               bool refuted = false) {
  Theorem t;
  t.id = std::move(id);
  t.statement = std::move(statement);
  t.check = fn;
  t.refuted_as_stated = refuted;
  return t;
}

}  // namespace

void add_blp_theorems(std::vector<Theorem>& out) {
  out.push_back(single("lifted-booleans",
                       "B(A/F) = {x/F | x v neg x in F}, B(A)/F = {x/F | x v neg x = 1} is within B(A/F), and "
                       "x/[x v neg x) is Boolean.",
                       lifted_booleans));
  out.push_back(single("trivial-filters-blp",
                       "{1} and A have BLP, B(p_{1}) is bijective, |B(A/F)| <= 2 gives BLP, trivial and simple "
                       "algebras have BLP.",
                       trivial_filters_blp));
  out.push_back(single("prime-filters-blp", "Every prime filter, hence every maximal filter, has BLP.",
                       prime_filters_blp));
  out.push_back(single("injective-iff-trivial-meet",
                       "B(p_F) is injective iff B(A) meets F only in 1; this holds for F within Rad(A), for D(A), "
                       "and for proper F when B(A) = {0,1}.",
                       injective_iff_trivial_meet));
  out.push_back(single("s-set-descriptions",
                       "Power bounds relating x, neg x and a, and a <-> x in [x v neg x) iff a in [x) and "
                       "neg a in [neg x).",
                       s_set_descriptions));
  out.push_back(single("blp-iff-s-full",
                       "BLP iff each x has e in B(A) with e <-> x in [x v neg x) iff each x has e in [x) with "
                       "neg e in [neg x) iff S(A) = A.",
                       blp_iff_s_full));
  out.push_back(single("s-set-closure",
                       "B(A), D(A), Rad(A) are within S(A); S(A) is closed under neg-preimages and roots; "
                       "S(A)/F is within S(A/F).",
                       s_set_closure));
  out.push_back(single("blp-quotients",
                       "A has BLP iff every A/F has BLP; A/F has BLP iff A/G has BLP for every G containing F.",
                       blp_quotients));
  out.push_back(single("s-set-boolean-trivial",
                       "When B(A) = {0,1}, S(A) = N(A) u {x | neg x in N(A)}; with * = ^ also S(A) = {0} u D(A).",
                       s_set_boolean_trivial));
  out.push_back(single("s-set-idempotent",
                       "With * = ^, S(A) = {x | neg x in B(A)} and neg S(A) = B(A); if also involutive, S(A) = B(A), "
                       "BLP iff Boolean iff hyperarchimedean, and D(A) = Rad(A) = {1}.",
                       s_set_idempotent));
  out.push_back(single("hyperarchimedean-blp",
                       "Hyperarchimedean implies BLP; with * = ^, H(A) = B(A), so hyperarchimedean iff Boolean.",
                       hyperarchimedean_blp));
  out.push_back(single("dense-boolean",
                       "D(A) within B(A) forces D(A) = {1}; B(A) = S(A) or a Boolean reduct force "
                       "D(A) = Rad(A) = {1}; D(A) = B(A) iff D(A) = S(A) iff A trivial.",
                       dense_boolean));
  out.push_back(single("quasi-local-blp-bnormal",
                       "Quasi-local iff BLP iff filter pairs with [x) v [y) = A split along Boolean e v f = 1 "
                       "iff the principal filter lattice is dually B-normal.",
                       quasi_local_blp_bnormal));
  out.push_back(single("b-normal-literal",
                       "BLP iff the lattice (A, v, *, 0, 1) is B-normal in the literal sense (x v y = 1 gives "
                       "e, f in B with e * f = 0 and x v e = y v f = 1).",
                       b_normal_literal, true));
  out.push_back(single("complement-split", "For e in B(A): A has BLP iff [e) and [neg e) have BLP.",
                       complement_split));
  out.push_back(single("chains",
                       "Chains have BLP, S(A) = A and (star); non-trivial chains are local with B(p_F) bijective "
                       "for proper F and B(p_A) not injective.",
                       chains));
  out.push_back(single("boolean-algebras",
                       "A Boolean reduct forces * = ^, BLP, S(A) = A, (star), D(A) = Rad(A) = {1} and Boolean "
                       "quotients.",
                       boolean_algebras));
}

}  // namespace rlat::detail
