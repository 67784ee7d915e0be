// (star), (star star), local and semiperfect algebras, restrictions and stacking.

#include <algorithm>

#include "rlat/blp.hpp"
#include "rlat/construct.hpp"
#include "rlat/filters.hpp"
#include "rlat/iso.hpp"
#include "theorems.hpp"

namespace rlat::detail {

namespace {

bool two_element_center(const Algebra& a, const ElementClasses& c) {
  return !a.trivial() && c.booleans == ElementSet{a.bottom(), a.top()};
}

// [x) = [u * e) for some u in `allowed` and e in B(A), for every x.
bool split_oracle(const Algebra& a, ElementSet allowed) {
  const ElementSet b = complemented_elements(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const ElementSet target = a.up_set(a.stable_power(E(i)));
    bool found = false;
    allowed.for_each([&](Elem u) {
      b.for_each([&](Elem e) { found = found || a.up_set(a.stable_power(a.mult(u, e))) == target; });
    });
    if (!found) return false;
  }
  return true;
}

bool star_oracle(const Algebra& a) { return split_oracle(a, radical(a).members); }

bool star_star_oracle(const Algebra& a) {
  const ElementClasses c = element_classes(a);
  ElementSet allowed;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (c.nilpotents.contains(a.neg(E(i)))) allowed.insert(E(i));
  return split_oracle(a, allowed);
}

ElementSet neg_nilpotent(const Algebra& a, const ElementClasses& c) {
  ElementSet out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (c.nilpotents.contains(a.neg(E(i)))) out.insert(E(i));
  return out;
}

std::vector<ElementSet> max_sets(const Algebra& a) {
  std::vector<ElementSet> out;
  for (const Filter& m : spectra(a).max) out.push_back(m.members);
  std::sort(out.begin(), out.end(), report_order_less);
  return out;
}

ElementSet to_parent(const SubUniverse& s, ElementSet x) {
  ElementSet out;
  x.for_each([&](Elem e) { out.insert(s.to_parent[e]); });
  return out;
}

void star_blp_star_star(const Algebra& a, Failures& out) {
  Reporter r(out);
  const bool star = star_condition(a).holds;
  const bool star_star = star_star_condition(a).holds;
  const bool blp = algebra_has_blp(a).verdict;
  r.expect(star == star_oracle(a), "star_condition agrees with the definition");
  r.expect(star_star == star_star_oracle(a), "star_star_condition agrees with the definition");
  if (star) r.expect(blp, "(star) implies BLP");
  if (blp) r.expect(star_star, "BLP implies (star star)");
  if (star) r.expect(star_star, "(star) implies (star star)");
  if (element_classes(a).mult_is_meet) {
    r.expect(star == blp && blp == star_star, "with * = ^: (star) iff BLP iff (star star)");
  }
}

void star_radical_split(const Algebra& a, Failures& out) {
  Reporter r(out);
  const Filter rad = radical(a);
  const bool star = star_condition(a).holds;
  const bool quotient_star = star_condition(quotient(a, rad).quotient).holds;
  r.expect(star == (quotient_star && filter_has_blp(a, rad).holds), "(star) iff A/Rad(A) has (star) and Rad(A) has BLP");
}

void star_quotients(const Algebra& a, Failures& out) {
  Reporter r(out);
  bool all_star = true, all_star_star = true;
  for (const Filter& f : all_filters(a)) {
    const Algebra q = quotient(a, f).quotient;
    all_star = all_star && star_condition(q).holds;
    all_star_star = all_star_star && star_star_condition(q).holds;
  }
  r.expect(star_condition(a).holds == all_star, "(star) iff every A/F has (star)");
  r.expect(star_star_condition(a).holds == all_star_star, "(star star) iff every A/F has (star star)");
}

void star_sufficient(const Algebra& a, Failures& out) {
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  const ElementSet rad = radical(a).members;
  const bool star = star_condition(a).holds;
  if ((c.booleans | rad | c.nilpotents) == a.universe()) r.expect(star, "A = B(A) u Rad(A) u N(A) gives (star)");
  if ((rad | c.archimedeans) == a.universe()) r.expect(star, "A = Rad(A) u H(A) gives (star)");
  if (c.archimedeans == a.universe()) r.expect(star, "hyperarchimedean algebras satisfy (star)");
  if (!a.trivial() && is_local(a)) r.expect(star, "local algebras satisfy (star)");
}

void local_characterizations(const Algebra& a, Failures& out) {
  if (a.trivial()) return;
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  const ElementSet rest = a.universe() - c.nilpotents;
  const ElementSet rad = radical(a).members;
  const std::vector<ElementSet> max = max_sets(a);
  const bool local = max.size() == 1;
  const bool filter = !rest.empty() && is_filter(a, rest);
  const bool proper = filter && rest != a.universe();
  const bool maximal = proper && std::find(max.begin(), max.end(), rest) != max.end();
  const bool only = max == std::vector<ElementSet>{rest};
  bool prime_like = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (c.nilpotents.contains(a.mult(E(i), E(j))) && !c.nilpotents.contains(E(i)) && !c.nilpotents.contains(E(j)))
        prime_like = false;
  r.expect(local == filter, "local iff A minus N(A) is a filter");
  r.expect(local == proper, "local iff A minus N(A) is a proper filter");
  r.expect(local == maximal, "local iff A minus N(A) is a maximal filter");
  r.expect(local == only, "local iff A minus N(A) is the only maximal filter");
  r.expect(local == (rad == rest), "local iff Rad(A) = A minus N(A)");
  r.expect(local == ((c.nilpotents | rad) == a.universe()), "local iff A = N(A) u Rad(A)");
  r.expect(local == prime_like, "local iff x * y in N(A) forces x or y in N(A)");
  r.expect(local == is_local(a), "is_local agrees with |Max(A)| = 1");
  if (rad == a.universe() - ElementSet::single(0)) r.expect(local, "Rad(A) = A minus {0} gives local");
}

void local_consequences(const Algebra& a, Failures& out) {
  if (a.trivial() || !is_local(a)) return;
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  r.expect(two_element_center(a, c), "local algebras have B(A) = {0,1}");
  r.expect((c.nilpotents | neg_nilpotent(a, c)) == a.universe(), "local algebras have A = N(A) u {x | neg x in N(A)}");
  r.expect(is_quasi_local(a), "local algebras are quasi-local");
  r.expect(algebra_has_blp(a).verdict, "local algebras have BLP");
  for (const Filter& f : all_filters(a)) {
    if (f.members == a.universe()) continue;
    r.expect(filter_has_blp(a, f).holds && projection_injective_on_booleans(a, f),
             "in a local algebra B(p_F) is bijective for proper F", show(a, f.members));
  }
}

void local_equivalences(const Algebra& a, Failures& out) {
  if (a.trivial()) return;
  Reporter r(out);
  const ElementClasses c = element_classes(a);
  const bool b2 = two_element_center(a, c);
  const bool local = is_local(a);
  const bool ql = is_quasi_local(a);
  const bool blp = algebra_has_blp(a).verdict;
  const bool star = star_condition(a).holds;
  const bool star_star = star_star_condition(a).holds;
  const bool cover = (c.nilpotents | neg_nilpotent(a, c)) == a.universe();
  r.expect(local == (ql && b2), "local iff quasi-local and B(A) = {0,1}");
  r.expect(local == (blp && b2), "local iff BLP and B(A) = {0,1}");
  r.expect(local == (star && b2), "local iff (star) and B(A) = {0,1}");
  r.expect(local == (cover && b2), "local iff A = N(A) u {x | neg x in N(A)} and B(A) = {0,1}");
  if (b2) {
    r.expect(star == blp && blp == local, "B(A) = {0,1}: (star) iff BLP iff local");
    if (c.mult_is_meet) r.expect(star_star == local, "B(A) = {0,1} and * = ^: (star star) iff local");
  }
}

void semiperfect(const Algebra& a, Failures& out) {
  if (a.trivial()) return;
  Reporter r(out);
  const bool blp = algebra_has_blp(a).verdict;
  const bool rad_blp = filter_has_blp(a, radical(a)).holds;
  const std::optional<Decomposition> d = semiperfect_decomposition(a);
  r.expect(d.has_value() == blp, "a product decomposition into local algebras exists iff BLP");
  r.expect(blp == rad_blp, "finite A has BLP iff Rad(A) has BLP");
  if (blp) r.expect(star_condition(a).holds, "finite algebras with BLP satisfy (star)");
  if (!d) return;
  const ElementSet b = complemented_elements(a);
  Elem total = a.top();
  for (std::size_t i = 0; i < d->complete_set.size(); ++i) {
    const Elem e = d->complete_set[i];
    r.expect(b.contains(e), "the complete set is Boolean", show(a, e));
    total = a.meet(total, e);
    for (std::size_t j = i + 1; j < d->complete_set.size(); ++j)
      r.expect(a.join(e, d->complete_set[j]) == a.top(), "complete sets have pairwise joins 1", show(a, e));
    r.expect(d->factor_local[i] && is_local(d->factors[i].algebra), "every factor [e) is local", show(a, e));
  }
  r.expect(total == 0, "the meet of a complete set is 0");
  r.expect(is_isomorphism(a, d->product.algebra, d->to_product), "x -> (x v e_i) is an isomorphism");
  r.expect(algebra_has_blp(d->product.algebra).verdict, "a product of local algebras has BLP");
}

void restrictions(const Algebra& a, Failures& out) {
  if (a.trivial()) return;
  Reporter r(out);
  const bool local = is_local(a);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Elem p = E(i);
    const std::string w = "a=" + a.label(p);
    try {
      const SubUniverse l = restrict_lower(a, p);
      const bool l_local = is_local(l.algebra);
      r.expect(local == l_local, "upper chain: A local iff the lower part is local", w);
      std::vector<ElementSet> expected;
      for (const ElementSet& m : max_sets(l.algebra)) expected.push_back(a.up_set(p) | to_parent(l, m));
      std::sort(expected.begin(), expected.end(), report_order_less);
      r.expect(max_sets(a) == expected, "upper chain: Max(A) = {C u M | M in Max(L)}", w);
      if (p != a.top()) {
        const bool star = star_condition(a).holds;
        const bool blp = algebra_has_blp(a).verdict;
        r.expect(star == blp && blp == local, "upper chain: (star) iff BLP iff local iff L local", w);
        if (element_classes(a).mult_is_meet) {
          r.expect(star_star_condition(a).holds == local, "upper chain with * = ^: (star star) iff local", w);
        }
      }
    } catch (const ConstructionError& e) {
      if (e.kind() != ConstructionError::Kind::kShapeMismatch) r.fail(std::string("restrict_lower: ") + e.what(), w);
    }
    try {
      const SubUniverse c = restrict_upper(a, p);
      const std::vector<ElementSet> c_max = max_sets(c.algebra);
      r.expect(c_max.size() == 1, "lower chain: the chain part is local", w);
      r.expect(local, "lower chain: A is local", w);
      if (c_max.size() == 1) {
        r.expect(max_sets(a) == std::vector<ElementSet>{a.up_set(p) | to_parent(c, c_max[0])},
                 "lower chain: the maximal filter is L u M", w);
      }
      r.expect(star_condition(a).holds && algebra_has_blp(a).verdict && star_star_condition(a).holds,
               "lower chain: A has (star), BLP and (star star)", w);
    } catch (const ConstructionError& e) {
      if (e.kind() != ConstructionError::Kind::kShapeMismatch) r.fail(std::string("restrict_upper: ") + e.what(), w);
    }
  }
}

void stack_constructions(const Algebra& a, Failures& out) {
  if (a.trivial()) return;
  Reporter r(out);
  for (std::size_t k = 1; k <= 2; ++k) {
    const std::string w = "k=" + std::to_string(k);
    try {
      const Algebra top = stack_chain(a, k, StackPosition::kTop);
      const SubUniverse back = restrict_lower(top, a.top());
      r.expect(are_isomorphic(back.algebra, a), "restricting a top stack recovers L", w);
      r.expect(is_local(top) == is_local(a), "a top stack is local iff L is local", w);
    } catch (const std::exception& e) {
      r.fail(std::string("top stack: ") + e.what(), w);
    }
    try {
      const Algebra bottom = stack_chain(a, k, StackPosition::kBottom);
      r.expect(is_local(bottom), "a bottom stack is local", w);
      const SubUniverse chain = restrict_upper(bottom, E(k));
      r.expect(are_isomorphic(chain.algebra, godel_chain(k + 1)), "the chain under a bottom stack is Goedel", w);
    } catch (const std::exception& e) {
      r.fail(std::string("bottom stack: ") + e.what(), w);
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

void add_structure_theorems(std::vector<Theorem>& out) {
  out.push_back(single("star-blp-starstar",
                       "(star) implies BLP implies (star star); with * = ^ the three coincide.", star_blp_star_star));
  out.push_back(single("star-radical-split", "(star) iff A/Rad(A) satisfies (star) and Rad(A) has BLP.",
                       star_radical_split));
  out.push_back(single("star-quotients",
                       "(star) holds iff it holds in every quotient; the same for (star star).", star_quotients));
  out.push_back(single("star-sufficient",
                       "A = B(A) u Rad(A) u N(A), A = Rad(A) u H(A), hyperarchimedean, or local each give (star).",
                       star_sufficient));
  out.push_back(single("local-characterizations",
                       "For non-trivial A, local iff A minus N(A) is a (proper, maximal, the only maximal) filter "
                       "iff Rad(A) = A minus N(A) iff A = N(A) u Rad(A) iff N(A) is prime-like.",
                       local_characterizations));
  out.push_back(single("local-consequences",
                       "Local algebras have B(A) = {0,1}, A = N(A) u {x | neg x in N(A)}, BLP, and B(p_F) "
                       "bijective for proper F.",
                       local_consequences));
  out.push_back(single("local-equivalences",
                       "Local iff B(A) = {0,1} together with any of: quasi-local, BLP, (star), "
                       "A = N(A) u {x | neg x in N(A)}; with * = ^ also (star star).",
                       local_equivalences));
  out.push_back(single("semiperfect",
                       "A finite non-trivial A has BLP iff Rad(A) has BLP iff it is a product of local intervals "
                       "[e_i) over a complete Boolean set; then A satisfies (star).",
                       semiperfect));
  out.push_back(single("restrictions",
                       "With [a,1] a chain, Max(A) = {C u M | M in Max([0,a])} and A is local iff [0,a] is; with "
                       "[0,a] a chain, A is local with maximal filter L u M.",
                       restrictions));
  out.push_back(single("stack-constructions",
                       "Stacking a chain above L and restricting gives L back; stacking below gives a local algebra.",
                       stack_constructions));
}

}  // namespace rlat::detail
