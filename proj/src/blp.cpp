#include "rlat/blp.hpp"

#include <algorithm>

#include "rlat/iso.hpp"

namespace rlat {

namespace {

Elem E(std::size_t i) { return static_cast<Elem>(i); }

Verdict split_condition(const Algebra& a, ElementSet allowed_u) {
  const ElementSet booleans = complemented_elements(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Filter target = principal_filter(a, E(i));
    bool found = false;
    allowed_u.for_each([&](Elem u) {
      if (found) return;
      const Filter fu = principal_filter(a, u);
      booleans.for_each([&](Elem e) {
        if (!found && filter_join(a, fu, principal_filter(a, e)).members == target.members) found = true;
      });
    });
    if (!found) return Verdict{false, E(i)};
  }
  return {};
}

}  // namespace

ElementSet s_witnesses(const Algebra& a, Elem x) {
  a.check_element(x);
  const ElementSet fx = principal_filter(a, x).members;
  const ElementSet fnx = principal_filter(a, a.neg(x)).members;
  ElementSet out;
  complemented_elements(a).for_each([&](Elem e) {
    if (fx.contains(e) && fnx.contains(a.neg(e))) out.insert(e);
  });
  return out;
}

ElementSet s_set_biresiduum_form(const Algebra& a) {
  const ElementSet booleans = complemented_elements(a);
  ElementSet out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem x = E(i);
    const ElementSet f = principal_filter(a, a.join(x, a.neg(x))).members;
    bool any = false;
    booleans.for_each([&](Elem e) { any = any || f.contains(a.biresiduum(e, x)); });
    if (any) out.insert(x);
  }
  return out;
}

ElementSet s_set(const Algebra& a) {
  ElementSet out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!s_witnesses(a, E(i)).empty()) out.insert(E(i));
  if (out != s_set_biresiduum_form(a)) throw std::logic_error("S(A): the two descriptions disagree");
  return out;
}

LiftingData lifting_data(const Algebra& a, const Filter& f, const QuotientPresentation& q) {
  LiftingData d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem x = E(i);
    if (f.contains(a.join(x, a.neg(x)))) d.quotient_booleans.insert(q.class_of[x]);
  }
  if (d.quotient_booleans != complemented_elements(q.quotient)) {
    throw std::logic_error("B(A/F) differs from the classes of elements with x v neg x in F");
  }
  d.lifted_booleans = q.image(complemented_elements(a));
  return d;
}

Verdict filter_has_blp(const Algebra& a, const Filter& f) {
  const QuotientPresentation q = quotient(a, f);
  const LiftingData d = lifting_data(a, f, q);
  if (d.quotient_booleans == d.lifted_booleans) return {};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem x = E(i);
    if (f.contains(a.join(x, a.neg(x))) && !d.lifted_booleans.contains(q.class_of[x])) return Verdict{false, x};
  }
  throw std::logic_error("BLP failure without a witness");
}

bool projection_injective_on_booleans(const Algebra& a, const Filter& f) {
  if (f.algebra_id != a.id() || !is_filter(a, f.members)) throw FilterError("NotAFilter");
  const ElementSet booleans = complemented_elements(a);
  const bool by_meet = (booleans & f.members) == ElementSet::single(a.top());
  bool injective = true;
  booleans.for_each([&](Elem e) {
    booleans.for_each([&](Elem g) {
      if (e < g && f.contains(a.biresiduum(e, g))) injective = false;
    });
  });
  if (by_meet != injective) throw std::logic_error("Boolean projection: injectivity test disagrees with B(A) ∩ F");
  return by_meet;
}

BlpResult algebra_has_blp(const Algebra& a) {
  const bool route1 = s_set(a) == a.universe();
  bool route2 = true;
  for (const Filter& f : all_filters(a)) route2 = route2 && filter_has_blp(a, f).holds;
  if (route1 != route2) throw RouteDisagreement("RouteDisagreement: S(A) route and per-filter route differ");
  return BlpResult{route1, true};
}

Verdict quasi_local(const Algebra& a) {
  const ElementSet booleans = complemented_elements(a);
  // Powers only decrease, so n = size is the best exponent.
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem an = a.stable_power(E(i));
    const Elem nan = a.stable_power(a.neg(E(i)));
    bool found = false;
    booleans.for_each([&](Elem e) {
      found = found || (a.mult(an, e) == a.bottom() && a.mult(nan, a.neg(e)) == a.bottom());
    });
    if (!found) return Verdict{false, E(i)};
  }
  return {};
}

ElementSet b_normal_center(const Algebra& a) {
  ElementSet out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.join(E(i), E(j)) == a.top() && a.mult(E(i), E(j)) == a.bottom()) out.insert(E(i));
  return out;
}

PairVerdict b_normal(const Algebra& a) {
  const ElementSet center = b_normal_center(a);
  if (center != complemented_elements(a)) throw std::logic_error("Boolean center of (A, v, *) differs from B(A)");
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      const Elem x = E(i);
      const Elem y = E(j);
      if (a.join(x, y) != a.top()) continue;
      bool found = false;
      center.for_each([&](Elem e) {
        if (found || a.join(x, e) != a.top()) return;
        center.for_each([&](Elem f) {
          found = found || (a.mult(e, f) == a.bottom() && a.join(y, f) == a.top());
        });
      });
      if (!found) return PairVerdict{false, std::pair{x, y}};
    }
  }
  return {};
}

PairVerdict filters_b_normal(const Algebra& a) {
  const std::vector<Filter> filters = all_filters(a);
  const ElementSet whole = a.universe();
  const ElementSet least = ElementSet::single(a.top());
  std::vector<Filter> center;
  for (const Filter& e : filters) {
    const bool complemented = std::any_of(filters.begin(), filters.end(), [&](const Filter& g) {
      return filter_join(a, e, g).members == whole && filter_meet(a, e, g).members == least;
    });
    if (complemented) center.push_back(e);
  }
  std::vector<ElementSet> from_booleans;
  complemented_elements(a).for_each([&](Elem e) { from_booleans.push_back(principal_filter(a, e).members); });
  std::sort(from_booleans.begin(), from_booleans.end(), report_order_less);
  std::vector<ElementSet> center_members;
  for (const Filter& e : center) center_members.push_back(e.members);
  if (center_members != from_booleans) throw std::logic_error("Boolean center of the filter lattice is not {[e) | e in B(A)}");

  for (const Filter& f : filters) {
    for (const Filter& g : filters) {
      if (filter_join(a, f, g).members != whole) continue;
      bool found = false;
      for (const Filter& e : center) {
        if (filter_join(a, f, e).members != whole) continue;
        for (const Filter& e2 : center) {
          if (filter_meet(a, e, e2).members == least && filter_join(a, g, e2).members == whole) found = true;
        }
      }
      if (!found) return PairVerdict{false, std::pair{f.generator, g.generator}};
    }
  }
  return {};
}

Verdict star_condition(const Algebra& a) { return split_condition(a, radical(a).members); }

Verdict star_star_condition(const Algebra& a) {
  const ElementSet nilpotents = element_classes(a).nilpotents;
  ElementSet allowed;
  for (std::size_t u = 0; u < a.size(); ++u)
    if (nilpotents.contains(a.neg(E(u)))) allowed.insert(E(u));
  return split_condition(a, allowed);
}

bool is_local(const Algebra& a) { return spectra(a).max.size() == 1; }

std::vector<std::vector<Elem>> complete_sets(const Algebra& a) {
  const std::vector<Elem> booleans = complemented_elements(a).members();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> chosen;
  auto search = [&](auto& self, std::size_t from, Elem meet) -> void {
    if (!chosen.empty() && meet == a.bottom()) out.push_back(chosen);
    for (std::size_t i = from; i < booleans.size(); ++i) {
      const Elem e = booleans[i];
      const bool compatible =
          std::all_of(chosen.begin(), chosen.end(), [&](Elem c) { return a.join(c, e) == a.top(); });
      if (!compatible) continue;
      chosen.push_back(e);
      self(self, i + 1, a.meet(meet, e));
      chosen.pop_back();
    }
  };
  search(search, 0, a.top());
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  return out;
}

std::optional<Decomposition> semiperfect_decomposition(const Algebra& a) {
  if (a.trivial()) throw std::invalid_argument("Trivial: decomposition needs a non-trivial algebra");
  std::optional<Decomposition> found;
  for (const auto& set : complete_sets(a)) {
    Decomposition d;
    d.complete_set = set;
    bool all_local = true;
    for (Elem e : set) {
      d.factors.push_back(interval_algebra(a, e));
      d.factor_local.push_back(is_local(d.factors.back().algebra));
      all_local = all_local && d.factor_local.back();
    }
    if (!all_local) continue;

    std::vector<Algebra> algebras;
    std::size_t product_size = 1;
    for (const SubUniverse& f : d.factors) {
      algebras.push_back(f.algebra);
      product_size *= f.algebra.size();
    }
    if (product_size != a.size()) throw std::logic_error("complete set does not split the algebra");
    d.product = direct_product(algebras);
    std::vector<Elem> buf(set.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        const auto& to_parent = d.factors[i].to_parent;
        const Elem image = a.join(E(x), set[i]);
        buf[i] = E(std::find(to_parent.begin(), to_parent.end(), image) - to_parent.begin());
      }
      d.to_product.push_back(d.product.encode(buf));
    }
    if (!is_isomorphism(a, d.product.algebra, d.to_product)) {
      throw std::logic_error("x -> (x v e_i) is not an isomorphism onto the product of intervals");
    }
    found = std::move(d);
    break;
  }
  if (found.has_value() != algebra_has_blp(a).verdict) {
    throw std::logic_error("semiperfect decomposition and BLP verdict disagree");
  }
  return found;
}

AnalysisReport classify(const Algebra& a) {
  AnalysisReport r;
  r.algebra_name = a.name();
  r.size = a.size();
  r.labels = a.labels();
  r.classes = element_classes(a);
  r.s_set = s_set(a);
  for (std::size_t x = 0; x < a.size(); ++x) r.s_witness_counts.push_back(s_witnesses(a, E(x)).count());

  const BlpResult blp = algebra_has_blp(a);
  r.has_blp = blp.verdict;
  if (!r.has_blp) r.witnesses["has_blp"] = {(a.universe() - r.s_set).first()};

  bool per_filter_all = true;
  for (const Filter& f : all_filters(a)) {
    const Verdict v = filter_has_blp(a, f);
    r.per_filter.push_back({f, v.holds, projection_injective_on_booleans(a, f)});
    per_filter_all = per_filter_all && v.holds;
  }
  if (per_filter_all != r.has_blp) throw RouteDisagreement("RouteDisagreement: per-filter verdicts");

  const Verdict ql = quasi_local(a);
  r.quasi_local = ql.holds;
  if (ql.witness) r.witnesses["quasi_local"] = {*ql.witness};
  const PairVerdict bn = b_normal(a);
  r.b_normal = bn.holds;
  if (bn.witness) r.witnesses["b_normal"] = {bn.witness->first, bn.witness->second};
  const PairVerdict fbn = filters_b_normal(a);
  r.filters_b_normal = fbn.holds;
  if (fbn.witness) r.witnesses["filters_b_normal"] = {fbn.witness->first, fbn.witness->second};
  const Verdict st = star_condition(a);
  r.star = st.holds;
  if (st.witness) r.witnesses["star"] = {*st.witness};
  const Verdict sst = star_star_condition(a);
  r.star_star = sst.holds;
  if (sst.witness) r.witnesses["star_star"] = {*sst.witness};

  r.spectra = spectra(a);
  r.radical = radical(a);
  r.local = r.spectra.max.size() == 1;
  r.simple = r.per_filter.size() == 2;
  r.hyperarchimedean = r.classes.archimedeans == a.universe();
  if (!r.hyperarchimedean) r.witnesses["hyperarchimedean"] = {(a.universe() - r.classes.archimedeans).first()};
  r.mult_is_meet = r.classes.mult_is_meet;
  r.involutive = r.classes.involutive;
  r.boolean_center_trivial = r.classes.booleans.count() <= 2;
  if (!a.trivial()) r.decomposition = semiperfect_decomposition(a);
  r.semiperfect = r.decomposition.has_value();
  return r;
}

}  // namespace rlat
