#include "rlat/filters.hpp"

#include <algorithm>

namespace rlat {

namespace {

Elem E(std::size_t i) { return static_cast<Elem>(i); }

ElementSet upward_closure(const Algebra& a, ElementSet s) {
  ElementSet out;
  s.for_each([&](Elem x) { out |= a.up_set(x); });
  return out;
}

Elem product_of(const Algebra& a, ElementSet s) {
  Elem p = a.top();
  s.for_each([&](Elem x) { p = a.mult(p, x); });
  return p;
}

void require_same_algebra(const Algebra& a, const Filter& f, const Filter& g) {
  if (f.algebra_id != a.id() || g.algebra_id != a.id()) throw FilterError("MixedAlgebras: filters belong to different algebras");
}

}  // namespace

bool is_filter(const Algebra& a, ElementSet s) {
  if (s.empty() || !s.subset_of(a.universe())) return false;
  bool ok = true;
  s.for_each([&](Elem x) {
    if (!a.up_set(x).subset_of(s)) ok = false;
    s.for_each([&](Elem y) {
      if (!s.contains(a.mult(x, y))) ok = false;
    });
  });
  return ok;
}

Filter principal_filter(const Algebra& a, Elem x) {
  a.check_element(x);
  return Filter{a.up_set(a.stable_power(x)), x, a.id()};
}

Filter generated_filter(const Algebra& a, ElementSet generators) {
  if (!generators.subset_of(a.universe())) throw RangeError("generator outside the universe");
  ElementSet s = generators | ElementSet::single(a.top());
  for (;;) {
    ElementSet next = s;
    s.for_each([&](Elem x) { s.for_each([&](Elem y) { next.insert(a.mult(x, y)); }); });
    next = upward_closure(a, next);
    if (next == s) break;
    s = next;
  }
  return Filter{s, product_of(a, s), a.id()};
}

std::vector<Filter> all_filters(const Algebra& a) {
  std::vector<Filter> out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    Filter f = principal_filter(a, E(x));
    auto same = [&](const Filter& g) { return g.members == f.members; };
    if (std::none_of(out.begin(), out.end(), same)) out.push_back(f);
  }
  std::sort(out.begin(), out.end(),
            [](const Filter& l, const Filter& r) { return report_order_less(l.members, r.members); });
  return out;
}

std::vector<ElementSet> all_filters_by_subset_scan(const Algebra& a) {
  if (a.size() > 20) throw RangeError("subset scan limited to 20 elements");
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << a.size();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const ElementSet s(bits);
    if (is_filter(a, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), report_order_less);
  return out;
}

Filter filter_join(const Algebra& a, const Filter& f, const Filter& g) {
  require_same_algebra(a, f, g);
  return principal_filter(a, a.mult(f.generator, g.generator));
}

Filter filter_meet(const Algebra& a, const Filter& f, const Filter& g) {
  require_same_algebra(a, f, g);
  Filter out = principal_filter(a, a.join(f.generator, g.generator));
  if (out.members != (f.members & g.members)) {
    throw std::logic_error("filter meet differs from set intersection");
  }
  return out;
}

Filter as_filter(const Algebra& a, ElementSet s) {
  if (!is_filter(a, s)) throw FilterError("NotAFilter: set is not a filter of the algebra");
  return Filter{s, product_of(a, s), a.id()};
}

bool is_prime_filter(const Algebra& a, const Filter& f) {
  if (f.contains(a.bottom())) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y)
      if (f.contains(a.join(E(x), E(y))) && !f.contains(E(x)) && !f.contains(E(y))) return false;
  return true;
}

Spectra spectra(const Algebra& a) {
  Spectra s;
  std::vector<Filter> proper;
  for (const Filter& f : all_filters(a))
    if (!f.contains(a.bottom())) proper.push_back(f);
  for (const Filter& f : proper) {
    if (is_prime_filter(a, f)) s.spec.push_back(f);
    const bool maximal = std::none_of(proper.begin(), proper.end(), [&](const Filter& g) {
      return g.members != f.members && f.members.subset_of(g.members);
    });
    if (maximal) s.max.push_back(f);
  }
  for (const Filter& m : s.max) {
    if (std::find(s.spec.begin(), s.spec.end(), m) == s.spec.end()) {
      throw std::logic_error("maximal filter that is not prime");
    }
  }
  return s;
}

ElementSet radical_arithmetic(const Algebra& a) {
  const std::size_t n = a.size();
  ElementSet out;
  for (std::size_t i = 0; i < n; ++i) {
    const Elem x = E(i);
    bool all = true;
    for (std::size_t k = 1; k <= n && all; ++k) {
      const Elem nx = a.neg(a.power(x, k));
      bool found = false;
      for (std::size_t j = 1; j <= n && !found; ++j) found = a.power(nx, j) == a.bottom();
      all = found;
    }
    if (all) out.insert(x);
  }
  return out;
}

Filter radical(const Algebra& a) {
  ElementSet meet = a.universe();
  for (const Filter& m : spectra(a).max) meet &= m.members;
  if (meet != radical_arithmetic(a)) {
    throw std::logic_error("RadicalMismatch: intersection of maximal filters differs from arithmetic radical");
  }
  return as_filter(a, meet);
}

std::vector<std::vector<Elem>> QuotientPresentation::classes() const {
  std::vector<std::vector<Elem>> out(representatives.size());
  for (std::size_t x = 0; x < class_of.size(); ++x) out[class_of[x]].push_back(E(x));
  return out;
}

QuotientPresentation quotient(const Algebra& a, const Filter& f) {
  if (f.algebra_id != a.id() || !is_filter(a, f.members)) {
    throw FilterError("NotAFilter: quotient requires a filter of this algebra");
  }
  const std::size_t n = a.size();
  std::vector<Elem> reps;
  std::vector<int> raw_class(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (f.contains(a.biresiduum(E(x), reps[c]))) {
        raw_class[x] = static_cast<int>(c);
        break;
      }
    }
    if (raw_class[x] < 0) {
      raw_class[x] = static_cast<int>(reps.size());
      reps.push_back(E(x));
    }
  }
  // Move the class of top to the end.
  const int top_class = raw_class[a.top()];
  std::vector<Elem> order;
  for (std::size_t c = 0; c < reps.size(); ++c)
    if (static_cast<int>(c) != top_class) order.push_back(E(c));
  order.push_back(E(top_class));
  std::vector<Elem> renumber(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = E(i);

  QuotientPresentation q;
  q.parent_id = a.id();
  q.filter = f;
  q.class_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) q.class_of[x] = renumber[raw_class[x]];
  q.representatives.resize(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) q.representatives[renumber[c]] = reps[c];

  const std::size_t m = reps.size();
  RawTables raw;
  raw.join = Table(m);
  raw.mult = Table(m);
  raw.imp = Table(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Elem x = q.representatives[i];
      const Elem y = q.representatives[j];
      raw.join.at(E(i), E(j)) = q.class_of[a.join(x, y)];
      raw.mult.at(E(i), E(j)) = q.class_of[a.mult(x, y)];
      raw.imp->at(E(i), E(j)) = q.class_of[a.imp(x, y)];
    }
    raw.labels.push_back(a.label(q.representatives[i]));
  }
  raw.name = (a.name().empty() ? std::string("A") : a.name()) + "/[" + a.label(f.generator) + ")";
  q.quotient = make_algebra(std::move(raw));
  return q;
}

bool second_isomorphism_check(const Algebra& a, const Filter& f, const Filter& g) {
  if (!f.members.subset_of(g.members)) throw FilterError("NotNested: F must be contained in G");
  const QuotientPresentation by_g = quotient(a, g);
  const QuotientPresentation by_f = quotient(a, f);
  const Algebra& af = by_f.quotient;
  const Filter g_over_f = as_filter(af, by_f.image(g.members));
  const QuotientPresentation nested = quotient(af, g_over_f);

  const std::size_t m = by_g.quotient.size();
  if (nested.quotient.size() != m) return false;
  std::vector<int> phi(m, -1);
  for (std::size_t x = 0; x < a.size(); ++x) {
    const Elem image = nested.class_of[by_f.class_of[x]];
    int& slot = phi[by_g.class_of[x]];
    if (slot >= 0 && slot != image) return false;
    slot = image;
  }
  std::vector<bool> hit(m, false);
  for (int img : phi) {
    if (hit[img]) return false;
    hit[img] = true;
  }
  const Algebra& lhs = by_g.quotient;
  const Algebra& rhs = nested.quotient;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const Elem px = E(phi[x]);
      const Elem py = E(phi[y]);
      if (phi[lhs.join(E(x), E(y))] != rhs.join(px, py)) return false;
      if (phi[lhs.meet(E(x), E(y))] != rhs.meet(px, py)) return false;
      if (phi[lhs.mult(E(x), E(y))] != rhs.mult(px, py)) return false;
      if (phi[lhs.imp(E(x), E(y))] != rhs.imp(px, py)) return false;
    }
  }
  return true;
}

}  // namespace rlat
