#include "rlat/construct.hpp"

#include <algorithm>
#include <functional>

namespace rlat {

namespace {

Elem E(std::size_t i) { return static_cast<Elem>(i); }

RawTables chain_tables(std::size_t n) {
  RawTables raw;
  raw.join = Table(n);
  raw.mult = Table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raw.join.at(E(i), E(j)) = E(std::max(i, j));
  return raw;
}

Algebra build_or_throw(RawTables raw) {
  ValidationResult r = validate_algebra(raw);
  if (!r.ok()) {
    throw ConstructionError(ConstructionError::Kind::kNotResiduated,
                            "construction is not a residuated lattice: " + r.violations.front().describe());
  }
  return std::move(*r.algebra);
}

// Restriction of all operations to `universe` (which must contain the new
// bottom and top), with the implication supplied by `imp`.
SubUniverse restrict(const Algebra& a, ElementSet universe, Elem new_bottom, Elem new_top,
                     const std::function<Elem(Elem, Elem)>& imp, const std::string& name) {
  std::vector<Elem> to_parent{new_bottom};
  universe.for_each([&](Elem x) {
    if (x != new_bottom && x != new_top) to_parent.push_back(x);
  });
  if (new_top != new_bottom) to_parent.push_back(new_top);
  const std::size_t m = to_parent.size();
  std::vector<int> index(a.size(), -1);
  for (std::size_t i = 0; i < m; ++i) index[to_parent[i]] = static_cast<int>(i);

  auto local = [&](Elem x) -> Elem {
    if (index[x] < 0) {
      throw ConstructionError(ConstructionError::Kind::kShapeMismatch, "operation leaves the sub-universe");
    }
    return E(index[x]);
  };
  RawTables raw;
  raw.name = name;
  raw.join = Table(m);
  raw.mult = Table(m);
  raw.imp = Table(m);
  for (std::size_t i = 0; i < m; ++i) {
    raw.labels.push_back(a.label(to_parent[i]));
    for (std::size_t j = 0; j < m; ++j) {
      const Elem x = to_parent[i];
      const Elem y = to_parent[j];
      raw.join.at(E(i), E(j)) = local(a.join(x, y));
      raw.mult.at(E(i), E(j)) = local(a.mult(x, y));
      raw.imp->at(E(i), E(j)) = local(imp(x, y));
    }
  }
  return SubUniverse{build_or_throw(std::move(raw)), std::move(to_parent)};
}

bool is_chain(const Algebra& a, ElementSet s) {
  bool ok = true;
  s.for_each([&](Elem x) {
    s.for_each([&](Elem y) {
      if (!a.leq(x, y) && !a.leq(y, x)) ok = false;
    });
  });
  return ok;
}

void require_two_part_shape(const Algebra& a, Elem pivot, bool upper_chain) {
  a.check_element(pivot);
  if (!a.trivial() && pivot == a.bottom()) {
    throw ConstructionError(ConstructionError::Kind::kShapeMismatch, "pivot must differ from bottom");
  }
  if ((a.down_set(pivot) | a.up_set(pivot)) != a.universe()) {
    throw ConstructionError(ConstructionError::Kind::kShapeMismatch,
                            "some element is incomparable with the pivot");
  }
  const ElementSet part = upper_chain ? a.up_set(pivot) : a.down_set(pivot);
  if (!is_chain(a, part)) {
    throw ConstructionError(ConstructionError::Kind::kShapeMismatch,
                            upper_chain ? "[pivot,1] is not a chain" : "[0,pivot] is not a chain");
  }
  bool identity = true;
  a.down_set(pivot).for_each([&](Elem x) { identity = identity && a.mult(x, pivot) == x; });
  if (!identity) {
    throw ConstructionError(ConstructionError::Kind::kShapeMismatch,
                            "pivot is not the identity of the restricted multiplication");
  }
}

SubUniverse restrict_two_part(const Algebra& a, Elem pivot, bool upper_chain) {
  require_two_part_shape(a, pivot, upper_chain);
  auto imp = [&](Elem x, Elem y) { return a.leq(x, y) ? pivot : a.imp(x, y); };
  return restrict(a, a.down_set(pivot), a.bottom(), pivot, imp,
                  (a.name().empty() ? std::string("A") : a.name()) + "|[0," + a.label(pivot) + "]");
}

}  // namespace

Algebra godel_chain(std::size_t n) {
  if (n == 0) throw ConstructionError(ConstructionError::Kind::kTooLarge, "chain needs at least one element");
  RawTables raw = chain_tables(n);
  raw.name = "G" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raw.mult.at(E(i), E(j)) = E(std::min(i, j));
  return build_or_throw(std::move(raw));
}

Algebra lukasiewicz_chain(std::size_t n) {
  if (n == 0) throw ConstructionError(ConstructionError::Kind::kTooLarge, "chain needs at least one element");
  RawTables raw = chain_tables(n);
  raw.name = "L" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raw.mult.at(E(i), E(j)) = E(i + j >= n - 1 ? i + j - (n - 1) : 0);
  return build_or_throw(std::move(raw));
}

Algebra boolean_algebra(std::size_t atoms) {
  if (atoms > 6) throw ConstructionError(ConstructionError::Kind::kTooLarge, "at most 6 atoms (64 elements)");
  const std::size_t n = std::size_t{1} << atoms;
  RawTables raw;
  raw.name = "B" + std::to_string(n);
  raw.join = Table(n);
  raw.mult = Table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      raw.join.at(E(i), E(j)) = E(i | j);
      raw.mult.at(E(i), E(j)) = E(i & j);
    }
  }
  if (atoms >= 2) {
    for (std::size_t i = 0; i < n; ++i) {
      std::string label = "(";
      for (std::size_t b = atoms; b-- > 0;) {
        label += ((i >> b) & 1U) ? '1' : '0';
        if (b != 0) label += ',';
      }
      raw.labels.push_back(label + ")");
    }
  }
  Algebra a = build_or_throw(std::move(raw));
  if (complemented_elements(a) != a.universe()) throw std::logic_error("Boolean algebra with a non-Boolean element");
  return a;
}

std::vector<Elem> Product::decode(Elem x) const {
  std::vector<Elem> out(factor_sizes.size());
  std::size_t code = x;
  for (std::size_t i = factor_sizes.size(); i-- > 0;) {
    out[i] = E(code % factor_sizes[i]);
    code /= factor_sizes[i];
  }
  return out;
}

Elem Product::encode(std::span<const Elem> components) const {
  std::size_t code = 0;
  for (std::size_t i = 0; i < factor_sizes.size(); ++i) code = code * factor_sizes[i] + components[i];
  return E(code);
}

Product direct_product(std::span<const Algebra> factors) {
  if (factors.empty()) throw ConstructionError(ConstructionError::Kind::kEmptyList, "EmptyList: product of no factors");
  Product p;
  std::size_t total = 1;
  std::string name;
  for (const Algebra& f : factors) {
    p.factor_sizes.push_back(f.size());
    total *= f.size();
    if (total > kMaxSize) throw ConstructionError(ConstructionError::Kind::kTooLarge, "product exceeds 64 elements");
    name += (name.empty() ? "" : " x ") + (f.name().empty() ? std::string("A") : f.name());
  }
  RawTables raw;
  raw.name = name;
  raw.join = Table(total);
  raw.mult = Table(total);
  raw.imp = Table(total);
  std::vector<std::vector<Elem>> tuples(total);
  for (std::size_t x = 0; x < total; ++x) tuples[x] = p.decode(E(x));
  std::vector<Elem> buf(factors.size());
  for (std::size_t x = 0; x < total; ++x) {
    std::string label = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      label += (i ? "," : "") + factors[i].label(tuples[x][i]);
    }
    raw.labels.push_back(label + ")");
    for (std::size_t y = 0; y < total; ++y) {
      auto fill = [&](auto op) {
        for (std::size_t i = 0; i < factors.size(); ++i) buf[i] = op(factors[i], tuples[x][i], tuples[y][i]);
        return p.encode(buf);
      };
      raw.join.at(E(x), E(y)) = fill([](const Algebra& f, Elem u, Elem v) { return f.join(u, v); });
      raw.mult.at(E(x), E(y)) = fill([](const Algebra& f, Elem u, Elem v) { return f.mult(u, v); });
      raw.imp->at(E(x), E(y)) = fill([](const Algebra& f, Elem u, Elem v) { return f.imp(u, v); });
    }
  }
  p.algebra = build_or_throw(std::move(raw));

  // B(product) is the product of the Boolean centers.
  std::vector<ElementSet> factor_booleans;
  for (const Algebra& f : factors) factor_booleans.push_back(complemented_elements(f));
  const ElementSet booleans = complemented_elements(p.algebra);
  for (std::size_t x = 0; x < total; ++x) {
    bool expected = true;
    for (std::size_t i = 0; i < factors.size(); ++i) expected = expected && factor_booleans[i].contains(tuples[x][i]);
    if (expected != booleans.contains(E(x))) throw std::logic_error("Boolean center of product is not the product");
  }
  return p;
}

Product direct_product(const Algebra& a, const Algebra& b) {
  const std::vector<Algebra> factors{a, b};
  return direct_product(factors);
}

SubUniverse interval_algebra(const Algebra& a, Elem e) {
  a.check_element(e);
  if (a.join(e, a.neg(e)) != a.top()) {
    throw ConstructionError(ConstructionError::Kind::kNotBoolean, "NotBoolean: interval needs a Boolean element");
  }
  auto imp = [&](Elem x, Elem y) { return a.join(e, a.imp(x, y)); };
  return restrict(a, a.up_set(e), e, a.top(), imp,
                  "[" + a.label(e) + ") of " + (a.name().empty() ? std::string("A") : a.name()));
}

SubUniverse restrict_lower(const Algebra& a, Elem pivot) { return restrict_two_part(a, pivot, true); }

SubUniverse restrict_upper(const Algebra& a, Elem pivot) { return restrict_two_part(a, pivot, false); }

Algebra stack_chain(const Algebra& l, std::size_t k, StackPosition position) {
  if (k == 0) throw ConstructionError(ConstructionError::Kind::kShapeMismatch, "stack needs k >= 1");
  const std::size_t ln = l.size();
  const std::size_t n = ln + k;
  if (n > kMaxSize) throw ConstructionError(ConstructionError::Kind::kTooLarge, "stacked algebra exceeds 64 elements");
  const bool top = position == StackPosition::kTop;
  // Old element i of L maps to i (top) or i + k (bottom); chain elements
  // fill the remaining indices.
  const std::size_t offset = top ? 0 : k;
  auto in_l = [&](std::size_t x) { return x >= offset && x < offset + ln; };
  auto from_l = [&](std::size_t x) { return E(x - offset); };
  auto leq = [&](std::size_t x, std::size_t y) {
    if (in_l(x) && in_l(y)) return l.leq(from_l(x), from_l(y));
    return x <= y;  // chain part and cross comparisons follow index order
  };
  RawTables raw;
  raw.name = (l.name().empty() ? std::string("L") : l.name()) + (top ? "+C" : "C+") + std::to_string(k);
  raw.join = Table(n);
  raw.mult = Table(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (in_l(x) && in_l(y)) {
        raw.join.at(E(x), E(y)) = E(l.join(from_l(x), from_l(y)) + offset);
        raw.mult.at(E(x), E(y)) = E(l.mult(from_l(x), from_l(y)) + offset);
      } else {
        raw.join.at(E(x), E(y)) = E(leq(x, y) ? y : x);
        raw.mult.at(E(x), E(y)) = E(leq(x, y) ? x : y);
      }
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = in_l(x) ? l.label(from_l(x)) : "c" + std::to_string(top ? x - ln + 1 : x);
  }
  if (top && ln > 0) {
    // The junction stops being top; the new top takes label "1".
    labels[n - 1] = "1";
    if (labels[ln - 1] == "1") labels[ln - 1] = "j";
  } else if (!top) {
    labels[0] = "0";
    if (labels[k] == "0") labels[k] = "j";
  }
  raw.labels = std::move(labels);
  return build_or_throw(std::move(raw));
}

}  // namespace rlat
