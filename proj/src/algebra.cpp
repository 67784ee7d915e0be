#include "rlat/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>

namespace rlat {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

Violation make_violation(ViolationKind kind, std::string axiom, std::vector<int> witness) {
  return Violation{kind, std::move(axiom), std::move(witness)};
}

// Order predicate taken from a join table.
bool leq_by_join(const Table& join, Elem x, Elem y) { return join(x, y) == y; }

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kMalformed: return "Malformed";
    case ViolationKind::kNotALattice: return "NotALattice";
    case ViolationKind::kNotAMonoid: return "NotAMonoid";
    case ViolationKind::kNotResiduated: return "NotResiduated";
    case ViolationKind::kResiduationFails: return "ResiduationFails";
    case ViolationKind::kImpMismatch: return "ImpMismatch";
  }
  return "Unknown";
}

std::string Violation::describe() const {
  std::string out = std::string(to_string(kind)) + ": " + axiom;
  if (!witness.empty()) out += " (witness " + join_ints(witness) + ")";
  return out;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(violations.empty() ? std::string("invalid algebra")
                                            : violations.front().describe()),
      violations_(std::move(violations)) {}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  if (n == 0) return labels;
  labels[0] = "0";
  if (n == 1) return labels;
  labels[n - 1] = "1";
  for (std::size_t i = 1; i + 1 < n; ++i) {
    std::size_t k = i - 1;
    labels[i] = k < 26 ? std::string(1, static_cast<char>('a' + k)) : "e" + std::to_string(i);
  }
  return labels;
}

ResiduumResult residuum_from_mult(const Table& join, const Table& mult) {
  const std::size_t n = join.size();
  ResiduumResult result;
  Table imp(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      // Candidate maximum is the join of every admissible t.
      bool any = false;
      Elem acc = 0;
      for (std::size_t t = 0; t < n; ++t) {
        if (leq_by_join(join, mult(static_cast<Elem>(x), static_cast<Elem>(t)), static_cast<Elem>(y))) {
          acc = any ? join(acc, static_cast<Elem>(t)) : static_cast<Elem>(t);
          any = true;
        }
      }
      if (!any || !leq_by_join(join, mult(static_cast<Elem>(x), acc), static_cast<Elem>(y))) {
        result.witness = std::make_pair(static_cast<Elem>(x), static_cast<Elem>(y));
        return result;
      }
      imp.at(static_cast<Elem>(x), static_cast<Elem>(y)) = acc;
    }
  }
  result.imp = std::move(imp);
  return result;
}

bool preserves_joins(const Table& join, const Table& mult) {
  const std::size_t n = join.size();
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = static_cast<Elem>(x);
    if (mult(ex, 0) != 0) return false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const auto ea = static_cast<Elem>(a);
        const auto eb = static_cast<Elem>(b);
        if (mult(ex, join(ea, eb)) != join(mult(ex, ea), mult(ex, eb))) return false;
      }
    }
  }
  return true;
}

ValidationResult validate_algebra(const RawTables& raw) {
  ValidationResult out;
  auto& v = out.violations;
  const std::size_t n = raw.join.size();

  if (n == 0) {
    v.push_back(make_violation(ViolationKind::kMalformed, "size >= 1", {}));
    return out;
  }
  if (n > kMaxSize) {
    v.push_back(make_violation(ViolationKind::kMalformed, "size <= 64", {static_cast<int>(n)}));
    return out;
  }
  if (raw.mult.size() != n || (raw.imp && raw.imp->size() != n)) {
    v.push_back(make_violation(ViolationKind::kMalformed, "all tables are size x size", {}));
    return out;
  }
  if (!raw.labels.empty() && raw.labels.size() != n) {
    v.push_back(make_violation(ViolationKind::kMalformed, "one label per element", {}));
    return out;
  }
  auto in_range = [n](const Table& t) {
    return std::all_of(t.data().begin(), t.data().end(), [n](Elem e) { return e < n; });
  };
  if (!in_range(raw.join) || !in_range(raw.mult) || (raw.imp && !in_range(*raw.imp))) {
    v.push_back(make_violation(ViolationKind::kMalformed, "table entries are element indices", {}));
    return out;
  }

  const Table& join = raw.join;
  const Table& mult = raw.mult;
  const Elem top = static_cast<Elem>(n - 1);
  auto E = [](std::size_t i) { return static_cast<Elem>(i); };

  // Bounded lattice, through the join semilattice.
  auto first_failure = [&](ViolationKind kind, const char* axiom, auto&& bad) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (bad(E(x), E(y), E(z))) {
            v.push_back(make_violation(kind, axiom, {int(x), int(y), int(z)}));
            return;
          }
  };
  first_failure(ViolationKind::kNotALattice, "join idempotent",
                [&](Elem x, Elem, Elem) { return join(x, x) != x; });
  first_failure(ViolationKind::kNotALattice, "join commutative",
                [&](Elem x, Elem y, Elem) { return join(x, y) != join(y, x); });
  first_failure(ViolationKind::kNotALattice, "join associative",
                [&](Elem x, Elem y, Elem z) { return join(join(x, y), z) != join(x, join(y, z)); });
  first_failure(ViolationKind::kNotALattice, "index 0 is bottom (0 v x = x)",
                [&](Elem x, Elem, Elem) { return join(0, x) != x; });
  first_failure(ViolationKind::kNotALattice, "index size-1 is top (x v 1 = 1)",
                [&](Elem x, Elem, Elem) { return join(x, top) != top; });
  if (!v.empty()) return out;

  std::vector<ElementSet> up(n), down(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq_by_join(join, E(x), E(y))) {
        up[x].insert(E(y));
        down[y].insert(E(x));
      }

  Table meet(n);
  for (std::size_t x = 0; x < n && v.empty(); ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ElementSet lower = down[x] & down[y];
      std::optional<Elem> glb;
      lower.for_each([&](Elem g) {
        if (!glb && lower.subset_of(down[g])) glb = g;
      });
      if (!glb) {
        v.push_back(make_violation(ViolationKind::kNotALattice, "meet exists", {int(x), int(y)}));
        break;
      }
      meet.at(E(x), E(y)) = *glb;
    }
  }
  if (!v.empty()) return out;
  first_failure(ViolationKind::kNotALattice, "absorption",
                [&](Elem x, Elem y, Elem) {
                  return join(x, meet(x, y)) != x || meet(x, join(x, y)) != x;
                });
  if (!v.empty()) return out;

  // Commutative monoid with identity top.
  first_failure(ViolationKind::kNotAMonoid, "mult commutative",
                [&](Elem x, Elem y, Elem) { return mult(x, y) != mult(y, x); });
  first_failure(ViolationKind::kNotAMonoid, "mult associative",
                [&](Elem x, Elem y, Elem z) { return mult(mult(x, y), z) != mult(x, mult(y, z)); });
  first_failure(ViolationKind::kNotAMonoid, "top is the mult identity",
                [&](Elem x, Elem, Elem) { return mult(x, top) != x; });
  if (!v.empty()) return out;

  // Residuation against the canonical residuum.
  ResiduumResult canonical = residuum_from_mult(join, mult);
  if (!canonical.imp) {
    const auto [x, y] = *canonical.witness;
    v.push_back(make_violation(ViolationKind::kNotResiduated, "max{t | x*t <= y} exists", {x, y}));
  }
  const Table& imp = canonical.imp ? *canonical.imp : (raw.imp ? *raw.imp : join);
  if (canonical.imp || raw.imp) {
    first_failure(ViolationKind::kResiduationFails, "a <= b->c iff a*b <= c",
                  [&](Elem a, Elem b, Elem c) {
                    return leq_by_join(join, a, imp(b, c)) != leq_by_join(join, mult(a, b), c);
                  });
  }
  if (canonical.imp && raw.imp) {
    for (std::size_t x = 0; x < n && v.empty(); ++x)
      for (std::size_t y = 0; y < n; ++y)
        if ((*raw.imp)(E(x), E(y)) != (*canonical.imp)(E(x), E(y))) {
          v.push_back(make_violation(ViolationKind::kImpMismatch, "supplied imp equals canonical residuum",
                                     {int(x), int(y), (*raw.imp)(E(x), E(y)), (*canonical.imp)(E(x), E(y))}));
          break;
        }
  }
  if (!v.empty()) return out;
  first_failure(ViolationKind::kResiduationFails, "a*b <= a^b",
                [&](Elem x, Elem y, Elem) { return !leq_by_join(join, mult(x, y), meet(x, y)); });
  if (!v.empty()) return out;

  Algebra a;
  a.n_ = n;
  a.id_ = next_algebra_id.fetch_add(1, std::memory_order_relaxed);
  a.name_ = raw.name;
  a.labels_ = raw.labels.empty() ? default_labels(n) : raw.labels;
  a.join_ = join;
  a.meet_ = std::move(meet);
  a.mult_ = mult;
  a.imp_ = std::move(*canonical.imp);
  a.up_ = std::move(up);
  a.down_ = std::move(down);
  a.stable_power_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    Elem p = E(x);
    for (std::size_t k = 1; k < n; ++k) p = a.mult_(E(x), p);
    a.stable_power_[x] = p;
  }
  out.algebra = std::move(a);
  return out;
}

Algebra make_algebra(RawTables raw) {
  ValidationResult r = validate_algebra(raw);
  if (!r.ok()) throw ValidationError(std::move(r.violations));
  return std::move(*r.algebra);
}

Elem Algebra::power(Elem x, std::size_t k) const {
  check_element(x);
  if (k >= n_) return stable_power_[x];
  Elem p = top();
  for (std::size_t i = 0; i < k; ++i) p = mult_(x, p);
  return p;
}

std::optional<Elem> Algebra::find(const std::string& token) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (labels_[i] == token) return static_cast<Elem>(i);
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc() && ptr == token.data() + token.size() && value < n_) {
    return static_cast<Elem>(value);
  }
  return std::nullopt;
}

Algebra Algebra::with_name(std::string name) const {
  Algebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Algebra Algebra::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != n_) throw RangeError("label count differs from algebra size");
  Algebra copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

ElementSet complemented_elements(const Algebra& a) {
  ElementSet out;
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto ex = static_cast<Elem>(x);
      const auto ey = static_cast<Elem>(y);
      if (a.join(ex, ey) == a.top() && a.meet(ex, ey) == a.bottom()) {
        out.insert(ex);
        break;
      }
    }
  }
  return out;
}

ElementClasses element_classes(const Algebra& a) {
  ElementClasses c;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<Elem>(i);
    if (a.join(x, a.neg(x)) == a.top()) c.booleans.insert(x);
    if (a.stable_power(x) == a.bottom()) c.nilpotents.insert(x);
    if (a.neg(x) == a.bottom()) c.dense.insert(x);
    if (a.neg(a.neg(x)) == x) c.regular.insert(x);
    if (a.mult(x, x) == x) c.idempotents.insert(x);
  }
  if (c.booleans != complemented_elements(a)) {
    throw std::logic_error("Boolean center disagrees with complemented elements");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<Elem>(i);
    Elem p = x;
    for (std::size_t k = 1; k <= n; ++k) {
      if (c.booleans.contains(p)) {
        c.archimedeans.insert(x);
        break;
      }
      p = a.mult(x, p);
    }
  }
  c.mult_is_meet = a.mult_table() == a.meet_table();
  c.involutive = c.regular == a.universe();
  return c;
}

}  // namespace rlat
