#include "rlat/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rlat {

namespace {

constexpr Elem kUnset = 0xFF;

Elem E(std::size_t i) { return static_cast<Elem>(i); }

void check_size(std::size_t n, std::size_t cap) {
  if (n == 0) throw SizeTooLarge("size must be at least 1");
  if (n > cap || n > kMaxSize) throw SizeTooLarge("SizeTooLarge: size " + std::to_string(n) + " exceeds cap");
}

// Associativity restricted to triples whose entries are all known.
bool partially_associative(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xy = t(E(x), E(y));
      if (xy == kUnset) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const Elem yz = t(E(y), E(z));
        if (yz == kUnset) continue;
        const Elem l = t(xy, E(z));
        const Elem r = t(E(x), yz);
        if (l != kUnset && r != kUnset && l != r) return false;
      }
    }
  }
  return true;
}

Table canonical_lattice(const Table& join) {
  const std::size_t n = join.size();
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  Table best;
  bool have = false;
  do {
    // perm[new] = old; keep only labelings that stay linear extensions.
    std::vector<Elem> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = E(i);
    Table t(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t.at(E(i), E(j)) = inv[join(perm[i], perm[j])];
        if (t(E(i), E(j)) < std::max(i, j)) ok = false;
      }
    }
    if (ok && (!have || t.data() < best.data())) {
      best = t;
      have = true;
    }
  } while (n > 2 && std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

std::vector<Algebra> residuated_structures(const Table& join) {
  const std::size_t n = join.size();
  auto leq = [&](Elem x, Elem y) { return join(x, y) == y; };
  Table meet(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Elem best = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (leq(E(z), E(x)) && leq(E(z), E(y)) && leq(E(best), E(z))) best = E(z);
      meet.at(E(x), E(y)) = best;
    }
  }

  Table mult(n, kUnset);
  for (std::size_t x = 0; x < n; ++x) {
    mult.at(0, E(x)) = mult.at(E(x), 0) = 0;
    mult.at(E(n - 1), E(x)) = mult.at(E(x), E(n - 1)) = E(x);
  }
  std::vector<std::pair<Elem, Elem>> cells;
  for (std::size_t i = 1; i + 1 < n; ++i)
    for (std::size_t j = i; j + 1 < n; ++j) cells.emplace_back(E(i), E(j));

  // Monotone and join preserving on every known triple.
  auto locally_ok = [&](Elem x, Elem y) {
    const Elem v = mult(x, y);
    for (std::size_t z = 0; z < n; ++z) {
      const Elem w = mult(x, E(z));
      if (w == kUnset) continue;
      if (leq(y, E(z)) && !leq(v, w)) return false;
      if (leq(E(z), y) && !leq(w, v)) return false;
      const Elem yz = join(y, E(z));
      const Elem m = mult(x, yz);
      if (m != kUnset && m != join(v, w)) return false;
    }
    return true;
  };

  std::vector<Algebra> out;
  auto search = [&](auto& self, std::size_t k) -> void {
    if (k == cells.size()) {
      if (!partially_associative(mult) || !preserves_joins(join, mult)) return;
      RawTables raw;
      raw.join = join;
      raw.mult = mult;
      ValidationResult r = validate_algebra(raw);
      if (!r.ok()) {
        throw std::logic_error("join-preserving structure failed validation: " + r.violations.front().describe());
      }
      out.push_back(std::move(*r.algebra));
      return;
    }
    const auto [x, y] = cells[k];
    for (std::size_t v = 0; v < n; ++v) {
      if (!leq(E(v), meet(x, y))) continue;
      mult.at(x, y) = mult.at(y, x) = E(v);
      if (locally_ok(x, y) && locally_ok(y, x) && partially_associative(mult)) self(self, k + 1);
    }
    mult.at(x, y) = mult.at(y, x) = kUnset;
  };
  search(search, 0);
  return out;
}

std::vector<Algebra> finish(std::vector<CanonicalForm> forms, std::size_t n) {
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<Algebra> out;
  out.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    out.push_back(algebra_from_canonical(forms[i], "R" + std::to_string(n) + "." + std::to_string(i + 1)));
  }
  return out;
}

std::vector<CanonicalForm> forms_for(const Table& lattice) {
  std::vector<CanonicalForm> forms;
  for (const Algebra& a : residuated_structures(lattice)) forms.push_back(canonical_form(a));
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

}  // namespace

std::vector<Table> enumerate_lattices(std::size_t n, std::size_t cap) {
  check_size(n, cap);
  Table join(n, kUnset);
  for (std::size_t x = 0; x < n; ++x) {
    join.at(E(x), E(x)) = E(x);
    join.at(0, E(x)) = join.at(E(x), 0) = E(x);
    join.at(E(n - 1), E(x)) = join.at(E(x), E(n - 1)) = E(n - 1);
  }
  std::vector<std::pair<Elem, Elem>> cells;
  for (std::size_t i = 1; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) cells.emplace_back(E(i), E(j));

  std::set<std::vector<Elem>> seen;
  std::vector<Table> out;
  auto search = [&](auto& self, std::size_t k) -> void {
    if (k == cells.size()) {
      Table canon = canonical_lattice(join);
      if (seen.insert(canon.data()).second) out.push_back(canon);
      return;
    }
    const auto [x, y] = cells[k];
    for (std::size_t v = y; v < n; ++v) {
      join.at(x, y) = join.at(y, x) = E(v);
      if (partially_associative(join)) self(self, k + 1);
    }
    join.at(x, y) = join.at(y, x) = kUnset;
  };
  search(search, 0);
  std::sort(out.begin(), out.end(), [](const Table& l, const Table& r) { return l.data() < r.data(); });
  return out;
}

std::vector<Algebra> enumerate_residuated(const Table& join) { return residuated_structures(join); }

Algebra algebra_from_canonical(const CanonicalForm& form, std::string name) {
  const std::size_t n = form.size;
  RawTables raw;
  raw.name = std::move(name);
  raw.join = Table(n);
  raw.mult = Table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      raw.join.at(E(i), E(j)) = form.tables[i * n + j];
      raw.mult.at(E(i), E(j)) = form.tables[n * n + i * n + j];
    }
  }
  return make_algebra(std::move(raw));
}

std::vector<Algebra> enumerate_algebras_serial(std::size_t n, std::size_t cap) {
  const std::vector<Table> lattices = enumerate_lattices(n, cap);
  std::vector<CanonicalForm> forms;
  for (const Table& l : lattices) {
    auto f = forms_for(l);
    forms.insert(forms.end(), f.begin(), f.end());
  }
  return finish(std::move(forms), n);
}

std::vector<Algebra> enumerate_algebras(std::size_t n, std::size_t cap) {
  const std::vector<Table> lattices = enumerate_lattices(n, cap);
  std::vector<std::vector<CanonicalForm>> per_lattice(lattices.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(lattices.size()); ++i) {
    per_lattice[i] = forms_for(lattices[i]);
  }
  std::vector<CanonicalForm> forms;
  for (auto& f : per_lattice) forms.insert(forms.end(), f.begin(), f.end());
  return finish(std::move(forms), n);
}

}  // namespace rlat
