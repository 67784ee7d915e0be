#include "rlat/iso.hpp"

#include <algorithm>
#include <numeric>

namespace rlat {

namespace {

Elem E(std::size_t i) { return static_cast<Elem>(i); }

}  // namespace

std::vector<std::vector<int>> element_signatures(const Algebra& a) {
  const std::size_t n = a.size();
  const ElementClasses cls = element_classes(a);
  std::vector<std::vector<int>> sig(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Elem x = E(i);
    int annihilated = 0;
    int fixed = 0;
    for (std::size_t j = 0; j < n; ++j) {
      annihilated += a.mult(x, E(j)) == a.bottom();
      fixed += a.mult(x, E(j)) == x;
    }
    // Down-count first: bottom sorts first and top last.
    sig[i] = {static_cast<int>(a.down_set(x).count()),
              static_cast<int>(a.up_set(x).count()),
              cls.idempotents.contains(x),
              cls.nilpotents.contains(x),
              cls.booleans.contains(x),
              cls.regular.contains(x),
              annihilated,
              fixed,
              static_cast<int>(a.down_set(a.stable_power(x)).count()),
              static_cast<int>(a.down_set(a.neg(x)).count()),
              static_cast<int>(a.down_set(a.mult(x, x)).count())};
  }
  return sig;
}

CanonicalForm canonical_form(const Algebra& a, std::size_t max_candidates) {
  const std::size_t n = a.size();
  const auto sig = element_signatures(a);
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::stable_sort(perm.begin(), perm.end(), [&](Elem x, Elem y) { return sig[x] < sig[y]; });

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  double candidates = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && sig[perm[j]] == sig[perm[i]]) ++j;
    cells.emplace_back(i, j);
    for (std::size_t k = 2; k <= j - i; ++k) candidates *= static_cast<double>(k);
    i = j;
  }
  if (candidates > static_cast<double>(max_candidates)) {
    throw RangeError("canonical form: too many candidate relabelings");
  }

  CanonicalForm best{n, {}};
  std::vector<Elem> cur(2 * n * n);
  std::vector<Elem> inv(n);

  auto evaluate = [&] {
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = E(i);
    const bool first = best.tables.empty();
    bool less = first;
    std::size_t k = 0;
    for (const Table* t : {&a.join_table(), &a.mult_table()}) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j, ++k) {
          const Elem v = inv[(*t)(perm[i], perm[j])];
          if (!less) {
            if (v > best.tables[k]) return;
            if (v < best.tables[k]) less = true;
          }
          cur[k] = v;
        }
      }
    }
    if (less) best.tables = cur;
  };

  auto recurse = [&](auto& self, std::size_t c) -> void {
    if (c == cells.size()) {
      evaluate();
      return;
    }
    const auto [lo, hi] = cells[c];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      self(self, c + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  recurse(recurse, 0);
  return best;
}

Algebra relabel(const Algebra& a, const std::vector<Elem>& perm) {
  const std::size_t n = a.size();
  std::vector<Elem> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv.at(perm.at(i)) = E(i);
  RawTables raw;
  raw.name = a.name();
  raw.join = Table(n);
  raw.mult = Table(n);
  raw.imp = Table(n);
  for (std::size_t i = 0; i < n; ++i) {
    raw.labels.push_back(a.label(perm[i]));
    for (std::size_t j = 0; j < n; ++j) {
      raw.join.at(E(i), E(j)) = inv[a.join(perm[i], perm[j])];
      raw.mult.at(E(i), E(j)) = inv[a.mult(perm[i], perm[j])];
      raw.imp->at(E(i), E(j)) = inv[a.imp(perm[i], perm[j])];
    }
  }
  return make_algebra(std::move(raw));
}

bool is_isomorphism(const Algebra& a, const Algebra& b, const std::vector<Elem>& map) {
  const std::size_t n = a.size();
  if (b.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Elem y : map) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Elem x = E(i);
      const Elem y = E(j);
      if (map[a.join(x, y)] != b.join(map[x], map[y])) return false;
      if (map[a.meet(x, y)] != b.meet(map[x], map[y])) return false;
      if (map[a.mult(x, y)] != b.mult(map[x], map[y])) return false;
      if (map[a.imp(x, y)] != b.imp(map[x], map[y])) return false;
    }
  }
  return true;
}

std::optional<std::vector<Elem>> find_isomorphism(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  const auto sa = element_signatures(a);
  const auto sb = element_signatures(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::size_t k) {
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = 0; j <= k; ++j) {
        const Elem x = E(i);
        const Elem y = E(j);
        for (const auto& [r, s] : {std::pair{a.join(x, y), b.join(E(map[i]), E(map[j]))},
                                   std::pair{a.mult(x, y), b.mult(E(map[i]), E(map[j]))}}) {
          if (r <= k && map[r] != s) return false;
          if (r > k && used[s]) return false;
        }
      }
    }
    return true;
  };

  auto search = [&](auto& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sa[k] != sb[c]) continue;
      map[k] = static_cast<int>(c);
      used[c] = true;
      if (consistent(k) && self(self, k + 1)) return true;
      used[c] = false;
      map[k] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<Elem> out(map.begin(), map.end());
  if (!is_isomorphism(a, b, out)) throw std::logic_error("isomorphism search produced a non-isomorphism");
  return out;
}

}  // namespace rlat
