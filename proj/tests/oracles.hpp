#pragma once

// Brute-force reference computations used by the tests. Everything here is
// deliberately naive and goes back to the definitions, never through the
// library's own shortcuts.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "rlat/algebra.hpp"

namespace oracle {

using rlat::Elem;
using rlat::Table;

inline Elem E(std::size_t i) { return static_cast<Elem>(i); }

inline Table rows(const std::vector<std::vector<int>>& r) {
  Table t(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) t.at(E(i), E(j)) = E(r[i][j]);
  return t;
}

inline bool leq(const Table& join, Elem x, Elem y) { return join(x, y) == y; }

/// Number of bounded lattices on n elements up to isomorphism, by listing
/// strict orders on the n-2 middle elements and keeping those where every
/// pair has a least upper bound.
inline std::size_t count_lattices_by_poset(std::size_t n) {
  if (n <= 2) return 1;
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) cells.emplace_back(i, j);
  std::vector<std::size_t> perm(m);
  std::set<std::vector<bool>> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    // lt[i][j]: middle element i strictly below middle element j
    std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
    for (std::size_t c = 0; c < cells.size(); ++c)
      if ((mask >> c) & 1U) lt[cells[c].first][cells[c].second] = true;
    bool order = true;
    for (std::size_t i = 0; i < m && order; ++i)
      for (std::size_t j = 0; j < m && order; ++j) {
        if (lt[i][j] && lt[j][i]) order = false;
        for (std::size_t k = 0; k < m && order; ++k)
          if (lt[i][j] && lt[j][k] && !lt[i][k]) order = false;
      }
    if (!order) continue;
    // full order with 0 at index 0 and top at index n-1
    auto le = [&](std::size_t x, std::size_t y) {
      if (x == y || x == 0 || y == n - 1) return true;
      if (y == 0 || x == n - 1) return false;
      return static_cast<bool>(lt[x - 1][y - 1]);
    };
    bool lattice = true;
    for (std::size_t x = 0; x < n && lattice; ++x)
      for (std::size_t y = 0; y < n && lattice; ++y) {
        std::vector<std::size_t> ub;
        for (std::size_t z = 0; z < n; ++z)
          if (le(x, z) && le(y, z)) ub.push_back(z);
        bool least = false;
        for (std::size_t z : ub)
          if (std::all_of(ub.begin(), ub.end(), [&](std::size_t w) { return le(z, w); })) least = true;
        if (!least) lattice = false;
      }
    if (!lattice) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> key;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) key.push_back(lt[perm[i]][perm[j]]);
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

/// Does {t | x*t <= y} have a maximum for every x, y? Straight from the
/// definition of the residuum.
inline bool residuated_by_definition(const Table& join, const Table& mult) {
  const std::size_t n = join.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<Elem> ts;
      for (std::size_t t = 0; t < n; ++t)
        if (leq(join, mult(E(x), E(t)), E(y))) ts.push_back(E(t));
      const bool has_max = std::any_of(ts.begin(), ts.end(), [&](Elem m) {
        return std::all_of(ts.begin(), ts.end(), [&](Elem t) { return leq(join, t, m); });
      });
      if (!has_max) return false;
    }
  return true;
}

/// Commutative integral residuated multiplications on the lattice `join`,
/// labeled, by scanning every assignment of the cells between middle
/// elements. Rows of 0 and top are forced by x*0 = 0 and x*1 = x.
inline std::size_t count_residuated_by_scan(const Table& join) {
  const std::size_t n = join.size();
  if (n == 1) return 1;
  std::vector<std::pair<Elem, Elem>> cells;
  for (std::size_t x = 1; x + 1 < n; ++x)
    for (std::size_t y = x; y + 1 < n; ++y) cells.emplace_back(E(x), E(y));
  Table mult(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    mult.at(E(x), E(n - 1)) = E(x);
    mult.at(E(n - 1), E(x)) = E(x);
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) total *= n;
  std::size_t count = 0;
  std::vector<std::size_t> digits(cells.size(), 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Elem v = E(c % n);
      c /= n;
      mult.at(cells[i].first, cells[i].second) = v;
      mult.at(cells[i].second, cells[i].first) = v;
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        for (std::size_t z = 0; z < n && ok; ++z) {
          if (mult(mult(E(x), E(y)), E(z)) != mult(E(x), mult(E(y), E(z)))) ok = false;
          if (leq(join, E(y), E(z)) && !leq(join, mult(E(x), E(y)), mult(E(x), E(z)))) ok = false;
        }
    if (ok && residuated_by_definition(join, mult)) ++count;
  }
  return count;
}

/// Every subset of the universe satisfying the filter conditions.
inline std::vector<std::uint64_t> filters_by_definition(const rlat::Algebra& a) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    auto in = [&](std::size_t x) { return ((s >> x) & 1U) != 0; };
    bool ok = in(n - 1);
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (a.leq(E(x), E(y)) && !in(y)) ok = false;
        if (in(y) && !in(a.mult(E(x), E(y)))) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

/// Maximal proper filters by inclusion among all filters.
inline std::vector<std::uint64_t> maximal_filters_by_definition(const rlat::Algebra& a) {
  const auto fs = filters_by_definition(a);
  const std::uint64_t full = (std::uint64_t{1} << a.size()) - 1;
  std::vector<std::uint64_t> out;
  for (auto f : fs) {
    if (f == full) continue;
    bool maximal = true;
    for (auto g : fs)
      if (g != full && g != f && (f & ~g) == 0) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

}  // namespace oracle
