#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "rlat/algebra.hpp"

namespace rlat {

/// Join and mult tables under the relabeling that minimizes them
/// lexicographically. Equal forms means isomorphic algebras.
struct CanonicalForm {
  std::size_t size = 0;
  std::vector<Elem> tables;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Isomorphism-invariant per-element signature used to prune relabelings.
std::vector<std::vector<int>> element_signatures(const Algebra& a);

/// Throws RangeError if the number of candidate relabelings exceeds
/// `max_candidates` (only a concern well beyond enumeration sizes).
CanonicalForm canonical_form(const Algebra& a, std::size_t max_candidates = 5'000'000);

/// Relabels `a` so that element i of the result is perm[i] of `a`.
Algebra relabel(const Algebra& a, const std::vector<Elem>& perm);

/// map[x] is the image in b of element x of a.
bool is_isomorphism(const Algebra& a, const Algebra& b, const std::vector<Elem>& map);

/// Backtracking search; works at any size.
std::optional<std::vector<Elem>> find_isomorphism(const Algebra& a, const Algebra& b);

inline bool are_isomorphic(const Algebra& a, const Algebra& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace rlat
