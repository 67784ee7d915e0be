#pragma once

#include <stdexcept>
#include <vector>

#include "rlat/algebra.hpp"
#include "rlat/iso.hpp"

namespace rlat {

class SizeTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultEnumerationCap = 6;

/// Bounded lattices on n elements up to isomorphism, as join tables with
/// bottom 0, top n-1 and x <= y implying x <= y as indices. Sorted by table.
std::vector<Table> enumerate_lattices(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Every commutative integral residuated structure on the lattice `join`
/// (labeled; no isomorphism reduction). The search keeps x*y <= x ^ y,
/// monotonicity and join preservation; associativity is checked at the end.
std::vector<Algebra> enumerate_residuated(const Table& join);

/// All residuated lattices of size n up to isomorphism, in canonical
/// labeling, sorted by canonical form. Named "R<n>.<k>".
std::vector<Algebra> enumerate_algebras(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Single-threaded reference for enumerate_algebras.
std::vector<Algebra> enumerate_algebras_serial(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Algebra built from a canonical form (its canonical labeling).
Algebra algebra_from_canonical(const CanonicalForm& form, std::string name);

}  // namespace rlat
