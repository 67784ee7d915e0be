#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "rlat/algebra.hpp"

namespace rlat {

class ConstructionError : public std::invalid_argument {
 public:
  enum class Kind { kEmptyList, kNotBoolean, kShapeMismatch, kNotResiduated, kTooLarge };
  ConstructionError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Chain 0 < ... < n-1 with mult = min.
Algebra godel_chain(std::size_t n);

/// Chain 0 < ... < n-1 with mult(i,j) = max(0, i+j-(n-1)).
Algebra lukasiewicz_chain(std::size_t n);

/// Powerset of `atoms` atoms with mult = meet. Element index is the bitmask.
Algebra boolean_algebra(std::size_t atoms);

/// Finite direct product. Element index is the mixed-radix code of the tuple,
/// first factor most significant.
struct Product {
  Algebra algebra;
  std::vector<std::size_t> factor_sizes;

  std::vector<Elem> decode(Elem x) const;
  Elem encode(std::span<const Elem> components) const;
  Elem component(Elem x, std::size_t factor) const { return decode(x)[factor]; }
};

Product direct_product(std::span<const Algebra> factors);
Product direct_product(const Algebra& a, const Algebra& b);

/// An algebra carved out of a parent, with the inclusion map.
struct SubUniverse {
  Algebra algebra;
  /// to_parent[i] is the parent element that index i stands for.
  std::vector<Elem> to_parent;
};

/// [e) with imp_e(x,y) = e v (x -> y). Requires e Boolean.
SubUniverse interval_algebra(const Algebra& a, Elem e);

/// For A = [0,a] ∪ [a,1] with [a,1] a chain: the algebra on [0,a] with
/// x ~> y = a when x <= y and x -> y otherwise.
SubUniverse restrict_lower(const Algebra& a, Elem pivot);

/// Same restriction, for A = [0,a] ∪ [a,1] with [0,a] a chain.
SubUniverse restrict_upper(const Algebra& a, Elem pivot);

enum class StackPosition { kTop, kBottom };

/// Glues a k-element chain above (or below) L, sharing L's top (or bottom).
/// Chain products are min and mixed products are meets.
Algebra stack_chain(const Algebra& l, std::size_t k, StackPosition position);

}  // namespace rlat
