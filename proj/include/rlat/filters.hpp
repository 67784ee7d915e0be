#pragma once

#include <stdexcept>
#include <vector>

#include "rlat/algebra.hpp"

namespace rlat {

class FilterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A filter together with a generator g, so that members = [g).
struct Filter {
  ElementSet members;
  Elem generator = 0;
  std::uint64_t algebra_id = 0;

  bool contains(Elem x) const { return members.contains(x); }
  friend bool operator==(const Filter& a, const Filter& b) {
    return a.members == b.members && a.algebra_id == b.algebra_id;
  }
};

/// Checks the two filter conditions (plus non-emptiness) directly.
bool is_filter(const Algebra& a, ElementSet s);

/// [x) = {y | x^n <= y for some n}.
Filter principal_filter(const Algebra& a, Elem x);

/// Smallest filter containing `generators`; the empty set yields {top}.
Filter generated_filter(const Algebra& a, ElementSet generators);

/// Every filter of A, in report order. Uses that every filter of a finite
/// residuated lattice is principal.
std::vector<Filter> all_filters(const Algebra& a);

/// Reference enumeration over all 2^n subsets. Only for small n (<= 20).
std::vector<ElementSet> all_filters_by_subset_scan(const Algebra& a);

/// F v G = [gF * gG). Throws FilterError (MixedAlgebras) unless both
/// filters belong to `a`.
Filter filter_join(const Algebra& a, const Filter& f, const Filter& g);
/// F ∩ G = [gF v gG).
Filter filter_meet(const Algebra& a, const Filter& f, const Filter& g);

/// Promotes a member set to a Filter; throws FilterError if it is not one.
Filter as_filter(const Algebra& a, ElementSet s);

bool is_prime_filter(const Algebra& a, const Filter& f);

struct Spectra {
  std::vector<Filter> spec;
  std::vector<Filter> max;
};

Spectra spectra(const Algebra& a);

/// Intersection of the maximal filters, cross-checked against the arithmetic
/// description {x | for all n there is k with (neg x^n)^k = 0}.
Filter radical(const Algebra& a);

/// The arithmetic route alone, with both exponents capped at size.
ElementSet radical_arithmetic(const Algebra& a);

struct QuotientPresentation {
  std::uint64_t parent_id = 0;
  Filter filter;
  /// class_of[x] is the quotient element containing x.
  std::vector<Elem> class_of;
  /// Smallest parent element of each class.
  std::vector<Elem> representatives;
  Algebra quotient;

  ElementSet image(ElementSet s) const {
    ElementSet out;
    s.for_each([&](Elem x) { out.insert(class_of[x]); });
    return out;
  }
  ElementSet preimage(ElementSet classes) const {
    ElementSet out;
    for (std::size_t x = 0; x < class_of.size(); ++x)
      if (classes.contains(class_of[x])) out.insert(static_cast<Elem>(x));
    return out;
  }
  std::vector<std::vector<Elem>> classes() const;
};

/// A/F. Classes are numbered by smallest member, except that the class of
/// top (which equals F) is always last, so the quotient keeps the file
/// convention bottom = 0, top = size-1.
QuotientPresentation quotient(const Algebra& a, const Filter& f);

/// Builds A/G and (A/F)/(G/F) for F ⊆ G and checks that x/G -> (x/F)/(G/F)
/// is an isomorphism.
bool second_isomorphism_check(const Algebra& a, const Filter& f, const Filter& g);

}  // namespace rlat
