#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlat/algebra.hpp"
#include "rlat/construct.hpp"
#include "rlat/filters.hpp"

namespace rlat {

/// The two BLP routes disagreed. Never expected on a validated algebra.
class RouteDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// S(x) = {e in B(A) | e in [x) and neg e in [neg x)}.
ElementSet s_witnesses(const Algebra& a, Elem x);

/// {x | S(x) nonempty}, cross-checked against {x | exists e in B(A) with
/// e <-> x in [x v neg x)}.
ElementSet s_set(const Algebra& a);

/// Only the biresiduum form.
ElementSet s_set_biresiduum_form(const Algebra& a);

struct Verdict {
  bool holds = true;
  std::optional<Elem> witness;
};

/// Boolean centers seen from A/F, as sets of quotient classes.
struct LiftingData {
  /// B(A/F), computed as {x/F | x v neg x in F}.
  ElementSet quotient_booleans;
  /// B(A)/F.
  ElementSet lifted_booleans;
};

LiftingData lifting_data(const Algebra& a, const Filter& f, const QuotientPresentation& q);

/// Witness is the smallest x with x v neg x in F whose class is not lifted.
Verdict filter_has_blp(const Algebra& a, const Filter& f);

/// B(A) ∩ F = {1}; also asserted equal to injectivity of e -> e/F on B(A).
bool projection_injective_on_booleans(const Algebra& a, const Filter& f);

struct BlpResult {
  bool verdict = false;
  bool route_agreement = true;
};

/// Route 1: S(A) = A. Route 2: every filter has BLP. Throws
/// RouteDisagreement if they differ.
BlpResult algebra_has_blp(const Algebra& a);

/// Witness is the smallest a admitting no e, n.
Verdict quasi_local(const Algebra& a);
inline bool is_quasi_local(const Algebra& a) { return quasi_local(a).holds; }

/// B-normality of (A, v, *, 0, 1) from the definition, with B(L) computed
/// as the elements having a complement for v and *. Witness pair (x, y).
struct PairVerdict {
  bool holds = true;
  std::optional<std::pair<Elem, Elem>> witness;
};
PairVerdict b_normal(const Algebra& a);
inline bool is_b_normal(const Algebra& a) { return b_normal(a).holds; }

/// B-normality of the lattice of (principal) filters, with its Boolean
/// center computed from the definition: whenever F v G = A there are
/// complemented filters E, E' with E ∩ E' = {1}, F v E = A and G v E' = A.
/// Witness is the pair of generators of F and G.
PairVerdict filters_b_normal(const Algebra& a);

/// Complemented elements of (A, v, *, 0, 1).
ElementSet b_normal_center(const Algebra& a);

/// [x) = [u * e) with u in Rad(A), e in B(A), for every x.
Verdict star_condition(const Algebra& a);
/// Same with neg u nilpotent instead of u in Rad(A).
Verdict star_star_condition(const Algebra& a);

bool is_local(const Algebra& a);

struct Decomposition {
  std::vector<Elem> complete_set;
  std::vector<SubUniverse> factors;
  std::vector<bool> factor_local;
  /// Product of the factor algebras and the map x -> (x v e_i)_i into it.
  Product product;
  std::vector<Elem> to_product;
};

/// Complete sets: Boolean elements with total meet 0 and pairwise joins 1.
/// All of them, smallest first then lexicographic.
std::vector<std::vector<Elem>> complete_sets(const Algebra& a);

/// First complete set whose intervals are all local, with the
/// reconstruction checked to be an isomorphism. Throws std::invalid_argument
/// ("Trivial") on the one-element algebra.
std::optional<Decomposition> semiperfect_decomposition(const Algebra& a);

struct FilterVerdict {
  Filter filter;
  bool has_blp = false;
  bool projection_injective = false;
};

struct AnalysisReport {
  std::string algebra_name;
  std::size_t size = 0;
  std::vector<std::string> labels;

  bool has_blp = false;
  bool quasi_local = false;
  bool b_normal = false;
  bool filters_b_normal = false;
  bool star = false;
  bool star_star = false;
  bool local = false;
  bool semilocal = true;
  bool simple = false;
  bool hyperarchimedean = false;
  bool semiperfect = false;
  bool maximal = true;
  bool mult_is_meet = false;
  bool involutive = false;
  bool boolean_center_trivial = false;

  ElementClasses classes;
  ElementSet s_set;
  std::vector<std::size_t> s_witness_counts;
  std::vector<FilterVerdict> per_filter;
  Spectra spectra;
  Filter radical;
  std::optional<Decomposition> decomposition;
  std::map<std::string, std::vector<Elem>> witnesses;
};

AnalysisReport classify(const Algebra& a);

}  // namespace rlat
