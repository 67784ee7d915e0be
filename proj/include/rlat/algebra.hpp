#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rlat/element_set.hpp"

namespace rlat {

/// Square operation table, row-major; t(x, y) is the result on (x, y).
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Elem fill = 0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Elem operator()(Elem x, Elem y) const { return data_[x * n_ + y]; }
  Elem& at(Elem x, Elem y) { return data_[x * n_ + y]; }
  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> data_;
};

/// Input to validation. Only join and mult are required.
struct RawTables {
  std::string name;
  std::vector<std::string> labels;
  Table join;
  Table mult;
  std::optional<Table> imp;

  std::size_t size() const { return join.size(); }
};

enum class ViolationKind {
  kMalformed,
  kNotALattice,
  kNotAMonoid,
  kNotResiduated,
  kResiduationFails,
  kImpMismatch,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string axiom;
  std::vector<int> witness;

  std::string describe() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Raised when an element index or argument is outside the algebra.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct ValidationResult;

/// A validated finite commutative integral bounded residuated lattice.
/// Bottom is index 0 and top is index size-1. Immutable once built.
class Algebra {
 public:
  /// Empty placeholder (size 0); only useful as an assignment target.
  Algebra() = default;

  std::size_t size() const { return n_; }
  Elem bottom() const { return 0; }
  Elem top() const { return static_cast<Elem>(n_ - 1); }
  bool trivial() const { return n_ == 1; }

  Elem join(Elem x, Elem y) const { return join_(x, y); }
  Elem meet(Elem x, Elem y) const { return meet_(x, y); }
  Elem mult(Elem x, Elem y) const { return mult_(x, y); }
  Elem imp(Elem x, Elem y) const { return imp_(x, y); }
  bool leq(Elem x, Elem y) const { return up_[x].contains(y); }

  Elem neg(Elem x) const { return imp_(x, 0); }
  Elem biresiduum(Elem x, Elem y) const { return meet_(imp_(x, y), imp_(y, x)); }
  /// x^n with x^0 = top.
  Elem power(Elem x, std::size_t n) const;
  /// x^size; the descending chain x >= x^2 >= ... is constant from here on.
  Elem stable_power(Elem x) const { return stable_power_[x]; }

  /// {y | x <= y}
  ElementSet up_set(Elem x) const { return up_[x]; }
  /// {y | y <= x}
  ElementSet down_set(Elem x) const { return down_[x]; }
  ElementSet universe() const { return ElementSet::full(n_); }

  const Table& join_table() const { return join_; }
  const Table& meet_table() const { return meet_; }
  const Table& mult_table() const { return mult_; }
  const Table& imp_table() const { return imp_; }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const { return labels_.at(x); }
  /// Finds an element by label or decimal index.
  std::optional<Elem> find(const std::string& token) const;

  /// Identity shared by copies; distinct for independently validated algebras.
  std::uint64_t id() const { return id_; }

  Algebra with_name(std::string name) const;
  Algebra with_labels(std::vector<std::string> labels) const;

  void check_element(Elem x) const {
    if (x >= n_) throw RangeError("element index out of range");
  }

  /// Table content equality (name, labels and id are ignored).
  bool same_tables(const Algebra& other) const {
    return join_ == other.join_ && mult_ == other.mult_;
  }

 private:
  friend ValidationResult validate_algebra(const RawTables& raw);

  std::size_t n_ = 0;
  std::uint64_t id_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  Table join_, meet_, mult_, imp_;
  std::vector<ElementSet> up_, down_;
  std::vector<Elem> stable_power_;
};

struct ValidationResult {
  std::optional<Algebra> algebra;
  std::vector<Violation> violations;

  bool ok() const { return algebra.has_value(); }
};

/// Checks every axiom exhaustively. Missing meet and imp tables are derived.
ValidationResult validate_algebra(const RawTables& raw);

/// validate_algebra that throws ValidationError on failure.
Algebra make_algebra(RawTables raw);

struct ResiduumResult {
  std::optional<Table> imp;
  /// Pair (x, y) whose set {t | x*t <= y} has no maximum.
  std::optional<std::pair<Elem, Elem>> witness;
};

/// Canonical residuum imp(x,y) = max{t | mult(x,t) <= y}, where the order is
/// the one induced by `join`.
ResiduumResult residuum_from_mult(const Table& join, const Table& mult);

/// True iff mult(x,0)=0 and mult distributes over binary joins in each
/// argument. For a finite lattice this is equivalent to residuum_from_mult
/// succeeding.
bool preserves_joins(const Table& join, const Table& mult);

/// Standard display labels: "0", "a", "b", ..., "1".
std::vector<std::string> default_labels(std::size_t n);

struct ElementClasses {
  ElementSet booleans;
  ElementSet nilpotents;
  ElementSet dense;
  ElementSet regular;
  ElementSet idempotents;
  ElementSet archimedeans;
  bool mult_is_meet = false;
  bool involutive = false;
};

ElementClasses element_classes(const Algebra& a);

/// Complemented elements of the lattice reduct, straight from the
/// definition. Agrees with element_classes().booleans.
ElementSet complemented_elements(const Algebra& a);

}  // namespace rlat
