#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rlat/algebra.hpp"

namespace rlat {

using Failures = std::vector<std::string>;

enum class Scope { kAlgebra, kPair };

struct Theorem {
  std::string id;
  std::string statement;
  Scope scope = Scope::kAlgebra;
  /// The statement is false as written; it is still run and its
  /// counterexamples reported, but it does not count toward the verdict.
  bool refuted_as_stated = false;
  std::function<void(const Algebra&, Failures&)> check;
  std::function<void(const Algebra&, const Algebra&, Failures&)> check_pair;
};

/// Every registered check, sorted by id.
const std::vector<Theorem>& theorem_registry();

struct Corpus {
  std::string descriptor;
  std::vector<Algebra> algebras;
  /// Pair theorems use the ordered pairs of algebras up to this size.
  std::size_t pair_size_max = 4;
};

/// Fixtures (C3, EX5, B4, L3) followed by enumerate_algebras(1..size_max).
Corpus make_corpus(std::size_t size_max, bool fixtures_only = false);

struct TheoremViolation {
  std::string algebra;
  std::string key;
  std::string witness;
};

struct TheoremResult {
  std::string id;
  std::string statement;
  bool refuted_as_stated = false;
  std::size_t instances_checked = 0;
  std::vector<TheoremViolation> violations;
  double wall_ms = 0;
};

struct HarnessReport {
  std::string corpus;
  std::vector<TheoremResult> results;

  /// Violations of theorems not marked refuted_as_stated.
  std::size_t violation_count() const;
};

/// Throws std::invalid_argument for an unknown id.
HarnessReport verify_corpus(const Corpus& corpus, const std::vector<std::string>& ids = {}, bool parallel = true);

struct OpenProblemFindings {
  std::size_t algebras = 0;
  std::vector<std::string> blp_without_star;
  std::vector<std::string> no_blp_with_star_star;
  /// |S(x)| -> number of (algebra, x) pairs with that many witnesses.
  std::map<std::size_t, std::size_t> s_witness_histogram;
};

OpenProblemFindings search_open_problems(const std::vector<Algebra>& corpus, bool parallel = true);

}  // namespace rlat
