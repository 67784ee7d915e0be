#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rlat/blp.hpp"
#include "rlat/harness.hpp"
#include "rlat/io.hpp"

using namespace rlat;

namespace {

std::string stable_json(const HarnessReport& r) { return harness_to_json(r).dump(); }

}  // namespace

TEST_CASE("registry ids are unique and sorted") {
  const auto& reg = theorem_registry();
  REQUIRE_FALSE(reg.empty());
  for (std::size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].id < reg[i].id);
  for (const auto& t : reg) {
    CHECK_FALSE(t.statement.empty());
    if (t.scope == Scope::kAlgebra) CHECK(static_cast<bool>(t.check));
    else CHECK(static_cast<bool>(t.check_pair));
  }
}

TEST_CASE("corpus layout") {
  auto c = make_corpus(4);
  REQUIRE(c.algebras.size() == 4 + 1 + 1 + 2 + 7);
  CHECK(c.algebras[0].name() == "C3");
  CHECK(c.algebras[1].name() == "EX5");
  CHECK(make_corpus(6, true).algebras.size() == 4);
}

TEST_CASE("no violations on the size 5 corpus") {
  auto report = verify_corpus(make_corpus(5));
  CHECK(report.violation_count() == 0);
  for (const auto& r : report.results) {
    CHECK(r.instances_checked > 0);
    if (!r.refuted_as_stated) CHECK_MESSAGE(r.violations.empty(), r.id);
  }
}

TEST_CASE("the literal B-normal clause is reported with counterexamples") {
  auto report = verify_corpus(make_corpus(5), {"b-normal-literal"});
  REQUIRE(report.results.size() == 1);
  const auto& r = report.results[0];
  CHECK(r.refuted_as_stated);
  CHECK_FALSE(r.violations.empty());
  CHECK(report.violation_count() == 0);
  const bool ex5 = std::any_of(r.violations.begin(), r.violations.end(),
                               [](const TheoremViolation& v) { return v.algebra == "EX5"; });
  CHECK(ex5);
}

TEST_CASE("selecting theorems") {
  auto report = verify_corpus(make_corpus(3), {"chains", "blp-iff-s-full"});
  REQUIRE(report.results.size() == 2);
  CHECK(report.results[0].id == "blp-iff-s-full");
  CHECK_THROWS_AS(verify_corpus(make_corpus(3), {"no-such-theorem"}), std::invalid_argument);
}

TEST_CASE("serial and parallel verification agree byte for byte") {
  const auto corpus = make_corpus(4);
  const std::string serial = stable_json(verify_corpus(corpus, {}, false));
  for (int threads : {1, 3, 8}) {
    omp_set_num_threads(threads);
    CHECK(stable_json(verify_corpus(corpus, {}, true)) == serial);
  }
}

TEST_CASE("open problem search") {
  const auto corpus = make_corpus(5);
  auto f = search_open_problems(corpus.algebras);
  CHECK(f.algebras == corpus.algebras.size());
  CHECK(f.blp_without_star.empty());
  std::size_t elements = 0;
  for (const auto& a : corpus.algebras) elements += a.size();
  std::size_t total = 0;
  for (const auto& [k, v] : f.s_witness_histogram) total += v;
  CHECK(total == elements);
  // elements outside S(A) are exactly those with no witness
  std::size_t outside = 0;
  for (const auto& a : corpus.algebras) outside += a.size() - s_set(a).count();
  CHECK(f.s_witness_histogram[0] == outside);

  auto serial = search_open_problems(corpus.algebras, false);
  CHECK(findings_to_json(serial).dump() == findings_to_json(f).dump());
}

TEST_CASE("theorem docs cover the registry") {
  std::ifstream in(RLAT_THEOREM_DOC);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string doc = ss.str();
  for (const auto& t : theorem_registry()) CHECK_MESSAGE(doc.find("`" + t.id + "`") != std::string::npos, t.id);
}
