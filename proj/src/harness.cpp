#include "rlat/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "rlat/blp.hpp"
#include "rlat/enumerate.hpp"
#include "rlat/fixtures.hpp"
#include "rlat/iso.hpp"
#include "theorems.hpp"

namespace rlat {

namespace detail {

std::string show(const Algebra& a, ElementSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem x) {
    if (!first) out += ",";
    out += a.label(x);
    first = false;
  });
  return out + "}";
}

std::string show(const Algebra& a, Elem x) { return a.label(x); }

void Reporter::fail(const std::string& what, const std::string& where) {
  if (std::find(seen_.begin(), seen_.end(), what) != seen_.end()) return;
  seen_.push_back(what);
  out_.push_back(where.empty() ? what : what + " at " + where);
}

}  // namespace detail

namespace {

std::string hex_key(const Algebra& a) {
  std::string out = std::to_string(a.size()) + ":";
  try {
    const CanonicalForm f = canonical_form(a);
    char buf[3];
    for (Elem v : f.tables) {
      std::snprintf(buf, sizeof buf, "%02x", static_cast<unsigned>(v));
      out += buf;
    }
  } catch (const RangeError&) {
    out += a.name();
  }
  return out;
}

struct Task {
  std::size_t theorem;
  std::size_t first;
  std::size_t second;
};

}  // namespace

const std::vector<Theorem>& theorem_registry() {
  static const std::vector<Theorem> registry = [] {
    std::vector<Theorem> t;
    detail::add_core_theorems(t);
    detail::add_blp_theorems(t);
    detail::add_structure_theorems(t);
    detail::add_product_theorems(t);
    std::sort(t.begin(), t.end(), [](const Theorem& l, const Theorem& r) { return l.id < r.id; });
    return t;
  }();
  return registry;
}

Corpus make_corpus(std::size_t size_max, bool fixtures_only) {
  Corpus c;
  c.algebras = fixtures::all();
  if (fixtures_only) {
    c.descriptor = "fixtures";
    return c;
  }
  for (std::size_t n = 1; n <= size_max; ++n) {
    for (Algebra& a : enumerate_algebras(n, std::max(size_max, kDefaultEnumerationCap))) c.algebras.push_back(std::move(a));
  }
  c.descriptor = "fixtures+enumerated(n<=" + std::to_string(size_max) + ")";
  return c;
}

std::size_t HarnessReport::violation_count() const {
  std::size_t n = 0;
  for (const TheoremResult& r : results)
    if (!r.refuted_as_stated) n += r.violations.size();
  return n;
}

HarnessReport verify_corpus(const Corpus& corpus, const std::vector<std::string>& ids, bool parallel) {
  const std::vector<Theorem>& registry = theorem_registry();
  std::vector<std::size_t> selected;
  if (ids.empty()) {
    for (std::size_t i = 0; i < registry.size(); ++i) selected.push_back(i);
  } else {
    for (const std::string& id : ids) {
      auto it = std::find_if(registry.begin(), registry.end(), [&](const Theorem& t) { return t.id == id; });
      if (it == registry.end()) throw std::invalid_argument("unknown theorem id: " + id);
      selected.push_back(static_cast<std::size_t>(it - registry.begin()));
    }
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  }

  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < corpus.algebras.size(); ++i)
    if (corpus.algebras[i].size() <= corpus.pair_size_max) small.push_back(i);

  std::vector<Task> tasks;
  for (std::size_t t : selected) {
    if (registry[t].scope == Scope::kAlgebra) {
      for (std::size_t i = 0; i < corpus.algebras.size(); ++i) tasks.push_back({t, i, 0});
    } else {
      for (std::size_t i : small)
        for (std::size_t j : small) tasks.push_back({t, i, j});
    }
  }

  std::vector<Failures> failures(tasks.size());
  std::vector<double> millis(tasks.size(), 0.0);
  auto run = [&](std::size_t k) {
    const Task& task = tasks[k];
    const Theorem& th = registry[task.theorem];
    const auto start = std::chrono::steady_clock::now();
    try {
      if (th.scope == Scope::kAlgebra) th.check(corpus.algebras[task.first], failures[k]);
      else th.check_pair(corpus.algebras[task.first], corpus.algebras[task.second], failures[k]);
    } catch (const std::exception& e) {
      failures[k].push_back(std::string("exception: ") + e.what());
    }
    millis[k] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(tasks.size()); ++k) run(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < tasks.size(); ++k) run(k);
  }

  HarnessReport report;
  report.corpus = corpus.descriptor;
  for (std::size_t t : selected) {
    TheoremResult res;
    res.id = registry[t].id;
    res.statement = registry[t].statement;
    res.refuted_as_stated = registry[t].refuted_as_stated;
    report.results.push_back(std::move(res));
  }
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const Task& task = tasks[k];
    const auto pos = std::find(selected.begin(), selected.end(), task.theorem) - selected.begin();
    TheoremResult& res = report.results[static_cast<std::size_t>(pos)];
    ++res.instances_checked;
    res.wall_ms += millis[k];
    if (failures[k].empty()) continue;
    const Algebra& a = corpus.algebras[task.first];
    std::string name = a.name();
    std::string key;
    if (registry[task.theorem].scope == Scope::kPair) {
      const Algebra& b = corpus.algebras[task.second];
      name += " x " + b.name();
      key = hex_key(a) + "|" + hex_key(b);
    } else {
      key = hex_key(a);
    }
    for (std::string& w : failures[k]) res.violations.push_back({name, key, std::move(w)});
  }
  for (TheoremResult& res : report.results) {
    std::stable_sort(res.violations.begin(), res.violations.end(), [](const TheoremViolation& l, const TheoremViolation& r) {
      return std::tie(l.key, l.algebra, l.witness) < std::tie(r.key, r.algebra, r.witness);
    });
  }
  return report;
}

OpenProblemFindings search_open_problems(const std::vector<Algebra>& corpus, bool parallel) {
  struct Row {
    bool blp = false, star = false, star_star = false;
    std::vector<std::size_t> counts;
  };
  std::vector<Row> rows(corpus.size());
  auto run = [&](std::size_t i) {
    const Algebra& a = corpus[i];
    Row& row = rows[i];
    row.blp = algebra_has_blp(a).verdict;
    row.star = star_condition(a).holds;
    row.star_star = star_star_condition(a).holds;
    for (std::size_t x = 0; x < a.size(); ++x) row.counts.push_back(s_witnesses(a, static_cast<Elem>(x)).count());
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(corpus.size()); ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < corpus.size(); ++i) run(i);
  }
  OpenProblemFindings f;
  f.algebras = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (rows[i].blp && !rows[i].star) f.blp_without_star.push_back(corpus[i].name());
    if (!rows[i].blp && rows[i].star_star) f.no_blp_with_star_star.push_back(corpus[i].name());
    for (std::size_t c : rows[i].counts) ++f.s_witness_histogram[c];
  }
  return f;
}

}  // namespace rlat
