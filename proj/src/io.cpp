#include "rlat/io.hpp"

#include <istream>
#include <set>

namespace rlat {

namespace {

Table table_from_json(const Json& j, const char* key, std::size_t n) {
  if (!j.contains(key)) throw FormatError(std::string("missing \"") + key + "\"");
  const Json& rows = j.at(key);
  if (!rows.is_array() || rows.size() != n) throw FormatError(std::string("\"") + key + "\" must have size rows");
  Table t(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Json& row = rows[x];
    if (!row.is_array() || row.size() != n) throw FormatError(std::string("\"") + key + "\" must be size x size");
    for (std::size_t y = 0; y < n; ++y) {
      if (!row[y].is_number_integer()) throw FormatError(std::string("\"") + key + "\" entries must be integers");
      const auto v = row[y].get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw FormatError(std::string("\"") + key + "\" entry out of range at (" + std::to_string(x) + "," +
                          std::to_string(y) + ")");
      }
      t.at(static_cast<Elem>(x), static_cast<Elem>(y)) = static_cast<Elem>(v);
    }
  }
  return t;
}

Json table_to_json(const Table& t) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < t.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < t.size(); ++y) row.push_back(t(static_cast<Elem>(x), static_cast<Elem>(y)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json filter_list(const std::vector<Filter>& fs) {
  Json out = Json::array();
  for (const Filter& f : fs) out.push_back(indices(f.members));
  return out;
}

}  // namespace

RawTables raw_tables_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("algebra JSON must be an object");
  if (!j.contains("size") || !j.at("size").is_number_integer()) throw FormatError("missing integer \"size\"");
  const auto size = j.at("size").get<long long>();
  if (size < 1 || static_cast<std::size_t>(size) > kMaxSize) {
    throw FormatError("\"size\" must be between 1 and " + std::to_string(kMaxSize));
  }
  const auto n = static_cast<std::size_t>(size);
  RawTables raw;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw FormatError("\"name\" must be a string");
    raw.name = j.at("name").get<std::string>();
  }
  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (!labels.is_array() || labels.size() != n) throw FormatError("\"labels\" must list size strings");
    std::set<std::string> seen;
    for (const Json& l : labels) {
      if (!l.is_string()) throw FormatError("labels must be strings");
      if (!seen.insert(l.get<std::string>()).second) throw FormatError("duplicate label " + l.get<std::string>());
      raw.labels.push_back(l.get<std::string>());
    }
  }
  raw.join = table_from_json(j, "join", n);
  raw.mult = table_from_json(j, "mult", n);
  if (j.contains("imp")) raw.imp = table_from_json(j, "imp", n);
  return raw;
}

RawTables parse_raw_tables(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return raw_tables_from_json(j);
}

Json indices(ElementSet s) {
  Json out = Json::array();
  s.for_each([&](Elem x) { out.push_back(x); });
  return out;
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  if (!a.name().empty()) j["name"] = a.name();
  j["size"] = a.size();
  j["labels"] = a.labels();
  j["join"] = table_to_json(a.join_table());
  j["mult"] = table_to_json(a.mult_table());
  j["imp"] = table_to_json(a.imp_table());
  return j;
}

Json quotient_to_json(const QuotientPresentation& q) {
  Json classes = Json::array();
  for (const auto& c : q.classes()) classes.push_back(c);
  Json j;
  j["classes"] = std::move(classes);
  j["quotient"] = algebra_to_json(q.quotient);
  return j;
}

Json report_to_json(const AnalysisReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = {{"name", r.algebra_name}, {"size", r.size}, {"labels", r.labels}};
  j["flags"] = {
      {"has_blp", r.has_blp},
      {"quasi_local", r.quasi_local},
      {"b_normal", r.b_normal},
      {"filters_b_normal", r.filters_b_normal},
      {"star", r.star},
      {"star_star", r.star_star},
      {"local", r.local},
      {"semilocal", r.semilocal},
      {"simple", r.simple},
      {"hyperarchimedean", r.hyperarchimedean},
      {"semiperfect", r.semiperfect},
      {"maximal", r.maximal},
      {"mult_is_meet", r.mult_is_meet},
      {"involutive", r.involutive},
      {"boolean_center_trivial", r.boolean_center_trivial},
  };
  j["classes"] = {
      {"boolean", indices(r.classes.booleans)},       {"nilpotent", indices(r.classes.nilpotents)},
      {"dense", indices(r.classes.dense)},            {"regular", indices(r.classes.regular)},
      {"idempotent", indices(r.classes.idempotents)}, {"archimedean", indices(r.classes.archimedeans)},
  };
  j["s_set"] = indices(r.s_set);
  j["s_witness_counts"] = r.s_witness_counts;
  Json filters = Json::array();
  for (const FilterVerdict& f : r.per_filter) {
    filters.push_back({{"members", indices(f.filter.members)},
                       {"generator", f.filter.generator},
                       {"has_blp", f.has_blp},
                       {"projection_injective", f.projection_injective}});
  }
  j["filters"] = std::move(filters);
  j["spec"] = filter_list(r.spectra.spec);
  j["max"] = filter_list(r.spectra.max);
  j["radical"] = indices(r.radical.members);
  if (r.decomposition) {
    Json factors = Json::array();
    for (std::size_t i = 0; i < r.decomposition->factors.size(); ++i) {
      Json members = Json::array();
      for (Elem x : r.decomposition->factors[i].to_parent) members.push_back(x);
      factors.push_back({{"element", r.decomposition->complete_set[i]},
                         {"members", std::move(members)},
                         {"local", static_cast<bool>(r.decomposition->factor_local[i])}});
    }
    j["decomposition"] = {{"complete_set", r.decomposition->complete_set}, {"factors", std::move(factors)}};
  } else {
    j["decomposition"] = nullptr;
  }
  Json witnesses = Json::object();
  for (const auto& [key, elems] : r.witnesses) {
    Json tuple = Json::array();
    for (Elem x : elems) tuple.push_back({{"index", x}, {"label", r.labels.at(x)}});
    witnesses[key] = std::move(tuple);
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json harness_to_json(const HarnessReport& r, bool timings) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["corpus"] = r.corpus;
  j["violation_count"] = r.violation_count();
  Json theorems = Json::array();
  for (const TheoremResult& t : r.results) {
    Json violations = Json::array();
    for (const TheoremViolation& v : t.violations) {
      violations.push_back({{"algebra", v.algebra}, {"canonical", v.key}, {"witness", v.witness}});
    }
    Json entry = {{"id", t.id},
                  {"statement", t.statement},
                  {"refuted_as_stated", t.refuted_as_stated},
                  {"instances_checked", t.instances_checked},
                  {"violations", std::move(violations)}};
    if (timings) entry["wall_ms"] = t.wall_ms;
    theorems.push_back(std::move(entry));
  }
  j["theorems"] = std::move(theorems);
  return j;
}

Json findings_to_json(const OpenProblemFindings& f) {
  Json hist = Json::array();
  for (const auto& [count, n] : f.s_witness_histogram) hist.push_back({{"s_size", count}, {"elements", n}});
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algebras"] = f.algebras;
  j["blp_without_star"] = f.blp_without_star;
  j["no_blp_with_star_star"] = f.no_blp_with_star_star;
  j["s_witness_histogram"] = std::move(hist);
  return j;
}

}  // namespace rlat
