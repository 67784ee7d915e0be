#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rlat/construct.hpp"
#include "rlat/fixtures.hpp"
#include "rlat/io.hpp"
#include "rlat/iso.hpp"

using namespace rlat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string ex5_json() { return algebra_to_json(fixtures::ex5()).dump(); }

Algebra parse(const std::string& text) {
  std::istringstream in(text);
  return make_algebra(parse_raw_tables(in));
}

}  // namespace

TEST_CASE("algebra JSON round-trips") {
  for (const Algebra& a : fixtures::all()) {
    const Algebra b = parse(algebra_to_json(a).dump());
    CHECK(b.same_tables(a));
    CHECK(b.imp_table() == a.imp_table());
    CHECK(b.labels() == a.labels());
    CHECK(b.name() == a.name());
  }
}

TEST_CASE("imp is optional on input") {
  Json j = algebra_to_json(fixtures::l3());
  j.erase("imp");
  j.erase("labels");
  const Algebra b = make_algebra(raw_tables_from_json(j));
  CHECK(b.imp_table() == fixtures::l3().imp_table());
}

TEST_CASE("format errors") {
  CHECK_THROWS_AS(parse("{"), FormatError);
  CHECK_THROWS_AS(parse("[]"), FormatError);
  CHECK_THROWS_AS(parse(R"({"size": 0, "join": [], "mult": []})"), FormatError);
  CHECK_THROWS_AS(parse(R"({"size": 2, "join": [[0,1],[1,1]]})"), FormatError);
  CHECK_THROWS_AS(parse(R"({"size": 2, "join": [[0,1],[1,1]], "mult": [[0,0],[0,2]]})"), FormatError);
  CHECK_THROWS_AS(parse(R"({"size": 2, "labels": ["x","x"], "join": [[0,1],[1,1]], "mult": [[0,0],[0,1]]})"),
                  FormatError);
}

TEST_CASE("report JSON shape") {
  Json j = report_to_json(classify(fixtures::ex5()));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["algebra"]["name"] == "EX5");
  CHECK(j["flags"]["has_blp"] == false);
  CHECK(j["s_set"] == Json::array({0, 3, 4}));
  CHECK(j["radical"] == Json::array({3, 4}));
  CHECK(j["max"].size() == 2);
  CHECK(j["decomposition"].is_null());
  CHECK(j["witnesses"]["has_blp"][0]["label"] == "a");
  CHECK(j["filters"].size() == 5);
}

TEST_CASE("validate") {
  auto r = run({"validate", "-"}, ex5_json());
  CHECK(r.code == cli::kOk);
  Json bad = algebra_to_json(fixtures::c3());
  bad["imp"][1][0] = 1;
  r = run({"validate", "-"}, bad.dump());
  CHECK(r.code == cli::kValidationFailure);
  CHECK(r.err.find("ImpMismatch") != std::string::npos);
  CHECK(run({"validate", "-"}, "not json").code == cli::kInputError);
  CHECK(run({"validate", "/nonexistent/file.json"}).code == cli::kInputError);
}

TEST_CASE("analyze") {
  auto r = run({"analyze", "--json", "-"}, ex5_json());
  REQUIRE(r.code == cli::kOk);
  Json j = Json::parse(r.out);
  CHECK(j["flags"]["has_blp"] == false);
  CHECK(j["flags"]["local"] == false);
  auto t = run({"analyze", "-"}, ex5_json());
  CHECK(t.code == cli::kOk);
  CHECK_FALSE(t.out.empty());
}

TEST_CASE("filter queries") {
  auto r = run({"blp", "-", "--filter", "c"}, ex5_json());
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("no") != std::string::npos);
  CHECK(run({"blp", "-", "--filter", "zz"}, ex5_json()).code == cli::kInputError);
  CHECK(run({"filters", "-"}, ex5_json()).code == cli::kOk);
  CHECK(run({"spectrum", "-"}, ex5_json()).code == cli::kOk);
  CHECK(run({"radical", "-"}, ex5_json()).code == cli::kOk);

  auto q = run({"quotient", "-", "--by", "c"}, ex5_json());
  REQUIRE(q.code == cli::kOk);
  Json j = Json::parse(q.out);
  CHECK(j["classes"] == Json::parse("[[0],[1],[2],[3,4]]"));
  CHECK(j["quotient"]["size"] == 4);
}

TEST_CASE("constructors") {
  auto c = run({"mkchain", "--size", "3"});
  REQUIRE(c.code == cli::kOk);
  CHECK(parse(c.out).same_tables(godel_chain(3)));
  auto l = run({"mkchain", "--size", "4", "--variety", "lukasiewicz"});
  CHECK(parse(l.out).same_tables(lukasiewicz_chain(4)));
  auto b = run({"mkbool", "--atoms", "2"});
  CHECK(parse(b.out).same_tables(boolean_algebra(2)));
  auto s = run({"stack", "-", "--chain", "1", "--position", "top"}, b.out);
  REQUIRE(s.code == cli::kOk);
  CHECK(are_isomorphic(parse(s.out), fixtures::ex5()));
  auto i = run({"interval", "-", "--element", "1"}, b.out);
  REQUIRE(i.code == cli::kOk);
  CHECK(parse(i.out).size() == 2);
  CHECK(run({"interval", "-", "--element", "c"}, ex5_json()).code == cli::kValidationFailure);
  CHECK(run({"mkchain", "--size", "0"}).code == cli::kInputError);
}

TEST_CASE("product writes to a file") {
  const auto dir = std::filesystem::temp_directory_path() / "rlat_cli_test";
  std::filesystem::create_directories(dir);
  const auto f = (dir / "b2.json").string(), o = (dir / "out.json").string();
  std::ofstream(f) << algebra_to_json(fixtures::b2()).dump();
  auto r = run({"product", f, f, "-o", o});
  REQUIRE(r.code == cli::kOk);
  std::ifstream in(o);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(are_isomorphic(parse(ss.str()), fixtures::b4()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--size", "5", "--count-only"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out == "1 1\n2 1\n3 2\n4 7\n5 26\n");
  auto all = run({"enumerate", "--size", "4"});
  REQUIRE(all.code == cli::kOk);
  std::istringstream lines(all.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    CHECK(parse(line).size() == 4);
    ++n;
  }
  CHECK(n == 7);
  CHECK(run({"enumerate", "--size", "9"}).code == cli::kInputError);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--size-max", "3", "--json"});
  REQUIRE(r.code == cli::kOk);
  Json j = Json::parse(r.out);
  CHECK(j["violation_count"] == 0);
  CHECK_FALSE(j["theorems"][0].contains("wall_ms"));
  auto t = run({"verify", "--fixtures-only", "--json", "--timings", "--search"});
  REQUIRE(t.code == cli::kOk);
  Json k = Json::parse(t.out);
  CHECK(k["theorems"][0].contains("wall_ms"));
  CHECK(k.contains("open_problems"));
  CHECK(run({"verify", "--theorems", "bogus"}).code == cli::kInputError);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("outputs do not depend on thread count") {
  std::string analyze, verify;
  for (int threads : {1, 4}) {
    omp_set_num_threads(threads);
    auto a = run({"analyze", "--json", "-"}, ex5_json());
    auto v = run({"verify", "--size-max", "4", "--json"});
    if (threads == 1) {
      analyze = a.out;
      verify = v.out;
    } else {
      CHECK(a.out == analyze);
      CHECK(v.out == verify);
    }
  }
}
