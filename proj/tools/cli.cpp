#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rlat/blp.hpp"
#include "rlat/construct.hpp"
#include "rlat/enumerate.hpp"
#include "rlat/harness.hpp"
#include "rlat/io.hpp"

namespace rlat::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Algebra load(const std::string& path, std::istream& in) {
  RawTables raw;
  if (path == "-") {
    raw = parse_raw_tables(in);
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    raw = parse_raw_tables(f);
  }
  if (raw.name.empty()) raw.name = path == "-" ? "stdin" : std::filesystem::path(path).stem().string();
  ValidationResult r = validate_algebra(raw);
  if (!r.ok()) throw ValidationError(std::move(r.violations));
  return std::move(*r.algebra);
}

std::vector<Elem> elements(const Algebra& a, const std::string& list) {
  std::vector<Elem> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const std::optional<Elem> e = a.find(tok);
    if (!e) throw InputError("unknown element '" + tok + "'");
    out.push_back(*e);
  }
  if (out.empty()) throw InputError("empty element list");
  return out;
}

Filter filter_from(const Algebra& a, const std::string& list) {
  ElementSet gens;
  for (Elem e : elements(a, list)) gens.insert(e);
  return generated_filter(a, gens);
}

std::string set_str(const Algebra& a, ElementSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem x) {
    if (!first) out += ",";
    out += a.label(x);
    first = false;
  });
  return out + "}";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

void print_analysis(const Algebra& a, const AnalysisReport& r, std::ostream& out) {
  out << r.algebra_name << ": " << r.size << " elements";
  for (const std::string& l : r.labels) out << ' ' << l;
  out << '\n';
  auto flag = [&](const char* name, const char* key, bool v) {
    out << "  " << name << std::string(18 - std::string(name).size(), ' ') << yn(v);
    auto it = r.witnesses.find(key);
    if (!v && it != r.witnesses.end()) {
      out << " (witness";
      for (Elem x : it->second) out << ' ' << a.label(x);
      out << ')';
    }
    out << '\n';
  };
  flag("BLP", "has_blp", r.has_blp);
  flag("quasi-local", "quasi_local", r.quasi_local);
  flag("B-normal (v,*)", "b_normal", r.b_normal);
  flag("B-normal filters", "filters_b_normal", r.filters_b_normal);
  flag("(star)", "star", r.star);
  flag("(star star)", "star_star", r.star_star);
  flag("local", "", r.local);
  flag("simple", "", r.simple);
  flag("hyperarchimedean", "hyperarchimedean", r.hyperarchimedean);
  flag("semiperfect", "", r.semiperfect);
  flag("* = ^", "", r.mult_is_meet);
  flag("involutive", "", r.involutive);
  out << "  B(A)    " << set_str(a, r.classes.booleans) << '\n';
  out << "  N(A)    " << set_str(a, r.classes.nilpotents) << '\n';
  out << "  D(A)    " << set_str(a, r.classes.dense) << '\n';
  out << "  S(A)    " << set_str(a, r.s_set) << '\n';
  out << "  Rad(A)  " << set_str(a, r.radical.members) << '\n';
  out << "  Max(A) ";
  for (const Filter& m : r.spectra.max) out << ' ' << set_str(a, m.members);
  out << "\n  filters " << r.per_filter.size() << '\n';
  if (r.decomposition) {
    out << "  decomposition over";
    for (Elem e : r.decomposition->complete_set) out << ' ' << a.label(e);
    out << '\n';
  }
}

void print_verify(const HarnessReport& rep, std::ostream& out) {
  out << "corpus: " << rep.corpus << '\n';
  for (const TheoremResult& t : rep.results) {
    out << t.id << std::string(t.id.size() < 28 ? 28 - t.id.size() : 1, ' ') << t.instances_checked << " checked, "
        << t.violations.size() << " violations" << (t.refuted_as_stated ? " (refuted as stated)" : "") << '\n';
    for (const TheoremViolation& v : t.violations) out << "    " << v.algebra << ": " << v.witness << '\n';
  }
  out << rep.violation_count() << " violations\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite residuated lattices: filters, Boolean lifting, enumeration and checks"};
  app.name("rlat");
  app.require_subcommand(1);

  std::string file, file2, by, filter_list, element, variety = "godel", position, out_path, theorems;
  std::size_t size = 0, atoms = 0, chain = 0, size_max = 4;
  bool json = false, count_only = false, fixtures_only = false, timings = false, search = false;

  auto* validate = app.add_subcommand("validate", "Check the axioms");
  validate->add_option("FILE", file)->required();
  auto* analyze = app.add_subcommand("analyze", "Classify an algebra");
  analyze->add_option("FILE", file)->required();
  analyze->add_flag("--json", json);
  auto* filters = app.add_subcommand("filters", "List filters with BLP verdicts");
  filters->add_option("FILE", file)->required();
  auto* spectrum = app.add_subcommand("spectrum", "Prime and maximal filters");
  spectrum->add_option("FILE", file)->required();
  auto* radical_cmd = app.add_subcommand("radical", "The radical");
  radical_cmd->add_option("FILE", file)->required();
  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by the filter generated by elements");
  quotient_cmd->add_option("FILE", file)->required();
  quotient_cmd->add_option("--by", by, "Generators, by label or index")->required();
  auto* blp = app.add_subcommand("blp", "Boolean lifting for the algebra or one filter");
  blp->add_option("FILE", file)->required();
  blp->add_option("--filter", filter_list, "Generators, by label or index");
  auto* product = app.add_subcommand("product", "Direct product of two algebras");
  product->add_option("FILE1", file)->required();
  product->add_option("FILE2", file2)->required();
  product->add_option("-o", out_path, "Output file");
  auto* interval = app.add_subcommand("interval", "The algebra [e) for Boolean e");
  interval->add_option("FILE", file)->required();
  interval->add_option("--element", element)->required();
  auto* mkchain = app.add_subcommand("mkchain", "Goedel or Lukasiewicz chain");
  mkchain->add_option("--size", size)->required()->check(CLI::Range(1, 64));
  mkchain->add_option("--variety", variety)->check(CLI::IsMember({"godel", "lukasiewicz"}));
  auto* mkbool = app.add_subcommand("mkbool", "Boolean algebra with K atoms");
  mkbool->add_option("--atoms", atoms)->required()->check(CLI::Range(0, 6));
  auto* stack = app.add_subcommand("stack", "Glue a chain above or below an algebra");
  stack->add_option("FILE", file)->required();
  stack->add_option("--chain", chain)->required()->check(CLI::Range(1, 63));
  stack->add_option("--position", position)->required()->check(CLI::IsMember({"top", "bottom"}));
  auto* enumerate = app.add_subcommand("enumerate", "All algebras of a size, one JSON per line");
  enumerate->add_option("--size", size)->required()->check(CLI::Range(1, 64));
  enumerate->add_flag("--count-only", count_only, "Counts for sizes 1..N");
  auto* verify = app.add_subcommand("verify", "Run the theorem checks over a corpus");
  verify->add_option("--size-max", size_max)->check(CLI::Range(1, 64));
  verify->add_flag("--fixtures-only", fixtures_only);
  verify->add_option("--theorems", theorems, "Comma-separated ids");
  verify->add_flag("--json", json);
  verify->add_flag("--timings", timings, "Include wall times");
  verify->add_flag("--search", search, "Also run the open-problem search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed()) {
      const Algebra a = load(file, in);
      out << a.name() << ": valid residuated lattice with " << a.size() << " elements\n";
    } else if (analyze->parsed()) {
      const Algebra a = load(file, in);
      const AnalysisReport r = classify(a);
      if (json) out << report_to_json(r).dump(2) << '\n';
      else print_analysis(a, r, out);
    } else if (filters->parsed()) {
      const Algebra a = load(file, in);
      for (const Filter& f : all_filters(a)) {
        const Verdict v = filter_has_blp(a, f);
        out << set_str(a, f.members) << "  generator " << a.label(f.generator) << "  BLP " << yn(v.holds)
            << "  injective " << yn(projection_injective_on_booleans(a, f));
        if (v.witness) out << "  witness " << a.label(*v.witness);
        out << '\n';
      }
    } else if (spectrum->parsed()) {
      const Algebra a = load(file, in);
      const Spectra sp = spectra(a);
      out << "Spec:";
      for (const Filter& p : sp.spec) out << ' ' << set_str(a, p.members);
      out << "\nMax:";
      for (const Filter& m : sp.max) out << ' ' << set_str(a, m.members);
      out << '\n';
    } else if (radical_cmd->parsed()) {
      const Algebra a = load(file, in);
      out << "Rad: " << set_str(a, radical(a).members) << '\n';
    } else if (quotient_cmd->parsed()) {
      const Algebra a = load(file, in);
      out << quotient_to_json(quotient(a, filter_from(a, by))).dump(2) << '\n';
    } else if (blp->parsed()) {
      const Algebra a = load(file, in);
      if (filter_list.empty()) {
        const BlpResult r = algebra_has_blp(a);
        out << "BLP: " << yn(r.verdict);
        if (!r.verdict) out << " (S(A) misses " << a.label((a.universe() - s_set(a)).first()) << ")";
        out << '\n';
      } else {
        const Filter f = filter_from(a, filter_list);
        const QuotientPresentation q = quotient(a, f);
        const LiftingData d = lifting_data(a, f, q);
        const Verdict v = filter_has_blp(a, f);
        out << "filter " << set_str(a, f.members) << ": BLP " << yn(v.holds);
        if (v.witness) out << " (witness " << a.label(*v.witness) << ")";
        out << "\n|B(A/F)| = " << d.quotient_booleans.count() << ", |B(A)/F| = " << d.lifted_booleans.count()
            << "\ninjective: " << yn(projection_injective_on_booleans(a, f)) << '\n';
      }
    } else if (product->parsed()) {
      const Algebra a = load(file, in);
      const Algebra b = load(file2, in);
      const std::string text = algebra_to_json(direct_product(a, b).algebra).dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!(f << text)) throw InputError("cannot write " + out_path);
      }
    } else if (interval->parsed()) {
      const Algebra a = load(file, in);
      const std::vector<Elem> e = elements(a, element);
      if (e.size() != 1) throw InputError("--element takes one element");
      out << algebra_to_json(interval_algebra(a, e[0]).algebra).dump(2) << '\n';
    } else if (mkchain->parsed()) {
      const Algebra a = variety == "godel" ? godel_chain(size) : lukasiewicz_chain(size);
      out << algebra_to_json(a).dump(2) << '\n';
    } else if (mkbool->parsed()) {
      out << algebra_to_json(boolean_algebra(atoms)).dump(2) << '\n';
    } else if (stack->parsed()) {
      const Algebra a = load(file, in);
      const StackPosition pos = position == "top" ? StackPosition::kTop : StackPosition::kBottom;
      out << algebra_to_json(stack_chain(a, chain, pos)).dump(2) << '\n';
    } else if (enumerate->parsed()) {
      if (count_only) {
        for (std::size_t n = 1; n <= size; ++n) out << n << ' ' << enumerate_algebras(n).size() << '\n';
      } else {
        for (const Algebra& a : enumerate_algebras(size)) out << algebra_to_json(a).dump() << '\n';
      }
    } else if (verify->parsed()) {
      std::vector<std::string> ids;
      std::stringstream ss(theorems);
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) ids.push_back(tok);
      const Corpus corpus = make_corpus(size_max, fixtures_only);
      const HarnessReport rep = verify_corpus(corpus, ids);
      if (json) {
        Json j = harness_to_json(rep, timings);
        if (search) j["open_problems"] = findings_to_json(search_open_problems(corpus.algebras));
        out << j.dump(2) << '\n';
      } else {
        print_verify(rep, out);
        if (timings) {
          for (const TheoremResult& t : rep.results) out << "  " << t.id << ' ' << t.wall_ms << " ms\n";
        }
        if (search) {
          const OpenProblemFindings f = search_open_problems(corpus.algebras);
          out << "BLP without (star): " << f.blp_without_star.size()
              << "\nno BLP with (star star): " << f.no_blp_with_star_star.size() << "\n|S(x)| histogram:";
          for (const auto& [k, v] : f.s_witness_histogram) out << ' ' << k << ':' << v;
          out << '\n';
        }
      }
      return rep.violation_count() == 0 ? kOk : kViolations;
    }
  } catch (const ValidationError& e) {
    err << "validation failed:\n";
    for (const Violation& v : e.violations()) err << "  " << v.describe() << '\n';
    return kValidationFailure;
  } catch (const ConstructionError& e) {
    err << e.what() << '\n';
    return kValidationFailure;
  } catch (const FormatError& e) {
    err << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace rlat::cli
