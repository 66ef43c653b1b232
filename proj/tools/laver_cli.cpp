// Command-line front end: one verdict per line on stdout, diagnostics on
// stderr.  Exit codes: 0 verdict produced, 1 refuted/counterexample,
// 2 undecided or out of fuel, 3 usage or format error.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "laver/embed.hpp"
#include "laver/error.hpp"
#include "laver/limit.hpp"
#include "laver/table.hpp"
#include "laver/term.hpp"
#include "laver/word_problem.hpp"

using namespace laver;
using nlohmann::json;

namespace {

constexpr int kExitVerdict = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 3;

struct Options {
  int n = 3;
  std::uint64_t k = 1;
  int cap = kDefaultCap;
  std::uint64_t fuel = kDefaultStepBudget;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string convention = "zero";
  std::string file;
  std::size_t memory_cap = kDefaultMemoryCap;
  std::string a, b;
};

// Under the one-based convention the top element 2^n stands in for 0.
std::uint64_t shown(Elem v, int n, const Options& o) {
  if (o.convention == "one" && v == 0) return std::uint64_t{1} << n;
  return v;
}

int cmd_table(const Options& o) {
  LaverTable t = LaverTable::build(o.n, o.memory_cap);
  Elem size = t.size();
  if (o.format == "json") {
    json rows = json::array();
    for (Elem a = 0; a < size; ++a) {
      json row = json::array();
      for (Elem b = 0; b < size; ++b)
        row.push_back(shown(t.apply(a, b), o.n, o));
      rows.push_back(row);
    }
    std::cout << json{{"n", o.n}, {"products", rows}} << "\n";
  } else if (o.format == "csv") {
    std::cout << "a,b,ab\n";
    for (Elem a = 0; a < size; ++a)
      for (Elem b = 0; b < size; ++b)
        std::cout << shown(a, o.n, o) << "," << shown(b, o.n, o) << ","
                  << shown(t.apply(a, b), o.n, o) << "\n";
  } else {
    for (Elem a = 0; a < size; ++a) {
      for (Elem b = 0; b < size; ++b)
        std::cout << (b ? " " : "") << shown(t.apply(a, b), o.n, o);
      std::cout << "\n";
    }
  }
  return kExitVerdict;
}

int cmd_period(const Options& o) {
  LaverTable t = LaverTable::build(o.n, o.memory_cap);
  if (o.format == "json") {
    json out = json::array();
    for (Elem a = 0; a < t.size(); ++a)
      out.push_back({{"a", shown(a, o.n, o)}, {"period", t.period(a)}});
    std::cout << out << "\n";
  } else {
    if (o.format == "csv") std::cout << "a,period\n";
    for (Elem a = 0; a < t.size(); ++a)
      std::cout << shown(a, o.n, o) << (o.format == "csv" ? "," : " ")
                << t.period(a) << "\n";
  }
  return kExitVerdict;
}

int cmd_eval(const Options& o) {
  Elem v = eval_level(parse_term(o.a), o.n);
  if (o.format == "json")
    std::cout << json{{"term", o.a}, {"n", o.n}, {"value", shown(v, o.n, o)}}
              << "\n";
  else
    std::cout << shown(v, o.n, o) << "\n";
  return kExitVerdict;
}

int cmd_profile(const Options& o) {
  LevelProfile p = eval_profile(parse_term(o.a), o.cap);
  if (o.format == "json") {
    json out = json::array();
    for (int n = 0; n <= o.cap; ++n)
      out.push_back({{"n", n}, {"value", shown(p.values[n], n, o)}});
    std::cout << out << "\n";
  } else {
    std::cout << "n,value\n";
    for (int n = 0; n <= o.cap; ++n)
      std::cout << n << "," << shown(p.values[n], n, o) << "\n";
  }
  return kExitVerdict;
}

int emit_probe(const SignatureResult& r, const Options& o) {
  if (o.format == "json")
    std::cout << json{{"verdict", r.known ? "known" : "undecided"},
                      {"level", r.level}}
              << "\n";
  else
    std::cout << (r.known ? "known " : "undecided ") << r.level << "\n";
  return r.known ? kExitVerdict : kExitUndecided;
}

int cmd_compare(const Options& o) {
  CompareResult r = compare(parse_term(o.a), parse_term(o.b), o.fuel);
  std::string name = verdict_name(r.verdict);
  if (o.format == "json")
    std::cout << json{{"verdict", name}, {"stage", r.stage}} << "\n";
  else
    std::cout << name << "\n";
  return r.verdict == Verdict::OutOfFuel ? kExitUndecided : kExitVerdict;
}

int cmd_normalize(const Options& o) {
  CompositionForm f = normalize_composition(parse_term(o.a));
  if (o.format == "json") {
    json parts = json::array();
    for (const auto& p : f.parts) parts.push_back(render(p));
    std::cout << json{{"parts", parts}} << "\n";
  } else {
    for (std::size_t i = 0; i < f.parts.size(); ++i)
      std::cout << (i ? " o " : "") << render(f.parts[i]);
    std::cout << "\n";
  }
  return kExitVerdict;
}

int cmd_check_laws(const Options& o) {
  LaverTable t = LaverTable::build(o.n, o.memory_cap);
  VerifyOptions vo;
  vo.seed = o.seed;
  if (o.fuel != kDefaultStepBudget) vo.samples = o.fuel;
  bool bad = false;
  json out = json::array();
  auto emit = [&](const char* name, const LawReport& r) {
    if (!r.holds) bad = true;
    if (o.format == "json") {
      out.push_back({{"law", name},
                     {"holds", r.holds},
                     {"detail", r.detail},
                     {"counterexample", r.counterexample}});
    } else {
      std::cout << name << " " << (r.holds ? "pass" : "fail");
      if (!r.holds) std::cout << " " << r.detail;
      std::cout << "\n";
    }
  };
  emit("LD", verify_law(t, Law::LD, vo));
  emit("Sigma", verify_law(t, Law::Sigma, vo));
  if (o.n + 1 <= kMaxLevel) {
    LaverTable t1 = LaverTable::build(o.n + 1, o.memory_cap);
    emit("Hom", verify_law(t, t1, Law::Hom, vo));
    emit("Periods", verify_law(t, t1, Law::Periods, vo));
  }
  if (o.format == "json") std::cout << out << "\n";
  return bad ? kExitRefuted : kExitVerdict;
}

int emit_report(const AxiomReport& rep, const Options& o) {
  bool unchecked = false;
  json out = json::array();
  for (const auto& r : rep.results) {
    const char* st = r.status == Status::Verified   ? "verified"
                     : r.status == Status::Refuted ? "refuted"
                                                   : "unchecked";
    if (r.status == Status::Unchecked) unchecked = true;
    if (o.format == "json") {
      out.push_back({{"axiom", r.axiom},
                     {"status", st},
                     {"checked", r.checked},
                     {"skipped", r.skipped},
                     {"detail", r.detail}});
    } else {
      std::cout << r.axiom << " " << st << " checked=" << r.checked
                << " skipped=" << r.skipped;
      if (!r.detail.empty()) std::cout << " " << r.detail;
      std::cout << "\n";
    }
  }
  if (o.format == "json") std::cout << out << "\n";
  if (rep.refuted()) return kExitRefuted;
  return unchecked ? kExitUndecided : kExitVerdict;
}

int cmd_embed_check(const Options& o) {
  return emit_report(check_candidate(load_candidate(o.file)), o);
}

int cmd_embed_critseq(const Options& o) {
  Candidate c = load_candidate(o.file);
  std::string name;
  if (!o.a.empty())
    name = o.a;
  else if (c.generator)
    name = *c.generator;
  else
    throw DomainError("no function named and no generator declared");
  const FnPrefix* f = c.find(name);
  if (!f) throw FormatError("unknown function " + name);
  CriticalSequence s = critical_sequence(*f, (int)o.k);
  if (o.format == "json") {
    std::cout << json{{"function", name},
                      {"points", s.points},
                      {"complete", s.complete}}
              << "\n";
  } else {
    for (std::size_t i = 0; i < s.points.size(); ++i)
      std::cout << (i ? " " : "") << s.points[i];
    if (!s.complete) std::cout << " ...";
    std::cout << "\n";
  }
  return s.complete ? kExitVerdict : kExitUndecided;
}

int cmd_embed_two_sorted(const Options& o) {
  Candidate c = load_candidate(o.file);
  TwoSorted ts(c, (int)o.k, o.fuel);
  return emit_report(check_two_sorted(ts, {}), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational workbench for monogenic left-distributive "
               "algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--n", o.n, "table level");
    s->add_option("--k", o.k, "integer argument");
    s->add_option("--cap", o.cap, "level cap");
    s->add_option("--fuel", o.fuel, "step budget / sample count");
    s->add_option("--seed", o.seed, "seed for sampled checks");
    s->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    s->add_option("--convention", o.convention, "element naming")
        ->check(CLI::IsMember({"zero", "one"}));
    s->add_option("--file", o.file, "input file");
    s->add_option("--memory-cap", o.memory_cap, "table memory cap in bytes");
    s->add_option("--a", o.a, "first word / function name");
    s->add_option("--b", o.b, "second word");
    return s;
  };

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Cmd cmds[] = {
      {"table", "multiplication table of A_n", cmd_table},
      {"period", "row periods at level n", cmd_period},
      {"eval", "value of word --a at level --n", cmd_eval},
      {"profile", "level profile of word --a up to --cap", cmd_profile},
      {"signature", "signature of word --a up to --cap",
       [](const Options& o) {
         return emit_probe(signature(parse_term(o.a), o.cap), o);
       }},
      {"probe", "least level where 1.k is nonzero",
       [](const Options& o) { return emit_probe(freeness_probe(o.k, o.cap), o); }},
      {"hprobe", "signature of the tower word u_k",
       [](const Options& o) {
         return emit_probe(herringbone_probe((int)o.k, o.cap), o);
       }},
      {"compare", "order words --a and --b in the free algebra", cmd_compare},
      {"normalize", "composition normal form of word --a", cmd_normalize},
      {"check-laws", "verify the algebra laws at level n", cmd_check_laws},
      {"embed-check", "check a candidate embedding algebra file",
       cmd_embed_check},
      {"embed-critseq", "critical sequence of a candidate function",
       cmd_embed_critseq},
      {"embed-two-sorted", "bounded two-sorted verification",
       cmd_embed_two_sorted},
  };
  for (const auto& c : cmds) add_common(app.add_subcommand(c.name, c.help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    for (const auto& c : cmds)
      if (app.get_subcommand(c.name)->parsed()) return c.run(o);
    return kExitUsage;
  } catch (const FuelError& e) {
    std::cerr << "out of fuel: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
