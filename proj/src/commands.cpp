#include "hibi/commands.hpp"

#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hibi/birkhoff.hpp"
#include "hibi/cone.hpp"
#include "hibi/corpus.hpp"
#include "hibi/divisor_lattice.hpp"
#include "hibi/document.hpp"
#include "hibi/error.hpp"
#include "hibi/fiber.hpp"
#include "hibi/frobenius.hpp"
#include "hibi/report.hpp"
#include "hibi/selftest.hpp"

namespace hibi {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::string doc;
  std::int64_t n = 1;
  int eps = -1;
  std::vector<std::int64_t> primes;
  int emax = 2;
  std::size_t budget = 1'000'000;
  std::string format = "table";
  std::string seq;
};

Json names_json(const Poset& p, const std::vector<Element>& xs) {
  Json a = Json::array();
  for (Element z : xs) a.push_back(p.name(z));
  return a;
}

Json labeling_json(const Poset& p, const Labeling& v) {
  Json j = Json::object();
  for (Element e = 0; e < p.size(); ++e) j[p.name(e)] = v[e];
  return j;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

void check_eps(int eps) {
  if (eps != 1 && eps != -1) throw ValidationError("--eps must be 1 or -1");
}

std::string cmd_generators(const Flags& f, const Poset& p, const std::string& name) {
  auto gens = generators(p, f.n, f.budget);
  if (f.format == "json") {
    Json list = Json::array();
    for (const auto& v : gens) list.push_back(Json{{"degree", degree(p, v)}, {"labeling", labeling_json(p, v)}});
    return Json{{"name", name}, {"n", f.n}, {"generators", list}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << gens.size() << " generators of omega^(" << f.n << ") for " << name << "\n";
  for (const auto& v : gens) out << "deg " << degree(p, v) << "  " << format_labeling(p, v) << "\n";
  return out.str();
}

std::string cmd_sequences(const Flags& f, const Poset& p, const std::string& name) {
  check_eps(f.eps);
  auto seqs = enumerate_N(p, f.eps);
  if (f.format == "json") {
    Json list = Json::array();
    for (const auto& s : seqs) list.push_back(Json{{"sequence", names_json(p, s.items)}, {"t", s.t()}});
    return Json{{"name", name}, {"eps", f.eps}, {"sequences", list}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << seqs.size() << " reduced sequences in N^(" << f.eps << ") for " << name << "\n";
  for (const auto& s : seqs) out << format_seq(p, s) << "  t=" << s.t() << "\n";
  return out.str();
}

std::string cmd_polytope(const Flags& f, const Poset& p, const std::string& name) {
  check_eps(f.eps);
  if (f.n < 0) throw ValidationError("--n must be >= 0 for polytope");
  std::vector<CondNSeq> seqs;
  if (!f.seq.empty()) {
    seqs.push_back(f.seq == "()" ? CondNSeq{} : seq_from_names(p, split_names(f.seq)));
  } else {
    seqs = enumerate_N(p, f.eps);
  }
  Json list = Json::array();
  std::ostringstream out;
  for (const auto& s : seqs) {
    ConeSection c = build_C(p, f.eps, s);
    const std::size_t df = dim_formula(c);
    const std::size_t db = dim_bruteforce(p, c);
    auto pts = lattice_points(p, c, f.n, f.budget);
    if (f.format == "json") {
      Json jp = Json::array();
      for (const auto& v : pts) jp.push_back(labeling_json(p, v));
      list.push_back(Json{{"sequence", names_json(p, s.items)},
                          {"g", names_json(p, c.g)},
                          {"f", names_json(p, c.f)},
                          {"dim_formula", df},
                          {"dim_oracle", db},
                          {"n", f.n},
                          {"points", jp}});
    } else {
      out << "C" << format_seq(p, s) << "  G=" << format_set(p, c.g) << "  P\\G=" << format_set(p, c.f) << "  dim "
          << df << " (oracle " << db << ")\n";
      out << "  " << pts.size() << " lattice points in dilation " << f.n << "\n";
      for (const auto& v : pts) out << "  " << format_labeling(p, v) << "\n";
    }
  }
  if (f.format == "json") return Json{{"name", name}, {"eps", f.eps}, {"sections", list}}.dump(2) + "\n";
  return out.str();
}

std::string cmd_spread(const Flags& f, const Poset& p, const std::string& name) {
  check_eps(f.eps);
  const std::size_t s = analytic_spread(p, f.eps);
  if (f.format == "json") return Json{{"name", name}, {"eps", f.eps}, {"analytic_spread", s}}.dump(2) + "\n";
  return std::to_string(s) + "\n";
}

std::string cmd_level(const Flags& f, const Poset& p, const std::string& name) {
  const bool pure = is_pure(p), gor = is_gorenstein(p), lv = is_level(p), alv = is_anticanonical_level(p);
  if (f.format == "json")
    return Json{{"name", name}, {"pure", pure}, {"gorenstein", gor}, {"level", lv}, {"anticanonical_level", alv}}
               .dump(2) +
           "\n";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "pure " << yn(pure) << "\ngorenstein " << yn(gor) << "\nlevel " << yn(lv) << "\nanticanonical level "
      << yn(alv) << "\n";
  return out.str();
}

std::string cmd_frobenius(const Flags& f, const Poset& p, int& code) {
  Budget b;
  b.max_piece = f.budget;
  std::vector<std::int64_t> primes = f.primes.empty() ? std::vector<std::int64_t>{2, 3, 5} : f.primes;
  std::vector<TComplexityTable> tables;
  std::vector<std::string> skipped;
  std::optional<ConeSection> section;
  if (!f.seq.empty()) section = build_C(p, -1, f.seq == "()" ? CondNSeq{} : seq_from_names(p, split_names(f.seq)));
  for (std::int64_t prime : primes) {
    GradedFamily fam = section ? ehrhart_family(p, *section) : fiber_family(p);
    try {
      auto t = tcx_report(fam, {prime}, f.emax, b);
      tables.push_back(std::move(t.front()));
    } catch (const BudgetExceeded& e) {
      skipped.push_back("prime " + std::to_string(prime) + ": " + e.what());
      code = kBudget;
    }
  }
  return f.format == "json" ? render_tcx_json(tables, skipped) : render_tcx_table(tables, skipped);
}

std::string cmd_lattice(const Flags& f, const PosetDocument& d, const Poset& p) {
  FiniteLattice l = lattice_from_poset(p);
  Poset back = join_irreducibles(l);
  const bool iso = isomorphic(p, back);
  if (f.format == "json") {
    Json order = Json::array();
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b)
        if (a != b && l.leq(a, b)) {
          bool cover = true;
          for (std::size_t c = 0; c < l.size() && cover; ++c)
            if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) cover = false;
          if (cover) order.push_back(Json::array({l.name(a), l.name(b)}));
        }
    return Json{{"name", d.name},
                {"ideals", l.names()},
                {"covers", order},
                {"distributive", l.is_distributive()},
                {"join_irreducibles", back.names()},
                {"round_trip_isomorphic", iso}}
               .dump(2) +
           "\n";
  }
  std::ostringstream out;
  out << l.size() << " ideals of " << d.name << ", distributive " << (l.is_distributive() ? "yes" : "no") << "\n";
  for (const auto& n : l.names()) out << "  " << n << "\n";
  out << "join-irreducibles:";
  for (const auto& n : back.names()) out << " " << n;
  out << "\nround trip isomorphic " << (iso ? "yes" : "no") << "\n";
  return out.str();
}

std::string cmd_selftest(const Flags& f, int& code) {
  Budget b;
  b.max_piece = f.budget;
  std::vector<PosetDocument> docs;
  if (f.doc.empty())
    docs = builtin_corpus();
  else
    docs.push_back(load_document(f.doc));
  auto results = run_selftest(docs, b);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  if (failed) code = kInvariant;
  if (f.format == "json") {
    Json list = Json::array();
    for (const auto& r : results)
      list.push_back(Json{{"poset", r.poset}, {"check", r.check}, {"passed", r.passed}, {"detail", r.detail}});
    return Json{{"checks", list}, {"failed", failed}}.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.poset << ": " << r.check;
    if (!r.passed) out << " [" << r.detail << "]";
    out << "\n";
  }
  if (failed)
    out << "selftest failed: " << failed << " of " << results.size() << " checks\n";
  else
    out << "selftest passed: " << results.size() << " checks\n";
  return out.str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor-class and complexity invariants of Hibi rings over finite posets", "hibi"};
  app.require_subcommand(1);
  Flags f;

  auto add_doc = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("document", f.doc, "corpus name or path to a poset document");
    if (required) o->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", f.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  };

  auto* analyze = app.add_subcommand("analyze", "full invariant report");
  add_doc(analyze);
  analyze->add_option("--n", f.n, "generator tables for n = +-1..+-N")->check(CLI::Range(1, 6));
  analyze->add_option("--prime", f.primes, "primes for c_e tables (repeatable)");
  analyze->add_option("--emax", f.emax, "largest e for c_e tables");
  analyze->add_option("--budget", f.budget, "max points per graded piece");
  add_format(analyze);

  auto* gens = app.add_subcommand("generators", "generators of omega^(n)");
  add_doc(gens);
  gens->add_option("--n", f.n, "degree n of omega^(n)")->required();
  gens->add_option("--budget", f.budget, "max box points visited");
  add_format(gens);

  auto* seqs = app.add_subcommand("sequences", "reduced condition-N sequences");
  add_doc(seqs);
  seqs->add_option("--eps", f.eps, "1 or -1");
  add_format(seqs);

  auto* poly = app.add_subcommand("polytope", "sections C of the fiber cone");
  add_doc(poly);
  poly->add_option("--eps", f.eps, "1 or -1");
  poly->add_option("--seq", f.seq, "comma separated y0,x1,...; \"()\" for the empty sequence");
  poly->add_option("--n", f.n, "dilation");
  poly->add_option("--budget", f.budget, "max lattice points");
  add_format(poly);

  auto* spread = app.add_subcommand("spread", "analytic spread of omega^(eps)");
  add_doc(spread);
  spread->add_option("--eps", f.eps, "1 or -1");
  add_format(spread);

  auto* level = app.add_subcommand("level", "level, anticanonical level and Gorenstein flags");
  add_doc(level);
  add_format(level);

  auto* frob = app.add_subcommand("frobenius", "c_e tables of the T-construction");
  add_doc(frob);
  frob->add_option("--prime", f.primes, "prime (repeatable, default 2 3 5)");
  frob->add_option("--emax", f.emax, "largest e (capped at 3)");
  frob->add_option("--seq", f.seq, "use the Ehrhart ring of this section of N^(-1) instead of the fiber cone");
  frob->add_option("--budget", f.budget, "max points per graded piece");
  add_format(frob);

  auto* lattice = app.add_subcommand("lattice", "lattice of ideals and the Birkhoff round trip");
  add_doc(lattice);
  add_format(lattice);

  auto* self = app.add_subcommand("selftest", "invariant suite over the built-in corpus");
  add_doc(self, false);
  self->add_option("--budget", f.budget, "max points per graded piece");
  add_format(self);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands())
      if (sub->parsed()) err << sub->help();
    return kUsage;
  }

  int code = kOk;
  try {
    std::string text;
    if (self->parsed()) {
      text = cmd_selftest(f, code);
    } else {
      PosetDocument d = load_document(f.doc);
      Poset p = to_poset(d);
      if (analyze->parsed()) {
        ReportOptions opt;
        opt.n_max = f.n;
        opt.primes = f.primes;
        opt.e_max = f.primes.empty() ? 0 : f.emax;
        opt.budget.max_piece = f.budget;
        InvariantReport r = build_report(d.name, p, opt);
        if (!r.skipped.empty()) code = kBudget;
        text = f.format == "json" ? render_json(r) : render_table(r);
      } else if (gens->parsed()) {
        text = cmd_generators(f, p, d.name);
      } else if (seqs->parsed()) {
        text = cmd_sequences(f, p, d.name);
      } else if (poly->parsed()) {
        text = cmd_polytope(f, p, d.name);
      } else if (spread->parsed()) {
        text = cmd_spread(f, p, d.name);
      } else if (level->parsed()) {
        text = cmd_level(f, p, d.name);
      } else if (frob->parsed()) {
        text = cmd_frobenius(f, p, code);
      } else if (lattice->parsed()) {
        text = cmd_lattice(f, d, p);
      }
    }
    out << text;
    return code;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace hibi
