#include "hibi/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "hibi/cone.hpp"
#include "hibi/divisor_lattice.hpp"
#include "hibi/error.hpp"

namespace hibi {

namespace {

using Json = nlohmann::ordered_json;

Json labeling_json(const Poset& p, const Labeling& v) {
  Json j = Json::object();
  for (Element e = 0; e < p.size(); ++e) j[p.name(e)] = v[e];
  return j;
}

Json real_json(double x) {
  if (std::isnan(x) || std::isinf(x)) return format_real(x);
  return Json::parse(format_real(x));
}

Json tables_json(const std::vector<TComplexityTable>& tables) {
  Json out = Json::array();
  for (const auto& t : tables) {
    Json jt;
    jt["target"] = t.target;
    jt["prime"] = t.prime;
    Json rows = Json::array();
    for (const auto& r : t.rows)
      rows.push_back(Json{{"e", r.e},
                          {"dim_e", r.dim_e},
                          {"c_e", r.c_e},
                          {"log_per_e", real_json(r.log_per_e)},
                          {"last_ratio", real_json(r.last_ratio)}});
    jt["rows"] = rows;
    jt["estimate"] = real_json(t.estimate);
    out.push_back(jt);
  }
  return out;
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

InvariantReport build_report(const std::string& name, const Poset& p, const ReportOptions& opt) {
  InvariantReport r(name, p);
  r.pure = is_pure(p);
  r.gorenstein = is_gorenstein(p);
  r.level = is_level(p);
  r.anticanonical_level = is_anticanonical_level(p);
  std::vector<std::int64_t> ns;
  for (std::int64_t k = -opt.n_max; k <= opt.n_max; ++k)
    if (k != 0) ns.push_back(k);
  for (std::int64_t n : ns) {
    auto gens = generators(p, n, opt.budget.max_piece);
    r.generators.push_back({n, std::move(gens), degree_range(p, n)});
  }
  for (int eps : {1, -1})
    for (const auto& s : enumerate_N(p, eps)) {
      ConeSection c = build_C(p, eps, s);
      r.sequences.push_back({eps, s, c.f, dim_formula(c), dim_bruteforce(p, c)});
    }
  r.spread_canonical = analytic_spread(p, 1);
  r.spread_anticanonical = analytic_spread(p, -1);
  if (!opt.primes.empty() && opt.e_max >= 1) {
    for (std::int64_t prime : opt.primes) {
      GradedFamily fam = fiber_family(p);
      try {
        auto t = tcx_report(fam, {prime}, opt.e_max, opt.budget);
        r.frobenius.push_back(std::move(t.front()));
      } catch (const BudgetExceeded& e) {
        r.skipped.push_back("prime " + std::to_string(prime) + ": " + e.what());
      }
    }
  }
  return r;
}

std::string render_table(const InvariantReport& r) {
  const Poset& p = r.poset;
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "poset " << r.name << " (" << p.size() << " elements)\n";
  out << "pure " << yn(r.pure) << ", gorenstein " << yn(r.gorenstein) << ", level " << yn(r.level)
      << ", anticanonical level " << yn(r.anticanonical_level) << "\n";
  out << "analytic spread: canonical " << r.spread_canonical << ", anticanonical " << r.spread_anticanonical << "\n";
  for (const auto& g : r.generators) {
    out << "\nomega^(" << g.n << "): " << g.gens.size() << " generators, degrees " << g.range.q0 << ".."
        << g.range.q_max << (g.range.exact ? "" : " (GAPS)") << "\n";
    for (const auto& v : g.gens) out << "  deg " << degree(p, v) << "  " << format_labeling(p, v) << "\n";
  }
  for (int eps : {1, -1}) {
    out << "\nN^(" << (eps > 0 ? "+1" : "-1") << "):\n";
    for (const auto& s : r.sequences) {
      if (s.eps != eps) continue;
      out << "  " << format_seq(p, s.seq) << "  P\\G=" << format_set(p, s.f) << "  dim " << s.dim_formula
          << " (oracle " << s.dim_oracle << ")\n";
    }
  }
  if (!r.frobenius.empty() || !r.skipped.empty()) out << "\n" << render_tcx_table(r.frobenius, r.skipped);
  return out.str();
}

std::string render_tcx_table(const std::vector<TComplexityTable>& tables, const std::vector<std::string>& skipped) {
  std::ostringstream out;
  for (const auto& t : tables) {
    out << "c_e for " << t.target << ", p=" << t.prime << "\n";
    out << "  e  dim_e  c_e  log_p(c_e)/e  log_p(c_e/c_e-1)\n";
    for (const auto& row : t.rows)
      out << "  " << row.e << "  " << row.dim_e << "  " << row.c_e << "  " << format_real(row.log_per_e) << "  "
          << format_real(row.last_ratio) << "\n";
    out << "  estimate " << format_real(t.estimate) << " (finite-e estimate, not a limit)\n";
  }
  for (const auto& s : skipped) out << "skipped " << s << "\n";
  return out.str();
}

std::string render_tcx_json(const std::vector<TComplexityTable>& tables, const std::vector<std::string>& skipped) {
  Json j;
  j["tables"] = tables_json(tables);
  j["skipped"] = skipped;
  return j.dump(2) + "\n";
}

std::string render_json(const InvariantReport& r) {
  const Poset& p = r.poset;
  Json j;
  j["name"] = r.name;
  j["elements"] = p.names();
  j["pure"] = r.pure;
  j["gorenstein"] = r.gorenstein;
  j["level"] = r.level;
  j["anticanonical_level"] = r.anticanonical_level;
  j["analytic_spread"] = Json{{"canonical", r.spread_canonical}, {"anticanonical", r.spread_anticanonical}};
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    Json jg;
    jg["n"] = g.n;
    jg["degree_range"] = Json{{"q0", g.range.q0}, {"q_max", g.range.q_max}, {"exact", g.range.exact}};
    Json list = Json::array();
    for (const auto& v : g.gens) list.push_back(Json{{"degree", degree(p, v)}, {"labeling", labeling_json(p, v)}});
    jg["generators"] = list;
    gens.push_back(jg);
  }
  j["generators"] = gens;
  Json seqs = Json::array();
  for (const auto& s : r.sequences) {
    Json names = Json::array();
    for (Element z : s.seq.items) names.push_back(p.name(z));
    Json f = Json::array();
    for (Element z : s.f) f.push_back(p.name(z));
    seqs.push_back(Json{{"eps", s.eps},
                        {"sequence", names},
                        {"f", f},
                        {"dim_formula", s.dim_formula},
                        {"dim_oracle", s.dim_oracle}});
  }
  j["sequences"] = seqs;
  j["frobenius"] = tables_json(r.frobenius);
  j["skipped"] = r.skipped;
  return j.dump(2) + "\n";
}

}  // namespace hibi
