#include "hibi/selftest.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hibi/birkhoff.hpp"
#include "hibi/cone.hpp"
#include "hibi/divisor_lattice.hpp"
#include "hibi/error.hpp"
#include "hibi/fiber.hpp"

namespace hibi {

namespace {

// Returns "" on success, otherwise the counterexample.
using Check = std::function<std::string(const Poset&)>;

std::string minimality_vs_witness(const Poset& p) {
  for (std::int64_t n : {-2, -1, 1, 2}) {
    std::string bad;
    enumerate_T_box(p, n, [&](const Labeling& v) {
      if (!bad.empty()) return;
      if (is_minimal(p, n, v) != find_witness_sequence(p, n, v).has_value())
        bad = "n=" + std::to_string(n) + " " + format_labeling(p, v);
    });
    if (!bad.empty()) return bad;
  }
  return "";
}

std::string degree_ranges(const Poset& p) {
  for (std::int64_t n : {-3, -2, -1, 1, 2, 3})
    if (!degree_range(p, n).exact) return "n=" + std::to_string(n);
  return "";
}

std::string decomposition(const Poset& p) {
  for (int eps : {-1, 1})
    for (std::int64_t n = 1; n <= 3; ++n) {
      std::set<Labeling> uni;
      for (const auto& [s, pts] : fiber_cone_decomposition(p, eps, n)) uni.insert(pts.begin(), pts.end());
      auto gens = generators(p, n * eps);
      if (uni != std::set<Labeling>(gens.begin(), gens.end()))
        return "eps=" + std::to_string(eps) + " n=" + std::to_string(n);
    }
  return "";
}

std::string dimensions(const Poset& p) {
  for (int eps : {-1, 1})
    for (const auto& s : enumerate_N(p, eps)) {
      ConeSection c = build_C(p, eps, s);
      if (dim_formula(c) != dim_bruteforce(p, c)) return format_seq(p, s);
    }
  return "";
}

std::string down_up(const Poset& p) {
  for (std::int64_t n : {-2, -1, 1, 2})
    for (const auto& s : enumerate_N(p, n > 0 ? 1 : -1)) {
      if (!is_q_reduced(p, n, s)) continue;
      if (!is_minimal(p, n, nu_down(p, n, s)) || !is_minimal(p, n, nu_up(p, n, s)))
        return "n=" + std::to_string(n) + " " + format_seq(p, s);
    }
  return "";
}

std::string truncation(const Poset& p) {
  for (std::int64_t n : {-2, -1, 1, 2})
    for (const auto& v : generators(p, n))
      for (std::int64_t k = 1; k <= 3; ++k)
        if (!is_minimal(p, n, truncate(p, v, n, k)))
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + format_labeling(p, v);
  return "";
}

std::string standardness(const Poset& p) {
  for (int eps : {-1, 1})
    for (const auto& s : enumerate_N(p, eps))
      if (!is_standard(p, build_C(p, eps, s), 3)) return format_seq(p, s);
  return "";
}

std::string gorenstein(const Poset& p) {
  // is_gorenstein itself throws when purity and the generator count disagree.
  return is_gorenstein(p) == is_pure(p) ? "" : "purity mismatch";
}

std::string level_spread(const Poset& p) {
  if (is_level(p) && analytic_spread(p, 1) != p_nonmax(p).size() + 1) return "canonical";
  if (is_anticanonical_level(p) && analytic_spread(p, -1) != p_nonmin(p).size() + 1) return "anticanonical";
  return "";
}

std::string birkhoff(const Poset& p) {
  if (!isomorphic(p, join_irreducibles(lattice_from_poset(p)))) return "round trip not isomorphic";
  for (const auto& v : hibi_generators(p))
    if (!in_T(p, 0, v) || degree(p, v) != 1) return format_labeling(p, v);
  return "";
}

}  // namespace

std::vector<CheckResult> run_selftest(const std::vector<PosetDocument>& docs, const Budget& budget) {
  const std::vector<std::pair<std::string, Check>> checks{
      {"minimality matches witness sequences", minimality_vs_witness},
      {"degree range filled", degree_ranges},
      {"sections cover the generators", decomposition},
      {"dimension formula", dimensions},
      {"nu_down/nu_up minimal", down_up},
      {"truncation keeps minimality", truncation},
      {"standard sections", standardness},
      {"gorenstein iff pure", gorenstein},
      {"level spread", level_spread},
      {"birkhoff round trip", birkhoff},
      {"c_e <= dim_e", [&budget](const Poset& p) -> std::string {
         GradedFamily fam = fiber_family(p);
         for (const auto& t : tcx_report(fam, {2}, 2, budget))
           for (const auto& r : t.rows)
             if (r.c_e > r.dim_e) return "e=" + std::to_string(r.e);
         return "";
       }},
  };
  std::vector<CheckResult> out;
  for (const auto& d : docs) {
    Poset p = to_poset(d);
    for (const auto& [name, check] : checks) {
      CheckResult r{d.name, name, false, ""};
      try {
        r.detail = check(p);
        r.passed = r.detail.empty();
      } catch (const Error& e) {
        r.detail = e.what();
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace hibi
