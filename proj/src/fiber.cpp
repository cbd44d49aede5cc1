#include "hibi/fiber.hpp"

#include <algorithm>
#include <set>

#include "hibi/cone.hpp"
#include "hibi/divisor_lattice.hpp"
#include "hibi/error.hpp"

namespace hibi {

std::size_t fiber_hilbert(const Poset& p, int eps, std::int64_t n) {
  if (n < 0) throw PreconditionError("fiber_hilbert needs n >= 0");
  if (n == 0) return 1;
  return generators(p, checked::mul(n, eps)).size();
}

std::size_t analytic_spread(const Poset& p, int eps) {
  std::size_t best = 0;
  for (const auto& s : enumerate_N(p, eps)) best = std::max(best, dim_formula(build_C(p, eps, s)));
  return best + 1;
}

DegreeRange degree_range(const Poset& p, std::int64_t n) {
  if (n == 0) throw PreconditionError("degree_range needs n != 0");
  DegreeRange r{q0(p, n), q_max(p, n), false};
  std::set<std::int64_t> seen;
  for (const auto& v : generators(p, n)) seen.insert(degree(p, v));
  std::set<std::int64_t> want;
  for (std::int64_t d = r.q0; d <= r.q_max; ++d) want.insert(d);
  r.exact = seen == want;
  return r;
}

bool is_level(const Poset& p) { return enumerate_N(p, 1).size() == 1; }

bool is_anticanonical_level(const Poset& p) { return enumerate_N(p, -1).size() == 1; }

bool is_gorenstein(const Poset& p) {
  const bool pure = is_pure(p);
  const bool principal = fiber_hilbert(p, 1, 1) == 1;
  if (pure != principal)
    throw InvariantViolation(std::string("purity (") + (pure ? "pure" : "not pure") + ") disagrees with " +
                             std::to_string(fiber_hilbert(p, 1, 1)) + " canonical generators");
  return pure;
}

std::map<CondNSeq, std::vector<Labeling>> fiber_cone_decomposition(const Poset& p, int eps, std::int64_t n) {
  if (n < 1) throw PreconditionError("fiber_cone_decomposition needs n >= 1");
  std::map<CondNSeq, std::vector<Labeling>> out;
  for (const auto& s : enumerate_N(p, eps)) out[s] = lattice_points(p, build_C(p, eps, s), n);
  return out;
}

std::vector<Labeling> generators_by_sections(const Poset& p, int eps, std::int64_t n, std::size_t budget) {
  if (n < 1) throw PreconditionError("generators_by_sections needs n >= 1");
  std::vector<Labeling> all;
  for (const auto& s : enumerate_N(p, eps)) {
    auto pts = lattice_points(p, build_C(p, eps, s), n, budget);
    all.insert(all.end(), std::make_move_iterator(pts.begin()), std::make_move_iterator(pts.end()));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() > budget) throw BudgetExceeded("piece exceeds budget of " + std::to_string(budget) + " labelings");
  }
  return all;
}

}  // namespace hibi
