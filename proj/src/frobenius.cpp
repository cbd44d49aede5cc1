#include "hibi/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "hibi/divisor_lattice.hpp"
#include "hibi/error.hpp"
#include "hibi/fiber.hpp"

namespace hibi {

namespace {

void check_caps(std::int64_t prime, int e, const Budget& budget) {
  if (prime < 2) throw PreconditionError("prime must be >= 2");
  for (std::int64_t d = 2; d * d <= prime; ++d)
    if (prime % d == 0) throw PreconditionError(std::to_string(prime) + " is not prime");
  if (e < 0) throw PreconditionError("e must be >= 0");
  if (prime > budget.max_prime)
    throw BudgetExceeded("prime " + std::to_string(prime) + " exceeds the cap " + std::to_string(budget.max_prime));
  if (e > budget.max_e) throw BudgetExceeded("e = " + std::to_string(e) + " exceeds the cap " + std::to_string(budget.max_e));
}

Point as_point(const Labeling& v) { return Point(v.values().begin(), v.values().end()); }

std::vector<Point> as_points(const std::vector<Labeling>& vs) {
  std::vector<Point> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(as_point(v));
  return out;
}

double log_base(double x, std::int64_t prime) { return std::log(x) / std::log(static_cast<double>(prime)); }

}  // namespace

const std::vector<Point>& GradedFamily::piece(std::int64_t n, std::size_t budget) {
  if (n < 0) throw PreconditionError("piece degree must be >= 0");
  auto it = cache_.find(n);
  if (it != cache_.end()) {
    if (it->second.size() > budget) throw BudgetExceeded("piece exceeds budget of " + std::to_string(budget) + " points");
    return it->second;
  }
  std::vector<Point> pts = fn_(n, budget);
  if (pts.size() > budget) throw BudgetExceeded("piece exceeds budget of " + std::to_string(budget) + " points");
  std::sort(pts.begin(), pts.end());
  return cache_.emplace(n, std::move(pts)).first->second;
}

bool IntegralPolytope::contains(const Point& x, std::int64_t dilation) const {
  for (const auto& h : halfspaces) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < dim; ++k) s = checked::add(s, checked::mul(h.a[k], x[k]));
    if (s > checked::mul(h.b, dilation)) return false;
  }
  return true;
}

std::vector<Point> IntegralPolytope::lattice_points(std::int64_t dilation, std::size_t budget) const {
  std::vector<Point> out;
  if (dim == 0) return {Point{}};
  Point cur(dim);
  for (std::size_t k = 0; k < dim; ++k) cur[k] = checked::mul(lower[k], dilation);
  while (true) {
    if (contains(cur, dilation)) {
      if (out.size() == budget) throw BudgetExceeded("polytope dilation exceeds budget of " + std::to_string(budget) + " points");
      out.push_back(cur);
    }
    std::size_t k = 0;
    while (k < dim && cur[k] == upper[k] * dilation) {
      cur[k] = lower[k] * dilation;
      ++k;
    }
    if (k == dim) break;
    ++cur[k];
  }
  return out;
}

IntegralPolytope IntegralPolytope::unit_simplex(std::size_t d) {
  IntegralPolytope poly;
  poly.dim = d;
  poly.lower.assign(d, 0);
  poly.upper.assign(d, 1);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::int64_t> a(d, 0);
    a[k] = -1;
    poly.halfspaces.push_back({a, 0});
  }
  poly.halfspaces.push_back({std::vector<std::int64_t>(d, 1), 1});
  return poly;
}

GradedFamily fiber_family(const Poset& p) {
  return GradedFamily("fiber cone of omega^(-1)", [&p](std::int64_t n, std::size_t budget) {
    if (n == 0) return std::vector<Point>{Point(p.size(), 0)};
    return as_points(generators_by_sections(p, -1, n, budget));
  });
}

GradedFamily ehrhart_family(const Poset& p, const ConeSection& c) {
  return GradedFamily("Ehrhart ring of C" + format_seq(p, c.seq), [&p, c](std::int64_t n, std::size_t budget) {
    if (n == 0) return std::vector<Point>{Point(p.size(), 0)};
    return as_points(lattice_points(p, c, n, budget));
  });
}

GradedFamily ehrhart_family_essential(const Poset& p, const ConeSection& c) {
  return GradedFamily("Ehrhart ring of C" + format_seq(p, c.seq) + " (essential coordinates)",
                      [&p, c](std::int64_t n, std::size_t budget) {
                        const ElementSet ess = essential_coordinates(p, c);
                        if (n == 0) return std::vector<Point>{Point(ess.size(), 0)};
                        std::vector<Point> out;
                        for (const auto& v : lattice_points(p, c, n, budget)) {
                          Point x;
                          for (Element z : ess) x.push_back(v[z]);
                          out.push_back(std::move(x));
                        }
                        return out;
                      });
}

GradedFamily polytope_family(const IntegralPolytope& poly) {
  return GradedFamily("Ehrhart ring of a " + std::to_string(poly.dim) + "-dimensional polytope",
                      [poly](std::int64_t n, std::size_t budget) { return poly.lattice_points(n, budget); });
}

GradedFamily prism_family(GradedFamily& base) {
  return GradedFamily("prism over " + base.label(), [&base](std::int64_t n, std::size_t budget) {
    std::vector<Point> out;
    for (const auto& x : base.piece(n, budget))
      for (std::int64_t h = 0; h <= n; ++h) {
        if (out.size() == budget) throw BudgetExceeded("prism piece exceeds budget of " + std::to_string(budget) + " points");
        Point y = x;
        y.push_back(h);
        out.push_back(std::move(y));
      }
    return out;
  });
}

std::vector<Labeling> t_piece(const Poset& p, std::int64_t prime, int e, const Budget& budget) {
  check_caps(prime, e, budget);
  if (e == 0) return {Labeling::zero(p.size())};
  const std::int64_t n = checked::sub(checked::pow(prime, e), 1);
  return generators_by_sections(p, -1, n, budget.max_piece);
}

std::vector<Point> h_set(GradedFamily& fam, std::int64_t prime, int e, const Budget& budget) {
  check_caps(prime, e, budget);
  if (e < 1) throw PreconditionError("c_e needs e >= 1");
  const std::int64_t top = checked::sub(checked::pow(prime, e), 1);
  const std::vector<Point>& whole = fam.piece(top, budget.max_piece);
  std::vector<char> split(whole.size(), 0);
  for (int e1 = 1; e1 < e; ++e1) {
    const std::int64_t q = checked::pow(prime, e1);
    const std::vector<Point>& low = fam.piece(q - 1, budget.max_piece);
    const std::vector<Point>& high = fam.piece(checked::pow(prime, e - e1) - 1, budget.max_piece);
    // x = x' + q x'' forces x' = x (mod q) coordinatewise.
    std::unordered_map<Point, std::vector<const Point*>, PointHash> by_residue;
    for (const auto& x1 : low) {
      Point r(x1.size());
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = x1[k] - q * checked::floor_div(x1[k], q);
      by_residue[r].push_back(&x1);
    }
    const std::unordered_set<Point, PointHash> high_set(high.begin(), high.end());
    for (std::size_t i = 0; i < whole.size(); ++i) {
      if (split[i]) continue;
      const Point& x = whole[i];
      Point r(x.size());
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = x[k] - q * checked::floor_div(x[k], q);
      auto it = by_residue.find(r);
      if (it == by_residue.end()) continue;
      for (const Point* x1 : it->second) {
        Point x2(x.size());
        for (std::size_t k = 0; k < x2.size(); ++k) x2[k] = (x[k] - (*x1)[k]) / q;
        if (high_set.count(x2)) {
          split[i] = 1;
          break;
        }
      }
    }
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < whole.size(); ++i)
    if (!split[i]) out.push_back(whole[i]);
  return out;
}

std::size_t c_e(GradedFamily& fam, std::int64_t prime, int e, const Budget& budget) {
  return h_set(fam, prime, e, budget).size();
}

std::size_t c_e_fiber(const Poset& p, std::int64_t prime, int e, const Budget& budget) {
  GradedFamily fam = fiber_family(p);
  return c_e(fam, prime, e, budget);
}

std::size_t c_e_ehrhart(const Poset& p, const ConeSection& c, std::int64_t prime, int e, const Budget& budget) {
  GradedFamily fam = ehrhart_family(p, c);
  return c_e(fam, prime, e, budget);
}

std::size_t c_e_polytope(const IntegralPolytope& poly, std::int64_t prime, int e, const Budget& budget) {
  GradedFamily fam = polytope_family(poly);
  return c_e(fam, prime, e, budget);
}

std::optional<std::vector<std::int64_t>> digit_box(const IntegralPolytope& poly, std::int64_t prime) {
  const std::size_t d = poly.dim;
  std::vector<std::int64_t> a(d, 1);
  // Corners (a_k + 2 s_k)/p with s in {0,1}^d must satisfy every halfspace.
  auto fits = [&]() {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      Point corner(d);
      for (std::size_t k = 0; k < d; ++k) corner[k] = a[k] + ((mask >> k & 1) ? 2 : 0);
      if (!poly.contains(corner, prime)) return false;
    }
    return true;
  };
  while (true) {
    if (fits()) return a;
    std::size_t k = 0;
    while (k < d && a[k] >= poly.upper[k] * prime) a[k++] = 1;
    if (k == d) return std::nullopt;
    ++a[k];
  }
}

std::vector<Point> digit_witnesses(const IntegralPolytope& poly, std::int64_t prime, int e, const Budget& budget) {
  check_caps(prime, e, budget);
  if (e < 2) throw PreconditionError("digit witnesses need e >= 2");
  const std::int64_t floor_digit = prime - prime / static_cast<std::int64_t>(poly.dim);
  std::vector<Point> out;
  for (const auto& x : poly.lattice_points(checked::pow(prime, e) - 1, budget.max_piece)) {
    bool ok = true;
    for (std::int64_t xi : x) {
      if (xi < 0) {
        ok = false;
        break;
      }
      std::int64_t rest = xi;
      for (int pos = 0; pos <= e - 2 && ok; ++pos) {
        if (rest % prime < floor_digit) ok = false;
        rest /= prime;
      }
      if (!ok) break;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::int64_t digit_bound(std::size_t d, std::int64_t prime, int e) {
  return checked::pow(prime / static_cast<std::int64_t>(d), static_cast<int>(d) * (e - 1));
}

ContainmentCheck prism_containment(GradedFamily& base, GradedFamily& lifted, std::int64_t prime, int e,
                                  const Budget& budget) {
  const std::vector<Point> hb = h_set(base, prime, e, budget);
  const std::vector<Point> hl = h_set(lifted, prime, e, budget);
  const std::unordered_set<Point, PointHash> base_set(hb.begin(), hb.end());
  const std::unordered_set<Point, PointHash> lifted_set(hl.begin(), hl.end());
  ContainmentCheck out;
  for (const auto& x : lifted.piece(checked::pow(prime, e) - 1, budget.max_piece)) {
    if (!base_set.count(Point(x.begin(), x.end() - 1))) continue;
    ++out.lifted_points;
    if (!lifted_set.count(x)) ++out.violations;
  }
  return out;
}

std::vector<TComplexityTable> tcx_report(GradedFamily& fam, const std::vector<std::int64_t>& primes, int e_max,
                                         const Budget& budget) {
  if (e_max < 1) throw PreconditionError("e_max must be >= 1");
  std::vector<TComplexityTable> out;
  for (std::int64_t prime : primes) {
    TComplexityTable table{fam.label(), prime, {}, 0.0};
    for (int e = 1; e <= e_max; ++e) {
      const std::size_t ce = c_e(fam, prime, e, budget);
      const std::size_t dim = fam.piece(checked::pow(prime, e) - 1, budget.max_piece).size();
      TRow row{e, dim, ce, -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::quiet_NaN()};
      if (ce > 0) row.log_per_e = log_base(static_cast<double>(ce), prime) / e;
      if (e > 1 && ce > 0 && table.rows.back().c_e > 0)
        row.last_ratio = log_base(static_cast<double>(ce) / static_cast<double>(table.rows.back().c_e), prime);
      table.rows.push_back(row);
    }
    table.estimate = table.rows.back().log_per_e;
    out.push_back(std::move(table));
  }
  return out;
}

}  // namespace hibi
