#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hibi/cone.hpp"
#include "hibi/labeling.hpp"
#include "hibi/poset.hpp"

namespace hibi {

using Point = std::vector<std::int64_t>;

/// Guardrails for T-construction work. Exceeding any cap raises BudgetExceeded.
struct Budget {
  std::int64_t max_prime = 5;
  int max_e = 3;
  std::size_t max_piece = 1'000'000;
};

/// A standard graded family of lattice point sets: piece(n) is the basis of
/// the degree-n part (n = 0 is the single origin point). Pieces are memoised.
class GradedFamily {
 public:
  using PieceFn = std::function<std::vector<Point>(std::int64_t n, std::size_t budget)>;

  GradedFamily(std::string label, PieceFn fn) : label_(std::move(label)), fn_(std::move(fn)) {}

  const std::string& label() const noexcept { return label_; }
  /// Sorted basis of the degree-n part; throws BudgetExceeded past `budget` points.
  const std::vector<Point>& piece(std::int64_t n, std::size_t budget);

 private:
  std::string label_;
  PieceFn fn_;
  std::map<std::int64_t, std::vector<Point>> cache_;
};

/// Integral polytope {x : a.x <= b for every row} inside the box [lower, upper].
struct IntegralPolytope {
  struct Halfspace {
    std::vector<std::int64_t> a;
    std::int64_t b;
  };

  std::size_t dim = 0;
  std::vector<Halfspace> halfspaces;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  bool contains(const Point& x, std::int64_t dilation) const;
  std::vector<Point> lattice_points(std::int64_t dilation, std::size_t budget = kUnlimited) const;

  /// conv{0, e_1, ..., e_d}.
  static IntegralPolytope unit_simplex(std::size_t d);
};

/// Anticanonical fiber cone: piece(n) = generators of omega^(-n).
GradedFamily fiber_family(const Poset& p);
/// Ehrhart ring of a section: piece(n) = lattice points of its n-fold dilation.
GradedFamily ehrhart_family(const Poset& p, const ConeSection& c);
/// Same points written in the essential coordinates of the section.
GradedFamily ehrhart_family_essential(const Poset& p, const ConeSection& c);
GradedFamily polytope_family(const IntegralPolytope& poly);
/// Prism over a family: piece(n) = piece_base(n) x [0, n].
GradedFamily prism_family(GradedFamily& base);

/// T(R)_e of the anticanonical fiber cone: generators(1 - prime^e).
std::vector<Labeling> t_piece(const Poset& p, std::int64_t prime, int e, const Budget& budget = {});

/// Points of piece(prime^e - 1) with no split x = x' + prime^e' x'' through
/// lower pieces (0 < e' < e).
std::vector<Point> h_set(GradedFamily& fam, std::int64_t prime, int e, const Budget& budget = {});

std::size_t c_e(GradedFamily& fam, std::int64_t prime, int e, const Budget& budget = {});
std::size_t c_e_fiber(const Poset& p, std::int64_t prime, int e, const Budget& budget = {});
std::size_t c_e_ehrhart(const Poset& p, const ConeSection& c, std::int64_t prime, int e, const Budget& budget = {});
std::size_t c_e_polytope(const IntegralPolytope& poly, std::int64_t prime, int e, const Budget& budget = {});

/// Positive a_i with every [a_i/p, (a_i+2)/p] box inside the polytope, if any.
std::optional<std::vector<std::int64_t>> digit_box(const IntegralPolytope& poly, std::int64_t prime);

/// Points of the (prime^e - 1)-fold dilation whose base-prime digits at
/// positions 0..e-2 are all >= prime - floor(prime/d). None of them splits.
std::vector<Point> digit_witnesses(const IntegralPolytope& poly, std::int64_t prime, int e,
                                  const Budget& budget = {});

/// (floor(p/d))^(d(e-1)).
std::int64_t digit_bound(std::size_t d, std::int64_t prime, int e);

struct ContainmentCheck {
  std::size_t lifted_points = 0;  // points of (H_e(base) x Z) within the lifted dilation
  std::size_t violations = 0;     // those missing from H_e(lifted)
};

/// (H_e(base) x Z) cap (prime^e - 1) lifted, against H_e(lifted). The lifted
/// family must project onto the base by dropping its last coordinate.
ContainmentCheck prism_containment(GradedFamily& base, GradedFamily& lifted, std::int64_t prime, int e,
                                  const Budget& budget = {});

struct TRow {
  int e;
  std::size_t dim_e;
  std::size_t c_e;
  double log_per_e;   // log_p(c_e) / e, -inf when c_e = 0
  double last_ratio;  // log_p(c_e / c_{e-1}), NaN when undefined
};

struct TComplexityTable {
  std::string target;
  std::int64_t prime;
  std::vector<TRow> rows;
  double estimate;  // log_p(c_{e_max}) / e_max
};

/// One table per prime, rows e = 1..e_max. The estimates are reported, never
/// claimed as limits.
std::vector<TComplexityTable> tcx_report(GradedFamily& fam, const std::vector<std::int64_t>& primes, int e_max,
                                         const Budget& budget = {});

}  // namespace hibi
