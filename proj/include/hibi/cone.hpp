#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hibi/box_enumerator.hpp"
#include "hibi/labeling.hpp"
#include "hibi/poset.hpp"
#include "hibi/sequences.hpp"

namespace hibi {

/// The polytope C^(eps)_seq: cover gaps >= eps on P^+ and the equalities
/// nu(x_i) - nu(y_i) = qdist(eps, x_i, y_i) along the sequence.
struct ConeSection {
  struct Equality {
    Element x;
    Element y;
    std::int64_t gap;
  };

  CondNSeq seq;
  int epsilon = -1;
  std::vector<Equality> equalities;
  std::vector<std::pair<Element, Element>> inequalities;
  std::vector<ElementSet> g_parts;  // G_0..G_t, subsets of P^+
  ElementSet g;                     // G restricted to P
  ElementSet f;                     // P \ G
};

/// Throws PreconditionError unless seq is a q^(eps)-reduced condition-N sequence.
ConeSection build_C(const Poset& p, int eps, const CondNSeq& seq);

/// #F + t.
std::size_t dim_formula(const ConeSection& c);

/// Membership of the n-fold dilation, C^(n eps).
bool in_dilation(const Poset& p, const ConeSection& c, std::int64_t n, const Labeling& v);

/// Bounded box for the n-fold dilation, with every element of G pinned to its y_i.
BoxConstraints dilation_box(const Poset& p, const ConeSection& c, std::int64_t n);

/// Integer points of the n-fold dilation (n >= 1), in enumeration order.
std::vector<Labeling> lattice_points(const Poset& p, const ConeSection& c, std::int64_t n,
                                     std::size_t budget = kUnlimited);

/// Affine rank of the degree-one lattice points.
std::size_t dim_bruteforce(const Poset& p, const ConeSection& c);

struct AffineWitnesses {
  std::vector<Labeling> points;      // nu_00, nu_01, ..., nu_t k(t)
  std::vector<ElementSet> f_parts;   // F_0..F_t
};

/// The #F + t + 1 points built from the shifted nu_down / nu_up family.
AffineWitnesses affine_witnesses(const Poset& p, const ConeSection& c);

/// Every point of the n-fold dilation is a degree-one point plus a point of
/// the (n-1)-fold dilation, for 2 <= n <= n_max.
bool is_standard(const Poset& p, const ConeSection& c, std::int64_t n_max);

/// Lattice point counts of the n-fold dilations, n = 0..n_max.
std::vector<std::size_t> ehrhart_counts(const Poset& p, const ConeSection& c, std::int64_t n_max);

/// (P \ G) together with y_0..y_{t-1}: the coordinates that determine a point.
ElementSet essential_coordinates(const Poset& p, const ConeSection& c);

/// Rebuilds a full labeling of the n-fold dilation from its essential
/// coordinates (values listed in essential_coordinates order).
Labeling from_essential(const Poset& p, const ConeSection& c, std::int64_t n,
                        const std::vector<std::int64_t>& values);

/// Common lattice points of two sections at dilation n, sorted.
std::vector<Labeling> intersect_points(const Poset& p, const ConeSection& a, const ConeSection& b, std::int64_t n);

}  // namespace hibi
