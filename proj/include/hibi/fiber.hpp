#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hibi/box_enumerator.hpp"
#include "hibi/labeling.hpp"
#include "hibi/poset.hpp"
#include "hibi/sequences.hpp"

namespace hibi {

/// Number of generators of omega^(n eps); n = 0 gives 1.
std::size_t fiber_hilbert(const Poset& p, int eps, std::int64_t n);

/// 1 + max over N^(eps) of dim C^(eps)_seq.
std::size_t analytic_spread(const Poset& p, int eps);

struct DegreeRange {
  std::int64_t q0;
  std::int64_t q_max;
  bool exact;  // generator degrees fill [q0, q_max] and nothing else
};

DegreeRange degree_range(const Poset& p, std::int64_t n);

/// N^(+1) = {()}.
bool is_level(const Poset& p);
/// N^(-1) = {()}.
bool is_anticanonical_level(const Poset& p);
/// Purity, cross-checked against a single canonical generator; throws
/// InvariantViolation if the two disagree.
bool is_gorenstein(const Poset& p);

/// seq -> lattice points of its n-fold dilation, for every seq in N^(eps).
std::map<CondNSeq, std::vector<Labeling>> fiber_cone_decomposition(const Poset& p, int eps, std::int64_t n);

/// Generators of omega^(n eps) as the sorted, deduplicated union of the
/// section lattice points. Cheaper than the full box walk for large n.
std::vector<Labeling> generators_by_sections(const Poset& p, int eps, std::int64_t n,
                                             std::size_t budget = kUnlimited);

}  // namespace hibi
