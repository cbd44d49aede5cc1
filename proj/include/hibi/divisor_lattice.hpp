#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hibi/box_enumerator.hpp"
#include "hibi/labeling.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Every cover of P^+ (including covers into the top) has gap >= n.
bool in_T(const Poset& p, std::int64_t n, const Labeling& v);

/// a <= b iff b - a lies in T^(0). Both operands must lie in T^(n).
bool leq_T(const Poset& p, std::int64_t n, const Labeling& a, const Labeling& b);

/// Minimality in T^(n). Subtracting 1_I stays in T^(n) exactly when no cover
/// leaving the ideal I is tight, so v is minimal iff closing {bottom} under
/// lower covers and tight upper covers reaches the top.
bool is_minimal(const Poset& p, std::int64_t n, const Labeling& v);

/// qdist(n, z, top) <= v(z) <= q_max(n) - qdist(n, bottom, z).
BoxConstraints generator_box(const Poset& p, std::int64_t n);

/// All points of T^(n) inside generator_box.
std::size_t enumerate_T_box(const Poset& p, std::int64_t n, const std::function<void(const Labeling&)>& visit,
                            std::size_t budget = kUnlimited);

/// Minimal elements of T^(n) in enumeration order; n = 0 gives the zero labeling.
std::vector<Labeling> generators(const Poset& p, std::int64_t n, std::size_t budget = kUnlimited);

/// (floor(v/|n|), v - floor(v/|n|)) for |n| >= 2 and v in T^(n).
std::pair<Labeling, Labeling> split(const Poset& p, const Labeling& v, std::int64_t n);

/// z -> max(v(z) - k, qdist(n, z, top)) for minimal v and k >= 1.
Labeling truncate(const Poset& p, const Labeling& v, std::int64_t n, std::int64_t k);

/// A member of T^(n) whose gap across the cover x < y is exactly n.
Labeling exist_witness(const Poset& p, std::int64_t n, Element x, Element y);

}  // namespace hibi
