#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "hibi/labeling.hpp"
#include "hibi/poset.hpp"

namespace hibi {

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Integer box over P intersected with T^(gap)(P), optionally with pinned
/// coordinates ν(element) = ν(anchor) + offset where anchor lies above element.
struct BoxConstraints {
  struct Pin {
    Element element;
    Element anchor;
    std::int64_t offset;
  };

  std::int64_t gap = 0;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::vector<Pin> pins;
};

/// Depth-first enumeration, top-down along the reversed topological order
/// with values ascending. Lower bounds are propagated downward through
/// quasi-distances after each assignment, so every leaf is in T^(gap).
/// Returns the number of points visited; throws BudgetExceeded as soon as
/// that number would pass `budget`.
std::size_t enumerate_box(const Poset& p, const BoxConstraints& box,
                          const std::function<void(const Labeling&)>& visit,
                          std::size_t budget = kUnlimited);

}  // namespace hibi
