#pragma once

#include <cstdint>
#include <vector>

namespace hibi {

/// Rank over Q of an integer matrix, by integer row reduction with gcd
/// normalisation (no floating point).
std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> rows);

/// Dimension of the affine hull of a point set; -1 for the empty set.
int affine_dimension(const std::vector<std::vector<std::int64_t>>& points);

}  // namespace hibi
