#include "hibi/affine_rank.hpp"

#include <numeric>

#include "hibi/error.hpp"

namespace hibi {

namespace {

void normalise(std::vector<std::int64_t>& row) {
  std::int64_t g = 0;
  for (std::int64_t v : row) g = std::gcd(g, v);
  if (g > 1)
    for (std::int64_t& v : row) v /= g;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto& pr = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::int64_t f = rows[r][c];
      if (f == 0) continue;
      const std::int64_t g = std::gcd(pr[c], f);
      const std::int64_t a = pr[c] / g;
      const std::int64_t b = f / g;
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = checked::sub(checked::mul(a, rows[r][k]), checked::mul(b, pr[k]));
      normalise(rows[r]);
    }
    ++rank;
  }
  return rank;
}

int affine_dimension(const std::vector<std::vector<std::int64_t>>& points) {
  if (points.empty()) return -1;
  std::vector<std::vector<std::int64_t>> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<std::int64_t> d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = checked::sub(points[i][k], points[0][k]);
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(matrix_rank(std::move(diffs)));
}

}  // namespace hibi
