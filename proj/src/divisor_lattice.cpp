#include "hibi/divisor_lattice.hpp"

#include <algorithm>

#include "hibi/error.hpp"
#include "hibi/sequences.hpp"

namespace hibi {

bool in_T(const Poset& p, std::int64_t n, const Labeling& v) {
  if (v.size() != p.size()) throw PreconditionError("labeling does not match the poset");
  for (const auto& [x, y] : p.cover_pairs())
    if (v[x] - v[y] < n) return false;
  return true;
}

bool leq_T(const Poset& p, std::int64_t n, const Labeling& a, const Labeling& b) {
  if (!in_T(p, n, a) || !in_T(p, n, b)) throw PreconditionError("leq_T operands must lie in T^(" + std::to_string(n) + ")");
  return in_T(p, 0, b - a);
}

bool is_minimal(const Poset& p, std::int64_t n, const Labeling& v) {
  if (!in_T(p, n, v)) throw PreconditionError("labeling is not in T^(" + std::to_string(n) + ")");
  std::vector<char> in(p.size() + 1, 0);
  std::vector<Element> stack{p.bottom()};
  in[p.bottom()] = 1;
  while (!stack.empty()) {
    const Element z = stack.back();
    stack.pop_back();
    if (z == p.top()) return true;
    auto push = [&](Element w) {
      if (!in[w]) {
        in[w] = 1;
        stack.push_back(w);
      }
    };
    for (Element w : p.lower_covers(z)) push(w);
    for (Element w : p.upper_covers(z))
      if (v[z] - v[w] == n) push(w);
  }
  return false;
}

BoxConstraints generator_box(const Poset& p, std::int64_t n) {
  BoxConstraints box;
  box.gap = n;
  const std::int64_t top_degree = q_max(p, n);
  box.lower.resize(p.size());
  box.upper.resize(p.size());
  for (Element z = 0; z < p.size(); ++z) {
    box.lower[z] = qdist(p, n, z, p.top());
    box.upper[z] = checked::sub(top_degree, qdist(p, n, p.bottom(), z));
  }
  return box;
}

std::size_t enumerate_T_box(const Poset& p, std::int64_t n, const std::function<void(const Labeling&)>& visit,
                            std::size_t budget) {
  return enumerate_box(p, generator_box(p, n), visit, budget);
}

std::vector<Labeling> generators(const Poset& p, std::int64_t n, std::size_t budget) {
  if (n == 0) return {Labeling::zero(p.size())};
  std::vector<Labeling> out;
  enumerate_T_box(
      p, n,
      [&](const Labeling& v) {
        if (is_minimal(p, n, v)) out.push_back(v);
      },
      budget);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Labeling, Labeling> split(const Poset& p, const Labeling& v, std::int64_t n) {
  if (n > -2 && n < 2) throw PreconditionError("split needs |n| >= 2");
  if (!in_T(p, n, v)) throw PreconditionError("split operand is not in T^(" + std::to_string(n) + ")");
  Labeling head = floor_div(v, n > 0 ? n : -n);
  Labeling rest = v - head;
  return {std::move(head), std::move(rest)};
}

Labeling truncate(const Poset& p, const Labeling& v, std::int64_t n, std::int64_t k) {
  if (k < 1) throw PreconditionError("truncate needs k >= 1");
  if (!is_minimal(p, n, v)) throw PreconditionError("truncate needs a minimal element");
  Labeling out = Labeling::zero(p.size());
  for (Element z = 0; z < p.size(); ++z) out.set(z, std::max(checked::sub(v[z], k), qdist(p, n, z, p.top())));
  return out;
}

Labeling exist_witness(const Poset& p, std::int64_t n, Element x, Element y) {
  if (!p.covered_by(x, y)) throw PreconditionError("'" + p.name(x) + "' is not covered by '" + p.name(y) + "'");
  Labeling out = Labeling::zero(p.size());
  const std::int64_t base = checked::sub(qdist(p, n, x, p.top()), n);
  for (Element z = 0; z < p.size(); ++z) {
    std::int64_t v = qdist(p, n, z, p.top());
    if (p.leq(z, y)) v = std::max(v, checked::add(base, qdist(p, n, z, y)));
    out.set(z, v);
  }
  return out;
}

}  // namespace hibi
