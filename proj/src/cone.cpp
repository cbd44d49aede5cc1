#include "hibi/cone.hpp"

#include <algorithm>
#include <unordered_set>

#include "hibi/affine_rank.hpp"
#include "hibi/divisor_lattice.hpp"
#include "hibi/error.hpp"

namespace hibi {

ConeSection build_C(const Poset& p, int eps, const CondNSeq& seq) {
  if (eps != 1 && eps != -1) throw PreconditionError("epsilon must be +1 or -1");
  if (!satisfies_condN(p, seq)) throw PreconditionError("sequence " + format_seq(p, seq) + " violates condition N");
  if (!is_q_reduced(p, eps, seq)) throw PreconditionError("sequence " + format_seq(p, seq) + " is not reduced");
  ConeSection c;
  c.seq = seq;
  c.epsilon = eps;
  c.inequalities = p.cover_pairs();
  std::vector<char> in_g(p.size() + 1, 0);
  for (std::size_t i = 0; i <= seq.t(); ++i) {
    const Element x = seq_x(p, seq, i);
    const Element y = seq_y(p, seq, i);
    const std::int64_t span = qdist(p, eps, x, y);
    c.equalities.push_back({x, y, span});
    ElementSet part;
    for (Element z = 0; z <= p.size(); ++z)
      if (p.leq(x, z) && p.leq(z, y) && qdist(p, eps, x, z) + qdist(p, eps, z, y) == span) {
        part.push_back(z);
        in_g[z] = 1;
      }
    c.g_parts.push_back(std::move(part));
  }
  for (Element z = 0; z < p.size(); ++z) (in_g[z] ? c.g : c.f).push_back(z);
  return c;
}

std::size_t dim_formula(const ConeSection& c) { return c.f.size() + c.seq.t(); }

bool in_dilation(const Poset& p, const ConeSection& c, std::int64_t n, const Labeling& v) {
  const std::int64_t gap = checked::mul(n, c.epsilon);
  if (!in_T(p, gap, v)) return false;
  for (const auto& e : c.equalities)
    if (v[e.x] - v[e.y] != checked::mul(n, e.gap)) return false;
  return true;
}

BoxConstraints dilation_box(const Poset& p, const ConeSection& c, std::int64_t n) {
  if (n < 1) throw PreconditionError("dilation factor must be >= 1");
  BoxConstraints box;
  box.gap = checked::mul(n, c.epsilon);
  const std::int64_t top_degree = q_max(p, box.gap);
  box.lower.resize(p.size());
  box.upper.resize(p.size());
  for (Element z = 0; z < p.size(); ++z) {
    box.lower[z] = qdist(p, box.gap, z, p.top());
    box.upper[z] = checked::sub(top_degree, qdist(p, box.gap, p.bottom(), z));
  }
  for (std::size_t i = 0; i < c.g_parts.size(); ++i) {
    const Element y = c.equalities[i].y;
    for (Element z : c.g_parts[i])
      if (z != y && z != p.top()) box.pins.push_back({z, y, qdist(p, box.gap, z, y)});
  }
  return box;
}

std::vector<Labeling> lattice_points(const Poset& p, const ConeSection& c, std::int64_t n, std::size_t budget) {
  std::vector<Labeling> out;
  enumerate_box(p, dilation_box(p, c, n), [&](const Labeling& v) { out.push_back(v); }, budget);
  return out;
}

std::size_t dim_bruteforce(const Poset& p, const ConeSection& c) {
  std::vector<std::vector<std::int64_t>> pts;
  for (const auto& v : lattice_points(p, c, 1)) pts.emplace_back(v.values().begin(), v.values().end());
  const int d = affine_dimension(pts);
  if (d < 0) throw InvariantViolation("polytope " + format_seq(p, c.seq) + " has no lattice points");
  return static_cast<std::size_t>(d);
}

AffineWitnesses affine_witnesses(const Poset& p, const ConeSection& c) {
  const std::size_t t = c.seq.t();
  AffineWitnesses w;
  std::vector<char> used(p.size(), 0);
  Labeling start;
  for (std::size_t step = 0; step <= t; ++step) {
    const ShiftedFamily fam = shifted_family(p, c.epsilon, c.seq, t - step);
    start = step == 0 ? fam.down : pointwise_max(fam.down, w.points.back());
    w.points.push_back(start);
    ElementSet part;
    // Topological order doubles as the linear extension.
    for (Element z : p.topological_order())
      if (!used[z] && start[z] < fam.up[z]) part.push_back(z);
    Labeling cur = start;
    for (Element z : part) {
      used[z] = 1;
      cur.set(z, checked::add(cur[z], 1));
      w.points.push_back(cur);
    }
    std::sort(part.begin(), part.end());
    w.f_parts.push_back(std::move(part));
  }
  return w;
}

bool is_standard(const Poset& p, const ConeSection& c, std::int64_t n_max) {
  if (n_max < 2) throw PreconditionError("is_standard needs n_max >= 2");
  const std::vector<Labeling> ones = lattice_points(p, c, 1);
  std::vector<Labeling> prev = ones;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    const std::unordered_set<Labeling, LabelingHash> lower(prev.begin(), prev.end());
    std::vector<Labeling> cur = lattice_points(p, c, n);
    for (const auto& v : cur) {
      const bool split = std::any_of(ones.begin(), ones.end(), [&](const Labeling& a) { return lower.count(v - a) > 0; });
      if (!split) return false;
    }
    prev = std::move(cur);
  }
  return true;
}

std::vector<std::size_t> ehrhart_counts(const Poset& p, const ConeSection& c, std::int64_t n_max) {
  std::vector<std::size_t> out{1};
  for (std::int64_t n = 1; n <= n_max; ++n)
    out.push_back(enumerate_box(p, dilation_box(p, c, n), [](const Labeling&) {}));
  return out;
}

ElementSet essential_coordinates(const Poset& p, const ConeSection& c) {
  ElementSet out = c.f;
  for (std::size_t i = 0; i < c.seq.t(); ++i) out.push_back(seq_y(p, c.seq, i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Labeling from_essential(const Poset& p, const ConeSection& c, std::int64_t n, const std::vector<std::int64_t>& values) {
  const ElementSet ess = essential_coordinates(p, c);
  if (values.size() != ess.size()) throw PreconditionError("wrong number of essential values");
  const std::int64_t gap = checked::mul(n, c.epsilon);
  Labeling v = Labeling::zero(p.size());
  std::vector<char> known(p.size() + 1, 0);
  known[p.top()] = 1;
  for (std::size_t k = 0; k < ess.size(); ++k) {
    v.set(ess[k], values[k]);
    known[ess[k]] = 1;
  }
  for (std::size_t i = 0; i < c.g_parts.size(); ++i) {
    const Element y = c.equalities[i].y;
    for (Element z : c.g_parts[i])
      if (!known[z]) {
        v.set(z, checked::add(v[y], qdist(p, gap, z, y)));
        known[z] = 1;
      }
  }
  return v;
}

std::vector<Labeling> intersect_points(const Poset& p, const ConeSection& a, const ConeSection& b, std::int64_t n) {
  std::vector<Labeling> pa = lattice_points(p, a, n);
  std::vector<Labeling> out;
  for (auto& v : pa)
    if (in_dilation(p, b, n, v)) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hibi
