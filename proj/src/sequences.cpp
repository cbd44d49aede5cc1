#include "hibi/sequences.hpp"

#include <algorithm>

#include "hibi/error.hpp"

namespace hibi {

namespace {

void check_items(const Poset& p, const CondNSeq& s) {
  if (s.items.size() % 2 != 0) throw ValidationError("sequence must have even length (y_0, x_1, ..., x_t)");
  for (Element e : s.items) {
    if (e >= p.size()) throw ValidationError("sequence element outside P");
    if (e == p.bottom()) throw ValidationError("the bottom may not appear in a sequence");
  }
}

int sign_of(std::int64_t n) { return n > 0 ? 1 : -1; }

void require_reduced(const Poset& p, std::int64_t n, const CondNSeq& s) {
  if (!satisfies_condN(p, s)) throw PreconditionError("sequence " + format_seq(p, s) + " violates condition N");
  if (!is_q_reduced(p, n, s))
    throw PreconditionError("sequence " + format_seq(p, s) + " is not q^(" + std::to_string(n) + ")-reduced");
}

}  // namespace

Element seq_x(const Poset& p, const CondNSeq& s, std::size_t i) {
  if (i == 0) return p.bottom();
  if (i > s.t()) throw PreconditionError("x index out of range");
  return s.items[2 * i - 1];
}

Element seq_y(const Poset& p, const CondNSeq& s, std::size_t i) {
  if (i == s.t()) return p.top();
  if (i > s.t()) throw PreconditionError("y index out of range");
  return s.items[2 * i];
}

CondNSeq seq_from_names(const Poset& p, const std::vector<std::string>& names) {
  CondNSeq s;
  for (const auto& n : names) {
    Element e = p.index(n);
    if (e == p.top()) throw ValidationError("the top may not appear in a sequence");
    s.items.push_back(e);
  }
  check_items(p, s);
  return s;
}

std::string format_seq(const Poset& p, const CondNSeq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i) out += ',';
    out += p.name(s.items[i]);
  }
  return out + ")";
}

bool satisfies_condN(const Poset& p, const CondNSeq& s) {
  check_items(p, s);
  const std::size_t t = s.t();
  for (std::size_t i = 1; i <= t; ++i) {
    if (!p.less(seq_x(p, s, i), seq_y(p, s, i - 1))) return false;
    if (i < t && !p.less(seq_x(p, s, i), seq_y(p, s, i))) return false;
  }
  for (std::size_t j = 2; j <= t; ++j)
    for (std::size_t i = 0; i + 2 <= j; ++i)
      if (p.leq(seq_x(p, s, j), seq_y(p, s, i))) return false;
  return true;
}

std::int64_t q_value(const Poset& p, std::int64_t m, const std::vector<Element>& zigzag) {
  if (zigzag.empty() || zigzag.size() % 2 != 0) throw PreconditionError("zig-zag must have even, positive length");
  std::int64_t total = 0;
  for (std::size_t k = 0; k < zigzag.size(); k += 2) {
    const Element w = zigzag[k];
    const Element z = zigzag[k + 1];
    if (!p.leq(w, z)) throw PreconditionError("zig-zag comparability fails at " + p.name(w) + " <= " + p.name(z));
    total = checked::add(total, qdist(p, m, w, z));
    if (k > 0) {
      const Element prev = zigzag[k - 1];
      if (!p.leq(w, prev)) throw PreconditionError("zig-zag comparability fails at " + p.name(w) + " <= " + p.name(prev));
      total = checked::sub(total, qdist(p, m, w, prev));
    }
  }
  return total;
}

std::int64_t seq_q_value(const Poset& p, std::int64_t m, const CondNSeq& s, std::size_t i, std::size_t j) {
  std::vector<Element> z;
  for (std::size_t k = i; k <= j; ++k) {
    z.push_back(seq_x(p, s, k));
    z.push_back(seq_y(p, s, k));
  }
  return q_value(p, m, z);
}

bool is_q_reduced(const Poset& p, std::int64_t m, const CondNSeq& s) {
  if (!satisfies_condN(p, s)) throw PreconditionError("sequence " + format_seq(p, s) + " violates condition N");
  const std::size_t t = s.t();
  for (std::size_t i = 0; i <= t; ++i)
    for (std::size_t j = i + 1; j <= t; ++j) {
      const Element x = seq_x(p, s, i);
      const Element y = seq_y(p, s, j);
      if (p.leq(x, y) && qdist(p, m, x, y) >= seq_q_value(p, m, s, i, j)) return false;
    }
  return true;
}

std::vector<CondNSeq> enumerate_N(const Poset& p, int eps) {
  if (eps != 1 && eps != -1) throw PreconditionError("epsilon must be +1 or -1");
  std::vector<CondNSeq> out;
  CondNSeq cur;
  // Grow (.., y_{k-1}) by x_k then y_k; condition N is checked as each x lands.
  auto extend = [&](auto&& self) -> void {
    const Element y_last = cur.items.back();
    const std::size_t k = cur.t() + 1;  // index of the x being placed
    for (Element x = 0; x < p.size(); ++x) {
      if (x == p.bottom() || !p.less(x, y_last)) continue;
      bool ok = true;
      for (std::size_t i = 0; i + 2 <= k && ok; ++i)
        if (p.leq(x, cur.items[2 * i])) ok = false;
      if (!ok) continue;
      cur.items.push_back(x);
      out.push_back(cur);
      for (Element y = 0; y < p.size(); ++y) {
        if (!p.less(x, y)) continue;
        cur.items.push_back(y);
        self(self);
        cur.items.pop_back();
      }
      cur.items.pop_back();
    }
  };
  out.push_back(cur);
  for (Element y = 0; y < p.size(); ++y) {
    if (y == p.bottom()) continue;
    cur.items.push_back(y);
    extend(extend);
    cur.items.pop_back();
  }
  std::vector<CondNSeq> reduced;
  for (auto& s : out)
    if (is_q_reduced(p, eps, s)) reduced.push_back(std::move(s));
  std::sort(reduced.begin(), reduced.end(), [](const CondNSeq& a, const CondNSeq& b) {
    if (a.t() != b.t()) return a.t() < b.t();
    return a.items < b.items;
  });
  return reduced;
}

MuValues mu(const Poset& p, std::int64_t n, const CondNSeq& s) {
  require_reduced(p, n, s);
  const std::size_t t = s.t();
  MuValues m;
  m.at_x.resize(t + 1);
  m.at_y.resize(t + 1);
  for (std::size_t i = 0; i <= t; ++i) {
    m.at_x[i] = seq_q_value(p, n, s, i, t);
    m.at_y[i] = checked::sub(m.at_x[i], qdist(p, n, seq_x(p, s, i), seq_y(p, s, i)));
  }
  return m;
}

namespace {

Labeling down_from(const Poset& p, std::int64_t n, const CondNSeq& s, const MuValues& m) {
  Labeling v = Labeling::zero(p.size());
  for (Element z = 0; z < p.size(); ++z) {
    bool any = false;
    std::int64_t best = 0;
    for (std::size_t j = 0; j <= s.t(); ++j) {
      const Element y = seq_y(p, s, j);
      if (!p.leq(z, y)) continue;
      const std::int64_t c = checked::add(m.at_y[j], qdist(p, n, z, y));
      if (!any || c > best) best = c;
      any = true;
    }
    v.set(z, best);
  }
  return v;
}

Labeling up_from(const Poset& p, std::int64_t n, const CondNSeq& s, const MuValues& m) {
  Labeling v = Labeling::zero(p.size());
  for (Element z = 0; z < p.size(); ++z) {
    bool any = false;
    std::int64_t best = 0;
    for (std::size_t i = 0; i <= s.t(); ++i) {
      const Element x = seq_x(p, s, i);
      if (!p.leq(x, z)) continue;
      const std::int64_t c = checked::sub(m.at_x[i], qdist(p, n, x, z));
      if (!any || c < best) best = c;
      any = true;
    }
    v.set(z, best);
  }
  return v;
}

}  // namespace

Labeling nu_down(const Poset& p, std::int64_t n, const CondNSeq& s) { return down_from(p, n, s, mu(p, n, s)); }

Labeling nu_up(const Poset& p, std::int64_t n, const CondNSeq& s) { return up_from(p, n, s, mu(p, n, s)); }

ShiftedFamily shifted_family(const Poset& p, std::int64_t eps, const CondNSeq& s, std::size_t shift) {
  if (shift > s.t()) throw PreconditionError("shift s must satisfy 0 <= s <= t");
  MuValues m = mu(p, eps, s);
  for (std::size_t i = 0; i < shift; ++i) {
    m.at_x[i] = checked::sub(m.at_x[i], 1);
    m.at_y[i] = checked::sub(m.at_y[i], 1);
  }
  ShiftedFamily f{m, down_from(p, eps, s, m), up_from(p, eps, s, m)};
  return f;
}

bool tight_along(const Poset& p, std::int64_t n, const CondNSeq& s, const Labeling& v) {
  for (std::size_t i = 0; i <= s.t(); ++i) {
    const Element x = seq_x(p, s, i);
    const Element y = seq_y(p, s, i);
    if (v[x] - v[y] != qdist(p, n, x, y)) return false;
  }
  return true;
}

std::optional<CondNSeq> find_witness_sequence(const Poset& p, std::int64_t n, const Labeling& v) {
  if (n == 0) throw PreconditionError("witness sequences need n != 0");
  for (const auto& s : enumerate_N(p, sign_of(n)))
    if (tight_along(p, n, s, v)) return s;
  return std::nullopt;
}

CondNSeq witness_sequence(const Poset& p, std::int64_t n, const Labeling& v) {
  auto s = find_witness_sequence(p, n, v);
  if (!s) throw PreconditionError("labeling is not minimal: no reduced witness sequence");
  return *s;
}

std::int64_t q0(const Poset& p, std::int64_t n) { return qdist(p, n, p.bottom(), p.top()); }

std::int64_t q_max(const Poset& p, std::int64_t n) {
  if (n == 0) return 0;
  std::int64_t best = q0(p, n);
  for (const auto& s : enumerate_N(p, sign_of(n))) best = std::max(best, seq_q_value(p, n, s, 0, s.t()));
  return best;
}

}  // namespace hibi
