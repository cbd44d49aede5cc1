#include "hibi/birkhoff.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hibi/error.hpp"

namespace hibi {

FiniteLattice FiniteLattice::build(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& order) {
  const std::size_t n = elements.size();
  if (n == 0) throw ValidationError("lattice has no elements");
  std::map<std::string, std::size_t, std::less<>> ids;
  for (std::size_t i = 0; i < n; ++i)
    if (!ids.emplace(elements[i], i).second) throw ValidationError("duplicate lattice element '" + elements[i] + "'");
  auto lookup = [&](const std::string& s) {
    auto it = ids.find(s);
    if (it == ids.end()) throw ValidationError("unknown lattice element '" + s + "'");
    return it->second;
  };

  FiniteLattice h;
  h.names_ = std::move(elements);
  h.leq_.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) h.leq_[i][i] = 1;
  for (const auto& [a, b] : order) h.leq_[lookup(a)][lookup(b)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (h.leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (h.leq_[k][j]) h.leq_[i][j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (h.leq_[i][j] && h.leq_[j][i])
        throw ValidationError("cycle in lattice order between '" + h.names_[i] + "' and '" + h.names_[j] + "'");

  // Least upper / greatest lower bounds, which must be unique.
  auto bound = [&](std::size_t a, std::size_t b, bool upper) {
    std::vector<std::size_t> cands;
    for (std::size_t c = 0; c < n; ++c)
      if (upper ? (h.leq_[a][c] && h.leq_[b][c]) : (h.leq_[c][a] && h.leq_[c][b])) cands.push_back(c);
    for (std::size_t c : cands) {
      bool extreme = true;
      for (std::size_t d : cands)
        if (upper ? !h.leq_[c][d] : !h.leq_[d][c]) extreme = false;
      if (extreme) return c;
    }
    throw ValidationError("'" + h.names_[a] + "' and '" + h.names_[b] + "' have no " + (upper ? "join" : "meet") +
                          " (not a lattice)");
  };
  h.join_.assign(n, std::vector<std::size_t>(n));
  h.meet_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      h.join_[a][b] = bound(a, b, true);
      h.meet_[a][b] = bound(a, b, false);
    }
  h.bottom_ = 0;
  h.top_ = 0;
  for (std::size_t a = 1; a < n; ++a) {
    h.bottom_ = h.meet_[h.bottom_][a];
    h.top_ = h.join_[h.top_][a];
  }
  return h;
}

bool FiniteLattice::is_distributive() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet_[a][join_[b][c]] != join_[meet_[a][b]][meet_[a][c]]) return false;
  return true;
}

FiniteLattice lattice_from_poset(const Poset& p) {
  const auto ideals = poset_ideals(p);
  std::vector<std::string> names;
  for (const auto& i : ideals) names.push_back(format_set(p, i));
  std::vector<std::pair<std::string, std::string>> order;
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = 0; b < ideals.size(); ++b)
      if (a != b && std::includes(ideals[b].begin(), ideals[b].end(), ideals[a].begin(), ideals[a].end()))
        order.emplace_back(names[a], names[b]);
  return FiniteLattice::build(std::move(names), order);
}

Poset join_irreducibles(const FiniteLattice& h) {
  if (!h.is_distributive()) throw ValidationError("lattice is not distributive");
  const std::size_t n = h.size();
  std::vector<std::size_t> ji;
  for (std::size_t a = 0; a < n; ++a) {
    bool irreducible = true;
    for (std::size_t b = 0; b < n && irreducible; ++b)
      for (std::size_t c = 0; c < n && irreducible; ++c)
        if (h.join(b, c) == a && b != a && c != a) irreducible = false;
    if (irreducible) ji.push_back(a);
  }
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t a : ji) names.push_back(h.name(a));
  for (std::size_t a : ji)
    for (std::size_t b : ji)
      if (a != b && h.leq(a, b)) covers.emplace_back(h.name(a), h.name(b));
  return Poset::build(std::move(names), covers, h.name(h.bottom()));
}

std::vector<Labeling> hibi_generators(const Poset& p) {
  std::vector<Labeling> out;
  for (const auto& i : poset_ideals(p)) out.push_back(Labeling::indicator(p.size(), i));
  return out;
}

bool isomorphic(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  using Key = std::tuple<int, std::size_t, std::size_t>;
  auto key = [](const Poset& p, Element e) {
    return Key{p.longest_chain(p.bottom(), e), p.lower_covers(e).size(), p.upper_covers(e).size()};
  };
  std::vector<Key> ka(n), kb(n);
  for (Element e = 0; e < n; ++e) {
    ka[e] = key(a, e);
    kb[e] = key(b, e);
  }
  {
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const auto& order = a.topological_order();
  std::vector<Element> image(n, n);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    const Element u = order[k];
    for (Element v = 0; v < n; ++v) {
      if (used[v] || kb[v] != ka[u]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Element w = order[j];
        if (a.leq(w, u) != b.leq(image[w], v) || a.leq(u, w) != b.leq(v, image[w])) ok = false;
      }
      if (!ok) continue;
      image[u] = v;
      used[v] = 1;
      if (self(self, k + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace hibi
