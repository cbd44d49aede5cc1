#include "hibi/poset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "hibi/error.hpp"

namespace hibi {

namespace {

constexpr int kUnreachable = -1;

}  // namespace

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& covers,
                   const std::string& bottom) {
  Poset p;
  const std::size_t n = elements.size();
  std::map<std::string, Element, std::less<>> ids;
  for (Element i = 0; i < n; ++i) {
    if (elements[i].empty()) throw ValidationError("empty element id");
    if (elements[i] == kTopName || elements[i] == "\u221e") throw ValidationError("element id '" + elements[i] + "' is reserved");
    if (!ids.emplace(elements[i], i).second) throw ValidationError("duplicate element id '" + elements[i] + "'");
  }
  auto lookup = [&](const std::string& s) {
    auto it = ids.find(s);
    if (it == ids.end()) throw ValidationError("unknown element id '" + s + "'");
    return it->second;
  };
  if (!ids.count(bottom)) throw ValidationError("bottom '" + bottom + "' is not an element");
  const Element b = ids.at(bottom);

  // Strict relation from the supplied pairs, then its transitive closure.
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (const auto& [lo, hi] : covers) {
    Element a = lookup(lo);
    Element c = lookup(hi);
    if (a == c) throw ValidationError("cycle detected at '" + lo + "'");
    rel[a][c] = 1;
  }
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (rel[i][k])
        for (Element j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = 1;
  for (Element i = 0; i < n; ++i)
    if (rel[i][i]) throw ValidationError("cycle detected through '" + elements[i] + "'");
  for (Element i = 0; i < n; ++i)
    if (i != b && !rel[b][i])
      throw ValidationError("bottom '" + bottom + "' is not below '" + elements[i] + "' (no unique minimum)");

  p.names_ = std::move(elements);
  p.bottom_ = b;

  // leq on P^+ (index n is the top).
  p.leq_.assign(n + 1, std::vector<char>(n + 1, 0));
  for (Element i = 0; i <= n; ++i) {
    p.leq_[i][i] = 1;
    p.leq_[i][n] = 1;
    if (i < n)
      for (Element j = 0; j < n; ++j)
        if (rel[i][j]) p.leq_[i][j] = 1;
  }

  // Transitive reduction inside P^+.
  p.up_.assign(n + 1, {});
  p.down_.assign(n + 1, {});
  for (Element i = 0; i <= n; ++i) {
    for (Element j = 0; j <= n; ++j) {
      if (i == j || !p.leq_[i][j]) continue;
      bool cover = true;
      for (Element k = 0; k <= n && cover; ++k)
        if (k != i && k != j && p.leq_[i][k] && p.leq_[k][j]) cover = false;
      if (cover) {
        p.up_[i].push_back(j);
        p.down_[j].push_back(i);
      }
    }
  }

  // Kahn's algorithm, smallest input index first.
  std::vector<std::size_t> indeg(n, 0);
  for (Element i = 0; i < n; ++i)
    for (Element j : p.up_[i])
      if (j < n) ++indeg[j];
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  while (!ready.empty()) {
    Element e = ready.top();
    ready.pop();
    p.topo_.push_back(e);
    for (Element j : p.up_[e])
      if (j < n && --indeg[j] == 0) ready.push(j);
  }

  for (Element e : p.topo_)
    for (Element j : p.up_[e]) p.cover_pairs_.emplace_back(e, j);

  // Longest / shortest chain DP from every source along the topological order.
  std::vector<Element> order = p.topo_;
  order.push_back(n);
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  p.longest_.assign(n + 1, std::vector<int>(n + 1, kUnreachable));
  p.shortest_.assign(n + 1, std::vector<int>(n + 1, kUnreachable));
  for (Element s = 0; s <= n; ++s) {
    auto& lo = p.longest_[s];
    auto& sh = p.shortest_[s];
    lo[s] = 0;
    sh[s] = 0;
    for (std::size_t k = pos[s]; k < order.size(); ++k) {
      Element u = order[k];
      if (lo[u] == kUnreachable) continue;
      for (Element v : p.up_[u]) {
        lo[v] = std::max(lo[v], lo[u] + 1);
        sh[v] = sh[v] == kUnreachable ? sh[u] + 1 : std::min(sh[v], sh[u] + 1);
      }
    }
  }
  return p;
}

const std::string& Poset::name(Element e) const {
  static const std::string top_name(kTopName);
  if (e == top()) return top_name;
  return names_.at(e);
}

std::optional<Element> Poset::find(std::string_view name) const {
  if (name == kTopName) return top();
  for (Element i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Element Poset::index(std::string_view name) const {
  auto e = find(name);
  if (!e) throw ValidationError("unknown element id '" + std::string(name) + "'");
  return *e;
}

bool Poset::covered_by(Element x, Element y) const {
  const auto& u = up_.at(x);
  return std::find(u.begin(), u.end(), y) != u.end();
}

std::vector<std::pair<Element, Element>> Poset::covers_in_p() const {
  std::vector<std::pair<Element, Element>> out;
  for (const auto& c : cover_pairs_)
    if (c.second != top()) out.push_back(c);
  return out;
}

int Poset::longest_chain(Element x, Element y) const {
  if (!leq(x, y)) throw PreconditionError("'" + name(x) + "' is not below '" + name(y) + "'");
  return longest_[x][y];
}

int Poset::shortest_chain(Element x, Element y) const {
  if (!leq(x, y)) throw PreconditionError("'" + name(x) + "' is not below '" + name(y) + "'");
  return shortest_[x][y];
}

int dist(const Poset& p, Element x, Element y) { return p.shortest_chain(x, y); }

std::int64_t qdist(const Poset& p, std::int64_t n, Element x, Element y) {
  const int len = n >= 0 ? p.longest_chain(x, y) : p.shortest_chain(x, y);
  return checked::mul(n, len);
}

std::vector<ElementSet> poset_ideals(const Poset& p) {
  // Include/exclude along the topological order; an element may join only
  // when all of its lower covers are in.
  const auto& topo = p.topological_order();
  std::vector<ElementSet> out;
  std::vector<char> in(p.size(), 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == topo.size()) {
      ElementSet s;
      for (Element e = 0; e < p.size(); ++e)
        if (in[e]) s.push_back(e);
      out.push_back(std::move(s));
      return;
    }
    Element e = topo[k];
    bool can = true;
    for (Element d : p.lower_covers(e))
      if (!in[d]) can = false;
    if (e != p.bottom()) self(self, k + 1);
    if (can) {
      in[e] = 1;
      self(self, k + 1);
      in[e] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

bool is_pure(const Poset& p) {
  return p.longest_chain(p.bottom(), p.top()) == p.shortest_chain(p.bottom(), p.top());
}

ElementSet p_nonmax(const Poset& p) {
  const int total = p.longest_chain(p.bottom(), p.top());
  ElementSet out;
  for (Element z = 0; z < p.size(); ++z)
    if (p.longest_chain(p.bottom(), z) + p.longest_chain(z, p.top()) != total) out.push_back(z);
  return out;
}

ElementSet p_nonmin(const Poset& p) {
  const int total = p.shortest_chain(p.bottom(), p.top());
  ElementSet out;
  for (Element z = 0; z < p.size(); ++z)
    if (p.shortest_chain(p.bottom(), z) + p.shortest_chain(z, p.top()) != total) out.push_back(z);
  return out;
}

ElementSet principal_filter(const Poset& p, Element w) {
  ElementSet out;
  for (Element z = 0; z < p.size(); ++z)
    if (p.leq(w, z)) out.push_back(z);
  return out;
}

std::string format_set(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += p.name(s[i]);
  }
  return out + "}";
}

}  // namespace hibi
