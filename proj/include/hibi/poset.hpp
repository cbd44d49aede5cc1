#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hibi {

/// Index of an element of P^+. Elements of P are 0..size()-1; the adjoined
/// top ∞ is Poset::top() == size().
using Element = std::size_t;

/// Sorted list of element indices.
using ElementSet = std::vector<Element>;

/// Reserved display name for the virtual top of P^+.
inline constexpr std::string_view kTopName = "inf";

/// A finite poset P with unique minimum x0, together with the virtual top ∞
/// of P^+. Immutable after construction.
///
/// All chain queries are answered from tables built once: longest and
/// shortest saturated chain lengths between every comparable pair of P^+.
class Poset {
 public:
  /// Validates and builds a poset from a (possibly redundant) cover list.
  /// Transitively implied pairs are dropped. Throws ValidationError on
  /// duplicate or reserved ids, unknown ids, cycles, or when `bottom` is not
  /// below every element.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& covers,
                     const std::string& bottom);

  std::size_t size() const noexcept { return names_.size(); }
  Element top() const noexcept { return names_.size(); }
  Element bottom() const noexcept { return bottom_; }

  const std::string& name(Element e) const;
  std::optional<Element> find(std::string_view name) const;
  /// Like find() but throws ValidationError for unknown names.
  Element index(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Order of P^+.
  bool leq(Element x, Element y) const { return leq_[x][y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  /// x ⋖ y in P^+.
  bool covered_by(Element x, Element y) const;

  const std::vector<Element>& upper_covers(Element e) const { return up_[e]; }
  const std::vector<Element>& lower_covers(Element e) const { return down_[e]; }
  /// Cover pairs of P^+ (including z ⋖ ∞ for maximal z), in topological order of the lower end.
  const std::vector<std::pair<Element, Element>>& cover_pairs() const noexcept { return cover_pairs_; }
  /// Cover pairs inside P only (no ∞), as supplied after transitive reduction.
  std::vector<std::pair<Element, Element>> covers_in_p() const;

  /// Elements of P, bottom first, ties broken by input order.
  const std::vector<Element>& topological_order() const noexcept { return topo_; }

  /// Longest / shortest saturated chain length from x to y in P^+.
  /// Throws PreconditionError if x is not below y.
  int longest_chain(Element x, Element y) const;
  int shortest_chain(Element x, Element y) const;

 private:
  Poset() = default;

  std::vector<std::string> names_;
  Element bottom_ = 0;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<std::pair<Element, Element>> cover_pairs_;
  std::vector<Element> topo_;
  std::vector<std::vector<int>> longest_;
  std::vector<std::vector<int>> shortest_;
};

/// Minimum length of a saturated chain from x to y.
int dist(const Poset& p, Element x, Element y);

/// n-th quasi-distance: n times the longest chain length for n >= 0, n times
/// the shortest for n < 0.
std::int64_t qdist(const Poset& p, std::int64_t n, Element x, Element y);

/// All nonempty down-sets of P (each contains x0), deterministic order.
std::vector<ElementSet> poset_ideals(const Poset& p);

/// Every maximal chain of P has the same length.
bool is_pure(const Poset& p);

/// Elements lying on no chain of P of maximal length.
ElementSet p_nonmax(const Poset& p);
/// Elements lying on no maximal chain of P of minimal length.
ElementSet p_nonmin(const Poset& p);

/// Principal filter {z in P : z >= w}.
ElementSet principal_filter(const Poset& p, Element w);

/// Renders a set as "{a,b,c}".
std::string format_set(const Poset& p, const ElementSet& s);

}  // namespace hibi
