#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hibi/labeling.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Finite lattice given by its order relation; join and meet tables are
/// derived at construction. Distributivity is checked on demand.
class FiniteLattice {
 public:
  /// `order` holds pairs a <= b (covers suffice, the closure is taken).
  /// Throws ValidationError on unknown ids, cycles, or missing joins/meets.
  static FiniteLattice build(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& order);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b] != 0; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  /// Exhaustive check of a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c).
  bool is_distributive() const;

 private:
  FiniteLattice() = default;
  std::vector<std::string> names_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<std::size_t>> join_;
  std::vector<std::vector<std::size_t>> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Nonempty ideals of P under inclusion, named "{x0,a,...}".
FiniteLattice lattice_from_poset(const Poset& p);

/// Subposet of join-irreducible elements (the bottom included).
/// Throws ValidationError when the lattice is not distributive.
Poset join_irreducibles(const FiniteLattice& h);

/// Indicator labelings 1_I of the nonempty ideals, in poset_ideals order.
std::vector<Labeling> hibi_generators(const Poset& p);

/// Order isomorphism test: invariant refinement plus backtracking.
bool isomorphic(const Poset& a, const Poset& b);

}  // namespace hibi
