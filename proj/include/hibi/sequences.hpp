#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hibi/labeling.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Zig-zag (y_0, x_1, y_1, ..., y_{t-1}, x_t) in P minus the bottom. The
/// bookends x_0 (bottom) and y_t (top) are implicit.
struct CondNSeq {
  std::vector<Element> items;

  std::size_t t() const noexcept { return items.size() / 2; }
  bool empty() const noexcept { return items.empty(); }

  friend bool operator==(const CondNSeq&, const CondNSeq&) = default;
  friend auto operator<=>(const CondNSeq&, const CondNSeq&) = default;
};

/// x_i for 0 <= i <= t (x_0 is the bottom).
Element seq_x(const Poset& p, const CondNSeq& s, std::size_t i);
/// y_i for 0 <= i <= t (y_t is the top).
Element seq_y(const Poset& p, const CondNSeq& s, std::size_t i);

CondNSeq seq_from_names(const Poset& p, const std::vector<std::string>& names);
/// "(y,x)", or "()" for the empty sequence.
std::string format_seq(const Poset& p, const CondNSeq& s);

bool satisfies_condN(const Poset& p, const CondNSeq& s);

/// Alternating sum over a zig-zag w_0 <= z_0 >= w_1 <= ... <= z_l of P^+.
std::int64_t q_value(const Poset& p, std::int64_t m, const std::vector<Element>& zigzag);
/// q(x_i, y_i, ..., x_j, y_j) along the sequence with bookends.
std::int64_t seq_q_value(const Poset& p, std::int64_t m, const CondNSeq& s, std::size_t i, std::size_t j);

bool is_q_reduced(const Poset& p, std::int64_t m, const CondNSeq& s);

/// All q^(eps)-reduced condition-N sequences, ordered by t then lexicographically.
std::vector<CondNSeq> enumerate_N(const Poset& p, int eps);

struct MuValues {
  std::vector<std::int64_t> at_x;  // index 0..t
  std::vector<std::int64_t> at_y;  // index 0..t, at_y[t] == 0
};

MuValues mu(const Poset& p, std::int64_t n, const CondNSeq& s);
Labeling nu_down(const Poset& p, std::int64_t n, const CondNSeq& s);
Labeling nu_up(const Poset& p, std::int64_t n, const CondNSeq& s);

struct ShiftedFamily {
  MuValues mu;
  Labeling down;
  Labeling up;
};

/// mu_s, nu_down_s, nu_up_s: mu lowered by one at every index below s.
ShiftedFamily shifted_family(const Poset& p, std::int64_t eps, const CondNSeq& s, std::size_t shift);

/// True iff nu(x_i) - nu(y_i) = qdist(n, x_i, y_i) for every 0 <= i <= t.
bool tight_along(const Poset& p, std::int64_t n, const CondNSeq& s, const Labeling& v);

/// First reduced sequence (canonical order) along which v is tight.
std::optional<CondNSeq> find_witness_sequence(const Poset& p, std::int64_t n, const Labeling& v);
/// As above but throws PreconditionError when no witness exists.
CondNSeq witness_sequence(const Poset& p, std::int64_t n, const Labeling& v);

std::int64_t q0(const Poset& p, std::int64_t n);
std::int64_t q_max(const Poset& p, std::int64_t n);

}  // namespace hibi
