#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

/// Integer map ν on P^+ with ν(∞) = 0, stored on P only. It is the exponent
/// vector of the Laurent monomial T^ν.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<std::int64_t> values) : values_(std::move(values)) {}

  static Labeling zero(std::size_t n) { return Labeling(std::vector<std::int64_t>(n, 0)); }
  /// 0/1 indicator of a subset of P.
  static Labeling indicator(std::size_t n, const ElementSet& s);

  std::size_t size() const noexcept { return values_.size(); }

  /// Value at an element of P^+; the top (index size()) reads 0.
  std::int64_t operator[](Element e) const { return e == values_.size() ? 0 : values_.at(e); }
  void set(Element e, std::int64_t v) { values_.at(e) = v; }

  std::span<const std::int64_t> values() const noexcept { return values_; }

  Labeling& operator+=(const Labeling& o);
  Labeling& operator-=(const Labeling& o);
  friend Labeling operator+(Labeling a, const Labeling& b) { return a += b; }
  friend Labeling operator-(Labeling a, const Labeling& b) { return a -= b; }
  /// Multiplies every value by k (checked).
  Labeling scaled(std::int64_t k) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling&, const Labeling&) = default;

 private:
  std::vector<std::int64_t> values_;
};

Labeling pointwise_max(const Labeling& a, const Labeling& b);
Labeling pointwise_min(const Labeling& a, const Labeling& b);
/// ⌊ν/k⌋ coordinatewise, k > 0.
Labeling floor_div(const Labeling& v, std::int64_t k);

/// deg T^ν = ν(x0).
inline std::int64_t degree(const Poset& p, const Labeling& v) { return v[p.bottom()]; }

/// Labeling from (name, value) pairs; every element of P must be listed.
Labeling labeling_from(const Poset& p, const std::vector<std::pair<std::string, std::int64_t>>& values);

/// "x0:-2 w:-1 ..." in input order.
std::string format_labeling(const Poset& p, const Labeling& v);

struct LabelingHash {
  std::size_t operator()(const Labeling& v) const noexcept;
};

/// Hash for raw integer points (used for polytopes that are not labelings).
struct PointHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept;
};

}  // namespace hibi
