#include "hibi/labeling.hpp"

#include <algorithm>

#include "hibi/error.hpp"

namespace hibi {

namespace {

std::size_t hash_values(std::span<const std::int64_t> vs) {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t v : vs) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void require_same_size(const Labeling& a, const Labeling& b) {
  if (a.size() != b.size()) throw PreconditionError("labelings over different posets");
}

}  // namespace

Labeling Labeling::indicator(std::size_t n, const ElementSet& s) {
  std::vector<std::int64_t> v(n, 0);
  for (Element e : s) v.at(e) = 1;
  return Labeling(std::move(v));
}

Labeling& Labeling::operator+=(const Labeling& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = checked::add(values_[i], o.values_[i]);
  return *this;
}

Labeling& Labeling::operator-=(const Labeling& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = checked::sub(values_[i], o.values_[i]);
  return *this;
}

Labeling Labeling::scaled(std::int64_t k) const {
  std::vector<std::int64_t> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked::mul(values_[i], k);
  return Labeling(std::move(v));
}

Labeling pointwise_max(const Labeling& a, const Labeling& b) {
  require_same_size(a, b);
  std::vector<std::int64_t> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a[i], b[i]);
  return Labeling(std::move(v));
}

Labeling pointwise_min(const Labeling& a, const Labeling& b) {
  require_same_size(a, b);
  std::vector<std::int64_t> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(a[i], b[i]);
  return Labeling(std::move(v));
}

Labeling floor_div(const Labeling& v, std::int64_t k) {
  if (k <= 0) throw PreconditionError("floor_div needs a positive divisor");
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::floor_div(v[i], k);
  return Labeling(std::move(out));
}

Labeling labeling_from(const Poset& p, const std::vector<std::pair<std::string, std::int64_t>>& values) {
  std::vector<std::int64_t> v(p.size(), 0);
  std::vector<char> seen(p.size(), 0);
  for (const auto& [name, value] : values) {
    Element e = p.index(name);
    if (e == p.top()) {
      if (value != 0) throw ValidationError("labeling must vanish at the top");
      continue;
    }
    v[e] = value;
    seen[e] = 1;
  }
  for (Element e = 0; e < p.size(); ++e)
    if (!seen[e]) throw ValidationError("labeling has no value for '" + p.name(e) + "'");
  return Labeling(std::move(v));
}

std::string format_labeling(const Poset& p, const Labeling& v) {
  std::string out;
  for (Element e = 0; e < p.size(); ++e) {
    if (e) out += ' ';
    out += p.name(e) + ":" + std::to_string(v[e]);
  }
  return out;
}

std::size_t LabelingHash::operator()(const Labeling& v) const noexcept { return hash_values(v.values()); }

std::size_t PointHash::operator()(const std::vector<std::int64_t>& v) const noexcept { return hash_values(v); }

}  // namespace hibi
