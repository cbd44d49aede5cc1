#include "hibi/box_enumerator.hpp"

#include <algorithm>
#include <optional>

#include "hibi/error.hpp"

namespace hibi {

namespace {

class BoxSearch {
 public:
  BoxSearch(const Poset& p, const BoxConstraints& box, const std::function<void(const Labeling&)>& visit,
            std::size_t budget)
      : p_(p), box_(box), visit_(visit), budget_(budget), current_(Labeling::zero(p.size())) {
    const std::size_t n = p.size();
    if (box.lower.size() != n || box.upper.size() != n)
      throw PreconditionError("box bounds do not match the poset size");
    order_.assign(p.topological_order().rbegin(), p.topological_order().rend());
    below_.assign(n, {});
    qd_.assign(n, std::vector<std::int64_t>(n, 0));
    for (Element z = 0; z < n; ++z)
      for (Element w = 0; w < n; ++w)
        if (p.less(w, z)) {
          below_[z].push_back(w);
          qd_[w][z] = qdist(p, box.gap, w, z);
        }
    pins_.assign(n, {});
    for (const auto& pin : box.pins) {
      if (pin.element >= n) throw PreconditionError("pin on the top element");
      if (pin.anchor != p.top() && !p.less(pin.element, pin.anchor))
        throw PreconditionError("pin anchor must lie above the pinned element");
      pins_[pin.element].push_back(pin);
    }
  }

  std::size_t run() {
    std::vector<std::int64_t> lb(p_.size());
    for (Element z = 0; z < p_.size(); ++z)
      lb[z] = std::max(box_.lower[z], qdist(p_, box_.gap, z, p_.top()));
    descend(0, lb);
    return count_;
  }

 private:
  void descend(std::size_t k, const std::vector<std::int64_t>& lb) {
    if (k == order_.size()) {
      if (count_ == budget_) throw BudgetExceeded("enumeration exceeds budget of " + std::to_string(budget_) + " points");
      ++count_;
      visit_(current_);
      return;
    }
    const Element z = order_[k];
    std::int64_t lo = lb[z];
    std::int64_t hi = box_.upper[z];
    std::optional<std::int64_t> pinned;
    for (const auto& pin : pins_[z]) {
      const std::int64_t v = checked::add(current_[pin.anchor], pin.offset);
      if (pinned && *pinned != v) return;
      pinned = v;
    }
    if (pinned) {
      if (*pinned < lo || *pinned > hi) return;
      lo = hi = *pinned;
    }
    std::vector<std::int64_t> next(lb.size());
    for (std::int64_t v = lo; v <= hi; ++v) {
      current_.set(z, v);
      next = lb;
      bool feasible = true;
      for (Element w : below_[z]) {
        next[w] = std::max(next[w], checked::add(v, qd_[w][z]));
        if (next[w] > box_.upper[w]) {
          feasible = false;
          break;
        }
      }
      // Larger values only raise the propagated bounds further.
      if (!feasible) break;
      descend(k + 1, next);
    }
  }

  const Poset& p_;
  const BoxConstraints& box_;
  const std::function<void(const Labeling&)>& visit_;
  std::size_t budget_;
  Labeling current_;
  std::vector<Element> order_;
  std::vector<std::vector<Element>> below_;
  std::vector<std::vector<std::int64_t>> qd_;
  std::vector<std::vector<BoxConstraints::Pin>> pins_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t enumerate_box(const Poset& p, const BoxConstraints& box,
                          const std::function<void(const Labeling&)>& visit, std::size_t budget) {
  return BoxSearch(p, box, visit, budget).run();
}

}  // namespace hibi
