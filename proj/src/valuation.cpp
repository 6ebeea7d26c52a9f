#include "rog/valuation.hpp"

#include <stdexcept>
#include <string>

namespace rog {

void Valuation::check_item(int item) const {
  if (item < 1 || item > item_count())
    throw std::invalid_argument("item " + std::to_string(item) + " out of range [1," +
                                std::to_string(item_count()) + "]");
}

void Valuation::check_set(const ItemSet& s) const {
  if (s.max_item() > item_count())
    throw std::invalid_argument("item " + std::to_string(s.max_item()) + " out of range [1," +
                                std::to_string(item_count()) + "]");
}

std::int64_t Valuation::singleton_value(int item) const {
  check_item(item);
  ItemSet s(item_count());
  s.insert(item);
  return value(s);
}

std::int64_t Valuation::marginal(int item, const ItemSet& s) const {
  check_item(item);
  check_set(s);
  if (s.contains(item))
    throw std::invalid_argument("marginal of owned item " + std::to_string(item));
  ItemSet grown = s;
  grown.insert(item);
  return value(grown) - value(s);
}

namespace {

// Fallback tracker for oracles without incremental structure: keeps the
// owned set and answers with plain value differences.
class GenericTracker : public MarginalTracker {
 public:
  explicit GenericTracker(const Valuation& v) : v_(v), owned_(v.item_count()) {}
  void reset() override { owned_.clear(); }
  std::int64_t marginal(int item) const override { return v_.marginal(item, owned_); }
  void award(int item) override { owned_.insert(item); }
  void unaward(int item) override { owned_.erase(item); }

 private:
  const Valuation& v_;
  ItemSet owned_;
};

// Per-item count of incident edges not yet covered by the player's bundle.
// Awarding j covers every edge (j,u) with u unowned, so those u lose one.
class VertexCoverTracker : public MarginalTracker {
 public:
  explicit VertexCoverTracker(const Graph& g) : graph_(g), owned_(g.item_count()) {
    degrees_.resize(static_cast<std::size_t>(g.item_count()) + 1);
    for (int j = 1; j <= g.item_count(); ++j) degrees_[j] = g.degree(j);
    uncovered_ = degrees_;
  }

  void reset() override {
    uncovered_ = degrees_;
    owned_.clear();
  }

  std::int64_t marginal(int item) const override { return uncovered_[item]; }

  void award(int item) override {
    owned_.insert(item);
    for (int u : graph_.neighbors(item)) {
      if (!owned_.contains(u)) --uncovered_[u];
    }
  }

  void unaward(int item) override {
    owned_.erase(item);
    for (int u : graph_.neighbors(item)) {
      if (!owned_.contains(u)) ++uncovered_[u];
    }
  }

 private:
  const Graph& graph_;
  std::vector<std::int32_t> degrees_;
  std::vector<std::int32_t> uncovered_;
  ItemSet owned_;
};

class AdditiveTracker : public MarginalTracker {
 public:
  explicit AdditiveTracker(const std::vector<std::int64_t>& w) : weights_(w) {}
  void reset() override {}
  std::int64_t marginal(int item) const override { return weights_[item]; }
  void award(int) override {}
  void unaward(int) override {}

 private:
  const std::vector<std::int64_t>& weights_;
};

}  // namespace

std::unique_ptr<MarginalTracker> Valuation::make_tracker() const {
  return std::make_unique<GenericTracker>(*this);
}

std::int64_t VertexCoverValuation::value(const ItemSet& s) const {
  check_set(s);
  std::int64_t covered = 0;
  for (const auto& [a, b] : graph_.edges()) {
    if (s.contains(a) || s.contains(b)) ++covered;
  }
  return covered;
}

std::int64_t VertexCoverValuation::singleton_value(int item) const {
  check_item(item);
  return graph_.degree(item);
}

std::int64_t VertexCoverValuation::marginal(int item, const ItemSet& s) const {
  check_item(item);
  check_set(s);
  if (s.contains(item))
    throw std::invalid_argument("marginal of owned item " + std::to_string(item));
  std::int64_t shared = 0;
  for (int u : graph_.neighbors(item)) shared += s.contains(u) ? 1 : 0;
  return graph_.degree(item) - shared;
}

std::unique_ptr<MarginalTracker> VertexCoverValuation::make_tracker() const {
  return std::make_unique<VertexCoverTracker>(graph_);
}

AdditiveValuation::AdditiveValuation(int m, std::vector<std::int64_t> weights) : m_(m) {
  if (m < 1) throw std::invalid_argument("additive valuation needs at least one item");
  if (static_cast<int>(weights.size()) != m)
    throw std::invalid_argument("expected " + std::to_string(m) + " weights, got " +
                                std::to_string(weights.size()));
  for (std::int64_t w : weights)
    if (w < 0) throw std::invalid_argument("negative item weight");
  weights_.resize(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 1; j <= m; ++j) weights_[j] = weights[static_cast<std::size_t>(j) - 1];
}

std::int64_t AdditiveValuation::value(const ItemSet& s) const {
  check_set(s);
  std::int64_t total = 0;
  s.for_each([&](int j) { total += weights_[j]; });
  return total;
}

std::int64_t AdditiveValuation::singleton_value(int item) const {
  check_item(item);
  return weights_[item];
}

std::int64_t AdditiveValuation::marginal(int item, const ItemSet& s) const {
  check_item(item);
  check_set(s);
  if (s.contains(item))
    throw std::invalid_argument("marginal of owned item " + std::to_string(item));
  return weights_[item];
}

std::unique_ptr<MarginalTracker> AdditiveValuation::make_tracker() const {
  return std::make_unique<AdditiveTracker>(weights_);
}

namespace {

std::uint64_t pow3(int m) {
  std::uint64_t p = 1;
  for (int i = 0; i < m; ++i) {
    if (p > (~std::uint64_t{0}) / 3) return ~std::uint64_t{0};
    p *= 3;
  }
  return p;
}

ItemSet mask_to_set(std::uint64_t mask, int m) {
  ItemSet s(m);
  for (int j = 1; j <= m; ++j)
    if ((mask >> (j - 1)) & 1u) s.insert(j);
  return s;
}

}  // namespace

SubmodularityCheck check_monotone_submodular(
    const std::function<std::int64_t(const ItemSet&)>& oracle, int m, std::uint64_t pair_budget) {
  if (m < 0 || m > 62) throw std::invalid_argument("submodularity check limited to m <= 62");
  const std::uint64_t pairs = pow3(m);
  if (pairs > pair_budget)
    throw std::invalid_argument("submodularity check needs " + std::to_string(pairs) +
                                " set pairs, budget is " + std::to_string(pair_budget));

  SubmodularityCheck result;
  auto fail = [&](std::uint64_t s_mask, std::uint64_t t_mask, int j, const char* what) {
    result.passed = false;
    result.witness = SubmodularityWitness{mask_to_set(s_mask, m).to_vector(),
                                          mask_to_set(t_mask, m).to_vector(), j, what};
  };

  if (oracle(ItemSet(m)) != 0) {
    fail(0, 0, 0, "normalization");
    return result;
  }

  // Cache all 2^m values; m is small by the budget guard.
  std::vector<std::int64_t> val(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < val.size(); ++mask) val[mask] = oracle(mask_to_set(mask, m));

  const std::uint64_t all = (std::uint64_t{1} << m) - 1;
  for (int j = 1; j <= m; ++j) {
    const std::uint64_t jbit = std::uint64_t{1} << (j - 1);
    const std::uint64_t rest = all & ~jbit;
    // T ranges over subsets not containing j, S over subsets of T.
    for (std::uint64_t t = 0;; t = (t - rest) & rest) {
      const std::int64_t t_gain = val[t | jbit] - val[t];
      if (t_gain < 0) {
        fail(t, t, j, "monotonicity");
        return result;
      }
      for (std::uint64_t s = 0;; s = (s - t) & t) {
        if (val[s | jbit] - val[s] < t_gain) {
          fail(s, t, j, "submodularity");
          return result;
        }
        if (s == t) break;
      }
      if (t == rest) break;
    }
  }
  return result;
}

SubmodularityCheck check_monotone_submodular(const Valuation& v, std::uint64_t pair_budget) {
  return check_monotone_submodular([&](const ItemSet& s) { return v.value(s); }, v.item_count(),
                                   pair_budget);
}

}  // namespace rog
