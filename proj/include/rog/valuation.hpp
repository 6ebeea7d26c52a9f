#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rog/graph.hpp"
#include "rog/itemset.hpp"

namespace rog {

// Tracks one player's marginal values while an allocation is being built.
// award() must only be called for items the player actually receives;
// unaward() undoes the most recent awards in LIFO order (backtracking).
class MarginalTracker {
 public:
  virtual ~MarginalTracker() = default;
  virtual void reset() = 0;
  virtual std::int64_t marginal(int item) const = 0;
  virtual void award(int item) = 0;
  virtual void unaward(int item) = 0;
};

// Monotone normalized set function accessed through value queries.
class Valuation {
 public:
  virtual ~Valuation() = default;

  virtual int item_count() const = 0;
  virtual std::int64_t value(const ItemSet& s) const = 0;
  virtual std::string kind() const = 0;

  // v({j}).
  virtual std::int64_t singleton_value(int item) const;

  // v(j | s) = v(s + j) - v(s). Asking for an item already in s is an error:
  // greedy call sites guarantee the item is unowned, so a hit means a bug.
  virtual std::int64_t marginal(int item, const ItemSet& s) const;

  virtual std::unique_ptr<MarginalTracker> make_tracker() const;

 protected:
  void check_item(int item) const;
  void check_set(const ItemSet& s) const;
};

// Counts the edges of a fixed graph with at least one endpoint in the query
// set. Adjacency and degrees are cached at construction; the marginal of j
// given s is degree(j) - |s ∩ neighbors(j)|, cross-checked in tests against
// the plain value difference.
class VertexCoverValuation : public Valuation {
 public:
  explicit VertexCoverValuation(Graph graph) : graph_(std::move(graph)) {}

  int item_count() const override { return graph_.item_count(); }
  std::int64_t value(const ItemSet& s) const override;
  std::int64_t singleton_value(int item) const override;
  std::int64_t marginal(int item, const ItemSet& s) const override;
  std::string kind() const override { return "vertex_cover"; }
  std::unique_ptr<MarginalTracker> make_tracker() const override;

  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

class AdditiveValuation : public Valuation {
 public:
  AdditiveValuation(int m, std::vector<std::int64_t> weights);

  int item_count() const override { return m_; }
  std::int64_t value(const ItemSet& s) const override;
  std::int64_t singleton_value(int item) const override;
  std::int64_t marginal(int item, const ItemSet& s) const override;
  std::string kind() const override { return "additive"; }
  std::unique_ptr<MarginalTracker> make_tracker() const override;

  const std::vector<std::int64_t>& weights() const { return weights_; }

 private:
  int m_;
  std::vector<std::int64_t> weights_;  // index 1..m
};

// Exhaustive monotonicity + diminishing-returns check of an arbitrary value
// oracle. Searches j ascending, then the superset T, then S ⊆ T, and stops
// at the first violation.
struct SubmodularityWitness {
  std::vector<int> s;
  std::vector<int> t;
  int item = 0;
  std::string violation;  // "monotonicity" | "submodularity" | "normalization"
};

struct SubmodularityCheck {
  bool passed = true;
  std::optional<SubmodularityWitness> witness;
};

// 3^m (S,T) pairs are enumerated; refuses if that exceeds the budget rather
// than silently sampling.
SubmodularityCheck check_monotone_submodular(
    const std::function<std::int64_t(const ItemSet&)>& oracle, int m,
    std::uint64_t pair_budget = 2'000'000);

SubmodularityCheck check_monotone_submodular(const Valuation& v,
                                             std::uint64_t pair_budget = 2'000'000);

}  // namespace rog
