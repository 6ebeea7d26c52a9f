#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rog {

using Edge = std::pair<int, int>;

// Simple undirected graph on items 1..m. Construction validates the edge
// list: self-loops, out-of-range endpoints and duplicates (in either
// orientation) are input errors, not silently repaired.
class Graph {
 public:
  Graph(int m, std::vector<Edge> edges);

  int item_count() const { return m_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Normalized (a < b) and sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(int item) const { return static_cast<int>(adjacency_[item].size()); }
  const std::vector<int>& neighbors(int item) const { return adjacency_[item]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.m_ == b.m_ && a.edges_ == b.edges_;
  }

 private:
  int m_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;  // index 1..m, ascending neighbor lists
};

}  // namespace rog
