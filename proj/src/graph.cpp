#include "rog/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rog {

namespace {

std::string edge_str(const Edge& e) {
  return "[" + std::to_string(e.first) + "," + std::to_string(e.second) + "]";
}

}  // namespace

Graph::Graph(int m, std::vector<Edge> edges) : m_(m) {
  if (m < 1) throw std::invalid_argument("graph needs at least one item");
  for (auto& e : edges) {
    if (e.first == e.second) throw std::invalid_argument("self-loop edge " + edge_str(e));
    if (e.first < 1 || e.first > m || e.second < 1 || e.second > m)
      throw std::invalid_argument("edge endpoint out of range [1," + std::to_string(m) + "]: " + edge_str(e));
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) throw std::invalid_argument("duplicate edge " + edge_str(*dup));
  edges_ = std::move(edges);

  adjacency_.assign(static_cast<std::size_t>(m) + 1, {});
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

}  // namespace rog
