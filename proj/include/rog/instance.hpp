#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rog/valuation.hpp"

namespace rog {

struct Player {
  std::string name;
  std::shared_ptr<const Valuation> valuation;  // immutable, shared freely
};

// An auction: n players with valuations over the shared items 1..m.
// Player order is also the preference order of the lowest-index tie rule.
class Instance {
 public:
  Instance(int m, std::vector<Player> players);

  int item_count() const { return m_; }
  int player_count() const { return static_cast<int>(players_.size()); }
  const Player& player(int i) const { return players_[static_cast<std::size_t>(i)]; }
  const std::vector<Player>& players() const { return players_; }
  const Valuation& valuation(int i) const { return *players_[static_cast<std::size_t>(i)].valuation; }

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  int m_;
  std::vector<Player> players_;
};

// The 3-player family with a star plus two staggered matchings:
//   player 1: edges (1,m) .. (m-1,m)
//   player 2: edges (1,2),(3,4) .. (m-2,m-1)
//   player 3: edges (2,3),(4,5) .. (m-3,m-2)
// Defined for odd m >= 5.
Instance lower_bound_instance(int m);

// n independent Erdos-Renyi G(m, edge_prob) vertex-cover players.
Instance random_instance(int n, int m, double edge_prob, std::uint64_t seed);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

Instance instance_from_json_text(const std::string& text);
std::string instance_to_json_text(const Instance& instance);

// FNV-1a over the canonical JSON text, as a 16-digit hex string. Embedded in
// every report so results can be tied back to the exact instance.
std::string instance_hash(const Instance& instance);

}  // namespace rog
