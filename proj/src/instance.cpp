#include "rog/instance.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rog/rng.hpp"

namespace rog {

using ordered_json = nlohmann::ordered_json;

Instance::Instance(int m, std::vector<Player> players) : m_(m), players_(std::move(players)) {
  if (m < 1) throw std::invalid_argument("instance needs at least one item");
  if (players_.empty()) throw std::invalid_argument("instance needs at least one player");
  for (const auto& p : players_) {
    if (!p.valuation) throw std::invalid_argument("player without valuation");
    if (p.valuation->item_count() != m)
      throw std::invalid_argument("player \"" + p.name + "\" is over " +
                                  std::to_string(p.valuation->item_count()) + " items, instance has " +
                                  std::to_string(m));
  }
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.m_ != b.m_ || a.players_.size() != b.players_.size()) return false;
  for (std::size_t i = 0; i < a.players_.size(); ++i) {
    const auto& pa = a.players_[i];
    const auto& pb = b.players_[i];
    if (pa.name != pb.name) return false;
    if (pa.valuation->kind() != pb.valuation->kind()) return false;
    if (const auto* va = dynamic_cast<const VertexCoverValuation*>(pa.valuation.get())) {
      const auto* vb = dynamic_cast<const VertexCoverValuation*>(pb.valuation.get());
      if (!vb || !(va->graph() == vb->graph())) return false;
    } else if (const auto* wa = dynamic_cast<const AdditiveValuation*>(pa.valuation.get())) {
      const auto* wb = dynamic_cast<const AdditiveValuation*>(pb.valuation.get());
      if (!wb || wa->weights() != wb->weights()) return false;
    } else {
      return false;
    }
  }
  return true;
}

Instance lower_bound_instance(int m) {
  if (m < 5 || m % 2 == 0)
    throw std::invalid_argument("lower-bound family needs odd m >= 5, got " + std::to_string(m));
  std::vector<Edge> star, outer_matching, inner_matching;
  for (int j = 1; j < m; ++j) star.emplace_back(j, m);
  for (int j = 1; j + 1 < m; j += 2) outer_matching.emplace_back(j, j + 1);
  for (int j = 2; j + 1 < m - 1; j += 2) inner_matching.emplace_back(j, j + 1);
  std::vector<Player> players;
  players.push_back({"p1", std::make_shared<VertexCoverValuation>(Graph(m, std::move(star)))});
  players.push_back({"p2", std::make_shared<VertexCoverValuation>(Graph(m, std::move(outer_matching)))});
  players.push_back({"p3", std::make_shared<VertexCoverValuation>(Graph(m, std::move(inner_matching)))});
  return Instance(m, std::move(players));
}

Instance random_instance(int n, int m, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one player");
  if (m < 1) throw std::invalid_argument("need at least one item");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw std::invalid_argument("edge probability must be in [0,1]");
  Rng rng(seed);
  std::vector<Player> players;
  players.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<Edge> edges;
    for (int a = 1; a <= m; ++a) {
      for (int b = a + 1; b <= m; ++b) {
        if (rng.uniform01() < edge_prob) edges.emplace_back(a, b);
      }
    }
    players.push_back(
        {"p" + std::to_string(i), std::make_shared<VertexCoverValuation>(Graph(m, std::move(edges)))});
  }
  return Instance(m, std::move(players));
}

namespace {

void require_keys(const ordered_json& obj, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& where) {
  for (const char* key : required) {
    if (!obj.contains(key)) throw std::invalid_argument(where + ": missing field \"" + key + "\"");
  }
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known) throw std::invalid_argument(where + ": unknown field \"" + key + "\"");
  }
}

}  // namespace

Instance instance_from_json_text(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("instance file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("instance file must be a JSON object");
  require_keys(doc, {"m", "players"}, {}, "instance");
  if (!doc["m"].is_number_integer()) throw std::invalid_argument("\"m\" must be an integer");
  const int m = doc["m"].get<int>();
  if (!doc["players"].is_array() || doc["players"].empty())
    throw std::invalid_argument("\"players\" must be a non-empty array");

  std::vector<Player> players;
  int index = 0;
  for (const auto& pj : doc["players"]) {
    ++index;
    const std::string where = "player " + std::to_string(index);
    if (!pj.is_object()) throw std::invalid_argument(where + ": must be an object");
    if (!pj.contains("kind") || !pj["kind"].is_string())
      throw std::invalid_argument(where + ": missing string field \"kind\"");
    const std::string kind = pj["kind"].get<std::string>();
    const std::string name = pj.contains("name") ? pj["name"].get<std::string>()
                                                 : "p" + std::to_string(index);
    if (kind == "vertex_cover") {
      require_keys(pj, {"kind", "edges"}, {"name"}, where);
      if (!pj["edges"].is_array()) throw std::invalid_argument(where + ": \"edges\" must be an array");
      std::vector<Edge> edges;
      for (const auto& ej : pj["edges"]) {
        if (!ej.is_array() || ej.size() != 2 || !ej[0].is_number_integer() || !ej[1].is_number_integer())
          throw std::invalid_argument(where + ": each edge must be a pair of integers");
        edges.emplace_back(ej[0].get<int>(), ej[1].get<int>());
      }
      try {
        players.push_back({name, std::make_shared<VertexCoverValuation>(Graph(m, std::move(edges)))});
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
      }
    } else if (kind == "additive") {
      require_keys(pj, {"kind", "weights"}, {"name"}, where);
      if (!pj["weights"].is_array())
        throw std::invalid_argument(where + ": \"weights\" must be an array");
      std::vector<std::int64_t> weights;
      for (const auto& wj : pj["weights"]) {
        if (!wj.is_number_integer()) throw std::invalid_argument(where + ": weights must be integers");
        weights.push_back(wj.get<std::int64_t>());
      }
      try {
        players.push_back({name, std::make_shared<AdditiveValuation>(m, std::move(weights))});
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
      }
    } else {
      throw std::invalid_argument(where + ": unknown kind \"" + kind + "\"");
    }
  }
  return Instance(m, std::move(players));
}

std::string instance_to_json_text(const Instance& instance) {
  ordered_json doc;
  doc["m"] = instance.item_count();
  doc["players"] = ordered_json::array();
  for (const auto& p : instance.players()) {
    ordered_json pj;
    pj["name"] = p.name;
    pj["kind"] = p.valuation->kind();
    if (const auto* vc = dynamic_cast<const VertexCoverValuation*>(p.valuation.get())) {
      auto edges = ordered_json::array();
      for (const auto& [a, b] : vc->graph().edges()) edges.push_back({a, b});
      pj["edges"] = std::move(edges);
    } else if (const auto* add = dynamic_cast<const AdditiveValuation*>(p.valuation.get())) {
      auto weights = ordered_json::array();
      for (int j = 1; j <= instance.item_count(); ++j) weights.push_back(add->weights()[j]);
      pj["weights"] = std::move(weights);
    } else {
      throw std::logic_error("unserializable valuation kind " + p.valuation->kind());
    }
    doc["players"].push_back(std::move(pj));
  }
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json_text(buf.str());
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write instance file: " + path);
  out << instance_to_json_text(instance);
}

std::string instance_hash(const Instance& instance) {
  const std::string text = instance_to_json_text(instance);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rog
