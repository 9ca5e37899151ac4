#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "skillfence/canonical.hpp"
#include "skillfence/catalog.hpp"
#include "skillfence/distance.hpp"
#include "skillfence/errors.hpp"

namespace skillfence {

// All pairwise invocation distances of a catalog, computed once and shared
// by graph pruning at any threshold and by the invocation simulator.
class DistanceMatrix {
 public:
  static DistanceMatrix build(const Catalog& catalog, const CostMatrix& costs) {
    check_unique_ids(catalog);
    DistanceMatrix dm;
    std::vector<const Skill*> ordered;
    ordered.reserve(catalog.size());
    for (const auto& s : catalog) {
      if (s.phonemes.phonemes.empty())
        throw ValidationError("skill '" + s.id + "' has unresolved phonemes");
      ordered.push_back(&s);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const Skill* a, const Skill* b) { return a->id < b->id; });

    dm.ids_.reserve(ordered.size());
    for (const auto* s : ordered) {
      dm.index_[s->id] = dm.ids_.size();
      dm.ids_.push_back(s->id);
    }

    detail::SeqEncoder enc(costs);
    std::vector<detail::EncodedSeq> encoded;
    std::vector<size_t> lengths;
    encoded.reserve(ordered.size());
    for (const auto* s : ordered) {
      encoded.push_back(enc.encode(s->phonemes.phonemes));
      lengths.push_back(s->phonemes.phonemes.size());
    }

    const size_t n = ordered.size();
    dm.tri_.assign(n * (n - 1) / 2, 0.0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        double wl = detail::weighted_edit_distance(encoded[i], encoded[j], enc);
        double len = static_cast<double>(std::max(lengths[i], lengths[j]));
        dm.tri_[dm.tri_index(i, j)] = kDistanceScale * wl / len;
      }
    }
    return dm;
  }

  const std::vector<std::string>& ids() const { return ids_; }
  size_t size() const { return ids_.size(); }
  bool contains(const std::string& id) const { return index_.count(id) > 0; }

  double at(size_t i, size_t j) const {
    if (i == j) return 0.0;
    return tri_[tri_index(std::min(i, j), std::max(i, j))];
  }

  double at(const std::string& a, const std::string& b) const {
    return at(index_at(a), index_at(b));
  }

  size_t index_at(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
      throw ValidationError("unknown skill id '" + id + "'");
    return it->second;
  }

 private:
  size_t tri_index(size_t i, size_t j) const {
    // i < j; row-major packed upper triangle
    return i * (2 * ids_.size() - i - 1) / 2 + (j - i - 1);
  }

  std::vector<std::string> ids_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<double> tri_;
};

struct Neighbor {
  std::string id;
  double distance;

  bool operator==(const Neighbor&) const = default;
};

// Skill graph with edges kept only at phonetic distance <= threshold
// (inclusive). Immutable after construction.
class PhoneticGraph {
 public:
  PhoneticGraph() = default;

  static PhoneticGraph from_distances(const DistanceMatrix& dm, double threshold) {
    if (threshold < 0) throw ValidationError("negative graph threshold");
    PhoneticGraph g;
    g.threshold_ = threshold;
    for (const auto& id : dm.ids()) g.adj_[id];  // isolated vertices stay listed
    const size_t n = dm.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        double d = dm.at(i, j);
        if (d <= threshold) {
          g.adj_[dm.ids()[i]].push_back({dm.ids()[j], d});
          g.adj_[dm.ids()[j]].push_back({dm.ids()[i], d});
          ++g.edge_count_;
        }
      }
    }
    for (auto& [id, neighbors] : g.adj_) g.sort_neighbors(neighbors);
    return g;
  }

  double threshold() const { return threshold_; }
  size_t edge_count() const { return edge_count_; }
  size_t skill_count() const { return adj_.size(); }

  bool contains(const std::string& id) const { return adj_.count(id) > 0; }

  std::vector<std::string> skill_ids() const {
    std::vector<std::string> out;
    out.reserve(adj_.size());
    for (const auto& [id, _] : adj_) out.push_back(id);
    return out;
  }

  // Ascending by distance, ties by id.
  const std::vector<Neighbor>& neighbors(const std::string& id) const {
    auto it = adj_.find(id);
    if (it == adj_.end())
      throw ValidationError("unknown skill id '" + id + "'");
    return it->second;
  }

  Json to_json() const {
    Json j;
    j["threshold"] = threshold_;
    j["skills"] = skill_ids();
    Json edges = Json::array();
    for (const auto& [a, neighbors] : adj_) {
      for (const auto& nb : neighbors) {
        if (a < nb.id) {
          Json e;
          e["a"] = a;
          e["b"] = nb.id;
          e["d"] = nb.distance;
          edges.push_back(std::move(e));
        }
      }
    }
    j["edges"] = std::move(edges);
    return j;
  }

  static PhoneticGraph from_json(const Json& j) {
    PhoneticGraph g;
    g.threshold_ = j.at("threshold").get<double>();
    if (j.contains("skills"))
      for (const auto& id : j.at("skills")) g.adj_[id.get<std::string>()];
    for (const auto& e : j.at("edges")) {
      std::string a = e.at("a").get<std::string>();
      std::string b = e.at("b").get<std::string>();
      double d = e.at("d").get<double>();
      if (d > g.threshold_)
        throw ValidationError("edge above threshold in graph file");
      g.adj_[a].push_back({b, d});
      g.adj_[b].push_back({a, d});
      ++g.edge_count_;
    }
    for (auto& [id, neighbors] : g.adj_) g.sort_neighbors(neighbors);
    return g;
  }

 private:
  static void sort_neighbors(std::vector<Neighbor>& neighbors) {
    std::sort(neighbors.begin(), neighbors.end(),
              [](const Neighbor& x, const Neighbor& y) {
                if (x.distance != y.distance) return x.distance < y.distance;
                return x.id < y.id;
              });
  }

  double threshold_ = 0.0;
  std::map<std::string, std::vector<Neighbor>> adj_;
  size_t edge_count_ = 0;
};

inline PhoneticGraph build_graph(const Catalog& catalog, const CostMatrix& costs,
                                 double threshold) {
  return PhoneticGraph::from_distances(DistanceMatrix::build(catalog, costs),
                                       threshold);
}

}  // namespace skillfence
