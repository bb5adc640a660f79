#pragma once

// Hand-rolled random generators for property tests. Everything is seeded so
// failures replay.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cannonball/graph.hpp"
#include "cannonball/lattice.hpp"
#include "cannonball/subcolor.hpp"

namespace gen {

using cannonball::CannonballGraph;
using cannonball::DemandEntry;
using cannonball::GridRegion;
using cannonball::GridVertex;
using cannonball::LayerBox;
using cannonball::StackingSequence;
using cannonball::WeightedGraph;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline StackingSequence random_stacking(Rng& rng, int layers) {
  static const char kLetters[] = {'A', 'B', 'C'};
  std::string s;
  int cur = rng.uniform(0, 2);
  s.push_back(kLetters[cur]);
  for (int i = 1; i < layers; ++i) {
    cur = (cur + rng.uniform(1, 2)) % 3;
    s.push_back(kLetters[cur]);
  }
  return StackingSequence(s);
}

inline CannonballGraph make_graph(const StackingSequence& s, LayerBox box,
                                  const std::vector<DemandEntry>& demands) {
  return cannonball::build_graph(GridRegion(s, box), demands);
}

/// Random demands on a small window: each vertex positive with probability
/// `density`, demand in [1, max_demand].
inline CannonballGraph random_instance(Rng& rng, int max_layers, int max_side, int max_demand,
                                       double density) {
  auto s = random_stacking(rng, rng.uniform(1, max_layers));
  LayerBox box{0, rng.uniform(0, max_side - 1), 0, rng.uniform(0, max_side - 1)};
  GridRegion region(s, box);
  std::vector<DemandEntry> demands;
  for (const auto& v : region.vertices()) {
    if (rng.chance(density)) demands.push_back({v, rng.uniform(1, max_demand)});
  }
  return cannonball::build_graph(region, demands);
}

/// At most `max_support` demanded vertices, demands in [1, max_demand], on a
/// window of at most 3 layers of 3 x 3.
inline CannonballGraph tiny_instance(Rng& rng, int max_support, int max_demand) {
  auto s = random_stacking(rng, rng.uniform(1, 3));
  GridRegion region(s, LayerBox{0, 2, 0, 2});
  auto vs = region.vertices();
  std::shuffle(vs.begin(), vs.end(), rng.engine());
  const auto k = static_cast<std::size_t>(rng.uniform(1, max_support));
  std::vector<DemandEntry> demands;
  for (std::size_t i = 0; i < std::min(k, vs.size()); ++i) {
    demands.push_back({vs[i], rng.uniform(1, max_demand)});
  }
  return cannonball::build_graph(region, demands);
}

/// The four mutually tangent vertices used for clique instances: a layer-0
/// triangle and the layer-1 vertex resting on it (stacking "AB").
inline std::vector<GridVertex> tetrahedron_vertices() {
  return {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
}

/// Clique of `demands.size()` (1..4) tangent vertices.
inline CannonballGraph clique_instance(const std::vector<int>& demands) {
  auto vs = tetrahedron_vertices();
  std::vector<DemandEntry> entries;
  for (std::size_t i = 0; i < demands.size(); ++i) entries.push_back({vs[i], demands[i]});
  return make_graph(StackingSequence("AB"), LayerBox{0, 1, 0, 1}, entries);
}

struct Bipartite {
  WeightedGraph h;
  std::vector<int> side;
};

inline Bipartite random_bipartite(Rng& rng, int max_vertices, int max_demand) {
  const int n = rng.uniform(1, max_vertices);
  Bipartite b;
  for (int i = 0; i < n; ++i) {
    b.h.demand.push_back(rng.uniform(0, max_demand));
    b.side.push_back(rng.uniform(0, 1));
  }
  b.h.adjacency.resize(static_cast<std::size_t>(n));
  const double p = rng.uniform(5, 40) / 100.0;
  for (std::size_t i = 0; i < b.side.size(); ++i) {
    for (std::size_t j = i + 1; j < b.side.size(); ++j) {
      if (b.side[i] != b.side[j] && rng.chance(p)) b.h.add_edge(i, j);
    }
  }
  return b;
}

/// Triangle-free graph of maximum degree <= 3 carrying a planted proper
/// 3-coloring (so it is 3-colorable).
inline WeightedGraph random_subcubic(Rng& rng, int max_vertices, int max_demand) {
  const int n = rng.uniform(1, max_vertices);
  WeightedGraph h;
  std::vector<int> planted;
  for (int i = 0; i < n; ++i) {
    h.demand.push_back(rng.uniform(1, max_demand));
    planted.push_back(rng.uniform(0, 2));
  }
  h.adjacency.resize(static_cast<std::size_t>(n));
  const int attempts = 3 * n;
  for (int t = 0; t < attempts; ++t) {
    auto a = static_cast<std::size_t>(rng.uniform(0, n - 1));
    auto b = static_cast<std::size_t>(rng.uniform(0, n - 1));
    if (a == b || planted[a] == planted[b] || h.has_edge(a, b)) continue;
    if (h.adjacency[a].size() >= 3 || h.adjacency[b].size() >= 3) continue;
    bool closes_triangle = false;
    for (auto w : h.adjacency[a]) closes_triangle = closes_triangle || h.has_edge(w, b);
    if (closes_triangle) continue;
    h.add_edge(a, b);
  }
  return h;
}

/// Uniform demand k on every vertex of a width x height window.
inline CannonballGraph uniform_window(const StackingSequence& s, int width, int height, int k) {
  GridRegion region(s, LayerBox{0, width - 1, 0, height - 1});
  std::vector<DemandEntry> demands;
  for (const auto& v : region.vertices()) demands.push_back({v, k});
  return cannonball::build_graph(region, demands);
}

}  // namespace gen
