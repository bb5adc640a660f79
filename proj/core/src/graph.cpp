#include "cannonball/graph.hpp"

#include <algorithm>
#include <numeric>

#include "cannonball/errors.hpp"

namespace cannonball {

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::light:
      return "light";
    case VertexClass::heavy:
      return "heavy";
    case VertexClass::very_heavy:
      return "very_heavy";
  }
  return "unknown";
}

CannonballGraph::CannonballGraph(GridRegion region, GridRegion grid)
    : region_(std::move(region)), grid_(std::move(grid)) {}

CannonballGraph CannonballGraph::build(GridRegion region,
                                       std::span<const DemandEntry> demands,
                                       Padding padding) {
  GridRegion grid = padding == Padding::ring ? region.padded(1) : region;
  CannonballGraph g(std::move(region), std::move(grid));

  const auto n = g.grid_.size();
  g.demand_.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (const auto& entry : demands) {
    if (entry.demand < 0) {
      throw InputError("negative demand " + std::to_string(entry.demand) + " at " +
                       to_string(entry.vertex));
    }
    if (!g.region_.contains(entry.vertex)) {
      throw InputError("vertex " + to_string(entry.vertex) + " outside region");
    }
    auto i = *g.grid_.index_of(entry.vertex);
    if (seen[i]) throw InputError("duplicate vertex " + to_string(entry.vertex));
    seen[i] = true;
    g.demand_[i] = entry.demand;
  }

  BaseColoring coloring(g.stacking());
  g.base_color_.resize(n);
  g.adjacency_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = g.grid_.vertex_at(i);
    g.base_color_[i] = coloring.color(v);
    for (const auto& w : neighbors(v, g.grid_)) g.adjacency_[i].push_back(*g.grid_.index_of(w));
    if (g.demand_[i] > 0) g.support_.push_back(i);
  }
  return g;
}

CannonballGraph build_graph(const GridRegion& region, std::span<const DemandEntry> demands,
                            Padding padding) {
  return CannonballGraph::build(region, demands, padding);
}

int CannonballGraph::demand(const GridVertex& v) const noexcept {
  auto i = grid_.index_of(v);
  return i ? demand_[*i] : 0;
}

bool CannonballGraph::adjacent_at(std::size_t i, std::size_t j) const {
  const auto& row = adjacency_[i];
  return std::binary_search(row.begin(), row.end(), j);
}

std::vector<GridVertex> CannonballGraph::support_vertices() const {
  std::vector<GridVertex> out;
  out.reserve(support_.size());
  for (auto i : support_) out.push_back(grid_.vertex_at(i));
  return out;
}

int CannonballGraph::total_demand() const noexcept {
  return std::accumulate(demand_.begin(), demand_.end(), 0);
}

CliqueNumbers clique_numbers(const CannonballGraph& g) {
  CliqueNumbers w;
  auto bump = [](int& slot, int value) { slot = std::max(slot, value); };
  for (auto i : g.support()) {
    const int di = g.demand_at(i);
    bump(w.omega1, di);
    auto nbrs = g.neighbors_at(i);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      const int da = g.demand_at(nbrs[a]);
      bump(w.omega2, di + da);
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (!g.adjacent_at(nbrs[a], nbrs[b])) continue;
        const int db = g.demand_at(nbrs[b]);
        bump(w.omega3, di + da + db);
        for (std::size_t c = b + 1; c < nbrs.size(); ++c) {
          if (!g.adjacent_at(nbrs[a], nbrs[c]) || !g.adjacent_at(nbrs[b], nbrs[c])) continue;
          bump(w.omega4, di + da + db + g.demand_at(nbrs[c]));
        }
      }
    }
  }
  // A clique of size at most i is also one of size at most i + 1.
  w.omega2 = std::max(w.omega2, w.omega1);
  w.omega3 = std::max(w.omega3, w.omega2);
  w.omega4 = std::max(w.omega4, w.omega3);
  return w;
}

int kappa_at(const CannonballGraph& g, std::size_t i) {
  auto nbrs = g.neighbors_at(i);
  int best = -1;
  const int di = g.demand_at(i);
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      if (!g.adjacent_at(nbrs[a], nbrs[b])) continue;
      best = std::max(best, ceil_div(di + g.demand_at(nbrs[a]) + g.demand_at(nbrs[b]), 3));
    }
  }
  if (best < 0) {
    throw DomainError("vertex " + to_string(g.vertex_at(i)) +
                      " lies in no grid triangle; build the graph with Padding::ring");
  }
  return best;
}

int kappa(const CannonballGraph& g, const GridVertex& v) {
  auto i = g.index_of(v);
  if (!i) throw DomainError("vertex " + to_string(v) + " outside the working grid");
  return kappa_at(g, *i);
}

VertexClass classify(int demand, int kappa_value) {
  if (demand > 2 * kappa_value) return VertexClass::very_heavy;
  if (demand > kappa_value) return VertexClass::heavy;
  return VertexClass::light;
}

VertexClass classify(const CannonballGraph& g, const GridVertex& v) {
  return classify(g.demand(v), kappa(g, v));
}

std::optional<int> max_neighbor_demand(const CannonballGraph& g, std::size_t i, int color) {
  std::optional<int> best;
  for (auto j : g.neighbors_at(i)) {
    if (g.base_color_at(j) != color) continue;
    best = std::max(best.value_or(0), g.demand_at(j));
  }
  return best;
}

int palette_deficit_at(const CannonballGraph& g, std::size_t i, int color, int kappa_value) {
  if (color == g.base_color_at(i)) {
    throw DomainError("palette deficit asked for the vertex's own base color");
  }
  auto m = max_neighbor_demand(g, i, color);
  if (!m) {
    throw DomainError("vertex " + to_string(g.vertex_at(i)) + " has no neighbor of color " +
                      std::to_string(color) + "; build the graph with Padding::ring");
  }
  return kappa_value - *m;
}

int palette_deficit(const CannonballGraph& g, const GridVertex& v, int color) {
  auto i = g.index_of(v);
  if (!i) throw DomainError("vertex " + to_string(v) + " outside the working grid");
  if (color < 0 || color > 3) throw DomainError("base colors are 0..3");
  return palette_deficit_at(g, *i, color, kappa_at(g, *i));
}

}  // namespace cannonball
