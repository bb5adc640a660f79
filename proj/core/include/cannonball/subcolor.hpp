#pragma once

// Coloring subroutines on abstract weighted graphs: optimal multicoloring of
// bipartite graphs, constructive 3-coloring for maximum degree 3, and the
// 3/2-approximate multicoloring of 3-colored graphs built from them.

#include <array>
#include <cstddef>
#include <vector>

namespace cannonball {

struct WeightedGraph {
  std::vector<int> demand;
  std::vector<std::vector<std::size_t>> adjacency;

  WeightedGraph() = default;
  explicit WeightedGraph(std::vector<int> demands)
      : demand(std::move(demands)), adjacency(demand.size()) {}

  std::size_t size() const noexcept { return demand.size(); }
  /// Adds an undirected edge; ignores duplicates. Throws ContractViolation on
  /// a self-loop or an out-of-range endpoint.
  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const;
  std::size_t max_degree() const noexcept;
};

/// Weighted clique number of a triangle-free graph: max over edges and
/// single vertices. Throws ContractViolation if a triangle is present.
int triangle_free_clique_number(const WeightedGraph& h);

struct IndexedColorSet {
  int palette = 0;
  std::vector<int> indices;  // ascending, distinct, positive

  std::size_t size() const noexcept { return indices.size(); }
  bool operator==(const IndexedColorSet&) const = default;
};

/// Side 0 takes {1..d(v)}; side 1 takes {m(v)+1..m(v)+d(v)} with m(v) the
/// largest neighbor demand. Optimal: the indices used are exactly 1..omega(H).
/// Throws ContractViolation if `side` is not a proper 2-coloring.
std::vector<IndexedColorSet> bipartite_multicolor(const WeightedGraph& h,
                                                  const std::vector<int>& side, int palette);

/// Proper coloring with colors {0, 1, 2}. Requires maximum degree <= 3 and no
/// K4 component; throws ContractViolation otherwise.
std::vector<int> three_color(const WeightedGraph& h);

/// Exhaustive 3-coloring search, used as a fallback for small components.
/// Returns an empty vector if no proper 3-coloring exists.
std::vector<int> three_color_exhaustive(const WeightedGraph& h);

/// Splits H into H_1, H_2, H_3 (H_i drops color class i - 1), halves every
/// demand between the two subgraphs containing the vertex (ceil to the lower
/// index), and multicolors each H_i with bipartite_multicolor on palettes[i - 1].
/// Each vertex receives exactly d(v) colors; at most two entries per vertex.
std::vector<std::vector<IndexedColorSet>> triple_split_multicolor(
    const WeightedGraph& h, const std::vector<int>& coloring, std::array<int, 3> palettes);

/// Sum over palettes of the distinct indices appearing in `sets`.
std::size_t distinct_colors(const std::vector<std::vector<IndexedColorSet>>& sets);

}  // namespace cannonball
