#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cannonball/lattice.hpp"

namespace cannonball {

struct DemandEntry {
  GridVertex vertex;
  int demand = 0;
};

enum class VertexClass { light, heavy, very_heavy };

std::string_view to_string(VertexClass c);

/// Maximum clique weight over cliques of at most 1, 2, 3, 4 vertices.
struct CliqueNumbers {
  int omega1 = 0;
  int omega2 = 0;
  int omega3 = 0;
  int omega4 = 0;

  int omega() const noexcept { return omega4; }
  bool operator==(const CliqueNumbers&) const = default;
};

enum class Padding {
  none,  // use the region exactly as given
  ring,  // grow each layer box by one zero-demand ring
};

/// Demand-weighted contact graph over a grid region.
///
/// Internally every query runs over the working grid: the region grown by one
/// zero-demand ring, which reproduces every triangle and neighbor of the
/// infinite grid that touches the instance. Layers above the top and below the
/// bottom are not materialized; they never raise a triangle weight above an
/// in-layer triangle through the same edge.
class CannonballGraph {
 public:
  /// Throws InputError on negative demand, duplicate vertex, or a vertex
  /// outside `region`.
  static CannonballGraph build(GridRegion region, std::span<const DemandEntry> demands,
                               Padding padding = Padding::ring);

  const GridRegion& region() const noexcept { return region_; }
  const GridRegion& grid() const noexcept { return grid_; }
  const StackingSequence& stacking() const noexcept { return region_.stacking(); }

  /// d(v); 0 for any vertex without demand, including vertices off the grid.
  int demand(const GridVertex& v) const noexcept;

  // Index-based access over the working grid (canonical order).
  std::size_t grid_size() const noexcept { return demand_.size(); }
  std::optional<std::size_t> index_of(const GridVertex& v) const noexcept {
    return grid_.index_of(v);
  }
  GridVertex vertex_at(std::size_t i) const { return grid_.vertex_at(i); }
  int demand_at(std::size_t i) const { return demand_[i]; }
  int base_color_at(std::size_t i) const { return base_color_[i]; }
  std::span<const std::size_t> neighbors_at(std::size_t i) const { return adjacency_[i]; }
  bool adjacent_at(std::size_t i, std::size_t j) const;

  /// Indices of vertices with positive demand, canonical order.
  std::span<const std::size_t> support() const noexcept { return support_; }
  std::vector<GridVertex> support_vertices() const;
  int total_demand() const noexcept;

 private:
  CannonballGraph(GridRegion region, GridRegion grid);

  GridRegion region_;
  GridRegion grid_;
  std::vector<int> demand_;
  std::vector<int> base_color_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> support_;
};

CannonballGraph build_graph(const GridRegion& region, std::span<const DemandEntry> demands,
                            Padding padding = Padding::ring);

CliqueNumbers clique_numbers(const CannonballGraph& g);

/// Max over grid triangles {v, u, t} of ceil((d(u) + d(v) + d(t)) / 3).
/// Throws DomainError when `v` is off the working grid or lies in no triangle.
int kappa(const CannonballGraph& g, const GridVertex& v);
int kappa_at(const CannonballGraph& g, std::size_t i);

VertexClass classify(const CannonballGraph& g, const GridVertex& v);
VertexClass classify(int demand, int kappa_value);

/// D_c(v) = kappa(v) - max{d(u) : u grid neighbor of v, bc(u) = c}.
/// Throws DomainError when c is v's own base color or v has no neighbor of
/// color c on the working grid.
int palette_deficit(const CannonballGraph& g, const GridVertex& v, int color);
int palette_deficit_at(const CannonballGraph& g, std::size_t i, int color, int kappa_value);

/// Largest demand among grid neighbors of color `color`, or nullopt if none.
std::optional<int> max_neighbor_demand(const CannonballGraph& g, std::size_t i, int color);

constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace cannonball
