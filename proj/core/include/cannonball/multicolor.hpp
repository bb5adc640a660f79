#pragma once

// Multicoloring of weighted cannonball graphs within 11/6 * omega(G) + O(1)
// colors, plus the naive one-palette-per-base-color baseline.
//
// Pipeline:
//   step0  base color bc(v) and base function kappa(v) per vertex
//   step1  every vertex takes min(kappa, d) colors of its own base palette;
//          the still-hungry (heavy) vertices form the triangle-free G1
//   step2  very heavy vertices (isolated in G1) borrow up to kappa free
//          indices from the three other base palettes; leftovers form G2
//   step3  degree-4 vertices of G2 borrow the rest from a free base palette;
//          leftovers form G3 with maximum degree 3
//   step4  G3 is 3-colored and multicolored on additional palettes 4, 5, 6

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cannonball/graph.hpp"
#include "cannonball/lattice.hpp"

namespace cannonball {

inline constexpr int kBasePaletteCount = 4;
inline constexpr std::array<int, 3> kAdditionalPalettes{4, 5, 6};

/// Additive constant pinned for the color bound ceil(11/6 * omega) + C.
inline constexpr int kBoundConstant = 10;

struct PaletteColor {
  int palette = 0;
  int index = 0;  // 1-based

  bool is_base() const noexcept { return palette >= 0 && palette < kBasePaletteCount; }
  auto operator<=>(const PaletteColor&) const = default;
};

using ColorSet = std::set<PaletteColor>;

class ColorAssignment {
 public:
  void add(const GridVertex& v, PaletteColor c) { sets_[v].insert(c); }
  /// Registers `v` with an empty set if absent.
  void touch(const GridVertex& v) { sets_[v]; }
  const ColorSet& colors(const GridVertex& v) const;
  std::size_t count(const GridVertex& v) const { return colors(v).size(); }
  const std::map<GridVertex, ColorSet>& entries() const noexcept { return sets_; }
  bool empty() const noexcept { return sets_.empty(); }

  bool operator==(const ColorAssignment&) const = default;

 private:
  std::map<GridVertex, ColorSet> sets_;
};

/// ceil(11/6 * omega) + kBoundConstant.
int color_bound(int omega);

struct BoundRiskEvent {
  int step = 0;
  GridVertex vertex;
  int shortfall = 0;  // indices that had to come from above the base cap
};

struct SolveStats {
  std::size_t colors_used = 0;
  CliqueNumbers omega;
  /// Distinct colors granted in steps 1..4 (slot 0 unused).
  std::array<std::size_t, 5> step_colors{};
  int base_cap = 0;  // ceil(omega3 / 3)
  int max_base_index = 0;
  int bound_value = 0;
  std::vector<BoundRiskEvent> bound_risk;
};

/// Palette chosen by a degree-4 vertex in step 3.
struct Step3Choice {
  GridVertex vertex;
  unsigned candidates = 0;  // bit c set iff base color c was free
  int palette = 0;
  int deficit = 0;  // D_c(v) for the chosen palette
  int granted = 0;
};

/// Intermediate tables of one solve. Per-vertex vectors are indexed by the
/// graph's working-grid index.
struct PipelineState {
  const CannonballGraph* graph = nullptr;

  std::vector<int> base_color;
  std::vector<int> kappa;
  CliqueNumbers omega;
  int base_cap = 0;

  std::vector<int> d1, d2, d3;
  std::vector<std::size_t> v1, v2, v3;  // canonical order

  /// Borrowed indices per vertex and base palette.
  std::vector<std::array<std::vector<int>, kBasePaletteCount>> ledger;
  std::vector<Step3Choice> step3_choices;

  ColorAssignment assignment;
  std::array<std::set<PaletteColor>, 5> step_grants;
  std::vector<BoundRiskEvent> bound_risk;

  const CannonballGraph& g() const { return *graph; }
};

struct SolveResult {
  ColorAssignment assignment;
  SolveStats stats;
};

PipelineState step0(const CannonballGraph& g);
void step1(PipelineState& state);
void step2(PipelineState& state);
void step3(PipelineState& state);
void step4(PipelineState& state);

/// Runs steps 0-4 and checks the result; the state is kept for inspection.
/// Throws InvariantFailure if any structural claim fails.
PipelineState run_pipeline(const CannonballGraph& g);

SolveResult solve(const CannonballGraph& g);

/// Every vertex takes {(bc, 1) .. (bc, d)}.
SolveResult naive_solve(const CannonballGraph& g);

/// Degree of grid index `i` within the induced subgraph on `members`.
std::size_t induced_degree(const CannonballGraph& g, std::size_t i,
                           const std::vector<char>& members);

}  // namespace cannonball
