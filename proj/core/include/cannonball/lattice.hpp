#pragma once

// Exact integer geometry of close-packed sphere arrangements.
//
// A layer is a triangular grid spanned by p = (1, 0) and q = (1/2, sqrt(3)/2).
// Layer z is shifted horizontally by off(z)/3 * (p + q) where off(A) = 0,
// off(B) = 1, off(C) = 2, and sits at height z * sqrt(6)/3. Multiplying the
// horizontal coordinates by 3 makes every center integral:
//
//   X = 3u + off, Y = 3v + off, Z = layer.
//
// With norm(a, b) = a^2 + ab + b^2 in the 60-degree basis, two centers touch
// iff they share a layer and norm(dX, dY) = 9, or sit in adjacent layers and
// norm(dX, dY) = 3 (since norm/9 + 2/3 = 1).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cannonball {

/// Word over {A, B, C}, one letter per layer from layer 0 upward. No two
/// consecutive letters are equal.
class StackingSequence {
 public:
  /// Throws InputError on an empty word, a foreign letter, or a repeat.
  explicit StackingSequence(std::string_view letters);

  static StackingSequence fcc(int layers);  // ABCABC...
  static StackingSequence hcp(int layers);  // ABAB...

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  char letter(int layer) const;
  /// Horizontal offset of a layer in thirds of (p + q): 0, 1 or 2.
  int offset(int layer) const;
  const std::string& str() const noexcept { return letters_; }

  bool operator==(const StackingSequence&) const = default;

 private:
  std::string letters_;
};

struct GridVertex {
  int layer = 0;
  int u = 0;
  int v = 0;

  auto operator<=>(const GridVertex&) const = default;
};

std::string to_string(const GridVertex& v);  // "layer,u,v"

struct ScaledPosition {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  auto operator<=>(const ScaledPosition&) const = default;
};

/// a^2 + ab + b^2; nine times the squared length of a p + b q after scaling.
constexpr std::int64_t lattice_norm(std::int64_t a, std::int64_t b) {
  return a * a + a * b + b * b;
}

/// Inclusive (u, v) bounds of one layer.
struct LayerBox {
  int u_min = 0;
  int u_max = -1;
  int v_min = 0;
  int v_max = -1;

  bool empty() const noexcept { return u_max < u_min || v_max < v_min; }
  std::size_t size() const noexcept {
    return empty() ? 0
                   : static_cast<std::size_t>(u_max - u_min + 1) *
                         static_cast<std::size_t>(v_max - v_min + 1);
  }
  bool contains(int u, int v) const noexcept {
    return u >= u_min && u <= u_max && v >= v_min && v <= v_max;
  }
  bool operator==(const LayerBox&) const = default;
};

/// Finite window onto the infinite grid: one box per layer of the stacking.
/// Vertices are indexed densely in canonical (layer, u, v) order.
class GridRegion {
 public:
  /// Same box on every layer.
  GridRegion(StackingSequence stacking, LayerBox box);
  GridRegion(StackingSequence stacking, std::vector<LayerBox> boxes);

  const StackingSequence& stacking() const noexcept { return stacking_; }
  int layers() const noexcept { return stacking_.size(); }
  const LayerBox& box(int layer) const;
  std::span<const LayerBox> boxes() const noexcept { return boxes_; }

  std::size_t size() const noexcept { return layer_start_.back(); }
  bool contains(const GridVertex& v) const noexcept;
  std::optional<std::size_t> index_of(const GridVertex& v) const noexcept;
  GridVertex vertex_at(std::size_t index) const;
  /// All vertices in canonical order.
  std::vector<GridVertex> vertices() const;

  /// Every box grown by `ring` on each side.
  GridRegion padded(int ring = 1) const;

  bool operator==(const GridRegion& other) const {
    return stacking_ == other.stacking_ && boxes_ == other.boxes_;
  }

 private:
  StackingSequence stacking_;
  std::vector<LayerBox> boxes_;
  std::vector<std::size_t> layer_start_;  // prefix sums, size layers + 1
};

/// Three or four pairwise tangent vertices in canonical sorted order.
using Triangle = std::array<GridVertex, 3>;
using Tetrahedron = std::array<GridVertex, 4>;

ScaledPosition scaled_position(const GridVertex& v, const StackingSequence& s);

bool are_adjacent(const GridVertex& a, const GridVertex& b,
                  const StackingSequence& s);

/// Grid neighbors of `v` in the unbounded layers of `s` (at most 12),
/// canonical order. Layers outside [0, |s|) are skipped.
std::vector<GridVertex> grid_neighbors(const GridVertex& v,
                                       const StackingSequence& s);

/// Region vertices tangent to `v`, canonical order.
std::vector<GridVertex> neighbors(const GridVertex& v, const GridRegion& region);

std::vector<Triangle> triangles_containing(const GridVertex& v,
                                           const GridRegion& region);

std::vector<Tetrahedron> tetrahedra_containing(const GridVertex& v,
                                               const GridRegion& region);

/// The canonical proper 4-coloring: parity coloring on layer 0, then each
/// upper vertex takes the one color missing from the three vertices it rests
/// on. Every layer's coloring depends only on (u mod 2, v mod 2), so it is
/// stored as a 2x2 table per layer.
class BaseColoring {
 public:
  /// Throws InvariantFailure if some vertex rests on a triangle that is not
  /// 3-colored.
  explicit BaseColoring(const StackingSequence& s);

  int color(const GridVertex& v) const;
  int layers() const noexcept { return static_cast<int>(tables_.size()); }

 private:
  using Table = std::array<std::array<int, 2>, 2>;
  std::vector<Table> tables_;
};

int base_color(const GridVertex& v, const StackingSequence& s);

/// Layered coordinates of x p + y q + z r in the cubic close packing
/// (periodic ABC), where r = (p + q)/3 + one layer up.
GridVertex fcc_basis_to_layered(int x, int y, int z);

}  // namespace cannonball
