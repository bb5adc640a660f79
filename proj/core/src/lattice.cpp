#include "cannonball/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cannonball/errors.hpp"

namespace cannonball {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod2(int a) { return a & 1; }

// In-layer unit steps in (u, v).
constexpr std::array<std::array<int, 2>, 6> kInLayerSteps{{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

// Scaled horizontal displacements of norm 3, grouped by residue mod 3.
constexpr std::array<std::array<int, 2>, 3> kShiftResidue1{{{1, 1}, {-2, 1}, {1, -2}}};
constexpr std::array<std::array<int, 2>, 3> kShiftResidue2{{{-1, -1}, {2, -1}, {-1, 2}}};

// (du, dv) of the three vertices in a layer with offset `to` touching a vertex
// in an adjacent layer with offset `from`.
std::array<std::array<int, 2>, 3> cross_layer_steps(int from, int to) {
  int residue = ((to - from) % 3 + 3) % 3;
  const auto& shifts = residue == 1 ? kShiftResidue1 : kShiftResidue2;
  std::array<std::array<int, 2>, 3> steps{};
  for (std::size_t i = 0; i < 3; ++i) {
    steps[i] = {(shifts[i][0] + from - to) / 3, (shifts[i][1] + from - to) / 3};
  }
  return steps;
}

void check_layer(const GridVertex& v, const StackingSequence& s) {
  if (v.layer < 0 || v.layer >= s.size()) {
    throw DomainError("layer " + std::to_string(v.layer) +
                      " outside stacking of length " + std::to_string(s.size()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// StackingSequence

StackingSequence::StackingSequence(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) throw InputError("stacking sequence is empty");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    char c = letters_[i];
    if (c != 'A' && c != 'B' && c != 'C') {
      throw InputError(std::string("stacking letter '") + c + "' not in {A,B,C}");
    }
    if (i > 0 && letters_[i - 1] == c) {
      throw InputError("stacking sequence repeats '" + std::string(1, c) +
                       "' at layer " + std::to_string(i));
    }
  }
}

StackingSequence StackingSequence::fcc(int layers) {
  if (layers < 1) throw InputError("stacking needs at least one layer");
  std::string s;
  for (int i = 0; i < layers; ++i) s.push_back("ABC"[i % 3]);
  return StackingSequence(s);
}

StackingSequence StackingSequence::hcp(int layers) {
  if (layers < 1) throw InputError("stacking needs at least one layer");
  std::string s;
  for (int i = 0; i < layers; ++i) s.push_back("AB"[i % 2]);
  return StackingSequence(s);
}

char StackingSequence::letter(int layer) const {
  if (layer < 0 || layer >= size()) {
    throw DomainError("layer " + std::to_string(layer) + " outside stacking");
  }
  return letters_[static_cast<std::size_t>(layer)];
}

int StackingSequence::offset(int layer) const { return letter(layer) - 'A'; }

std::string to_string(const GridVertex& v) {
  std::ostringstream out;
  out << v.layer << ',' << v.u << ',' << v.v;
  return out.str();
}

// ---------------------------------------------------------------------------
// GridRegion

GridRegion::GridRegion(StackingSequence stacking, LayerBox box)
    : GridRegion(stacking, std::vector<LayerBox>(
                               static_cast<std::size_t>(stacking.size()), box)) {}

GridRegion::GridRegion(StackingSequence stacking, std::vector<LayerBox> boxes)
    : stacking_(std::move(stacking)), boxes_(std::move(boxes)) {
  if (static_cast<int>(boxes_.size()) != stacking_.size()) {
    throw InputError("region needs one box per layer");
  }
  layer_start_.reserve(boxes_.size() + 1);
  layer_start_.push_back(0);
  for (const auto& b : boxes_) layer_start_.push_back(layer_start_.back() + b.size());
}

const LayerBox& GridRegion::box(int layer) const {
  if (layer < 0 || layer >= layers()) throw DomainError("layer outside region");
  return boxes_[static_cast<std::size_t>(layer)];
}

bool GridRegion::contains(const GridVertex& v) const noexcept {
  return v.layer >= 0 && v.layer < layers() &&
         boxes_[static_cast<std::size_t>(v.layer)].contains(v.u, v.v);
}

std::optional<std::size_t> GridRegion::index_of(const GridVertex& v) const noexcept {
  if (!contains(v)) return std::nullopt;
  const auto& b = boxes_[static_cast<std::size_t>(v.layer)];
  auto height = static_cast<std::size_t>(b.v_max - b.v_min + 1);
  return layer_start_[static_cast<std::size_t>(v.layer)] +
         static_cast<std::size_t>(v.u - b.u_min) * height +
         static_cast<std::size_t>(v.v - b.v_min);
}

GridVertex GridRegion::vertex_at(std::size_t index) const {
  if (index >= size()) throw DomainError("vertex index outside region");
  auto it = std::upper_bound(layer_start_.begin(), layer_start_.end(), index);
  auto layer = static_cast<std::size_t>(it - layer_start_.begin() - 1);
  const auto& b = boxes_[layer];
  auto local = index - layer_start_[layer];
  auto height = static_cast<std::size_t>(b.v_max - b.v_min + 1);
  return {static_cast<int>(layer), b.u_min + static_cast<int>(local / height),
          b.v_min + static_cast<int>(local % height)};
}

std::vector<GridVertex> GridRegion::vertices() const {
  std::vector<GridVertex> out;
  out.reserve(size());
  for (int z = 0; z < layers(); ++z) {
    const auto& b = boxes_[static_cast<std::size_t>(z)];
    if (b.empty()) continue;
    for (int u = b.u_min; u <= b.u_max; ++u) {
      for (int v = b.v_min; v <= b.v_max; ++v) out.push_back({z, u, v});
    }
  }
  return out;
}

GridRegion GridRegion::padded(int ring) const {
  std::vector<LayerBox> grown = boxes_;
  for (auto& b : grown) {
    if (b.empty()) continue;
    b.u_min -= ring;
    b.u_max += ring;
    b.v_min -= ring;
    b.v_max += ring;
  }
  return GridRegion(stacking_, std::move(grown));
}

// ---------------------------------------------------------------------------
// Geometry

ScaledPosition scaled_position(const GridVertex& v, const StackingSequence& s) {
  check_layer(v, s);
  std::int64_t off = s.offset(v.layer);
  return {3 * std::int64_t{v.u} + off, 3 * std::int64_t{v.v} + off, v.layer};
}

bool are_adjacent(const GridVertex& a, const GridVertex& b, const StackingSequence& s) {
  auto pa = scaled_position(a, s);
  auto pb = scaled_position(b, s);
  auto dz = pa.z - pb.z;
  auto norm = lattice_norm(pa.x - pb.x, pa.y - pb.y);
  if (dz == 0) return norm == 9;
  if (dz == 1 || dz == -1) return norm == 3;
  return false;
}

std::vector<GridVertex> grid_neighbors(const GridVertex& v, const StackingSequence& s) {
  check_layer(v, s);
  std::vector<GridVertex> out;
  out.reserve(12);
  for (int dz : {-1, 1}) {
    int z = v.layer + dz;
    if (z < 0 || z >= s.size()) continue;
    for (const auto& step : cross_layer_steps(s.offset(v.layer), s.offset(z))) {
      out.push_back({z, v.u + step[0], v.v + step[1]});
    }
  }
  for (const auto& step : kInLayerSteps) {
    out.push_back({v.layer, v.u + step[0], v.v + step[1]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GridVertex> neighbors(const GridVertex& v, const GridRegion& region) {
  if (!region.contains(v)) throw DomainError("vertex " + to_string(v) + " outside region");
  auto all = grid_neighbors(v, region.stacking());
  std::erase_if(all, [&](const GridVertex& w) { return !region.contains(w); });
  return all;
}

std::vector<Triangle> triangles_containing(const GridVertex& v, const GridRegion& region) {
  const auto& s = region.stacking();
  auto nbrs = neighbors(v, region);
  std::vector<Triangle> out;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!are_adjacent(nbrs[i], nbrs[j], s)) continue;
      Triangle t{v, nbrs[i], nbrs[j]};
      std::sort(t.begin(), t.end());
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tetrahedron> tetrahedra_containing(const GridVertex& v,
                                               const GridRegion& region) {
  const auto& s = region.stacking();
  auto nbrs = neighbors(v, region);
  std::vector<Tetrahedron> out;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!are_adjacent(nbrs[i], nbrs[j], s)) continue;
      for (std::size_t k = j + 1; k < nbrs.size(); ++k) {
        if (!are_adjacent(nbrs[i], nbrs[k], s) || !are_adjacent(nbrs[j], nbrs[k], s)) {
          continue;
        }
        Tetrahedron t{v, nbrs[i], nbrs[j], nbrs[k]};
        std::sort(t.begin(), t.end());
        out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Base coloring

BaseColoring::BaseColoring(const StackingSequence& s) {
  tables_.reserve(static_cast<std::size_t>(s.size()));
  Table base{};
  for (int pu = 0; pu < 2; ++pu) {
    for (int pv = 0; pv < 2; ++pv) base[pu][pv] = pu + 2 * pv;
  }
  tables_.push_back(base);

  for (int z = 1; z < s.size(); ++z) {
    const Table& below = tables_.back();
    auto steps = cross_layer_steps(s.offset(z), s.offset(z - 1));
    Table next{};
    for (int pu = 0; pu < 2; ++pu) {
      for (int pv = 0; pv < 2; ++pv) {
        unsigned seen = 0;
        for (const auto& step : steps) {
          seen |= 1u << below[mod2(pu + step[0])][mod2(pv + step[1])];
        }
        if (std::popcount(seen) != 3) {
          throw InvariantFailure(
              "base coloring cannot be extended to layer " + std::to_string(z),
              "stacking=" + s.str() + " parity=(" + std::to_string(pu) + "," +
                  std::to_string(pv) + ")");
        }
        next[pu][pv] = std::countr_zero(~seen & 0xFu);
      }
    }
    tables_.push_back(next);
  }
}

int BaseColoring::color(const GridVertex& v) const {
  if (v.layer < 0 || v.layer >= layers()) {
    throw DomainError("layer " + std::to_string(v.layer) + " outside base coloring");
  }
  return tables_[static_cast<std::size_t>(v.layer)][mod2(v.u)][mod2(v.v)];
}

int base_color(const GridVertex& v, const StackingSequence& s) {
  check_layer(v, s);
  // Only the layers up to v are needed.
  StackingSequence prefix(std::string_view(s.str()).substr(0, static_cast<std::size_t>(v.layer) + 1));
  return BaseColoring(prefix).color(v);
}

GridVertex fcc_basis_to_layered(int x, int y, int z) {
  int shift = floor_div(z, 3);
  return {z, x + shift, y + shift};
}

}  // namespace cannonball
