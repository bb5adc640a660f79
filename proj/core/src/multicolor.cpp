#include "cannonball/multicolor.hpp"

#include <algorithm>
#include <sstream>

#include "cannonball/errors.hpp"
#include "cannonball/subcolor.hpp"

namespace cannonball {

const ColorSet& ColorAssignment::colors(const GridVertex& v) const {
  static const ColorSet kEmpty;
  auto it = sets_.find(v);
  return it == sets_.end() ? kEmpty : it->second;
}

int color_bound(int omega) { return (11 * omega + 5) / 6 + kBoundConstant; }

std::size_t induced_degree(const CannonballGraph& g, std::size_t i,
                           const std::vector<char>& members) {
  std::size_t deg = 0;
  for (auto j : g.neighbors_at(i)) deg += members[j] ? 1 : 0;
  return deg;
}

namespace {

std::vector<char> membership(const CannonballGraph& g, const std::vector<std::size_t>& list) {
  std::vector<char> in(g.grid_size(), 0);
  for (auto i : list) in[i] = 1;
  return in;
}

void grant(PipelineState& state, std::size_t i, PaletteColor c, int step) {
  state.assignment.add(state.g().vertex_at(i), c);
  state.step_grants[static_cast<std::size_t>(step)].insert(c);
}

bool held_nearby(const PipelineState& state, std::size_t i, int palette, int index) {
  for (auto j : state.g().neighbors_at(i)) {
    const auto& taken = state.ledger[j][static_cast<std::size_t>(palette)];
    if (std::find(taken.begin(), taken.end(), index) != taken.end()) return true;
  }
  return false;
}

// Index j of base palette c is free at vertex i iff it is above the demand of
// every color-c grid neighbor and no grid neighbor borrowed it already.
int palette_floor(const PipelineState& state, std::size_t i, int palette) {
  return max_neighbor_demand(state.g(), i, palette).value_or(0);
}

std::vector<int> free_indices(const PipelineState& state, std::size_t i, int palette,
                              int upto) {
  std::vector<int> out;
  for (int j = palette_floor(state, i, palette) + 1; j <= upto; ++j) {
    if (!held_nearby(state, i, palette, j)) out.push_back(j);
  }
  return out;
}

void borrow(PipelineState& state, std::size_t i, PaletteColor c, int step) {
  state.ledger[i][static_cast<std::size_t>(c.palette)].push_back(c.index);
  grant(state, i, c, step);
}

std::string describe_neighborhood(const PipelineState& state, std::size_t i,
                                  const std::vector<char>& in_g2) {
  const auto& g = state.g();
  std::ostringstream out;
  out << "{\"stacking\":\"" << g.stacking().str() << "\",\"vertex\":\""
      << to_string(g.vertex_at(i)) << "\",\"d\":" << g.demand_at(i)
      << ",\"kappa\":" << state.kappa[i] << ",\"bc\":" << state.base_color[i]
      << ",\"neighbors\":[";
  bool first = true;
  for (auto j : g.neighbors_at(i)) {
    out << (first ? "" : ",") << "{\"vertex\":\"" << to_string(g.vertex_at(j))
        << "\",\"d\":" << g.demand_at(j) << ",\"bc\":" << state.base_color[j]
        << ",\"in_g2\":" << (in_g2[j] ? "true" : "false") << "}";
    first = false;
  }
  out << "]}";
  return out.str();
}

}  // namespace

PipelineState step0(const CannonballGraph& g) {
  PipelineState state;
  state.graph = &g;
  const auto n = g.grid_size();
  state.base_color.resize(n);
  state.kappa.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    state.base_color[i] = g.base_color_at(i);
    state.kappa[i] = kappa_at(g, i);
  }
  state.omega = clique_numbers(g);
  state.base_cap = ceil_div(state.omega.omega3, 3);
  state.d1.assign(n, 0);
  state.d2.assign(n, 0);
  state.d3.assign(n, 0);
  state.ledger.resize(n);
  return state;
}

void step1(PipelineState& state) {
  const auto& g = state.g();
  for (auto i : g.support()) {
    const int d = g.demand_at(i);
    const int own = std::min(state.kappa[i], d);
    state.assignment.touch(g.vertex_at(i));
    for (int j = 1; j <= own; ++j) grant(state, i, {state.base_color[i], j}, 1);
    state.d1[i] = std::max(d - state.kappa[i], 0);
    if (state.d1[i] > 0) state.v1.push_back(i);
  }

  auto in_g1 = membership(g, state.v1);
  for (auto i : state.v1) {
    auto nbrs = g.neighbors_at(i);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      if (!in_g1[nbrs[a]]) continue;
      const auto u = nbrs[a];
      if (state.d1[i] + state.d1[u] > std::min(state.kappa[i], state.kappa[u])) {
        throw InvariantFailure("G1 edge " + to_string(g.vertex_at(i)) + "-" +
                               to_string(g.vertex_at(u)) + " exceeds the kappa bound");
      }
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (in_g1[nbrs[b]] && g.adjacent_at(u, nbrs[b])) {
          throw InvariantFailure("G1 contains the triangle " + to_string(g.vertex_at(i)) + " " +
                                 to_string(g.vertex_at(u)) + " " +
                                 to_string(g.vertex_at(nbrs[b])));
        }
      }
    }
  }
}

void step2(PipelineState& state) {
  const auto& g = state.g();
  auto in_g1 = membership(g, state.v1);
  for (auto i : state.v1) {
    state.d2[i] = state.d1[i];
    if (state.d1[i] <= state.kappa[i]) continue;

    if (induced_degree(g, i, in_g1) != 0) {
      throw InvariantFailure("very heavy vertex " + to_string(g.vertex_at(i)) +
                             " is not isolated in G1");
    }
    const int wanted = std::min(state.d1[i], state.kappa[i]);

    std::vector<PaletteColor> candidates;
    for (int c = 0; c < kBasePaletteCount; ++c) {
      if (c == state.base_color[i]) continue;
      for (int j : free_indices(state, i, c, state.base_cap)) candidates.push_back({c, j});
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      return std::pair(a.index, a.palette) < std::pair(b.index, b.palette);
    });

    int taken = 0;
    for (const auto& c : candidates) {
      if (taken == wanted) break;
      borrow(state, i, c, 2);
      ++taken;
    }
    if (taken < wanted) {
      state.bound_risk.push_back({2, g.vertex_at(i), wanted - taken});
      for (int j = state.base_cap + 1; taken < wanted; ++j) {
        for (int c = 0; c < kBasePaletteCount && taken < wanted; ++c) {
          if (c == state.base_color[i] || j <= palette_floor(state, i, c) ||
              held_nearby(state, i, c, j)) {
            continue;
          }
          borrow(state, i, {c, j}, 2);
          ++taken;
        }
      }
    }
    state.d2[i] = state.d1[i] - taken;
  }
  for (auto i : state.v1) {
    if (state.d2[i] > 0) state.v2.push_back(i);
  }

  // omega(G2) <= ceil(omega(G) / 3); G2 has no triangles, so edges suffice.
  const int limit = ceil_div(state.omega.omega(), 3);
  auto in_g2 = membership(g, state.v2);
  for (auto i : state.v2) {
    int heaviest = state.d2[i];
    for (auto j : g.neighbors_at(i)) {
      if (in_g2[j]) heaviest = std::max(heaviest, state.d2[i] + state.d2[j]);
    }
    if (heaviest > limit) {
      throw InvariantFailure("omega(G2) exceeds ceil(omega/3) at " + to_string(g.vertex_at(i)));
    }
  }
}

void step3(PipelineState& state) {
  const auto& g = state.g();
  auto in_g2 = membership(g, state.v2);

  std::vector<std::size_t> borrowers;
  for (auto i : state.v2) {
    auto deg = induced_degree(g, i, in_g2);
    if (deg > 4) {
      throw InvariantFailure("G2 vertex " + to_string(g.vertex_at(i)) + " has degree " +
                                 std::to_string(deg),
                             describe_neighborhood(state, i, in_g2));
    }
    if (deg == 4) borrowers.push_back(i);
  }

  for (auto i : borrowers) {
    unsigned free_mask = 0;
    for (int c = 0; c < kBasePaletteCount; ++c) {
      if (c == state.base_color[i]) continue;
      bool blocked = false;
      for (auto j : g.neighbors_at(i)) {
        blocked = blocked || (state.base_color[j] == c && in_g2[j]);
      }
      if (!blocked) free_mask |= 1u << c;
    }
    if (free_mask == 0) {
      throw InvariantFailure("degree-4 vertex " + to_string(g.vertex_at(i)) +
                                 " of G2 has no free base color",
                             describe_neighborhood(state, i, in_g2));
    }

    int best = -1;
    std::size_t best_count = 0;
    for (int c = 0; c < kBasePaletteCount; ++c) {
      if (!(free_mask & (1u << c))) continue;
      auto count = free_indices(state, i, c, state.base_cap).size();
      if (best < 0 || count > best_count) {
        best = c;
        best_count = count;
      }
    }

    const int need = state.d2[i];
    const int deficit = palette_deficit_at(g, i, best, state.kappa[i]);
    if (need > deficit) {
      throw InvariantFailure("residual demand " + std::to_string(need) + " of " +
                                 to_string(g.vertex_at(i)) + " exceeds D_" +
                                 std::to_string(best) + " = " + std::to_string(deficit),
                             describe_neighborhood(state, i, in_g2));
    }

    int taken = 0;
    for (int j : free_indices(state, i, best, state.base_cap)) {
      if (taken == need) break;
      borrow(state, i, {best, j}, 3);
      ++taken;
    }
    if (taken < need) {
      state.bound_risk.push_back({3, g.vertex_at(i), need - taken});
      for (int j = state.base_cap + 1; taken < need; ++j) {
        if (held_nearby(state, i, best, j)) continue;
        borrow(state, i, {best, j}, 3);
        ++taken;
      }
    }
    state.step3_choices.push_back({g.vertex_at(i), free_mask, best, deficit, taken});
    state.d3[i] = need - taken;
  }

  std::vector<char> is_borrower(g.grid_size(), 0);
  for (auto i : borrowers) is_borrower[i] = 1;
  for (auto i : state.v2) {
    if (!is_borrower[i]) state.d3[i] = state.d2[i];
    if (state.d3[i] > 0) state.v3.push_back(i);
  }

  auto in_g3 = membership(g, state.v3);
  for (auto i : state.v3) {
    if (induced_degree(g, i, in_g3) > 3) {
      throw InvariantFailure("G3 vertex " + to_string(g.vertex_at(i)) + " has degree above 3");
    }
  }
}

void step4(PipelineState& state) {
  const auto& g = state.g();
  if (state.v3.empty()) return;

  std::vector<std::size_t> local(g.grid_size(), state.v3.size());
  WeightedGraph h;
  h.demand.reserve(state.v3.size());
  for (std::size_t k = 0; k < state.v3.size(); ++k) {
    local[state.v3[k]] = k;
    h.demand.push_back(state.d3[state.v3[k]]);
  }
  h.adjacency.resize(state.v3.size());
  for (std::size_t k = 0; k < state.v3.size(); ++k) {
    for (auto j : g.neighbors_at(state.v3[k])) {
      if (local[j] < state.v3.size() && local[j] > k) h.add_edge(k, local[j]);
    }
  }

  auto coloring = three_color(h);
  auto sets = triple_split_multicolor(h, coloring, kAdditionalPalettes);
  for (std::size_t k = 0; k < state.v3.size(); ++k) {
    for (const auto& s : sets[k]) {
      for (int index : s.indices) grant(state, state.v3[k], {s.palette, index}, 4);
    }
  }
}

namespace {

void check_complete_and_proper(const CannonballGraph& g, const ColorAssignment& f) {
  for (auto i : g.support()) {
    auto v = g.vertex_at(i);
    const auto& mine = f.colors(v);
    if (mine.size() != static_cast<std::size_t>(g.demand_at(i))) {
      throw InvariantFailure("vertex " + to_string(v) + " received " +
                             std::to_string(mine.size()) + " colors for demand " +
                             std::to_string(g.demand_at(i)));
    }
    for (auto j : g.neighbors_at(i)) {
      if (j < i || g.demand_at(j) == 0) continue;
      const auto& theirs = f.colors(g.vertex_at(j));
      for (const auto& c : mine) {
        if (theirs.contains(c)) {
          throw InvariantFailure("adjacent vertices " + to_string(v) + " and " +
                                 to_string(g.vertex_at(j)) + " share a color");
        }
      }
    }
  }
}

SolveStats summarize(const ColorAssignment& f, const CliqueNumbers& omega) {
  SolveStats stats;
  std::set<PaletteColor> all;
  for (const auto& [v, set] : f.entries()) {
    for (const auto& c : set) {
      all.insert(c);
      if (c.is_base()) stats.max_base_index = std::max(stats.max_base_index, c.index);
    }
  }
  stats.colors_used = all.size();
  stats.omega = omega;
  stats.base_cap = ceil_div(omega.omega3, 3);
  stats.bound_value = color_bound(omega.omega());
  return stats;
}

}  // namespace

PipelineState run_pipeline(const CannonballGraph& g) {
  auto state = step0(g);
  step1(state);
  step2(state);
  step3(state);
  step4(state);
  check_complete_and_proper(g, state.assignment);
  return state;
}

SolveResult solve(const CannonballGraph& g) {
  auto state = run_pipeline(g);
  SolveResult result{std::move(state.assignment), {}};
  result.stats = summarize(result.assignment, state.omega);
  for (std::size_t s = 1; s < 5; ++s) result.stats.step_colors[s] = state.step_grants[s].size();
  result.stats.bound_risk = std::move(state.bound_risk);
  return result;
}

SolveResult naive_solve(const CannonballGraph& g) {
  SolveResult result;
  for (auto i : g.support()) {
    auto v = g.vertex_at(i);
    for (int j = 1; j <= g.demand_at(i); ++j) result.assignment.add(v, {g.base_color_at(i), j});
  }
  check_complete_and_proper(g, result.assignment);
  result.stats = summarize(result.assignment, clique_numbers(g));
  result.stats.step_colors[1] = result.stats.colors_used;
  return result;
}

}  // namespace cannonball
