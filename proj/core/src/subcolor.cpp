#include "cannonball/subcolor.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "cannonball/errors.hpp"

namespace cannonball {

void WeightedGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) throw ContractViolation("edge endpoint out of range");
  if (a == b) throw ContractViolation("self-loop at vertex " + std::to_string(a));
  if (has_edge(a, b)) return;
  adjacency[a].push_back(b);
  adjacency[b].push_back(a);
  std::sort(adjacency[a].begin(), adjacency[a].end());
  std::sort(adjacency[b].begin(), adjacency[b].end());
}

bool WeightedGraph::has_edge(std::size_t a, std::size_t b) const {
  const auto& row = adjacency[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::size_t WeightedGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& row : adjacency) best = std::max(best, row.size());
  return best;
}

int triangle_free_clique_number(const WeightedGraph& h) {
  int best = 0;
  for (std::size_t v = 0; v < h.size(); ++v) {
    best = std::max(best, h.demand[v]);
    const auto& row = h.adjacency[v];
    for (std::size_t a = 0; a < row.size(); ++a) {
      best = std::max(best, h.demand[v] + h.demand[row[a]]);
      for (std::size_t b = a + 1; b < row.size(); ++b) {
        if (h.has_edge(row[a], row[b])) {
          throw ContractViolation("graph has a triangle at vertex " + std::to_string(v));
        }
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Bipartite multicoloring

std::vector<IndexedColorSet> bipartite_multicolor(const WeightedGraph& h,
                                                  const std::vector<int>& side, int palette) {
  if (side.size() != h.size()) throw ContractViolation("2-coloring has the wrong size");
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (side[v] != 0 && side[v] != 1) throw ContractViolation("sides must be 0 or 1");
    if (h.demand[v] < 0) throw ContractViolation("negative demand");
    for (auto w : h.adjacency[v]) {
      if (side[v] == side[w]) {
        throw ContractViolation("2-coloring is improper on edge " + std::to_string(v) + "-" +
                                std::to_string(w));
      }
    }
  }

  std::vector<IndexedColorSet> out(h.size());
  for (std::size_t v = 0; v < h.size(); ++v) {
    int first = 1;
    if (side[v] == 1) {
      int m = 0;
      for (auto w : h.adjacency[v]) m = std::max(m, h.demand[w]);
      first = m + 1;
    }
    out[v].palette = palette;
    out[v].indices.resize(static_cast<std::size_t>(h.demand[v]));
    std::iota(out[v].indices.begin(), out[v].indices.end(), first);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3-coloring for maximum degree 3

namespace {

constexpr int kUncolored = -1;

int smallest_free_color(const WeightedGraph& h, std::size_t v, const std::vector<int>& color) {
  unsigned used = 0;
  for (auto w : h.adjacency[v]) {
    if (color[w] >= 0) used |= 1u << color[w];
  }
  for (int c = 0; c < 3; ++c) {
    if (!(used & (1u << c))) return c;
  }
  return kUncolored;
}

std::vector<std::size_t> bfs_order(const WeightedGraph& h, std::size_t root,
                                   const std::vector<char>& allowed) {
  std::vector<std::size_t> order{root};
  std::vector<char> seen(h.size(), 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto w : h.adjacency[order[head]]) {
      if (allowed[w] && !seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
  return order;
}

// Vertices with degree <= 2 are removed until none is left; the removed ones
// are colored in reverse removal order, each seeing at most 2 colored
// neighbors. Returns the vertices that survived (the 3-regular core).
std::vector<std::size_t> peel_and_color(const WeightedGraph& h, std::vector<int>& color) {
  const auto n = h.size();
  std::vector<std::size_t> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<char> queued(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = h.adjacency[v].size();
    if (degree[v] <= 2) {
      queue.push_back(v);
      queued[v] = 1;
    }
  }
  std::vector<std::size_t> stack;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    removed[v] = 1;
    stack.push_back(v);
    for (auto w : h.adjacency[v]) {
      if (removed[w]) continue;
      if (--degree[w] <= 2 && !queued[w]) {
        queued[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    color[*it] = smallest_free_color(h, *it, color);
    if (color[*it] == kUncolored) throw InvariantFailure("peeled vertex has no free color");
  }
  std::vector<std::size_t> core;
  for (std::size_t v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return core;
}

bool connected_without(const WeightedGraph& h, const std::vector<std::size_t>& component,
                       std::size_t skip_a, std::size_t skip_b) {
  std::vector<char> allowed(h.size(), 0);
  for (auto v : component) allowed[v] = 1;
  allowed[skip_a] = allowed[skip_b] = 0;
  std::size_t start = component.front();
  for (auto v : component) {
    if (allowed[v]) {
      start = v;
      break;
    }
  }
  return bfs_order(h, start, allowed).size() + 2 == component.size();
}

// Constructive Brooks step for a connected 3-regular component: a root r with
// non-adjacent neighbors a, b such that removing a and b keeps the rest
// connected. Color a and b alike, then greedy in reverse BFS order from r.
bool color_cubic_by_root(const WeightedGraph& h, const std::vector<std::size_t>& component,
                         std::vector<int>& color) {
  for (auto r : component) {
    const auto& nb = h.adjacency[r];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        auto a = nb[i];
        auto b = nb[j];
        if (h.has_edge(a, b) || !connected_without(h, component, a, b)) continue;

        std::vector<char> allowed(h.size(), 0);
        for (auto v : component) allowed[v] = 1;
        allowed[a] = allowed[b] = 0;
        color[a] = color[b] = 0;
        auto order = bfs_order(h, r, allowed);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
          color[*it] = smallest_free_color(h, *it, color);
          if (color[*it] == kUncolored) {
            for (auto v : component) color[v] = kUncolored;
            return false;
          }
        }
        return true;
      }
    }
  }
  return false;
}

// Cubic component with a bridge x-y: each side has a degree-2 vertex once the
// bridge is gone, so it colors greedily from that vertex. The y side is then
// recolored by a color rotation if x and y clash.
bool color_cubic_by_bridge(const WeightedGraph& h, const std::vector<std::size_t>& component,
                           std::vector<int>& color) {
  for (auto x : component) {
    for (auto y : h.adjacency[x]) {
      if (y < x) continue;
      std::vector<char> allowed(h.size(), 0);
      for (auto v : component) allowed[v] = 1;
      // BFS from x avoiding the edge x-y.
      std::vector<std::size_t> side_x{x};
      std::vector<char> seen(h.size(), 0);
      seen[x] = 1;
      for (std::size_t head = 0; head < side_x.size(); ++head) {
        auto v = side_x[head];
        for (auto w : h.adjacency[v]) {
          if ((v == x && w == y) || !allowed[w] || seen[w]) continue;
          seen[w] = 1;
          side_x.push_back(w);
        }
      }
      if (seen[y]) continue;  // not a bridge

      auto color_side = [&](std::size_t root, std::size_t other) {
        std::vector<char> side_allowed(h.size(), 0);
        for (auto v : component) side_allowed[v] = (seen[v] == seen[root]) ? 1 : 0;
        auto order = bfs_order(h, root, side_allowed);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
          unsigned used = 0;
          for (auto w : h.adjacency[*it]) {
            if ((*it == root && w == other) || color[w] < 0) continue;
            used |= 1u << color[w];
          }
          int c = 0;
          while (c < 3 && (used & (1u << c))) ++c;
          if (c == 3) return false;
          color[*it] = c;
        }
        return true;
      };
      if (!color_side(x, y) || !color_side(y, x)) {
        for (auto v : component) color[v] = kUncolored;
        return false;
      }
      if (color[x] == color[y]) {
        for (auto v : component) {
          if (!seen[v]) color[v] = (color[v] + 1) % 3;
        }
      }
      return true;
    }
  }
  return false;
}

bool is_proper_three_coloring(const WeightedGraph& h, const std::vector<int>& color) {
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (color[v] < 0 || color[v] > 2) return false;
    for (auto w : h.adjacency[v]) {
      if (color[v] == color[w]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> three_color_exhaustive(const WeightedGraph& h) {
  const auto n = h.size();
  std::vector<int> color(n, kUncolored);
  std::vector<std::size_t> order;
  std::vector<char> placed(n, 0);
  std::vector<char> all(n, 1);
  for (std::size_t v = 0; v < n; ++v) {
    if (placed[v]) continue;
    for (auto w : bfs_order(h, v, all)) {
      placed[w] = 1;
      order.push_back(w);
    }
  }
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == order.size()) return true;
    auto v = order[k];
    for (int c = 0; c < 3; ++c) {
      bool clash = false;
      for (auto w : h.adjacency[v]) clash = clash || color[w] == c;
      if (clash) continue;
      color[v] = c;
      if (place(k + 1)) return true;
    }
    color[v] = kUncolored;
    return false;
  };
  if (!place(0)) return {};
  return color;
}

std::vector<int> three_color(const WeightedGraph& h) {
  const auto n = h.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (h.adjacency[v].size() > 3) {
      throw ContractViolation("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(h.adjacency[v].size()) + " > 3");
    }
  }

  std::vector<int> color(n, kUncolored);
  auto core = peel_and_color(h, color);

  // Every surviving vertex has all three neighbors in the core, so each core
  // component is a whole 3-regular component of h.
  std::vector<char> in_core(n, 0);
  for (auto v : core) in_core[v] = 1;
  std::vector<char> done(n, 0);
  for (auto start : core) {
    if (done[start]) continue;
    auto component = bfs_order(h, start, in_core);
    std::sort(component.begin(), component.end());
    for (auto v : component) done[v] = 1;

    if (component.size() == 4) {
      throw ContractViolation("component containing vertex " + std::to_string(component.front()) +
                              " is K4");
    }
    if (color_cubic_by_root(h, component, color)) continue;
    if (color_cubic_by_bridge(h, component, color)) continue;

    if (component.size() > 20) {
      throw InvariantFailure("no constructive 3-coloring found for a cubic component of size " +
                             std::to_string(component.size()));
    }
    WeightedGraph sub(std::vector<int>(component.size(), 0));
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (auto w : h.adjacency[component[i]]) {
        auto j = static_cast<std::size_t>(
            std::lower_bound(component.begin(), component.end(), w) - component.begin());
        if (i < j) sub.add_edge(i, j);
      }
    }
    auto sub_color = three_color_exhaustive(sub);
    if (sub_color.empty()) throw InvariantFailure("cubic component is not 3-colorable");
    for (std::size_t i = 0; i < component.size(); ++i) color[component[i]] = sub_color[i];
  }

  if (!is_proper_three_coloring(h, color)) {
    throw InvariantFailure("3-coloring produced an improper result");
  }
  return color;
}

// ---------------------------------------------------------------------------
// Triple split

std::vector<std::vector<IndexedColorSet>> triple_split_multicolor(
    const WeightedGraph& h, const std::vector<int>& coloring, std::array<int, 3> palettes) {
  const auto n = h.size();
  if (coloring.size() != n) throw ContractViolation("3-coloring has the wrong size");
  for (std::size_t v = 0; v < n; ++v) {
    if (coloring[v] < 0 || coloring[v] > 2) throw ContractViolation("colors must be 0, 1 or 2");
    for (auto w : h.adjacency[v]) {
      if (coloring[v] == coloring[w]) {
        throw ContractViolation("3-coloring is improper on edge " + std::to_string(v) + "-" +
                                std::to_string(w));
      }
    }
  }

  std::vector<std::vector<IndexedColorSet>> out(n);
  for (int sub = 0; sub < 3; ++sub) {
    // H_{sub+1} keeps the two color classes other than `sub`.
    std::vector<std::size_t> members;
    std::vector<std::size_t> local(n, n);
    for (std::size_t v = 0; v < n; ++v) {
      if (coloring[v] == sub) continue;
      local[v] = members.size();
      members.push_back(v);
    }
    WeightedGraph part(std::vector<int>(members.size(), 0));
    std::vector<int> side(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto v = members[i];
      // The vertex lies in the two subgraphs other than its own color class;
      // the lower-indexed one gets the rounded-up half.
      int lower = coloring[v] == 0 ? 1 : 0;
      int d = h.demand[v];
      part.demand[i] = sub == lower ? (d + 1) / 2 : d / 2;
      // Side 0 is the smaller remaining color class.
      int low_class = sub == 0 ? 1 : 0;
      side[i] = coloring[v] == low_class ? 0 : 1;
      for (auto w : h.adjacency[v]) {
        if (local[w] < n && local[w] > i) part.add_edge(i, local[w]);
      }
    }
    auto sets = bipartite_multicolor(part, side, palettes[static_cast<std::size_t>(sub)]);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!sets[i].indices.empty()) out[members[i]].push_back(std::move(sets[i]));
    }
  }
  return out;
}

std::size_t distinct_colors(const std::vector<std::vector<IndexedColorSet>>& sets) {
  std::set<std::pair<int, int>> seen;
  for (const auto& per_vertex : sets) {
    for (const auto& s : per_vertex) {
      for (int i : s.indices) seen.emplace(s.palette, i);
    }
  }
  return seen.size();
}

}  // namespace cannonball
