#include "cannonball/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "cannonball/errors.hpp"

namespace cannonball {

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::demand_shortfall:
      return "demand_shortfall";
    case ViolationKind::edge_conflict:
      return "edge_conflict";
    case ViolationKind::unknown_vertex:
      return "unknown_vertex";
  }
  return "unknown";
}

VerificationReport verify(const CannonballGraph& g, const ColorAssignment& f) {
  VerificationReport report;
  const auto& region = g.region();

  for (const auto& [v, colors] : f.entries()) {
    if (!region.contains(v)) {
      report.violations.push_back({ViolationKind::unknown_vertex, {v}, std::nullopt});
    }
  }

  for (const auto& v : region.vertices()) {
    const int d = g.demand(v);
    if (d <= 0) continue;
    const auto& mine = f.colors(v);
    if (mine.size() < static_cast<std::size_t>(d)) {
      report.violations.push_back({ViolationKind::demand_shortfall, {v}, std::nullopt});
    }
    for (const auto& w : neighbors(v, region)) {
      if (w < v || g.demand(w) <= 0) continue;
      const auto& theirs = f.colors(w);
      auto shared = std::find_if(mine.begin(), mine.end(),
                                 [&](const PaletteColor& c) { return theirs.contains(c); });
      if (shared != mine.end()) {
        report.violations.push_back({ViolationKind::edge_conflict, {v, w}, *shared});
      }
    }
  }

  report.ok = report.violations.empty();
  return report;
}

std::size_t count_colors(const ColorAssignment& f) {
  std::set<PaletteColor> all;
  for (const auto& [v, colors] : f.entries()) all.insert(colors.begin(), colors.end());
  return all.size();
}

// ---------------------------------------------------------------------------
// Clique oracle

CliqueNumbers brute_cliques(const CannonballGraph& g) {
  const auto& s = g.stacking();
  std::set<GridVertex> pool;
  for (const auto& v : g.support_vertices()) {
    pool.insert(v);
    for (const auto& w : grid_neighbors(v, s)) pool.insert(w);
  }
  std::vector<GridVertex> vs(pool.begin(), pool.end());
  const auto n = vs.size();
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = g.demand(vs[i]);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      adj[i][j] = adj[j][i] = are_adjacent(vs[i], vs[j], s) ? 1 : 0;
    }
  }

  std::array<int, 5> best{};  // best[k]: heaviest clique of exactly k vertices
  for (std::size_t a = 0; a < n; ++a) {
    best[1] = std::max(best[1], d[a]);
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      best[2] = std::max(best[2], d[a] + d[b]);
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!adj[a][c] || !adj[b][c]) continue;
        best[3] = std::max(best[3], d[a] + d[b] + d[c]);
        for (std::size_t e = c + 1; e < n; ++e) {
          if (!adj[a][e] || !adj[b][e] || !adj[c][e]) continue;
          best[4] = std::max(best[4], d[a] + d[b] + d[c] + d[e]);
        }
      }
    }
  }
  CliqueNumbers w;
  w.omega1 = best[1];
  w.omega2 = std::max(w.omega1, best[2]);
  w.omega3 = std::max(w.omega2, best[3]);
  w.omega4 = std::max(w.omega3, best[4]);
  return w;
}

// ---------------------------------------------------------------------------
// Exact multichromatic number

namespace {

struct Component {
  std::vector<int> demand;
  std::vector<std::vector<std::size_t>> adj;
};

class MulticolorSearch {
 public:
  MulticolorSearch(const Component& c, int colors, std::uint64_t& nodes, std::uint64_t budget)
      : comp_(c), k_(colors), nodes_(nodes), budget_(budget), sets_(c.demand.size(), 0) {
    order_.resize(c.demand.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return c.demand[a] > c.demand[b];
    });
    placed_.assign(order_.size(), 0);
  }

  /// true: feasible, false: infeasible, nullopt: budget exhausted.
  std::optional<bool> run() {
    auto r = place(0, 0);
    if (exhausted_) return std::nullopt;
    return r;
  }

 private:
  std::uint64_t forbidden(std::size_t v) const {
    std::uint64_t mask = 0;
    for (auto w : comp_.adj[v]) {
      if (placed_[w]) mask |= sets_[w];
    }
    return mask;
  }

  bool neighbors_still_fit(std::size_t v) const {
    for (auto w : comp_.adj[v]) {
      if (placed_[w]) continue;
      if (k_ - std::popcount(forbidden(w)) < comp_.demand[w]) return false;
    }
    return true;
  }

  // `used` colors are 0..used-1; unused colors are interchangeable, so a
  // vertex takes some old colors plus the lowest fresh ones.
  bool place(std::size_t depth, int used) {
    if (depth == order_.size()) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const auto v = order_[depth];
    const int d = comp_.demand[v];
    const std::uint64_t old_mask = used == 64 ? ~0ull : ((1ull << used) - 1);
    const std::uint64_t avail = ~forbidden(v) & old_mask;
    const int avail_count = std::popcount(avail);
    std::vector<int> bits;
    for (int b = 0; b < used; ++b) {
      if (avail & (1ull << b)) bits.push_back(b);
    }

    for (int old = std::min(d, avail_count); old >= 0; --old) {
      const int fresh = d - old;
      if (used + fresh > k_) break;
      std::uint64_t fresh_mask = 0;
      for (int b = used; b < used + fresh; ++b) fresh_mask |= 1ull << b;

      // Combinations of `old` available colors in lexicographic order.
      std::vector<int> pick(static_cast<std::size_t>(old));
      for (int i = 0; i < old; ++i) pick[static_cast<std::size_t>(i)] = i;
      while (true) {
        std::uint64_t set = fresh_mask;
        for (int p : pick) set |= 1ull << bits[static_cast<std::size_t>(p)];
        sets_[v] = set;
        placed_[v] = 1;
        if (neighbors_still_fit(v) && place(depth + 1, used + fresh)) return true;
        placed_[v] = 0;
        if (exhausted_) return false;

        int i = old - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == avail_count - old + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < old; ++j) {
          pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
      }
    }
    sets_[v] = 0;
    return false;
  }

  const Component& comp_;
  int k_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<std::size_t> order_;
  std::vector<std::uint64_t> sets_;
  std::vector<char> placed_;
  bool exhausted_ = false;
};

}  // namespace

OracleResult exact_multichromatic(const CannonballGraph& g, int limit,
                                  std::uint64_t node_budget) {
  if (limit > 64) throw DomainError("oracle limit must be at most 64");
  OracleResult result;
  const auto& s = g.stacking();
  auto support = g.support_vertices();
  const auto n = support.size();

  // Split the demanded graph into connected components; chi_m is their max.
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (are_adjacent(support[i], support[j], s)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  std::vector<int> comp_of(n, -1);
  std::vector<Component> comps;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp_of[start] >= 0) continue;
    std::vector<std::size_t> members{start};
    comp_of[start] = static_cast<int>(comps.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (auto w : adj[members[head]]) {
        if (comp_of[w] < 0) {
          comp_of[w] = comp_of[start];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    Component c;
    c.adj.resize(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      c.demand.push_back(g.demand(support[members[a]]));
      for (auto w : adj[members[a]]) {
        auto b = static_cast<std::size_t>(
            std::lower_bound(members.begin(), members.end(), w) - members.begin());
        c.adj[a].push_back(b);
      }
    }
    comps.push_back(std::move(c));
  }

  const int lower = brute_cliques(g).omega();
  int answer = 0;
  for (const auto& c : comps) {
    // Components are independent; the search starts at the global lower bound
    // or the best value found so far, whichever is larger.
    int k = std::max(lower, answer);
    while (true) {
      if (k > limit) {
        result.status = OracleResult::Status::exceeds_limit;
        return result;
      }
      MulticolorSearch search(c, k, result.nodes, node_budget);
      auto feasible = search.run();
      if (!feasible) {
        result.status = OracleResult::Status::exceeds_limit;
        return result;
      }
      if (*feasible) break;
      ++k;
    }
    answer = std::max(answer, k);
  }
  if (answer > limit) return result;
  result.status = OracleResult::Status::exact;
  result.value = answer;
  return result;
}

}  // namespace cannonball
