#pragma once

// Checks that do not share code paths with the solver: multicoloring
// verification, color counting, an exact multichromatic number for tiny
// instances, and a subset-scan clique oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cannonball/graph.hpp"
#include "cannonball/multicolor.hpp"

namespace cannonball {

enum class ViolationKind { demand_shortfall, edge_conflict, unknown_vertex };

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind = ViolationKind::demand_shortfall;
  std::vector<GridVertex> vertices;
  std::optional<PaletteColor> color;  // the shared color of an edge conflict
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// |f(v)| >= d(v) for every demanded vertex, f(u) and f(v) disjoint on every
/// edge between demanded vertices, and no colored vertex outside the region.
VerificationReport verify(const CannonballGraph& g, const ColorAssignment& f);

/// Number of distinct (palette, index) pairs.
std::size_t count_colors(const ColorAssignment& f);

struct OracleResult {
  enum class Status { exact, exceeds_limit };
  Status status = Status::exceeds_limit;
  int value = 0;          // chi_m when status == exact
  std::uint64_t nodes = 0;  // search nodes spent

  bool exact() const noexcept { return status == Status::exact; }
};

inline constexpr std::uint64_t kDefaultOracleBudget = 20'000'000;

/// Smallest k <= limit such that the demanded subgraph has a proper
/// multicoloring with colors {1..k}. Branches over vertices in decreasing
/// demand order; reports exceeds_limit when k would pass `limit` or the node
/// budget runs out. limit must be <= 64.
OracleResult exact_multichromatic(const CannonballGraph& g, int limit,
                                  std::uint64_t node_budget = kDefaultOracleBudget);

/// Clique numbers by scanning every subset of at most four vertices of the
/// support and its surrounding ring with a pairwise tangency test.
CliqueNumbers brute_cliques(const CannonballGraph& g);

}  // namespace cannonball
