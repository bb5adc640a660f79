#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cli/files.hpp"

namespace cannonball::cli {

struct GenerateParams {
  std::optional<int> layers;  // defaults to the stacking length
  int width = 8;
  int height = 8;
  // "fcc", "hcp", "random", or explicit letters such as "ABAC".
  std::string stacking = "fcc";
  int max_demand = 10;
  double density = 0.7;
  std::uint64_t seed = 1;
};

/// Resolves a stacking name. "fcc", "hcp" and "random" need a layer count.
StackingSequence resolve_stacking(const std::string& name, std::optional<int> layers,
                                  std::uint64_t seed);

/// Window of width x height vertices per layer starting at (0, 0); every
/// window vertex is listed, zero-demand ones included. Throws InputError on
/// inconsistent parameters.
InstanceFile generate(const GenerateParams& params);

}  // namespace cannonball::cli
