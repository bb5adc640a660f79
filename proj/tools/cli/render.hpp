#pragma once

#include <array>
#include <string>
#include <string_view>

#include "cli/files.hpp"

namespace cannonball::cli {

/// Fill per base color 0..3.
inline constexpr std::array<std::string_view, 4> kBaseFills{"#e15759", "#4e79a7", "#59a14f",
                                                            "#f28e2b"};

/// One horizontal band per layer with every window vertex drawn as a unit
/// circle at its true position. Labels read "d/|f|".
std::string render_svg(const InstanceFile& instance, const ColoringFile& coloring);

}  // namespace cannonball::cli
