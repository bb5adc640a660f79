#pragma once

// Line-oriented JSON files exchanged by the CLI.
//
// Instance:  {"format":"cannonball-instance","version":1,"stacking":"ABC"}
//            {"layer":0,"u":0,"v":0,"d":3}            one line per vertex
//
// Coloring:  {"format":"cannonball-coloring","version":1,"algorithm":"..."}
//            {"summary":{"colors_used":..,"omega":[w1,w2,w3,w4],
//                        "bound_value":..,"bound_risk_events":..}}
//            {"vertex":"layer,u,v","colors":[[palette,index],...]}

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cannonball/graph.hpp"
#include "cannonball/multicolor.hpp"

namespace cannonball::cli {

inline constexpr int kFileVersion = 1;

struct InstanceVertex {
  int layer = 0;
  int u = 0;
  int v = 0;
  int d = 0;

  bool operator==(const InstanceVertex&) const = default;
};

struct InstanceFile {
  StackingSequence stacking{"A"};
  std::vector<InstanceVertex> vertices;

  bool operator==(const InstanceFile&) const = default;
};

struct ColoringSummary {
  std::size_t colors_used = 0;
  std::array<int, 4> omega{};
  int bound_value = 0;
  std::size_t bound_risk_events = 0;

  bool operator==(const ColoringSummary&) const = default;
};

struct ColoringFile {
  std::string algorithm = "cannonball";
  ColorAssignment assignment;
  ColoringSummary summary;

  bool operator==(const ColoringFile&) const = default;
};

// All parse functions throw InputError with a line number on bad input.
InstanceFile parse_instance(std::istream& in);
void write_instance(std::ostream& out, const InstanceFile& instance);
InstanceFile load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const InstanceFile& instance);

ColoringFile parse_coloring(std::istream& in);
void write_coloring(std::ostream& out, const ColoringFile& coloring);
ColoringFile load_coloring(const std::filesystem::path& path);
void save_coloring(const std::filesystem::path& path, const ColoringFile& coloring);

/// Region spanning the bounding box of every listed vertex, identical on all
/// layers of the stacking.
GridRegion instance_region(const InstanceFile& instance);
CannonballGraph instance_graph(const InstanceFile& instance);

ColoringFile make_coloring_file(std::string algorithm, const SolveResult& result);

/// Parses "layer,u,v".
GridVertex parse_vertex_key(const std::string& key);

}  // namespace cannonball::cli
