#include "cli/files.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>

#include "cannonball/errors.hpp"
#include "json.hpp"

namespace cannonball::cli {

using nlohmann::json;

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next non-blank line parsed as JSON, or null at end of input.
  std::optional<json> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
        continue;
      }
      try {
        return json::parse(line);
      } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
      }
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError("line " + std::to_string(line_no) + ": " + message);
  }

  int integer(const json& obj, const char* key) const {
    if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field '") + key + "'");
    const auto& value = obj.at(key);
    if (!value.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
    auto wide = value.get<long long>();
    if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
      fail(std::string("field '") + key + "' out of range");
    }
    return static_cast<int>(wide);
  }

  void expect_header(const json& header, const char* format) const {
    if (!header.is_object() || header.value("format", "") != format) {
      fail(std::string("expected a '") + format + "' header");
    }
    if (integer(header, "version") != kFileVersion) {
      fail("unsupported version " + header.at("version").dump());
    }
  }
};

template <typename Save>
void write_file(const std::filesystem::path& path, Save&& save) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  save(out);
  if (!out) throw InputError("failed writing " + path.string());
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

}  // namespace

GridVertex parse_vertex_key(const std::string& key) {
  std::array<int, 3> parts{};
  const char* p = key.data();
  const char* end = key.data() + key.size();
  for (std::size_t i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(p, end, parts[i]);
    if (ec != std::errc{}) throw InputError("bad vertex key '" + key + "'");
    p = next;
    if (i < 2) {
      if (p == end || *p != ',') throw InputError("bad vertex key '" + key + "'");
      ++p;
    }
  }
  if (p != end) throw InputError("bad vertex key '" + key + "'");
  return {parts[0], parts[1], parts[2]};
}

// ---------------------------------------------------------------------------
// Instances

InstanceFile parse_instance(std::istream& in) {
  LineReader reader{in};
  auto header = reader.next();
  if (!header) throw InputError("empty instance file");
  reader.expect_header(*header, "cannonball-instance");
  if (!header->contains("stacking") || !header->at("stacking").is_string()) {
    reader.fail("header needs a 'stacking' string");
  }

  InstanceFile instance;
  try {
    instance.stacking = StackingSequence(header->at("stacking").get<std::string>());
  } catch (const InputError& e) {
    reader.fail(e.what());
  }

  std::set<GridVertex> seen;
  while (auto record = reader.next()) {
    InstanceVertex v{reader.integer(*record, "layer"), reader.integer(*record, "u"),
                     reader.integer(*record, "v"), reader.integer(*record, "d")};
    if (v.layer < 0 || v.layer >= instance.stacking.size()) {
      reader.fail("layer " + std::to_string(v.layer) + " outside stacking");
    }
    if (v.d < 0) reader.fail("negative demand");
    if (!seen.insert({v.layer, v.u, v.v}).second) {
      reader.fail("duplicate vertex " + to_string(GridVertex{v.layer, v.u, v.v}));
    }
    instance.vertices.push_back(v);
  }
  return instance;
}

void write_instance(std::ostream& out, const InstanceFile& instance) {
  json header = {{"format", "cannonball-instance"},
                 {"version", kFileVersion},
                 {"stacking", instance.stacking.str()}};
  out << header.dump() << '\n';
  for (const auto& v : instance.vertices) {
    // Field order is fixed for byte-stable output.
    out << "{\"layer\":" << v.layer << ",\"u\":" << v.u << ",\"v\":" << v.v
        << ",\"d\":" << v.d << "}\n";
  }
}

InstanceFile load_instance(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_instance(in);
}

void save_instance(const std::filesystem::path& path, const InstanceFile& instance) {
  write_file(path, [&](std::ostream& out) { write_instance(out, instance); });
}

GridRegion instance_region(const InstanceFile& instance) {
  if (instance.vertices.empty()) return GridRegion(instance.stacking, LayerBox{});
  LayerBox box{std::numeric_limits<int>::max(), std::numeric_limits<int>::min(),
               std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
  for (const auto& v : instance.vertices) {
    box.u_min = std::min(box.u_min, v.u);
    box.u_max = std::max(box.u_max, v.u);
    box.v_min = std::min(box.v_min, v.v);
    box.v_max = std::max(box.v_max, v.v);
  }
  return GridRegion(instance.stacking, box);
}

CannonballGraph instance_graph(const InstanceFile& instance) {
  std::vector<DemandEntry> demands;
  demands.reserve(instance.vertices.size());
  for (const auto& v : instance.vertices) demands.push_back({{v.layer, v.u, v.v}, v.d});
  return build_graph(instance_region(instance), demands);
}

// ---------------------------------------------------------------------------
// Colorings

ColoringFile parse_coloring(std::istream& in) {
  LineReader reader{in};
  auto header = reader.next();
  if (!header) throw InputError("empty coloring file");
  reader.expect_header(*header, "cannonball-coloring");

  ColoringFile file;
  file.algorithm = header->value("algorithm", "");

  bool have_summary = false;
  std::set<GridVertex> seen;
  while (auto record = reader.next()) {
    if (record->contains("summary")) {
      if (have_summary) reader.fail("second summary block");
      const auto& s = record->at("summary");
      auto colors_used = reader.integer(s, "colors_used");
      auto risk = reader.integer(s, "bound_risk_events");
      if (colors_used < 0 || risk < 0) reader.fail("summary counts must be nonnegative");
      file.summary.colors_used = static_cast<std::size_t>(colors_used);
      file.summary.bound_risk_events = static_cast<std::size_t>(risk);
      file.summary.bound_value = reader.integer(s, "bound_value");
      if (!s.contains("omega") || !s.at("omega").is_array() || s.at("omega").size() != 4) {
        reader.fail("summary.omega must list four clique numbers");
      }
      for (std::size_t i = 0; i < 4; ++i) {
        const auto& w = s.at("omega")[i];
        if (!w.is_number_integer()) reader.fail("summary.omega entries must be integers");
        file.summary.omega[i] = w.get<int>();
      }
      have_summary = true;
      continue;
    }

    if (!record->contains("vertex") || !record->at("vertex").is_string()) {
      reader.fail("record needs a 'vertex' key");
    }
    GridVertex v;
    try {
      v = parse_vertex_key(record->at("vertex").get<std::string>());
    } catch (const InputError& e) {
      reader.fail(e.what());
    }
    if (!seen.insert(v).second) reader.fail("duplicate vertex " + to_string(v));
    file.assignment.touch(v);
    if (!record->contains("colors") || !record->at("colors").is_array()) {
      reader.fail("record needs a 'colors' array");
    }
    for (const auto& pair : record->at("colors")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        reader.fail("colors must be [palette, index] integer pairs");
      }
      PaletteColor c{pair[0].get<int>(), pair[1].get<int>()};
      if (c.palette < 0 || c.index < 1) reader.fail("palette must be >= 0 and index >= 1");
      file.assignment.add(v, c);
    }
  }
  if (!have_summary) throw InputError("coloring file has no summary block");
  return file;
}

void write_coloring(std::ostream& out, const ColoringFile& coloring) {
  json header = {{"format", "cannonball-coloring"},
                 {"version", kFileVersion},
                 {"algorithm", coloring.algorithm}};
  out << header.dump() << '\n';
  const auto& s = coloring.summary;
  json summary = {{"summary",
                   {{"colors_used", s.colors_used},
                    {"omega", s.omega},
                    {"bound_value", s.bound_value},
                    {"bound_risk_events", s.bound_risk_events}}}};
  out << summary.dump() << '\n';
  for (const auto& [v, colors] : coloring.assignment.entries()) {
    out << "{\"vertex\":\"" << to_string(v) << "\",\"colors\":[";
    bool first = true;
    for (const auto& c : colors) {
      out << (first ? "" : ",") << '[' << c.palette << ',' << c.index << ']';
      first = false;
    }
    out << "]}\n";
  }
}

ColoringFile load_coloring(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_coloring(in);
}

void save_coloring(const std::filesystem::path& path, const ColoringFile& coloring) {
  write_file(path, [&](std::ostream& out) { write_coloring(out, coloring); });
}

ColoringFile make_coloring_file(std::string algorithm, const SolveResult& result) {
  ColoringFile file;
  file.algorithm = std::move(algorithm);
  file.assignment = result.assignment;
  const auto& st = result.stats;
  file.summary.colors_used = st.colors_used;
  file.summary.omega = {st.omega.omega1, st.omega.omega2, st.omega.omega3, st.omega.omega4};
  file.summary.bound_value = st.bound_value;
  file.summary.bound_risk_events = st.bound_risk.size();
  return file;
}

}  // namespace cannonball::cli
