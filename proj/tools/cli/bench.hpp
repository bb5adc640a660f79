#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cannonball::cli {

struct BenchOptions {
  std::size_t jobs = 1;
  // The exact oracle runs only on instances this small.
  std::size_t oracle_max_support = 10;
  int oracle_limit = 64;
  std::uint64_t oracle_budget = 2'000'000;
};

struct BenchRow {
  std::string instance;  // file name
  std::string status = "ok";
  int omega = 0;
  std::size_t colors_used = 0;
  std::size_t naive_colors = 0;
  std::optional<int> chi_m;
  double ratio = 0.0;  // colors_used / omega, 0 when omega = 0
  int bound_value = 0;
  bool bound_ok = false;
  std::size_t bound_risk_events = 0;
  double wall_ms = 0.0;
};

/// Instance files (*.jsonl, *.json) of `dir`, sorted by file name.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

BenchRow bench_instance(const std::filesystem::path& file, const BenchOptions& options);

/// One row per corpus file in file-name order. Failures become rows whose
/// status starts with "error".
std::vector<BenchRow> run_bench(const std::filesystem::path& dir, const BenchOptions& options);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace cannonball::cli
