#include "cli/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <thread>

#include "cannonball/errors.hpp"
#include "cannonball/multicolor.hpp"
#include "cannonball/verify.hpp"
#include "cli/files.hpp"

namespace cannonball::cli {

namespace fs = std::filesystem;

std::vector<fs::path> corpus_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw InputError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension();
    if (ext == ".jsonl" || ext == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  return files;
}

BenchRow bench_instance(const fs::path& file, const BenchOptions& options) {
  BenchRow row;
  row.instance = file.filename().string();
  auto start = std::chrono::steady_clock::now();
  try {
    auto g = instance_graph(load_instance(file));
    auto result = solve(g);
    auto naive = naive_solve(g);
    if (!verify(g, result.assignment).ok) throw InvariantFailure("solver output failed verification", "");

    row.omega = result.stats.omega.omega();
    row.colors_used = result.stats.colors_used;
    row.naive_colors = naive.stats.colors_used;
    row.bound_value = result.stats.bound_value;
    row.bound_ok = static_cast<int>(row.colors_used) <= row.bound_value;
    row.bound_risk_events = result.stats.bound_risk.size();
    row.ratio = row.omega > 0 ? static_cast<double>(row.colors_used) / row.omega : 0.0;
    if (g.support().size() <= options.oracle_max_support) {
      auto oracle = exact_multichromatic(g, options.oracle_limit, options.oracle_budget);
      if (oracle.exact()) row.chi_m = oracle.value;
    }
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  row.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<BenchRow> run_bench(const fs::path& dir, const BenchOptions& options) {
  auto files = corpus_files(dir);
  std::vector<BenchRow> rows(files.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, files.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) rows[i] = bench_instance(files[i], options);
    return rows;
  }
  // Workers claim files by index; each row lands in its file's slot.
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (auto i = next++; i < files.size(); i = next++) rows[i] = bench_instance(files[i], options);
    });
  }
  workers.clear();
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "instance,status,omega,colors_used,naive_colors,chi_m,ratio,bound_value,bound_ok,"
         "bound_risk_events,wall_ms\n";
  for (const auto& r : rows) {
    out << csv_field(r.instance) << ',' << csv_field(r.status) << ',' << r.omega << ','
        << r.colors_used << ',' << r.naive_colors << ',';
    if (r.chi_m) out << *r.chi_m;
    out << ',' << std::fixed << std::setprecision(4) << r.ratio << ',' << r.bound_value << ','
        << (r.bound_ok ? "true" : "false") << ',' << r.bound_risk_events << ','
        << std::setprecision(3) << r.wall_ms << '\n';
    out << std::defaultfloat;
  }
}

}  // namespace cannonball::cli
