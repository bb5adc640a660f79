#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cannonball/errors.hpp"
#include "cannonball/multicolor.hpp"
#include "cannonball/verify.hpp"
#include "cli/bench.hpp"
#include "cli/files.hpp"
#include "cli/generate.hpp"
#include "cli/render.hpp"

namespace cannonball::cli {

namespace fs = std::filesystem;

namespace {

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Emit>
void emit_to(const std::string& path, std::ostream& fallback, Emit&& emit) {
  if (path.empty()) {
    emit(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path + " for writing");
  emit(file);
  if (!file) throw InputError("failed writing " + path);
}

void print_stats(std::ostream& os, const SolveStats& st) {
  const auto& w = st.omega;
  os << "colors_used: " << st.colors_used << '\n'
     << "omega: " << w.omega() << " (w1=" << w.omega1 << " w2=" << w.omega2 << " w3=" << w.omega3
     << " w4=" << w.omega4 << ")\n"
     << "bound_value: " << st.bound_value << '\n'
     << "base_cap: " << st.base_cap << '\n'
     << "max_base_index: " << st.max_base_index << '\n';
  for (std::size_t step = 1; step < st.step_colors.size(); ++step) {
    os << "step" << step << "_colors: " << st.step_colors[step] << '\n';
  }
  os << "bound_risk_events: " << st.bound_risk.size() << '\n';
  for (const auto& e : st.bound_risk) {
    os << "  step " << e.step << " vertex " << to_string(e.vertex) << " shortfall " << e.shortfall
       << '\n';
  }
}

void print_violation(std::ostream& os, const Violation& v) {
  os << to_string(v.kind);
  for (const auto& x : v.vertices) os << ' ' << to_string(x);
  if (v.color) os << " color (" << v.color->palette << ',' << v.color->index << ')';
  os << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multicoloring of weighted cannonball graphs", "cannonball"};
  app.require_subcommand(1);
  int code = kExitOk;

  // gen
  GenerateParams gp;
  int gen_layers = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  auto* layers_opt = gen->add_option("--layers", gen_layers, "Number of layers");
  gen->add_option("--width", gp.width, "Window width (u)")->capture_default_str();
  gen->add_option("--height", gp.height, "Window height (v)")->capture_default_str();
  gen->add_option("--stacking", gp.stacking, "fcc, hcp, random, or letters such as ABAC")
      ->capture_default_str();
  gen->add_option("--max-demand", gp.max_demand, "Largest demand")->capture_default_str();
  gen->add_option("--density", gp.density, "Probability of positive demand")
      ->capture_default_str();
  gen->add_option("--seed", gp.seed, "Random seed")->capture_default_str();
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  // solve
  std::string solve_in, solve_out;
  bool naive = false, stats = false, strict = false;
  auto* solve_cmd = app.add_subcommand("solve", "Multicolor an instance");
  solve_cmd->add_option("instance", solve_in, "Instance file")->required();
  solve_cmd->add_option("-o,--output", solve_out, "Coloring file (default stdout)");
  solve_cmd->add_flag("--naive", naive, "Use the one-palette-per-base-color baseline");
  solve_cmd->add_flag("--stats", stats, "Print solve statistics");
  solve_cmd->add_flag("--strict", strict, "Fail with exit code 3 on bound-risk events");

  // verify
  std::string verify_in, verify_coloring;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against an instance");
  verify_cmd->add_option("instance", verify_in, "Instance file")->required();
  verify_cmd->add_option("coloring", verify_coloring, "Coloring file")->required();

  // oracle
  std::string oracle_in;
  int limit = 64;
  std::uint64_t budget = kDefaultOracleBudget;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact multichromatic number of a tiny instance");
  oracle_cmd->add_option("instance", oracle_in, "Instance file")->required();
  oracle_cmd->add_option("--limit", limit, "Largest color count to try (at most 64)")
      ->capture_default_str();
  oracle_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str();

  // bench
  std::string corpus, report;
  BenchOptions bo;
  auto* bench_cmd = app.add_subcommand("bench", "Solve every instance of a corpus directory");
  bench_cmd->add_option("corpus", corpus, "Directory of instance files")->required();
  bench_cmd->add_option("-o,--output", report, "CSV report (default stdout)");
  bench_cmd->add_option("-j,--jobs", bo.jobs, "Instances solved concurrently")
      ->capture_default_str();
  bench_cmd->add_option("--oracle-max-support", bo.oracle_max_support,
                        "Run the exact oracle up to this many demanded vertices")
      ->capture_default_str();

  // render
  std::string render_in, render_coloring, render_out;
  auto* render_cmd = app.add_subcommand("render", "Draw the layers of a colored instance as SVG");
  render_cmd->add_option("instance", render_in, "Instance file")->required();
  render_cmd->add_option("coloring", render_coloring, "Coloring file")->required();
  render_cmd->add_option("-o,--output", render_out, "SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*gen) {
      if (*layers_opt) gp.layers = gen_layers;
      auto instance = generate(gp);
      emit_to(gen_out, out, [&](std::ostream& os) { write_instance(os, instance); });
    } else if (*solve_cmd) {
      auto g = instance_graph(load_instance(solve_in));
      auto result = naive ? naive_solve(g) : solve(g);
      auto file = make_coloring_file(naive ? "naive" : "cannonball", result);
      emit_to(solve_out, out, [&](std::ostream& os) { write_coloring(os, file); });
      if (stats) print_stats(solve_out.empty() ? err : out, result.stats);
      if (strict && !result.stats.bound_risk.empty()) {
        err << "bound-risk events: " << result.stats.bound_risk.size() << '\n';
        code = kExitInternal;
      }
    } else if (*verify_cmd) {
      auto g = instance_graph(load_instance(verify_in));
      auto coloring = load_coloring(verify_coloring);
      auto report_v = verify(g, coloring.assignment);
      if (report_v.ok) {
        out << "ok: " << count_colors(coloring.assignment) << " colors\n";
      } else {
        for (const auto& v : report_v.violations) print_violation(out, v);
        out << "FAILED: " << report_v.violations.size() << " violations\n";
        code = kExitVerifyFailed;
      }
    } else if (*oracle_cmd) {
      auto g = instance_graph(load_instance(oracle_in));
      auto r = exact_multichromatic(g, limit, budget);
      if (r.exact()) {
        out << r.value << '\n';
      } else {
        out << "exceeds limit\n";
        code = kExitExceedsLimit;
      }
    } else if (*bench_cmd) {
      auto rows = run_bench(corpus, bo);
      emit_to(report, out, [&](std::ostream& os) { write_bench_csv(os, rows); });
    } else if (*render_cmd) {
      auto svg = render_svg(load_instance(render_in), load_coloring(render_coloring));
      emit_to(render_out, out, [&](std::ostream& os) { os << svg; });
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvariantFailure& e) {
    err << "internal assertion failed: " << e.what() << '\n';
    if (!e.diagnostics().empty()) err << e.diagnostics() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return code;
}

}  // namespace cannonball::cli
