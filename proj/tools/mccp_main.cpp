// mccp: command-line front end for the minimum coloring cut solvers.
//
//   mccp solve <file> [--mode greedy|prob] [--seed N] [--time-limit S]
//                     [--max-iters N] [--temperature T] [--emit-cut]
//   mccp generate --nodes N --colors C --density D --seed S --count K --out DIR
//   mccp verify <file> [--oracle brute|mincut] [solver flags]
//   mccp bench --dir DIR [--mode greedy|prob|both] [--csv PATH] [solver flags]
//
// Exit status: 0 success, 1 solver/oracle mismatch in verify, 2 input errors.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"
#include "mccp/bench.hpp"
#include "mccp/connectivity.hpp"
#include "mccp/exact.hpp"
#include "mccp/instance_io.hpp"
#include "mccp/vns.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

struct SolverFlags {
  std::string mode = "greedy";
  std::uint64_t seed = 0;
  std::optional<double> time_limit;
  std::optional<std::uint64_t> max_iters;
  double temperature = 1.0;
};

void add_solver_flags(CLI::App& cmd, SolverFlags& flags, bool allow_both = false) {
  cmd.add_option("--mode", flags.mode, allow_both ? "greedy, prob or both" : "greedy or prob")
      ->check(allow_both ? CLI::IsMember({"greedy", "prob", "probabilistic", "both"})
                         : CLI::IsMember({"greedy", "prob", "probabilistic"}));
  cmd.add_option("--seed", flags.seed, "PRNG seed");
  cmd.add_option("--time-limit", flags.time_limit, "wall-clock budget in seconds")->check(CLI::NonNegativeNumber);
  cmd.add_option("--max-iters", flags.max_iters, "outer-iteration budget")->check(CLI::PositiveNumber);
  cmd.add_option("--temperature", flags.temperature, "Boltzmann temperature")->check(CLI::PositiveNumber);
}

mccp::SolverConfig make_config(const SolverFlags& flags, mccp::SolverMode mode, std::size_t node_count,
                               bool default_budget) {
  mccp::SolverConfig config;
  config.mode = mode;
  config.seed = flags.seed;
  config.temperature = flags.temperature;
  config.stop.time_limit_seconds = flags.time_limit;
  config.stop.max_outer_iterations = flags.max_iters;
  if (default_budget && !flags.time_limit && !flags.max_iters)
    config.stop.time_limit_seconds = mccp::default_time_limit(node_count);
  return config;
}

std::string edge_line(const mccp::ColoredGraph& graph, mccp::EdgeId id) {
  const mccp::Edge& e = graph.edge(id);
  return fmt::format("{} {} {}", e.u, e.v, e.color);
}

int run_solve(const std::string& path, const SolverFlags& flags, bool emit_cut) {
  const auto instance = mccp::read_instance_file(path);
  const auto& graph = instance.graph;
  const auto config = make_config(flags, *mccp::parse_solver_mode(flags.mode), graph.node_count(), true);
  const mccp::RunReport report = mccp::solve(graph, config);

  fmt::print("value={}\n", report.value);
  fmt::print("cut_colors={}\n", fmt::join(report.cut_colors.members(), " "));
  fmt::print("kept_colors={}\n", fmt::join(report.kept_colors.members(), " "));
  fmt::print("disconnecting_edges={}\n", report.disconnecting.size());
  fmt::print("minimal_cut_edges={}\n", report.minimal_cut.size());
  fmt::print("mode={}\nseed={}\nouter_iterations={}\nshakes={}\nelapsed_s={:.6f}\n", mccp::to_string(config.mode),
             config.seed, report.outer_iterations, report.shakes, report.elapsed_seconds);
  if (emit_cut)
    for (mccp::EdgeId id : report.minimal_cut) fmt::print("cut {}\n", edge_line(graph, id));
  return kExitOk;
}

int run_verify(const std::string& path, const SolverFlags& flags, const std::string& oracle) {
  const auto instance = mccp::read_instance_file(path);
  const auto& graph = instance.graph;

  std::size_t optimum = 0;
  if (oracle == "brute") {
    optimum = mccp::brute_force_optimum(graph).value;
  } else {
    std::set<mccp::ColorId> seen;
    for (const mccp::Edge& e : graph.edges())
      if (!seen.insert(e.color).second) {
        fmt::print(stderr, "error: the mincut oracle needs every edge to carry a distinct color\n");
        return kExitInputError;
      }
    optimum = mccp::global_min_cut(graph);
  }

  const auto config = make_config(flags, *mccp::parse_solver_mode(flags.mode), graph.node_count(), true);
  const mccp::RunReport report = mccp::solve(graph, config);
  const bool feasible = mccp::disconnects(graph, report.disconnecting);

  fmt::print("solver_value={}\noracle={}\noracle_value={}\ngap={}\n", report.value, oracle, optimum,
             static_cast<long long>(report.value) - static_cast<long long>(optimum));
  if (!feasible || report.value < optimum) {
    fmt::print(stderr, "error: solver result is not a valid disconnecting set\n");
    return kExitMismatch;
  }
  return report.value == optimum ? kExitOk : kExitMismatch;
}

int run_generate(std::size_t nodes, std::size_t colors, double density, std::uint64_t seed, std::size_t count,
                 const std::string& out_dir) {
  mccp::GeneratorParams params{nodes, colors, density, seed};
  for (const std::string& w : mccp::check_params(params)) fmt::print(stderr, "warning: {}\n", w);
  fs::create_directories(out_dir);
  for (std::size_t i = 0; i < count; ++i) {
    params.seed = mccp::derive_seed(seed, i);
    const mccp::ColoredGraph graph = mccp::generate_instance(params);
    const mccp::InstanceMetadata metadata{
        {"nodes", fmt::format("{}", nodes)},   {"colors", fmt::format("{}", colors)},
        {"density", fmt::format("{}", density)}, {"base_seed", fmt::format("{}", seed)},
        {"index", fmt::format("{}", i)},       {"seed", fmt::format("{}", params.seed)},
    };
    const fs::path file = fs::path(out_dir) / fmt::format("n{}_c{}_d{}_{:03}.mcc", nodes, colors, density, i);
    std::ofstream out(file);
    if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", file.string()));
    mccp::write_instance(graph, out, metadata);
    fmt::print("{}\n", file.string());
  }
  return kExitOk;
}

struct DatasetGroup {
  std::vector<mccp::DatasetInstance> instances;
};

int run_bench(const std::string& dir, const SolverFlags& flags, const std::string& csv_path, unsigned jobs) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".mcc") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    fmt::print(stderr, "error: no .mcc files in '{}'\n", dir);
    return kExitInputError;
  }

  // Datasets are keyed by (nodes, colors, nominal density); groups keep the
  // order in which they first appear.
  std::vector<std::string> order;
  std::map<std::string, DatasetGroup> groups;
  for (const fs::path& file : files) {
    auto parsed = mccp::read_instance_file(file.string());
    const auto density_it = parsed.metadata.find("density");
    double density = mccp::realized_density(parsed.graph);
    std::string density_key = "realized";
    if (density_it != parsed.metadata.end()) {
      density_key = density_it->second;
      density = std::stod(density_it->second);
    }
    const std::string key =
        fmt::format("{}/{}/{}", parsed.graph.node_count(), parsed.graph.color_count(), density_key);
    if (!groups.contains(key)) order.push_back(key);
    groups[key].instances.push_back({file.stem().string(), std::move(parsed.graph), density});
  }

  std::vector<mccp::SolverMode> modes;
  if (flags.mode == "both") {
    modes = {mccp::SolverMode::kGreedy, mccp::SolverMode::kProbabilistic};
  } else {
    modes = {*mccp::parse_solver_mode(flags.mode)};
  }

  std::ofstream csv_file;
  if (!csv_path.empty()) {
    csv_file.open(csv_path);
    if (!csv_file) {
      fmt::print(stderr, "error: cannot write '{}'\n", csv_path);
      return kExitInputError;
    }
  }
  std::ostream& csv = csv_path.empty() ? std::cout : csv_file;
  csv << mccp::kCsvHeader << '\n';

  // Iteration-bounded runs are reproducible; wall-clock timings are not, so
  // they are left out of the CSV.
  const mccp::CsvOptions csv_options{.omit_timing = flags.max_iters && !flags.time_limit};
  for (const std::string& key : order) {
    const auto& instances = groups[key].instances;
    for (mccp::SolverMode mode : modes) {
      // No default budget here: run_dataset applies the per-size limit.
      const auto config = make_config(flags, mode, 0, false);
      const mccp::DatasetReport report = mccp::run_dataset(instances, config, jobs);
      mccp::write_csv_rows(csv, report, csv_options);
      fmt::print(stderr, "{}\n", mccp::format_summary(report));
      for (const auto& r : report.per_instance)
        if (r.error) fmt::print(stderr, "  {}: {}\n", r.id, *r.error);
    }
  }
  csv.flush();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum coloring cut solver (variable neighborhood search)"};
  app.require_subcommand(1);

  SolverFlags solve_flags;
  std::string solve_file;
  bool emit_cut = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("file", solve_file, "instance file")->required();
  add_solver_flags(*solve_cmd, solve_flags);
  solve_cmd->add_flag("--emit-cut", emit_cut, "print the edges of the minimal cut");

  std::size_t gen_nodes = 0, gen_colors = 0, gen_count = 1;
  double gen_density = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "Generate random instances");
  gen_cmd->add_option("--nodes", gen_nodes, "number of nodes")->required();
  gen_cmd->add_option("--colors", gen_colors, "number of colors")->required();
  gen_cmd->add_option("--density", gen_density, "edge density in (0, 1]")->required();
  gen_cmd->add_option("--seed", gen_seed, "base seed")->required();
  gen_cmd->add_option("--count", gen_count, "number of instances")->required();
  gen_cmd->add_option("--out", gen_out, "output directory")->required();

  SolverFlags verify_flags;
  std::string verify_file, oracle = "brute";
  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver against an exact oracle");
  verify_cmd->add_option("file", verify_file, "instance file")->required();
  verify_cmd->add_option("--oracle", oracle, "brute or mincut")->check(CLI::IsMember({"brute", "mincut"}));
  add_solver_flags(*verify_cmd, verify_flags);

  SolverFlags bench_flags;
  bench_flags.mode = "both";
  std::string bench_dir, csv_path;
  unsigned jobs = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Run every instance of a directory and report CSV");
  bench_cmd->add_option("--dir", bench_dir, "instance directory")->required()->check(CLI::ExistingDirectory);
  bench_cmd->add_option("--csv", csv_path, "CSV output path (default stdout)");
  bench_cmd->add_option("--jobs", jobs, "concurrent solver runs")->check(CLI::PositiveNumber);
  add_solver_flags(*bench_cmd, bench_flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve_cmd) return run_solve(solve_file, solve_flags, emit_cut);
    if (*gen_cmd) return run_generate(gen_nodes, gen_colors, gen_density, gen_seed, gen_count, gen_out);
    if (*verify_cmd) return run_verify(verify_file, verify_flags, oracle);
    if (*bench_cmd) return run_bench(bench_dir, bench_flags, csv_path, jobs);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
