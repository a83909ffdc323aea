#include "mccp/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <ostream>
#include <thread>
#include <utility>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace mccp {

double default_time_limit(std::size_t node_count) {
  static constexpr std::array<std::pair<std::size_t, double>, 6> kTable{{
      {50, 1.0},
      {100, 20.0},
      {200, 30.0},
      {400, 80.0},
      {500, 200.0},
      {1000, 2800.0},
  }};
  double limit = kTable.front().second;
  for (const auto& [nodes, seconds] : kTable)
    if (node_count >= nodes) limit = seconds;
  return limit;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t index) noexcept {
  // splitmix64 finalizer over base + golden-ratio stride.
  std::uint64_t z = base_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double realized_density(const ColoredGraph& graph) {
  const auto n = static_cast<double>(graph.node_count());
  if (n < 2) return 0.0;
  return 2.0 * static_cast<double>(graph.edge_count()) / (n * (n - 1.0));
}

namespace {

InstanceResult run_one(const DatasetInstance& instance, const SolverConfig& base, std::size_t index) {
  InstanceResult result;
  result.id = instance.id;
  SolverConfig config = base;
  config.seed = derive_seed(base.seed, index);
  result.seed = config.seed;
  if (!config.stop.time_limit_seconds && !config.stop.max_outer_iterations)
    config.stop.time_limit_seconds = default_time_limit(instance.graph.node_count());
  try {
    const RunReport report = solve(instance.graph, config);
    result.value = report.value;
    result.elapsed_seconds = report.elapsed_seconds;
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

}  // namespace

DatasetReport run_dataset(std::span<const DatasetInstance> instances, const SolverConfig& config, unsigned jobs) {
  DatasetReport report;
  report.mode = config.mode;
  report.base_seed = config.seed;
  report.per_instance.resize(instances.size());
  if (instances.empty()) return report;

  report.node_count = instances.front().graph.node_count();
  report.color_count = instances.front().graph.color_count();

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++)
      report.per_instance[i] = run_one(instances[i], config, i);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(instances.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  double density_sum = 0.0;
  double value_sum = 0.0;
  double time_sum = 0.0;
  std::size_t ok = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    density_sum += instances[i].density;
    const InstanceResult& r = report.per_instance[i];
    if (r.error) {
      ++report.failures;
      continue;
    }
    value_sum += static_cast<double>(r.value);
    time_sum += r.elapsed_seconds;
    ++ok;
  }
  report.density = density_sum / static_cast<double>(instances.size());
  if (ok > 0) {
    report.average_value = value_sum / static_cast<double>(ok);
    report.average_time = time_sum / static_cast<double>(ok);
  }
  return report;
}

void write_csv_rows(std::ostream& out, const DatasetReport& report, const CsvOptions& options) {
  const auto mode = to_string(report.mode);
  for (const InstanceResult& r : report.per_instance) {
    const std::string value = r.error ? std::string() : fmt::format("{}", r.value);
    const std::string elapsed =
        options.omit_timing || r.error ? std::string() : fmt::format("{:.6f}", r.elapsed_seconds);
    fmt::print(out, "{},{},{},{},{},{},{},{}\n", report.node_count, report.color_count, report.density, r.id, mode,
               r.seed, value, elapsed);
  }
  const std::string elapsed = options.omit_timing ? std::string() : fmt::format("{:.6f}", report.average_time);
  fmt::print(out, "{},{},{},AVG,{},{},{},{}\n", report.node_count, report.color_count, report.density, mode,
             report.base_seed, report.average_value, elapsed);
}

std::string format_summary(const DatasetReport& report) {
  std::string line = fmt::format("nodes={} colors={} density={:.2f} mode={} instances={} value={:.1f} time={:.4f}s",
                                 report.node_count, report.color_count, report.density, to_string(report.mode),
                                 report.per_instance.size(), report.average_value, report.average_time);
  if (report.failures > 0) line += fmt::format(" failures={}", report.failures);
  return line;
}

}  // namespace mccp
