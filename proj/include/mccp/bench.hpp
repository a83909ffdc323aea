#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mccp/graph.hpp"
#include "mccp/vns.hpp"

namespace mccp {

/// Wall-clock budget per instance size: 1, 20, 30, 80, 200 and 2800 seconds
/// at 50, 100, 200, 400, 500 and 1000 nodes. Other sizes take the budget of
/// the nearest listed size below; sizes under 50 get 1 second.
double default_time_limit(std::size_t node_count);

/// Per-instance seed for the index-th run of a batch.
std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t index) noexcept;

struct DatasetInstance {
  std::string id;
  ColoredGraph graph;
  // Nominal density of the dataset when known, else the realized one.
  double density = 0.0;
};

struct InstanceResult {
  std::string id;
  std::uint64_t seed = 0;
  std::size_t value = 0;
  double elapsed_seconds = 0.0;
  std::optional<std::string> error;
};

struct DatasetReport {
  std::size_t node_count = 0;
  std::size_t color_count = 0;
  double density = 0.0;
  SolverMode mode = SolverMode::kGreedy;
  std::uint64_t base_seed = 0;
  std::vector<InstanceResult> per_instance;
  double average_value = 0.0;  // over successful runs
  double average_time = 0.0;
  std::size_t failures = 0;
};

/// 2 |E| / (|V| (|V| - 1)).
double realized_density(const ColoredGraph& graph);

/// Solves every instance with `config`, deriving per-instance seeds from
/// config.seed. When the config sets no stop criterion each instance gets
/// default_time_limit(node_count). Failures are recorded per instance. Up to
/// `jobs` instances run concurrently; results keep input order.
DatasetReport run_dataset(std::span<const DatasetInstance> instances, const SolverConfig& config,
                          unsigned jobs = 1);

inline constexpr const char* kCsvHeader = "nodes,colors,density,instance,mode,seed,value,elapsed_s";

struct CsvOptions {
  // Leave elapsed_s empty, e.g. for byte-reproducible iteration-bounded runs.
  bool omit_timing = false;
};

/// One row per instance followed by an instance=AVG row. Failed instances
/// leave value empty.
void write_csv_rows(std::ostream& out, const DatasetReport& report, const CsvOptions& options = {});

/// Human-readable one-line summary with averages rounded to one decimal.
std::string format_summary(const DatasetReport& report);

}  // namespace mccp
