#pragma once

// Variable Neighborhood Search for the minimum coloring cut.
//
// A solution is a set of kept colors whose spanning subgraph is disconnected.
// The search maximizes the kept set; the cut colors are its complement.
// Greedy and probabilistic modes differ only in how the next color to keep is
// chosen: greedy takes the color leaving the most components (lowest id on
// ties), probabilistic draws among the feasible candidates with weights
// exp((components(c) - best_components) / T).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "mccp/color_set.hpp"
#include "mccp/graph.hpp"

namespace mccp {

/// The single random stream of a run. All draws (shake, uniform picks,
/// roulette) come from it in call order.
using Rng = std::mt19937_64;

enum class SolverMode { kGreedy, kProbabilistic };

std::string_view to_string(SolverMode mode) noexcept;
/// Accepts "greedy", "prob" and "probabilistic".
std::optional<SolverMode> parse_solver_mode(std::string_view text) noexcept;

struct StopCondition {
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> max_outer_iterations;
};

struct SolverConfig {
  SolverMode mode = SolverMode::kGreedy;
  double temperature = 1.0;
  StopCondition stop;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless temperature > 0 and at least one
  /// stop criterion is set.
  void validate() const;
};

struct Solution {
  ColorSet colors;
  std::size_t components = 0;
};

struct RunReport {
  std::size_t value = 0;  // |C| - |kept_colors|
  ColorSet kept_colors;
  ColorSet cut_colors;
  std::vector<EdgeId> disconnecting;
  std::vector<EdgeId> minimal_cut;
  double elapsed_seconds = 0.0;
  std::uint64_t outer_iterations = 0;
  std::uint64_t shakes = 0;
  std::uint64_t fixes = 0;
};

/// Draws index i with probability proportional to exp((components[i] - max) / T)
/// among entries with components[i] > 1. nullopt when no entry qualifies.
std::optional<std::size_t> boltzmann_pick(std::span<const std::size_t> components, double temperature, Rng& rng);

/// Scores each candidate by the component count of base + {candidate} and
/// applies boltzmann_pick.
std::optional<ColorId> boltzmann_select(const ColoredGraph& graph, const ColorSet& base,
                                        std::span<const ColorId> candidates, double temperature, Rng& rng);

/// Adds colors drawn from `pool` (minus those already in `s`) while an
/// addition keeps the subgraph disconnected. `s` must be feasible.
ColorSet grow(const ColoredGraph& graph, ColorSet s, const ColorSet& pool, SolverMode mode, double temperature,
              Rng& rng);

Solution generate_initial_solution(const ColoredGraph& graph, const SolverConfig& config, Rng& rng);

/// Rebuilds a solution from scratch, first from the colors outside `best`,
/// then from the colors of `best`.
Solution new_solution(const ColoredGraph& graph, const Solution& best, const SolverConfig& config, Rng& rng);

struct ShakeResult {
  ColorSet colors;
  std::size_t operations = 0;  // equals the symmetric difference with the base
  bool exhausted = false;      // both pools ran dry before k operations
};

/// k random moves starting from `current`: each removes a color shared with
/// `base` or adds a color outside both. When the chosen move has an empty
/// pool the other move is made.
ShakeResult shake(const ColorSet& base, const ColorSet& current, std::size_t k, Rng& rng);

/// Removes uniformly random colors until the set is feasible.
ColorSet fix(const ColoredGraph& graph, ColorSet s, Rng& rng);

/// Greedy or Boltzmann completion of a feasible set to a maximal one. Throws
/// InfeasibleSolution for infeasible input.
ColorSet local_search(const ColoredGraph& graph, ColorSet s, const SolverConfig& config, Rng& rng);

/// Full VNS run. Requires a valid instance with at least two nodes.
RunReport solve(const ColoredGraph& graph, const SolverConfig& config);

}  // namespace mccp
