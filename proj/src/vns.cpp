#include "mccp/vns.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "mccp/connectivity.hpp"

namespace mccp {

std::string_view to_string(SolverMode mode) noexcept {
  return mode == SolverMode::kGreedy ? "greedy" : "prob";
}

std::optional<SolverMode> parse_solver_mode(std::string_view text) noexcept {
  if (text == "greedy") return SolverMode::kGreedy;
  if (text == "prob" || text == "probabilistic") return SolverMode::kProbabilistic;
  return std::nullopt;
}

void SolverConfig::validate() const {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw std::invalid_argument(fmt::format("temperature must be positive, got {}", temperature));
  if (!stop.time_limit_seconds && !stop.max_outer_iterations)
    throw std::invalid_argument("solver needs a time limit or an outer-iteration budget");
  if (stop.max_outer_iterations && *stop.max_outer_iterations == 0)
    throw std::invalid_argument("outer-iteration budget must be at least 1");
  if (stop.time_limit_seconds && !(*stop.time_limit_seconds >= 0.0))
    throw std::invalid_argument("time limit must be non-negative");
}

std::optional<std::size_t> boltzmann_pick(std::span<const std::size_t> components, double temperature, Rng& rng) {
  if (components.empty()) return std::nullopt;
  std::size_t top = 0;
  for (std::size_t c : components) top = std::max(top, c);
  if (top <= 1) return std::nullopt;

  std::vector<double> weights(components.size(), 0.0);
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i] <= 1) continue;
    const double delta = static_cast<double>(components[i]) - static_cast<double>(top);
    weights[i] = std::exp(delta / temperature);
  }
  std::discrete_distribution<std::size_t> roulette(weights.begin(), weights.end());
  return roulette(rng);
}

std::optional<ColorId> boltzmann_select(const ColoredGraph& graph, const ColorSet& base,
                                        std::span<const ColorId> candidates, double temperature, Rng& rng) {
  if (candidates.empty()) return std::nullopt;
  CandidateEvaluator evaluator(graph, base);
  std::vector<std::size_t> components;
  components.reserve(candidates.size());
  for (ColorId c : candidates) components.push_back(evaluator.components_with(c));
  const auto picked = boltzmann_pick(components, temperature, rng);
  if (!picked) return std::nullopt;
  return candidates[*picked];
}

ColorSet grow(const ColoredGraph& graph, ColorSet s, const ColorSet& pool, SolverMode mode, double temperature,
              Rng& rng) {
  std::vector<ColorId> candidates;
  std::vector<std::size_t> components;
  while (true) {
    candidates = (pool - s).members();
    if (candidates.empty()) break;

    CandidateEvaluator evaluator(graph, s);
    if (evaluator.base_components() <= 1)
      throw InfeasibleSolution(fmt::format("cannot extend connected color set {}", s.to_string()));
    components.clear();
    for (ColorId c : candidates) components.push_back(evaluator.components_with(c));

    std::optional<std::size_t> chosen;
    if (mode == SolverMode::kGreedy) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < components.size(); ++i)
        if (components[i] > components[best]) best = i;
      if (components[best] > 1) chosen = best;
    } else {
      chosen = boltzmann_pick(components, temperature, rng);
    }
    if (!chosen) break;
    s.insert(candidates[*chosen]);
  }
  return s;
}

Solution generate_initial_solution(const ColoredGraph& graph, const SolverConfig& config, Rng& rng) {
  if (graph.node_count() < 2) throw std::invalid_argument("instance needs at least two nodes");
  const std::size_t k = graph.color_count();
  ColorSet s = grow(graph, ColorSet(k), ColorSet::full(k), config.mode, config.temperature, rng);
  const std::size_t components = count_components(graph, s);
  return {std::move(s), components};
}

Solution new_solution(const ColoredGraph& graph, const Solution& best, const SolverConfig& config, Rng& rng) {
  const std::size_t k = graph.color_count();
  ColorSet s = grow(graph, ColorSet(k), best.colors.complement(), config.mode, config.temperature, rng);
  s = grow(graph, std::move(s), best.colors, config.mode, config.temperature, rng);
  const std::size_t components = count_components(graph, s);
  return {std::move(s), components};
}

namespace {

ColorId pick_member(const ColorSet& pool, Rng& rng) {
  const auto members = pool.members();
  std::uniform_int_distribution<std::size_t> index(0, members.size() - 1);
  return members[index(rng)];
}

}  // namespace

ShakeResult shake(const ColorSet& base, const ColorSet& current, std::size_t k, Rng& rng) {
  ShakeResult result{current, 0, false};
  ColorSet& s = result.colors;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < k; ++i) {
    const double delta = coin(rng);
    const ColorSet removable = s & base;
    const ColorSet addable = (s | base).complement();
    const bool can_remove = !removable.empty();
    const bool can_add = !addable.empty();
    if (!can_remove && !can_add) {
      result.exhausted = true;
      break;
    }
    if ((delta < 0.5 && can_remove) || !can_add) {
      s.erase(pick_member(removable, rng));
    } else {
      s.insert(pick_member(addable, rng));
    }
    ++result.operations;
  }
  return result;
}

ColorSet fix(const ColoredGraph& graph, ColorSet s, Rng& rng) {
  while (count_components(graph, s) == 1) s.erase(pick_member(s, rng));
  return s;
}

ColorSet local_search(const ColoredGraph& graph, ColorSet s, const SolverConfig& config, Rng& rng) {
  if (!is_feasible(graph, s))
    throw InfeasibleSolution(fmt::format("local search needs a feasible start, got {}", s.to_string()));
  return grow(graph, std::move(s), ColorSet::full(graph.color_count()), config.mode, config.temperature, rng);
}

RunReport solve(const ColoredGraph& graph, const SolverConfig& config) {
  config.validate();
  require_valid(graph);
  if (graph.node_count() < 2) throw std::invalid_argument("instance needs at least two nodes");

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
  const auto out_of_time = [&] {
    return config.stop.time_limit_seconds && elapsed() >= *config.stop.time_limit_seconds;
  };

  Rng rng(config.seed);
  RunReport report;
  const std::size_t total_colors = graph.color_count();

  Solution best = generate_initial_solution(graph, config, rng);
  std::size_t max_neighborhood = total_colors - best.colors.size();
  while (true) {
    Solution current = new_solution(graph, best, config, rng);
    while (current.colors.size() > best.colors.size()) {
      best = current;
      max_neighborhood = total_colors - best.colors.size();
      current = new_solution(graph, best, config, rng);
    }

    std::size_t k = 1;
    while (k < max_neighborhood && !out_of_time()) {
      ShakeResult shaken = shake(current.colors, current.colors, k, rng);
      ++report.shakes;
      ColorSet candidate = std::move(shaken.colors);
      if (count_components(graph, candidate) == 1) {
        candidate = fix(graph, std::move(candidate), rng);
        ++report.fixes;
      }
      candidate = local_search(graph, std::move(candidate), config, rng);
      if (candidate.size() > current.colors.size()) {
        current.components = count_components(graph, candidate);
        current.colors = std::move(candidate);
        k = 1;
      } else {
        ++k;
      }
    }

    if (current.colors.size() > best.colors.size()) {
      best = current;
      max_neighborhood = total_colors - best.colors.size();
    }
    ++report.outer_iterations;
    if (config.stop.max_outer_iterations && report.outer_iterations >= *config.stop.max_outer_iterations) break;
    if (out_of_time()) break;
  }

  report.value = total_colors - best.colors.size();
  report.kept_colors = best.colors;
  report.cut_colors = best.colors.complement();
  report.disconnecting = disconnecting_edges(graph, best.colors);
  report.minimal_cut = extract_minimal_cut(graph, report.disconnecting);
  report.elapsed_seconds = elapsed();
  return report;
}

}  // namespace mccp
