#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "mccp/color_set.hpp"
#include "mccp/graph.hpp"

namespace mccp {

struct ExactResult {
  // Minimum number of colors whose removal disconnects the graph.
  std::size_t value = 0;
  // One optimal set of cut colors.
  ColorSet witness;
  // Color subsets examined before the first hit.
  std::uint64_t explored = 0;
};

inline constexpr std::size_t kDefaultMaxColors = 20;

class OracleLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Exhaustive optimum. Subsets of colors are tried by increasing cardinality
/// and, within a cardinality, by increasing bit pattern; the first subset
/// whose removal disconnects the graph is returned. Refuses instances with
/// more than `max_colors` colors.
ExactResult brute_force_optimum(const ColoredGraph& graph, std::size_t max_colors = kDefaultMaxColors);

/// Size of a global minimum edge cut with unit edge weights (parallel edges
/// add up), computed by Stoer-Wagner minimum-cut phases. Requires at least
/// two nodes.
std::size_t global_min_cut(const ColoredGraph& graph);

}  // namespace mccp
