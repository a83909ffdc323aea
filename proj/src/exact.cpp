#include "mccp/exact.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "mccp/connectivity.hpp"

namespace mccp {

ExactResult brute_force_optimum(const ColoredGraph& graph, std::size_t max_colors) {
  const std::size_t k = graph.color_count();
  if (k > max_colors)
    throw OracleLimitExceeded(
        fmt::format("brute-force oracle limited to {} colors; instance has {}", max_colors, k));
  if (k >= 64) throw OracleLimitExceeded("brute-force oracle supports at most 63 colors");

  ExactResult result;
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::size_t size = 0; size <= k; ++size) {
    // Gosper's hack: next larger integer with the same popcount.
    std::uint64_t mask = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
    while (mask < limit) {
      ++result.explored;
      ColorSet kept = ColorSet::full(k);
      for (std::size_t c = 0; c < k; ++c)
        if ((mask >> c) & 1u) kept.erase(static_cast<ColorId>(c));
      if (is_feasible(graph, kept)) {
        result.value = size;
        result.witness = kept.complement();
        return result;
      }
      if (mask == 0) break;
      const std::uint64_t lowest = mask & -mask;
      const std::uint64_t ripple = mask + lowest;
      mask = ripple | (((mask ^ ripple) >> 2) / lowest);
    }
  }
  // Unreachable for instances with at least two nodes: removing every color
  // leaves only isolated nodes.
  throw std::invalid_argument("no color set disconnects the graph (fewer than two nodes?)");
}

std::size_t global_min_cut(const ColoredGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n < 2) throw std::invalid_argument("global minimum cut needs at least two nodes");

  std::vector<std::vector<std::int64_t>> weight(n, std::vector<std::int64_t>(n, 0));
  for (const Edge& e : graph.edges()) {
    if (e.u == e.v) continue;
    ++weight[e.u][e.v];
    ++weight[e.v][e.u];
  }

  // vertices[i] is the representative of the i-th still-alive super node.
  std::vector<std::size_t> vertices(n);
  for (std::size_t i = 0; i < n; ++i) vertices[i] = i;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();

  std::vector<std::int64_t> attach(n);
  std::vector<bool> added(n);
  for (std::size_t alive = n; alive > 1; --alive) {
    std::fill(attach.begin(), attach.begin() + static_cast<std::ptrdiff_t>(alive), 0);
    std::fill(added.begin(), added.begin() + static_cast<std::ptrdiff_t>(alive), false);
    std::size_t prev = 0;
    std::size_t last = 0;
    for (std::size_t step = 0; step < alive; ++step) {
      std::size_t pick = alive;
      for (std::size_t i = 0; i < alive; ++i)
        if (!added[i] && (pick == alive || attach[i] > attach[pick])) pick = i;
      added[pick] = true;
      prev = last;
      last = pick;
      if (step + 1 == alive) break;
      for (std::size_t i = 0; i < alive; ++i)
        if (!added[i]) attach[i] += weight[vertices[pick]][vertices[i]];
    }
    // Cut of the phase: the last node against everything else.
    best = std::min(best, attach[last]);

    // Merge `last` into `prev`.
    const std::size_t keep = vertices[prev];
    const std::size_t gone = vertices[last];
    for (std::size_t i = 0; i < alive; ++i) {
      const std::size_t other = vertices[i];
      weight[keep][other] += weight[gone][other];
      weight[other][keep] = weight[keep][other];
    }
    weight[keep][keep] = 0;
    vertices[last] = vertices[alive - 1];
  }
  return static_cast<std::size_t>(best);
}

}  // namespace mccp
