#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>

namespace mccp::oracle {

std::size_t bfs_components(const ColoredGraph& graph, const std::vector<bool>& keep_edge) {
  const std::size_t n = graph.node_count();
  std::vector<std::vector<NodeId>> adjacent(n);
  const auto edges = graph.edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    if (!keep_edge[id]) continue;
    adjacent[edges[id].u].push_back(edges[id].v);
    adjacent[edges[id].v].push_back(edges[id].u);
  }
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    std::queue<NodeId> frontier;
    frontier.push(static_cast<NodeId>(start));
    seen[start] = true;
    while (!frontier.empty()) {
      const NodeId x = frontier.front();
      frontier.pop();
      for (NodeId y : adjacent[x])
        if (!seen[y]) {
          seen[y] = true;
          frontier.push(y);
        }
    }
  }
  return components;
}

std::size_t bfs_components_for_colors(const ColoredGraph& graph, std::uint64_t color_mask) {
  std::vector<bool> keep(graph.edge_count());
  for (std::size_t id = 0; id < keep.size(); ++id) keep[id] = ((color_mask >> graph.edge(id).color) & 1u) != 0;
  return bfs_components(graph, keep);
}

std::size_t bipartition_min_cut(const ColoredGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n < 2 || n > 24) throw std::invalid_argument("bipartition oracle supports 2..24 nodes");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  // Node n-1 is always on the "0" side, so each bipartition is seen once.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t side = 1; side < count; ++side) {
    std::size_t crossing = 0;
    for (const Edge& e : graph.edges())
      if (((side >> e.u) & 1u) != ((side >> e.v) & 1u)) ++crossing;
    best = std::min(best, crossing);
  }
  return best;
}

std::size_t max_disconnected_kept(const ColoredGraph& graph) {
  const std::size_t k = graph.color_count();
  if (k >= 64) throw std::invalid_argument("too many colors for subset enumeration");
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best && mask != 0) continue;
    if (bfs_components_for_colors(graph, mask) > 1) best = std::max(best, size);
  }
  return best;
}

std::vector<std::vector<EdgeId>> minimal_disconnecting_subsets(const ColoredGraph& graph,
                                                              std::span<const EdgeId> edges) {
  const std::size_t m = edges.size();
  if (m > 20) throw std::invalid_argument("too many edges for subset enumeration");
  const auto disconnects_mask = [&](std::uint64_t mask) {
    std::vector<bool> keep(graph.edge_count(), true);
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1u) keep[edges[i]] = false;
    return bfs_components(graph, keep) > 1;
  };
  std::vector<std::vector<EdgeId>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (!disconnects_mask(mask)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < m && minimal; ++i)
      if (((mask >> i) & 1u) && disconnects_mask(mask & ~(std::uint64_t{1} << i))) minimal = false;
    if (!minimal) continue;
    std::vector<EdgeId> subset;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1u) subset.push_back(edges[i]);
    std::sort(subset.begin(), subset.end());
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace mccp::oracle
