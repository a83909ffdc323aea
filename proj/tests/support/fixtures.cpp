#include "support/fixtures.hpp"

#include <algorithm>
#include <set>

namespace mccp::fixtures {

ColoredGraph triangle() { return ColoredGraph(3, 3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}}); }

ColoredGraph path(std::size_t color_count, const std::vector<ColorId>& colors) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < colors.size(); ++i)
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), colors[i]});
  return ColoredGraph(colors.size() + 1, color_count, std::move(edges));
}

ColoredGraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n), static_cast<ColorId>(i)});
  return ColoredGraph(n, n, std::move(edges));
}

ColoredGraph star3() { return ColoredGraph(4, 3, {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}}); }

ColoredGraph single_edge() { return ColoredGraph(2, 1, {{0, 1, 0}}); }

ColoredGraph boltzmann_fixture() {
  std::vector<Edge> edges{
      {0, 1, 0},                          // color 0: one merge
      {2, 3, 1}, {4, 5, 1},               // color 1: two merges
      {1, 2, 2}, {3, 4, 2}, {5, 6, 2},    // color 2: three merges
  };
  for (NodeId v = 0; v + 1 < 8; ++v) edges.push_back({v, v + 1, 3});
  return ColoredGraph(8, 4, std::move(edges));
}

namespace {

std::vector<Edge> random_shape(std::size_t nodes, double p, std::mt19937_64& rng) {
  std::set<std::pair<NodeId, NodeId>> present;
  std::vector<Edge> edges;
  for (NodeId v = 1; v < nodes; ++v) {
    std::uniform_int_distribution<NodeId> parent(0, v - 1);
    const NodeId u = parent(rng);
    present.insert({u, v});
    edges.push_back({u, v, 0});
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (NodeId u = 0; u < nodes; ++u)
    for (NodeId v = u + 1; v < nodes; ++v)
      if (!present.contains({u, v}) && coin(rng) < p) edges.push_back({u, v, 0});
  return edges;
}

}  // namespace

ColoredGraph random_connected(std::size_t nodes, std::size_t colors, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges = random_shape(nodes, p, rng);
  colors = std::min(colors, edges.size());
  std::uniform_int_distribution<ColorId> pick(0, static_cast<ColorId>(colors - 1));
  for (Edge& e : edges) e.color = pick(rng);
  std::vector<bool> used(colors, false);
  for (const Edge& e : edges) used[e.color] = true;
  // Overwrite edges whose color is shared to cover unused colors.
  std::vector<std::size_t> uses(colors, 0);
  for (const Edge& e : edges) ++uses[e.color];
  std::size_t cursor = 0;
  for (ColorId c = 0; c < colors; ++c) {
    if (used[c]) continue;
    while (uses[edges[cursor].color] < 2) ++cursor;
    --uses[edges[cursor].color];
    edges[cursor].color = c;
    ++uses[c];
    used[c] = true;
  }
  return ColoredGraph(nodes, colors, std::move(edges));
}

ColoredGraph random_distinct_colors(std::size_t nodes, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges = random_shape(nodes, p, rng);
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].color = static_cast<ColorId>(i);
  const std::size_t m = edges.size();
  return ColoredGraph(nodes, m, std::move(edges));
}

}  // namespace mccp::fixtures
