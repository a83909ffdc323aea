#include <algorithm>
#include <functional>
#include <queue>
#include <random>

#include <fmt/format.h>

#include "mccp/instance_io.hpp"

namespace mccp {

double expected_edge_count(const GeneratorParams& params) {
  const auto n = static_cast<double>(params.node_count);
  return params.density * n * (n - 1.0) / 2.0;
}

std::vector<std::string> check_params(const GeneratorParams& params) {
  if (params.node_count < 2) throw GeneratorError("node_count must be at least 2");
  if (params.node_count > 0xffffffffu) throw GeneratorError("node_count too large");
  if (params.color_count < 1) throw GeneratorError("color_count must be at least 1");
  if (!(params.density > 0.0 && params.density <= 1.0)) throw GeneratorError("density must lie in (0, 1]");
  const std::size_t max_edges = params.node_count * (params.node_count - 1) / 2;
  if (params.color_count > max_edges)
    throw GeneratorError(fmt::format("{} colors cannot all be used on a simple graph with {} nodes",
                                     params.color_count, params.node_count));

  std::vector<std::string> warnings;
  const double expected = expected_edge_count(params);
  if (expected < static_cast<double>(params.node_count - 1))
    warnings.push_back(fmt::format(
        "expected edge count {:.1f} is below the {} spanning-tree edges; instances will be trees", expected,
        params.node_count - 1));
  if (expected < static_cast<double>(params.color_count))
    warnings.push_back(fmt::format("expected edge count {:.1f} is below the color count {}", expected,
                                   params.color_count));
  return warnings;
}

namespace {

// Decodes a uniformly random Pruefer sequence into a labeled tree.
std::vector<Edge> random_spanning_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> tree;
  tree.reserve(n - 1);
  if (n == 2) {
    tree.push_back({0, 1, 0});
    return tree;
  }
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  std::vector<NodeId> code(n - 2);
  for (NodeId& x : code) x = pick(rng);

  std::vector<std::size_t> degree(n, 1);
  for (NodeId x : code) ++degree[x];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(static_cast<NodeId>(v));
  for (NodeId x : code) {
    const NodeId leaf = leaves.top();
    leaves.pop();
    tree.push_back({leaf, x, 0});
    if (--degree[x] == 1) leaves.push(x);
  }
  const NodeId a = leaves.top();
  leaves.pop();
  tree.push_back({a, leaves.top(), 0});
  return tree;
}

}  // namespace

ColoredGraph generate_instance(const GeneratorParams& params) {
  check_params(params);
  const std::size_t n = params.node_count;
  std::mt19937_64 rng(params.seed);

  std::vector<Edge> edges = random_spanning_tree(n, rng);
  std::vector<std::vector<NodeId>> tree_adjacent(n);
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    tree_adjacent[e.u].push_back(e.v);
  }

  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  const double tree_edges = static_cast<double>(n - 1);
  const double extra_pairs = pairs - tree_edges;
  const double p = extra_pairs > 0 ? std::clamp((expected_edge_count(params) - tree_edges) / extra_pairs, 0.0, 1.0)
                                   : 0.0;
  std::bernoulli_distribution coin(p);
  for (NodeId u = 0; u < n; ++u) {
    const auto& adj = tree_adjacent[u];
    for (NodeId v = u + 1; v < n; ++v) {
      if (std::find(adj.begin(), adj.end(), v) != adj.end()) continue;
      if (coin(rng)) edges.push_back({u, v, 0});
    }
  }
  std::sort(edges.begin(), edges.end());

  const std::size_t k = params.color_count;
  if (edges.size() < k)
    throw GeneratorError(fmt::format("seed {} produced {} edges, fewer than the {} colors requested", params.seed,
                                     edges.size(), k));

  std::uniform_int_distribution<ColorId> color_pick(0, static_cast<ColorId>(k - 1));
  std::vector<std::size_t> uses(k, 0);
  for (Edge& e : edges) {
    e.color = color_pick(rng);
    ++uses[e.color];
  }

  std::vector<std::size_t> donors;
  for (ColorId c = 0; c < k; ++c) {
    if (uses[c] != 0) continue;
    donors.clear();
    for (std::size_t id = 0; id < edges.size(); ++id)
      if (uses[edges[id].color] >= 2) donors.push_back(id);
    // edges.size() >= k guarantees a donor while some color is unused.
    std::uniform_int_distribution<std::size_t> donor_pick(0, donors.size() - 1);
    Edge& e = edges[donors[donor_pick(rng)]];
    --uses[e.color];
    e.color = c;
    ++uses[c];
  }
  return ColoredGraph(n, k, std::move(edges));
}

}  // namespace mccp
