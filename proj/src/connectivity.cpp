#include "mccp/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "mccp/bit_kernels.hpp"

namespace mccp {

UnionFind::UnionFind(std::size_t n) : parent_(n), set_size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), NodeId{0});
}

NodeId UnionFind::find(NodeId x) {
  NodeId root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) x = std::exchange(parent_[x], root);
  return root;
}

bool UnionFind::unite(NodeId x, NodeId y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (set_size_[x] < set_size_[y]) std::swap(x, y);
  parent_[y] = x;
  set_size_[x] += set_size_[y];
  --components_;
  return true;
}

namespace {

UnionFind union_colors(const ColoredGraph& graph, const ColorSet& colors) {
  UnionFind uf(graph.node_count());
  const auto edges = graph.edges();
  colors.for_each([&](ColorId c) {
    for (EdgeId id : graph.edges_of_color(c)) uf.unite(edges[id].u, edges[id].v);
  });
  return uf;
}

void require_universe(const ColoredGraph& graph, const ColorSet& colors) {
  if (colors.universe() != graph.color_count())
    throw std::invalid_argument(fmt::format("color set universe {} does not match the graph's {} colors",
                                            colors.universe(), graph.color_count()));
}

}  // namespace

std::size_t count_components(const ColoredGraph& graph, const ColorSet& colors) {
  require_universe(graph, colors);
  return union_colors(graph, colors).components();
}

bool is_feasible(const ColoredGraph& graph, const ColorSet& colors) { return count_components(graph, colors) > 1; }

bool disconnects(const ColoredGraph& graph, std::span<const EdgeId> removed) {
  std::vector<bool> gone(graph.edge_count(), false);
  for (EdgeId id : removed) gone.at(id) = true;
  UnionFind uf(graph.node_count());
  const auto edges = graph.edges();
  for (std::size_t id = 0; id < edges.size(); ++id)
    if (!gone[id]) uf.unite(edges[id].u, edges[id].v);
  return uf.components() > 1;
}

std::vector<EdgeId> disconnecting_edges(const ColoredGraph& graph, const ColorSet& kept_colors) {
  if (!is_feasible(graph, kept_colors))
    throw InfeasibleSolution(
        fmt::format("kept colors {} connect the graph; their complement is not disconnecting",
                    kept_colors.to_string()));
  const auto colors = graph.edge_colors();
  std::vector<std::uint8_t> kept(colors.size());
  simd::active_kernels().color_membership(colors, kept_colors.words(), kept);
  std::vector<EdgeId> out;
  for (std::size_t id = 0; id < kept.size(); ++id)
    if (kept[id] == 0) out.push_back(static_cast<EdgeId>(id));
  return out;
}

std::vector<EdgeId> extract_minimal_cut(const ColoredGraph& graph, std::span<const EdgeId> disconnecting) {
  std::vector<bool> in_set(graph.edge_count(), false);
  for (EdgeId id : disconnecting) in_set.at(id) = true;

  UnionFind uf(graph.node_count());
  const auto edges = graph.edges();
  for (std::size_t id = 0; id < edges.size(); ++id)
    if (!in_set[id]) uf.unite(edges[id].u, edges[id].v);
  if (uf.components() < 2) throw InfeasibleSolution("edge set does not disconnect the graph");

  // Edge ids already follow (u, v, color) order.
  std::vector<EdgeId> cut;
  for (std::size_t id = 0; id < edges.size(); ++id) {
    if (!in_set[id]) continue;
    const NodeId a = uf.find(edges[id].u);
    const NodeId b = uf.find(edges[id].v);
    if (a == b) continue;  // re-adding changes nothing
    if (uf.components() > 2) {
      uf.unite(a, b);
    } else {
      cut.push_back(static_cast<EdgeId>(id));
    }
  }
  return cut;
}

CandidateEvaluator::CandidateEvaluator(const ColoredGraph& graph, const ColorSet& base)
    : graph_(&graph),
      root_(graph.node_count()),
      overlay_parent_(graph.node_count()),
      overlay_stamp_(graph.node_count(), 0) {
  require_universe(graph, base);
  UnionFind uf = union_colors(graph, base);
  base_components_ = uf.components();
  for (std::size_t v = 0; v < root_.size(); ++v) root_[v] = uf.find(static_cast<NodeId>(v));
}

NodeId CandidateEvaluator::find_overlay(NodeId x) {
  if (overlay_stamp_[x] != stamp_) {
    overlay_stamp_[x] = stamp_;
    overlay_parent_[x] = x;
    return x;
  }
  NodeId r = x;
  while (overlay_parent_[r] != r) r = overlay_parent_[r];
  while (overlay_parent_[x] != r) x = std::exchange(overlay_parent_[x], r);
  return r;
}

std::size_t CandidateEvaluator::components_with(ColorId color) {
  if (++stamp_ == 0) {
    std::fill(overlay_stamp_.begin(), overlay_stamp_.end(), 0);
    stamp_ = 1;
  }
  std::size_t merges = 0;
  const auto edges = graph_->edges();
  for (EdgeId id : graph_->edges_of_color(color)) {
    const NodeId a = find_overlay(root_[edges[id].u]);
    const NodeId b = find_overlay(root_[edges[id].v]);
    if (a != b) {
      overlay_parent_[b] = a;
      ++merges;
    }
  }
  return base_components_ - merges;
}

}  // namespace mccp
