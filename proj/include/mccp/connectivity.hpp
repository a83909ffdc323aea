#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "mccp/color_set.hpp"
#include "mccp/graph.hpp"

namespace mccp {

/// Disjoint-set forest with union by size and path compression. Tracks the
/// number of sets.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  NodeId find(NodeId x);
  /// Returns true when x and y were in different sets.
  bool unite(NodeId x, NodeId y);

  std::size_t components() const noexcept { return components_; }
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<NodeId> parent_;
  std::vector<NodeId> set_size_;
  std::size_t components_;
};

/// Connected components of the spanning subgraph holding exactly the edges
/// whose color is in `colors`. Isolated nodes count as components.
std::size_t count_components(const ColoredGraph& graph, const ColorSet& colors);

/// A color set is feasible when its spanning subgraph is disconnected.
bool is_feasible(const ColoredGraph& graph, const ColorSet& colors);

/// True when deleting `removed` from the graph leaves it disconnected.
bool disconnects(const ColoredGraph& graph, std::span<const EdgeId> removed);

class InfeasibleSolution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Edges whose color is not kept, ascending by id. Throws InfeasibleSolution
/// when the kept colors span a connected subgraph.
std::vector<EdgeId> disconnecting_edges(const ColoredGraph& graph, const ColorSet& kept_colors);

/// Inclusion-minimal disconnecting subset of `disconnecting`. Edges are tried
/// in ascending (u, v, color) order and put back whenever the graph stays
/// disconnected. Throws InfeasibleSolution if `disconnecting` does not
/// disconnect the graph.
std::vector<EdgeId> extract_minimal_cut(const ColoredGraph& graph, std::span<const EdgeId> disconnecting);

/// Scores single-color additions to a fixed base set. The base union-find is
/// built once and flattened; each query overlays the candidate color's edges
/// on the base roots, which is equivalent to recounting base + {color}.
class CandidateEvaluator {
 public:
  CandidateEvaluator(const ColoredGraph& graph, const ColorSet& base);

  std::size_t base_components() const noexcept { return base_components_; }
  std::size_t components_with(ColorId color);

 private:
  NodeId find_overlay(NodeId root);

  const ColoredGraph* graph_;
  std::size_t base_components_;
  std::vector<NodeId> root_;
  std::vector<NodeId> overlay_parent_;
  std::vector<std::uint32_t> overlay_stamp_;
  std::uint32_t stamp_ = 0;
};

}  // namespace mccp
