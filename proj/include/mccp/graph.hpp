#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mccp/types.hpp"

namespace mccp {

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  ColorId color = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected, edge-colored multigraph. Immutable after construction.
///
/// The constructor canonicalizes the edge list: endpoints are ordered so that
/// u <= v and edges are sorted by (u, v, color). Edge ids index that sorted
/// list. Construction does not check the instance invariants; see validate().
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(std::size_t node_count, std::size_t color_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t color_count() const noexcept { return color_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  /// Edge ids carrying `color`, ascending. Empty for out-of-range colors.
  std::span<const EdgeId> edges_of_color(ColorId color) const noexcept;

  /// Color of every edge, indexed by edge id.
  std::span<const ColorId> edge_colors() const noexcept { return edge_colors_; }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.node_count_ == b.node_count_ && a.color_count_ == b.color_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t node_count_ = 0;
  std::size_t color_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<ColorId> edge_colors_;
  // CSR over colors: edges of color c are by_color_[offsets_[c] .. offsets_[c+1]).
  std::vector<std::size_t> color_offsets_;
  std::vector<EdgeId> by_color_;
};

enum class ViolationKind {
  kNoNodes,
  kNoColors,
  kNodeOutOfRange,
  kSelfLoop,
  kColorOutOfRange,
  kUnusedColor,
  kDisconnected,
};

const char* to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::string message;
  // Offending edge, when the violation concerns a single edge.
  std::size_t edge = static_cast<std::size_t>(-1);
};

/// Checks every instance invariant. An empty result means the graph is a
/// valid instance.
std::vector<Violation> validate(const ColoredGraph& graph);

class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Throws InvalidInstance listing every violation.
void require_valid(const ColoredGraph& graph);

}  // namespace mccp
