#include "mccp/graph.hpp"

#include <algorithm>
#include <utility>

#include <fmt/format.h>

#include "mccp/connectivity.hpp"

namespace mccp {

ColoredGraph::ColoredGraph(std::size_t node_count, std::size_t color_count, std::vector<Edge> edges)
    : node_count_(node_count), color_count_(color_count), edges_(std::move(edges)) {
  for (Edge& e : edges_)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());

  edge_colors_.reserve(edges_.size());
  for (const Edge& e : edges_) edge_colors_.push_back(e.color);

  color_offsets_.assign(color_count_ + 1, 0);
  for (const Edge& e : edges_)
    if (e.color < color_count_) ++color_offsets_[e.color + 1];
  for (std::size_t c = 0; c < color_count_; ++c) color_offsets_[c + 1] += color_offsets_[c];
  by_color_.resize(color_offsets_.back());
  std::vector<std::size_t> cursor(color_offsets_.begin(), color_offsets_.end() - 1);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const ColorId c = edges_[id].color;
    if (c < color_count_) by_color_[cursor[c]++] = static_cast<EdgeId>(id);
  }
}

std::span<const EdgeId> ColoredGraph::edges_of_color(ColorId color) const noexcept {
  if (color >= color_count_) return {};
  return std::span<const EdgeId>(by_color_).subspan(color_offsets_[color],
                                                    color_offsets_[color + 1] - color_offsets_[color]);
}

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::kNoNodes: return "no-nodes";
    case ViolationKind::kNoColors: return "no-colors";
    case ViolationKind::kNodeOutOfRange: return "node-out-of-range";
    case ViolationKind::kSelfLoop: return "self-loop";
    case ViolationKind::kColorOutOfRange: return "color-out-of-range";
    case ViolationKind::kUnusedColor: return "unused-color";
    case ViolationKind::kDisconnected: return "disconnected";
  }
  return "unknown";
}

std::vector<Violation> validate(const ColoredGraph& graph) {
  std::vector<Violation> out;
  const std::size_t n = graph.node_count();
  const std::size_t k = graph.color_count();
  if (n == 0) out.push_back({ViolationKind::kNoNodes, "graph has no nodes"});
  if (k == 0) out.push_back({ViolationKind::kNoColors, "graph has no colors"});

  bool endpoints_ok = true;
  std::vector<bool> used(k, false);
  const auto edges = graph.edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    if (e.u >= n || e.v >= n) {
      endpoints_ok = false;
      out.push_back({ViolationKind::kNodeOutOfRange,
                     fmt::format("edge {} ({} {}) has an endpoint outside [0, {})", id, e.u, e.v, n), id});
    } else if (e.u == e.v) {
      out.push_back({ViolationKind::kSelfLoop, fmt::format("edge {} is a self-loop on node {}", id, e.u), id});
    }
    if (e.color >= k) {
      out.push_back({ViolationKind::kColorOutOfRange,
                     fmt::format("edge {} has color {} outside [0, {})", id, e.color, k), id});
    } else {
      used[e.color] = true;
    }
  }
  for (std::size_t c = 0; c < k; ++c)
    if (!used[c]) out.push_back({ViolationKind::kUnusedColor, fmt::format("color {} is not used by any edge", c)});

  if (n > 0 && endpoints_ok) {
    UnionFind uf(n);
    for (const Edge& e : edges) uf.unite(e.u, e.v);
    if (uf.components() > 1)
      out.push_back({ViolationKind::kDisconnected,
                     fmt::format("graph with all colors has {} connected components", uf.components())});
  }
  return out;
}

namespace {
std::string describe(const std::vector<Violation>& violations) {
  std::string msg = "invalid instance:";
  for (const Violation& v : violations) msg += fmt::format(" [{}] {};", to_string(v.kind), v.message);
  return msg;
}
}  // namespace

InvalidInstance::InvalidInstance(std::vector<Violation> violations)
    : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {}

void require_valid(const ColoredGraph& graph) {
  auto violations = validate(graph);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
}

}  // namespace mccp
