#include "mccp/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace mccp {

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed-header";
    case ParseErrorKind::kMalformedEdge: return "malformed-edge";
    case ParseErrorKind::kEdgeCountMismatch: return "edge-count-mismatch";
    case ParseErrorKind::kNodeOutOfRange: return "node-out-of-range";
    case ParseErrorKind::kColorOutOfRange: return "color-out-of-range";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kUnusedColor: return "unused-color";
    case ParseErrorKind::kDisconnected: return "disconnected";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& reason)
    : std::runtime_error(line > 0 ? fmt::format("line {}: {} ({})", line, reason, to_string(kind))
                                  : fmt::format("{} ({})", reason, to_string(kind))),
      kind_(kind),
      line_(line) {}

namespace {

constexpr std::string_view kBlanks = " \t\r\v\f";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kBlanks);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kBlanks);
  return s.substr(first, last - first + 1);
}

// Splits on blank runs; nullopt if any token is not an unsigned integer.
std::optional<std::vector<std::uint64_t>> parse_numbers(std::string_view line) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(kBlanks, pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(kBlanks, pos);
    if (end == std::string_view::npos) end = line.size();
    const std::string_view token = line.substr(pos, end - pos);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    out.push_back(value);
    pos = end;
  }
  return out;
}

void read_metadata(std::string_view comment, InstanceMetadata& metadata) {
  const std::string_view body = trim(comment.substr(1));
  const auto eq = body.find('=');
  if (eq == std::string_view::npos || eq == 0) return;
  const std::string_view key = trim(body.substr(0, eq));
  if (key.find_first_of(kBlanks) != std::string_view::npos) return;
  metadata.insert_or_assign(std::string(key), std::string(trim(body.substr(eq + 1))));
}

}  // namespace

ParsedInstance read_instance(std::istream& in) {
  InstanceMetadata metadata;
  std::optional<std::size_t> node_count, edge_count, color_count;
  std::size_t header_line = 0;
  std::vector<Edge> edges;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      read_metadata(line, metadata);
      continue;
    }
    const auto numbers = parse_numbers(line);
    if (!node_count) {
      if (!numbers || numbers->size() != 3)
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         "expected header '<node_count> <edge_count> <color_count>'");
      if ((*numbers)[0] == 0 || (*numbers)[2] == 0)
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "node_count and color_count must be positive");
      if ((*numbers)[0] > 0xffffffffu || (*numbers)[2] > 0xffffffffu || (*numbers)[1] > 0xffffffffu)
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "header value too large");
      node_count = (*numbers)[0];
      edge_count = (*numbers)[1];
      color_count = (*numbers)[2];
      header_line = line_no;
      edges.reserve(*edge_count);
      continue;
    }
    if (edges.size() == *edge_count)
      throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                       fmt::format("more edge lines than the {} declared in the header", *edge_count));
    if (!numbers || numbers->size() != 3)
      throw ParseError(ParseErrorKind::kMalformedEdge, line_no, "expected edge '<u> <v> <color>'");
    const auto u = (*numbers)[0], v = (*numbers)[1], c = (*numbers)[2];
    if (u >= *node_count || v >= *node_count)
      throw ParseError(ParseErrorKind::kNodeOutOfRange, line_no,
                       fmt::format("node id outside [0, {})", *node_count));
    if (u == v) throw ParseError(ParseErrorKind::kSelfLoop, line_no, fmt::format("self-loop on node {}", u));
    if (c >= *color_count)
      throw ParseError(ParseErrorKind::kColorOutOfRange, line_no,
                       fmt::format("color {} outside [0, {})", c, *color_count));
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), static_cast<ColorId>(c)});
  }
  if (!node_count) throw ParseError(ParseErrorKind::kMalformedHeader, 0, "missing header");
  if (edges.size() != *edge_count)
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                     fmt::format("header declares {} edges but {} were found", *edge_count, edges.size()));

  ColoredGraph graph(*node_count, *color_count, std::move(edges));
  for (const Violation& v : validate(graph)) {
    switch (v.kind) {
      case ViolationKind::kUnusedColor:
        throw ParseError(ParseErrorKind::kUnusedColor, header_line, v.message);
      case ViolationKind::kDisconnected:
        throw ParseError(ParseErrorKind::kDisconnected, header_line, v.message);
      default:
        // Per-edge problems were rejected above with their line numbers.
        throw ParseError(ParseErrorKind::kMalformedHeader, header_line, v.message);
    }
  }
  return {std::move(graph), std::move(metadata)};
}

ColoredGraph parse_instance(std::istream& in) { return read_instance(in).graph; }

ColoredGraph parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

ParsedInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path));
  return read_instance(in);
}

void write_instance(const ColoredGraph& graph, std::ostream& out, const InstanceMetadata& metadata) {
  for (const auto& [key, value] : metadata) out << "# " << key << '=' << value << '\n';
  out << graph.node_count() << ' ' << graph.edge_count() << ' ' << graph.color_count() << '\n';
  // Edges are stored canonically already.
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << ' ' << e.color << '\n';
}

std::string write_instance(const ColoredGraph& graph, const InstanceMetadata& metadata) {
  std::ostringstream out;
  write_instance(graph, out, metadata);
  return out.str();
}

}  // namespace mccp
