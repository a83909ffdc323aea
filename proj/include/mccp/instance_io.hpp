#pragma once

// Plain-text instance format:
//
//   # optional comment lines; "# key=value" lines are kept as metadata
//   <node_count> <edge_count> <color_count>
//   <u> <v> <color>            (edge_count lines, 0-based ids)
//
// Blank lines are ignored and fields may be separated by any run of blanks.
// The canonical writer emits single spaces, u < v, and edges sorted by
// (u, v, color).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mccp/graph.hpp"

namespace mccp {

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedEdge,
  kEdgeCountMismatch,
  kNodeOutOfRange,
  kColorOutOfRange,
  kSelfLoop,
  kUnusedColor,
  kDisconnected,
};

const char* to_string(ParseErrorKind kind) noexcept;

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& reason);

  ParseErrorKind kind() const noexcept { return kind_; }
  // 1-based; 0 when the problem is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

using InstanceMetadata = std::map<std::string, std::string, std::less<>>;

struct ParsedInstance {
  ColoredGraph graph;
  InstanceMetadata metadata;
};

/// Parses and validates an instance. Throws ParseError.
ParsedInstance read_instance(std::istream& in);
ColoredGraph parse_instance(std::istream& in);
ColoredGraph parse_instance(std::string_view text);

/// Reads a file; an unreadable file is reported as std::runtime_error.
ParsedInstance read_instance_file(const std::string& path);

void write_instance(const ColoredGraph& graph, std::ostream& out, const InstanceMetadata& metadata = {});
std::string write_instance(const ColoredGraph& graph, const InstanceMetadata& metadata = {});

// ---------------------------------------------------------------------------
// Random instances

struct GeneratorParams {
  std::size_t node_count = 2;
  std::size_t color_count = 1;
  double density = 1.0;
  std::uint64_t seed = 0;
};

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Expected edge count d |V| (|V| - 1) / 2.
double expected_edge_count(const GeneratorParams& params);

/// Throws GeneratorError for out-of-range parameters. Returns non-fatal
/// warnings (e.g. a density too low for the spanning tree to be negligible).
std::vector<std::string> check_params(const GeneratorParams& params);

/// Uniform random spanning tree (random Pruefer sequence) plus an independent
/// Bernoulli draw per remaining node pair, tuned so the expected edge count
/// is d |V| (|V| - 1) / 2. Colors are uniform; colors that end up unused are
/// moved onto random edges whose color occurs at least twice. Deterministic in
/// the seed. Throws GeneratorError when the draw yields fewer edges than
/// colors.
ColoredGraph generate_instance(const GeneratorParams& params);

}  // namespace mccp
