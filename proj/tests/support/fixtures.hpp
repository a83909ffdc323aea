#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mccp/graph.hpp"

namespace mccp::fixtures {

/// Triangle 0-1-2 with edge colors (0, 1, 2).
ColoredGraph triangle();

/// Path 0-1-...-(n-1); edge i gets colors[i].
ColoredGraph path(std::size_t color_count, const std::vector<ColorId>& colors);

/// Cycle on n nodes, every edge its own color.
ColoredGraph cycle(std::size_t n);

/// Star K_{1,3} centered at 0 with colors (0, 1, 2).
ColoredGraph star3();

/// Single edge 0-1 of color 0.
ColoredGraph single_edge();

/// Eight nodes; from the empty set, adding color 0 leaves 7 components,
/// color 1 leaves 6 and color 2 leaves 5. Color 3 is a spanning path.
ColoredGraph boltzmann_fixture();

/// Random connected simple graph built independently of the library
/// generator: random tree by attaching node i to a uniform earlier node, then
/// extra edges with probability p. Colors uniform, then unused colors are
/// assigned to consecutive edges (requires edges >= colors).
ColoredGraph random_connected(std::size_t nodes, std::size_t colors, double p, std::mt19937_64& rng);

/// Same shape, every edge its own color.
ColoredGraph random_distinct_colors(std::size_t nodes, double p, std::mt19937_64& rng);

}  // namespace mccp::fixtures
