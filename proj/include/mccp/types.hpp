#pragma once

#include <cstddef>
#include <cstdint>

namespace mccp {

// Dense 0-based identifiers.
using NodeId = std::uint32_t;
using ColorId = std::uint32_t;
using EdgeId = std::uint32_t;

}  // namespace mccp
