#pragma once

// Word-level kernels over packed bit vectors and per-edge color arrays.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2 variant is compiled into a separate translation unit and selected at
// runtime when the CPU supports it. Setting MCCP_FORCE_SCALAR=1 in the
// environment pins the scalar table.

#include <cstddef>
#include <cstdint>
#include <span>

namespace mccp::simd {

using Word = std::uint64_t;

struct BitKernels {
  const char* name;

  // |a|
  std::size_t (*popcount)(std::span<const Word> a);
  // |a ^ b|
  std::size_t (*popcount_xor)(std::span<const Word> a, std::span<const Word> b);
  // |a & b|
  std::size_t (*popcount_and)(std::span<const Word> a, std::span<const Word> b);
  // |a & ~b|
  std::size_t (*popcount_andnot)(std::span<const Word> a, std::span<const Word> b);
  // out[i] = a[i] & ~b[i]
  void (*andnot)(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
  // out[i] = 1 if bit colors[i] is set in `set`, else 0. Colors must index
  // bits inside `set`.
  void (*color_membership)(std::span<const std::uint32_t> colors, std::span<const Word> set,
                           std::span<std::uint8_t> out);
};

const BitKernels& scalar_kernels();

// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const BitKernels* avx2_kernels();

// The table used by the rest of the library. Resolved once.
const BitKernels& active_kernels();

}  // namespace mccp::simd
