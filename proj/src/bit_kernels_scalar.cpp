#include <bit>
#include <cassert>

#include "mccp/bit_kernels.hpp"

namespace mccp::simd {
namespace {

std::size_t popcount_scalar(std::span<const Word> a) {
  std::size_t total = 0;
  for (Word w : a) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t popcount_xor_scalar(std::span<const Word> a, std::span<const Word> b) {
  assert(a.size() == b.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

std::size_t popcount_and_scalar(std::span<const Word> a, std::span<const Word> b) {
  assert(a.size() == b.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

std::size_t popcount_andnot_scalar(std::span<const Word> a, std::span<const Word> b) {
  assert(a.size() == b.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return total;
}

void andnot_scalar(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & ~b[i];
}

void color_membership_scalar(std::span<const std::uint32_t> colors, std::span<const Word> set,
                             std::span<std::uint8_t> out) {
  assert(colors.size() == out.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const std::uint32_t c = colors[i];
    out[i] = static_cast<std::uint8_t>((set[c >> 6] >> (c & 63)) & 1u);
  }
}

}  // namespace

const BitKernels& scalar_kernels() {
  static constexpr BitKernels kScalar{
      "scalar",
      &popcount_scalar,
      &popcount_xor_scalar,
      &popcount_and_scalar,
      &popcount_andnot_scalar,
      &andnot_scalar,
      &color_membership_scalar,
  };
  return kScalar;
}

}  // namespace mccp::simd
