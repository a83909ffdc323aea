// Compiled with -mavx2 -mpopcnt. Only reached through avx2_kernels(), which
// checks CPU support first.

#include <immintrin.h>

#include <cassert>

#include "mccp/bit_kernels.hpp"

namespace mccp::simd {
namespace {

// Nibble-lookup popcount: per-byte counts via pshufb, summed with psadbw.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

template <class Combine, class CombineScalar>
std::size_t popcount_combined(std::span<const Word> a, std::span<const Word> b, Combine combine,
                              CombineScalar combine_scalar) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    const __m256i bytes = popcount_bytes(combine(va, vb));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(combine_scalar(a[i], b[i])));
  return total;
}

std::size_t popcount_avx2(std::span<const Word> a) {
  return popcount_combined(
      a, a, [](__m256i x, __m256i) { return x; }, [](Word x, Word) { return x; });
}

std::size_t popcount_xor_avx2(std::span<const Word> a, std::span<const Word> b) {
  assert(a.size() == b.size());
  return popcount_combined(
      a, b, [](__m256i x, __m256i y) { return _mm256_xor_si256(x, y); },
      [](Word x, Word y) { return x ^ y; });
}

std::size_t popcount_and_avx2(std::span<const Word> a, std::span<const Word> b) {
  assert(a.size() == b.size());
  return popcount_combined(
      a, b, [](__m256i x, __m256i y) { return _mm256_and_si256(x, y); },
      [](Word x, Word y) { return x & y; });
}

std::size_t popcount_andnot_avx2(std::span<const Word> a, std::span<const Word> b) {
  assert(a.size() == b.size());
  // _mm256_andnot_si256(y, x) computes ~y & x.
  return popcount_combined(
      a, b, [](__m256i x, __m256i y) { return _mm256_andnot_si256(y, x); },
      [](Word x, Word y) { return x & ~y; });
}

void andnot_avx2(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_andnot_si256(vb, va));
  }
  for (; i < n; ++i) out[i] = a[i] & ~b[i];
}

// Eight colors per step: gather the 32-bit word holding each color's bit,
// shift it down and mask, then narrow the lanes to bytes.
void color_membership_avx2(std::span<const std::uint32_t> colors, std::span<const Word> set,
                           std::span<std::uint8_t> out) {
  assert(colors.size() == out.size());
  const auto* words32 = reinterpret_cast<const int*>(set.data());
  const std::size_t n = colors.size();
  const __m256i five = _mm256_set1_epi32(5);
  const __m256i low5 = _mm256_set1_epi32(31);
  const __m256i one = _mm256_set1_epi32(1);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(colors.data() + i));
    const __m256i index = _mm256_srlv_epi32(c, five);
    const __m256i words = _mm256_i32gather_epi32(words32, index, 4);
    const __m256i bits = _mm256_and_si256(_mm256_srlv_epi32(words, _mm256_and_si256(c, low5)), one);
    const __m128i lo = _mm256_castsi256_si128(bits);
    const __m128i hi = _mm256_extracti128_si256(bits, 1);
    const __m128i packed16 = _mm_packus_epi32(lo, hi);
    const __m128i packed8 = _mm_packus_epi16(packed16, packed16);
    _mm_storel_epi64(reinterpret_cast<__m128i*>(out.data() + i), packed8);
  }
  for (; i < n; ++i) {
    const std::uint32_t c = colors[i];
    out[i] = static_cast<std::uint8_t>((set[c >> 6] >> (c & 63)) & 1u);
  }
}

}  // namespace

const BitKernels& avx2_kernel_table() {
  static constexpr BitKernels kAvx2{
      "avx2",
      &popcount_avx2,
      &popcount_xor_avx2,
      &popcount_and_avx2,
      &popcount_andnot_avx2,
      &andnot_avx2,
      &color_membership_avx2,
  };
  return kAvx2;
}

}  // namespace mccp::simd
