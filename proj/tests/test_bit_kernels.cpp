#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "mccp/bit_kernels.hpp"

using namespace mccp::simd;

namespace {

std::vector<Word> random_words(std::size_t n, std::mt19937_64& rng) {
  std::vector<Word> out(n);
  for (Word& w : out) w = rng();
  return out;
}

std::vector<const BitKernels*> variants() {
  std::vector<const BitKernels*> out{&scalar_kernels()};
  if (const BitKernels* avx2 = avx2_kernels()) out.push_back(avx2);
  return out;
}

}  // namespace

TEST_CASE("active kernel table is one of the known variants") {
  const BitKernels& active = active_kernels();
  bool known = &active == &scalar_kernels() || &active == avx2_kernels();
  CHECK(known);
  MESSAGE("active kernels: " << std::string(active.name));
}

TEST_CASE("scalar reference kernels on hand values") {
  const BitKernels& k = scalar_kernels();
  const std::vector<Word> a{0b1011, ~Word{0}};
  const std::vector<Word> b{0b0110, 0};
  CHECK(k.popcount(a) == 67);
  CHECK(k.popcount_xor(a, b) == 3 + 64);
  CHECK(k.popcount_and(a, b) == 1);
  CHECK(k.popcount_andnot(a, b) == 2 + 64);
  std::vector<Word> out(2);
  k.andnot(a, b, out);
  CHECK(out[0] == 0b1001);
  CHECK(out[1] == ~Word{0});

  const std::vector<std::uint32_t> colors{0, 1, 2, 3, 64, 65};
  std::vector<std::uint8_t> member(colors.size());
  k.color_membership(colors, a, member);
  CHECK(member == std::vector<std::uint8_t>{1, 1, 0, 1, 1, 1});
}

TEST_CASE("every kernel variant matches the scalar reference") {
  std::mt19937_64 rng(12345);
  const BitKernels& ref = scalar_kernels();
  for (const BitKernels* k : variants()) {
    CAPTURE(k->name);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u}) {
      for (int rep = 0; rep < 50; ++rep) {
        const auto a = random_words(n, rng);
        const auto b = random_words(n, rng);
        CHECK(k->popcount(a) == ref.popcount(a));
        CHECK(k->popcount_xor(a, b) == ref.popcount_xor(a, b));
        CHECK(k->popcount_and(a, b) == ref.popcount_and(a, b));
        CHECK(k->popcount_andnot(a, b) == ref.popcount_andnot(a, b));
        std::vector<Word> got(n), want(n);
        k->andnot(a, b, got);
        ref.andnot(a, b, want);
        CHECK(got == want);
      }
    }
    for (std::size_t universe_words : {1u, 2u, 20u}) {
      const auto set = random_words(universe_words, rng);
      for (std::size_t m : {0u, 7u, 8u, 9u, 31u, 100u}) {
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(universe_words * 64 - 1));
        std::vector<std::uint32_t> colors(m);
        for (auto& c : colors) c = pick(rng);
        std::vector<std::uint8_t> got(m), want(m);
        k->color_membership(colors, set, got);
        ref.color_membership(colors, set, want);
        CHECK(got == want);
      }
    }
  }
}
