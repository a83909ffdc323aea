#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "mccp/color_set.hpp"

using mccp::ColorId;
using mccp::ColorSet;

TEST_CASE("membership, insert and erase") {
  ColorSet s(70);
  CHECK(s.empty());
  s.insert(0);
  s.insert(69);
  s.insert(64);
  CHECK(s.contains(0));
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(1));
  CHECK_FALSE(s.contains(70));
  CHECK(s.size() == 3);
  s.erase(64);
  CHECK(s.members() == std::vector<ColorId>{0, 69});
  CHECK(s.to_string() == "{0, 69}");
  CHECK_THROWS_AS(s.insert(70), std::out_of_range);
}

TEST_CASE("complement stays inside the universe") {
  const ColorSet s(5, {1, 3});
  const ColorSet c = s.complement();
  CHECK(c.members() == std::vector<ColorId>{0, 2, 4});
  CHECK(ColorSet(5).complement() == ColorSet::full(5));
  CHECK(ColorSet::full(130).size() == 130);
  CHECK(ColorSet::full(130).complement().empty());
}

TEST_CASE("mismatched universes are rejected") {
  ColorSet a(4), b(5);
  CHECK_THROWS_AS(a |= b, std::invalid_argument);
  CHECK_THROWS_AS((void)a.symmetric_difference_size(b), std::invalid_argument);
}

TEST_CASE("set algebra agrees with std::set on random inputs") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t universe = 1 + rng() % 200;
    std::set<ColorId> ra, rb;
    ColorSet a(universe), b(universe);
    for (std::size_t i = 0; i < universe; ++i) {
      if (rng() % 3 == 0) {
        ra.insert(static_cast<ColorId>(i));
        a.insert(static_cast<ColorId>(i));
      }
      if (rng() % 2 == 0) {
        rb.insert(static_cast<ColorId>(i));
        b.insert(static_cast<ColorId>(i));
      }
    }
    std::size_t sym = 0, inter = 0, diff = 0;
    for (std::size_t i = 0; i < universe; ++i) {
      const bool in_a = ra.contains(static_cast<ColorId>(i));
      const bool in_b = rb.contains(static_cast<ColorId>(i));
      sym += in_a != in_b;
      inter += in_a && in_b;
      diff += in_a && !in_b;
    }
    CHECK(a.size() == ra.size());
    CHECK(a.symmetric_difference_size(b) == sym);
    CHECK(a.intersection_size(b) == inter);
    CHECK(a.difference_size(b) == diff);
    CHECK((a - b).size() == diff);
    CHECK((a & b).size() == inter);
    CHECK((a | b).size() == ra.size() + rb.size() - inter);
    CHECK(a.complement().size() == universe - ra.size());
    CHECK((a & b).is_subset_of(a));
    CHECK(std::vector<ColorId>(ra.begin(), ra.end()) == a.members());
  }
}
