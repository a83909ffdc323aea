#include "mccp/color_set.hpp"

#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace mccp {

ColorSet::ColorSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

ColorSet::ColorSet(std::size_t universe, std::initializer_list<ColorId> members)
    : ColorSet(universe, std::span<const ColorId>(members.begin(), members.size())) {}

ColorSet::ColorSet(std::size_t universe, std::span<const ColorId> members) : ColorSet(universe) {
  for (ColorId c : members) insert(c);
}

ColorSet ColorSet::full(std::size_t universe) {
  ColorSet s(universe);
  for (Word& w : s.words_) w = ~Word{0};
  s.clear_padding();
  return s;
}

void ColorSet::insert(ColorId color) {
  require_in_range(color);
  words_[color >> 6] |= Word{1} << (color & 63);
}

void ColorSet::erase(ColorId color) {
  require_in_range(color);
  words_[color >> 6] &= ~(Word{1} << (color & 63));
}

void ColorSet::clear() noexcept {
  for (Word& w : words_) w = 0;
}

std::size_t ColorSet::size() const noexcept { return simd::active_kernels().popcount(words_); }

bool ColorSet::empty() const noexcept {
  for (Word w : words_)
    if (w != 0) return false;
  return true;
}

ColorSet ColorSet::complement() const {
  ColorSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.clear_padding();
  return out;
}

ColorSet& ColorSet::operator|=(const ColorSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ColorSet& ColorSet::operator&=(const ColorSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ColorSet& ColorSet::operator-=(const ColorSet& other) {
  require_same_universe(other);
  simd::active_kernels().andnot(words_, other.words_, words_);
  return *this;
}

std::size_t ColorSet::symmetric_difference_size(const ColorSet& other) const {
  require_same_universe(other);
  return simd::active_kernels().popcount_xor(words_, other.words_);
}

std::size_t ColorSet::intersection_size(const ColorSet& other) const {
  require_same_universe(other);
  return simd::active_kernels().popcount_and(words_, other.words_);
}

std::size_t ColorSet::difference_size(const ColorSet& other) const {
  require_same_universe(other);
  return simd::active_kernels().popcount_andnot(words_, other.words_);
}

bool ColorSet::is_subset_of(const ColorSet& other) const { return difference_size(other) == 0; }

std::vector<ColorId> ColorSet::members() const {
  std::vector<ColorId> out;
  out.reserve(size());
  for_each([&](ColorId c) { out.push_back(c); });
  return out;
}

std::string ColorSet::to_string() const { return fmt::format("{{{}}}", fmt::join(members(), ", ")); }

void ColorSet::require_same_universe(const ColorSet& other) const {
  if (universe_ != other.universe_)
    throw std::invalid_argument(
        fmt::format("color sets over different universes ({} vs {})", universe_, other.universe_));
}

void ColorSet::require_in_range(ColorId color) const {
  if (color >= universe_)
    throw std::out_of_range(fmt::format("color {} outside universe of {}", color, universe_));
}

void ColorSet::clear_padding() noexcept {
  const std::size_t tail = universe_ & 63;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

}  // namespace mccp
