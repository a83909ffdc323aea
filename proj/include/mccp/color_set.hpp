#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mccp/bit_kernels.hpp"
#include "mccp/types.hpp"

namespace mccp {

/// A subset of the color ids [0, universe), stored as a fixed-width bit
/// vector. Binary operations require both operands to share the universe.
class ColorSet {
 public:
  using Word = simd::Word;

  ColorSet() = default;
  explicit ColorSet(std::size_t universe);
  ColorSet(std::size_t universe, std::initializer_list<ColorId> members);
  ColorSet(std::size_t universe, std::span<const ColorId> members);

  static ColorSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(ColorId color) const noexcept {
    return color < universe_ && ((words_[color >> 6] >> (color & 63)) & 1u) != 0;
  }
  void insert(ColorId color);
  void erase(ColorId color);
  void clear() noexcept;

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  ColorSet complement() const;

  ColorSet& operator|=(const ColorSet& other);
  ColorSet& operator&=(const ColorSet& other);
  // Set difference.
  ColorSet& operator-=(const ColorSet& other);

  friend ColorSet operator|(ColorSet a, const ColorSet& b) { return a |= b; }
  friend ColorSet operator&(ColorSet a, const ColorSet& b) { return a &= b; }
  friend ColorSet operator-(ColorSet a, const ColorSet& b) { return a -= b; }

  std::size_t symmetric_difference_size(const ColorSet& other) const;
  std::size_t intersection_size(const ColorSet& other) const;
  std::size_t difference_size(const ColorSet& other) const;
  bool is_subset_of(const ColorSet& other) const;

  /// Members in ascending order.
  std::vector<ColorId> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<ColorId>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const Word> words() const noexcept { return words_; }

  /// "{0, 3, 7}"
  std::string to_string() const;

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  void require_same_universe(const ColorSet& other) const;
  void require_in_range(ColorId color) const;
  void clear_padding() noexcept;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace mccp
