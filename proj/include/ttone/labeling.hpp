#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ttone/graph.hpp"

namespace ttone {

using Color = int;

// Palettes are limited to colors 1..kMaxColors.
inline constexpr int kMaxColors = 64;

// A set of colors, stored as a bitmask (bit c-1 for color c). Iteration and
// printing are always in ascending color order.
class Label {
 public:
  constexpr Label() = default;
  Label(std::initializer_list<Color> colors);
  explicit Label(const std::vector<Color>& colors);
  static constexpr Label from_bits(std::uint64_t bits) {
    Label l;
    l.bits_ = bits;
    return l;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(Color c) const noexcept {
    return c >= 1 && c <= kMaxColors && ((bits_ >> (c - 1)) & 1U);
  }
  constexpr int max_color() const noexcept { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
  std::vector<Color> colors() const;
  // Colors concatenated when all are single digits ("12"), otherwise comma separated ("4,9,10").
  std::string str() const;

  constexpr Label operator&(Label o) const noexcept { return from_bits(bits_ & o.bits_); }
  constexpr Label operator|(Label o) const noexcept { return from_bits(bits_ | o.bits_); }
  constexpr Label operator-(Label o) const noexcept { return from_bits(bits_ & ~o.bits_); }
  friend constexpr bool operator==(Label a, Label b) noexcept { return a.bits_ == b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

constexpr int shared(Label a, Label b) noexcept { return (a & b).size(); }

// Lexicographic order on the ascending color lists.
bool lex_less(Label a, Label b);

// All t-subsets of {1..k} in lexicographic order.
std::vector<Label> all_labels(int t, int k);

// A t-tone labeling with palette {1..k}. Unset entries make it partial.
class Labeling {
 public:
  Labeling() = default;
  Labeling(int order, int t, int k);

  int t() const noexcept { return t_; }
  int k() const noexcept { return k_; }
  int order() const noexcept { return static_cast<int>(labels_.size()); }
  bool labeled(Vertex v) const { return !labels_[v].empty(); }
  bool total() const;
  Label operator[](Vertex v) const { return labels_[v]; }
  void set(Vertex v, Label l) { labels_[v] = l; }
  void clear(Vertex v) { labels_[v] = Label{}; }
  void set_palette(int k) { k_ = k; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  // Largest color actually used.
  int colors_used() const;

  friend bool operator==(const Labeling& a, const Labeling& b) = default;

 private:
  int t_ = 0;
  int k_ = 0;
  std::vector<Label> labels_;
};

// A permutation of colors 1..k; image[c] is the new name of color c (index 0 unused).
class ColorPermutation {
 public:
  explicit ColorPermutation(int k);
  int k() const noexcept { return static_cast<int>(image_.size()) - 1; }
  Color operator()(Color c) const { return image_[c]; }
  Label apply(Label l) const;
  Labeling apply(const Labeling& f) const;
  ColorPermutation inverse() const;
  // Throws internal if the mapping is not a bijection of {1..k}.
  static ColorPermutation from_images(std::vector<Color> image);

 private:
  std::vector<Color> image_;
};

}  // namespace ttone
