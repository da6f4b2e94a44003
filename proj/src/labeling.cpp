#include "ttone/labeling.hpp"

#include <algorithm>

#include "ttone/errors.hpp"

namespace ttone {

namespace {

std::uint64_t bits_of(Color c) {
  if (c < 1 || c > kMaxColors)
    fail(ErrorKind::invalid_input, "color-range", "color " + std::to_string(c) + " outside 1.." +
                                                      std::to_string(kMaxColors));
  return std::uint64_t{1} << (c - 1);
}

}  // namespace

Label::Label(std::initializer_list<Color> colors) {
  for (Color c : colors) bits_ |= bits_of(c);
}

Label::Label(const std::vector<Color>& colors) {
  for (Color c : colors) bits_ |= bits_of(c);
}

std::vector<Color> Label::colors() const {
  std::vector<Color> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Label::str() const {
  auto cs = colors();
  bool compact = std::all_of(cs.begin(), cs.end(), [](Color c) { return c < 10; });
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(cs[i]);
  }
  return out;
}

bool lex_less(Label a, Label b) {
  auto ca = a.colors();
  auto cb = b.colors();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::vector<Label> all_labels(int t, int k) {
  std::vector<Label> out;
  if (t < 1 || t > k || k > kMaxColors) return out;
  std::vector<Color> pick(t);
  for (int i = 0; i < t; ++i) pick[i] = i + 1;
  while (true) {
    out.push_back(Label(pick));
    int i = t - 1;
    while (i >= 0 && pick[i] == k - (t - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Labeling::Labeling(int order, int t, int k) : t_(t), k_(k), labels_(order) {}

bool Labeling::total() const {
  return std::all_of(labels_.begin(), labels_.end(), [](Label l) { return !l.empty(); });
}

int Labeling::colors_used() const {
  int best = 0;
  for (Label l : labels_) best = std::max(best, l.max_color());
  return best;
}

ColorPermutation::ColorPermutation(int k) : image_(k + 1) {
  for (int c = 0; c <= k; ++c) image_[c] = c;
}

Label ColorPermutation::apply(Label l) const {
  Label out;
  for (Color c : l.colors()) out = out | Label{image_[c]};
  return out;
}

Labeling ColorPermutation::apply(const Labeling& f) const {
  Labeling out(f.order(), f.t(), f.k());
  for (Vertex v = 0; v < f.order(); ++v)
    if (f.labeled(v)) out.set(v, apply(f[v]));
  return out;
}

ColorPermutation ColorPermutation::inverse() const {
  ColorPermutation inv(k());
  for (int c = 1; c <= k(); ++c) inv.image_[image_[c]] = c;
  return inv;
}

ColorPermutation ColorPermutation::from_images(std::vector<Color> image) {
  int k = static_cast<int>(image.size()) - 1;
  std::vector<bool> seen(k + 1, false);
  for (int c = 1; c <= k; ++c) {
    if (image[c] < 1 || image[c] > k || seen[image[c]])
      fail(ErrorKind::internal, "bad-permutation", "color map is not a bijection");
    seen[image[c]] = true;
  }
  ColorPermutation p(k);
  p.image_ = std::move(image);
  p.image_[0] = 0;
  return p;
}

}  // namespace ttone
