#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hsumset {

/// Fixed-width bitmap over [0, width) used as the DP layer representation.
class Bitmap {
 public:
  Bitmap() = default;
  explicit Bitmap(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const noexcept { return width_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const noexcept { return i < width_ && ((words_[i >> 6] >> (i & 63)) & 1u); }

  bool none() const noexcept {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// this |= (src << shift), truncated to width. Both bitmaps share a width.
  void or_shifted(const Bitmap& src, std::size_t shift) noexcept {
    const std::size_t n = words_.size();
    const std::size_t ws = shift >> 6;
    const unsigned bs = static_cast<unsigned>(shift & 63);
    if (ws >= n) return;
    if (bs == 0) {
      for (std::size_t i = n; i-- > ws;) words_[i] |= src.words_[i - ws];
    } else {
      for (std::size_t i = n; i-- > ws + 1;) {
        words_[i] |= (src.words_[i - ws] << bs) | (src.words_[i - ws - 1] >> (64 - bs));
      }
      words_[ws] |= src.words_[0] << bs;
    }
    trim();
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const auto b = static_cast<std::size_t>(std::countr_zero(w));
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  void trim() noexcept {
    if (const auto rem = width_ & 63; rem != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << rem) - 1;
    }
  }

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hsumset
