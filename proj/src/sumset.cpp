#include "hsumset/sumset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace hsumset {
namespace {

// Validates that every h-term sum fits in int64 and that the DP window
// h * (max - min) stays under the configured cap. Returns the diameter.
std::uint64_t guard(const IntSet& a, std::size_t h, const EngineLimits& limits) {
  if (a.empty() || h == 0) return 0;
  const auto hh = static_cast<std::int64_t>(h);
  const auto mag = std::max(a.max() < 0 ? -a.max() : a.max(), a.min() < 0 ? -a.min() : a.min());
  if (a.min() == std::numeric_limits<std::int64_t>::min()) throw ResourceGuardError("element magnitude exceeds 64-bit range");
  checked_mul(hh, mag);
  const auto diameter = static_cast<std::uint64_t>(checked_add(a.max(), -a.min()));
  if (diameter != 0 && static_cast<std::uint64_t>(h) > limits.window_cap / diameter) {
    throw ResourceGuardError("bit window h*(max-min) = " + std::to_string(h) + "*" + std::to_string(diameter) +
                             " exceeds cap " + std::to_string(limits.window_cap));
  }
  return diameter;
}

// 0/1 DP over the translated elements. Elements in the outer loop, layer
// index descending, so each element enters a subset at most once.
std::vector<Bitmap> zero_one_layers(const IntSet& a, std::size_t depth, std::uint64_t diameter) {
  const auto width = static_cast<std::size_t>(depth * diameter + 1);
  std::vector<Bitmap> layers(depth + 1, Bitmap(width));
  layers[0].set(0);
  const auto base = a.min();
  std::size_t processed = 0;
  for (auto x : a) {
    const auto shift = static_cast<std::size_t>(x - base);
    ++processed;
    for (std::size_t j = std::min(depth, processed); j >= 1; --j) {
      layers[j].or_shifted(layers[j - 1], shift);
    }
  }
  return layers;
}

IntSet bitmap_values(const Bitmap& bits, std::int64_t offset) {
  std::vector<std::int64_t> out;
  out.reserve(bits.count());
  bits.for_each_set([&](std::size_t b) { out.push_back(static_cast<std::int64_t>(b) + offset); });
  return IntSet::from_sorted(std::move(out));
}

}  // namespace

IntSet SumLayers::values(std::size_t j) const {
  return bitmap_values(layers.at(j), static_cast<std::int64_t>(j) * base);
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) noexcept {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

std::int64_t restricted_lower_bound(std::int64_t h, std::int64_t k) noexcept { return h * k - h * h + 1; }

std::int64_t restricted_span_bound(const IntSet& a, std::size_t h) {
  if (h == 0 || h > a.size()) throw std::invalid_argument("restricted_span_bound: need 1 <= h <= |A|");
  std::int64_t low = 0, high = 0;
  for (std::size_t i = 0; i < h; ++i) {
    low = checked_add(low, a[i]);
    high = checked_add(high, a[a.size() - 1 - i]);
  }
  return high - low + 1;
}

SumLayers layer_table(const IntSet& a, std::size_t h, const EngineLimits& limits) {
  SumLayers out;
  if (a.empty()) {
    out.layers.assign(h + 1, Bitmap(1));
    out.layers[0].set(0);
    return out;
  }
  const auto diameter = guard(a, h, limits);
  out.base = a.min();
  out.layers = zero_one_layers(a, h, diameter);
  return out;
}

IntSet restricted_sumset(const IntSet& a, std::size_t h, const EngineLimits& limits) {
  if (h == 0) return IntSet{0};
  if (h > a.size()) return {};
  const auto diameter = guard(a, h, limits);
  auto layers = zero_one_layers(a, h, diameter);
  return bitmap_values(layers[h], static_cast<std::int64_t>(h) * a.min());
}

std::size_t restricted_cardinality(const IntSet& a, std::size_t h, const EngineLimits& limits) {
  if (h > a.size()) return 0;
  const auto diameter = guard(a, h, limits);
  const std::size_t depth = std::min(h, a.size() - h);
  if (depth == 0) return 1;
  return zero_one_layers(a, depth, diameter)[depth].count();
}

IntSet unrestricted_sumset(const IntSet& a, std::size_t h, const EngineLimits& limits) {
  if (a.empty() || h == 0) throw std::invalid_argument("unrestricted_sumset: need |A| >= 1 and h >= 1");
  const auto diameter = guard(a, h, limits);
  const auto width = static_cast<std::size_t>(h * diameter + 1);
  std::vector<Bitmap> layers(h + 1, Bitmap(width));
  layers[0].set(0);
  const auto base = a.min();
  // Ascending layer order lets an element be reused within one sum.
  for (auto x : a) {
    const auto shift = static_cast<std::size_t>(x - base);
    for (std::size_t j = 1; j <= h; ++j) layers[j].or_shifted(layers[j - 1], shift);
  }
  return bitmap_values(layers[h], static_cast<std::int64_t>(h) * base);
}

IntSet restricted_sumset_naive(const IntSet& a, std::size_t h, const EngineLimits& limits) {
  if (h == 0) return IntSet{0};
  const std::size_t k = a.size();
  if (h > k) return {};
  const auto subsets = binomial_saturating(k, h);
  if (subsets > limits.naive_cap) {
    throw ResourceGuardError("naive enumeration of C(" + std::to_string(k) + "," + std::to_string(h) +
                             ") subsets exceeds cap " + std::to_string(limits.naive_cap));
  }
  std::vector<std::int64_t> sums;
  sums.reserve(static_cast<std::size_t>(subsets));
  std::vector<std::size_t> idx(h);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    std::int64_t s = 0;
    for (auto i : idx) s = checked_add(s, a[i]);
    sums.push_back(s);
    // Advance to the next h-combination in lexicographic order.
    std::size_t pos = h;
    while (pos > 0 && idx[pos - 1] == k - h + (pos - 1)) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < h; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return IntSet::from_sorted(std::move(sums));
}

}  // namespace hsumset
