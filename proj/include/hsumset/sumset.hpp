#pragma once

#include <cstdint>
#include <vector>

#include "hsumset/bitmap.hpp"
#include "hsumset/int_set.hpp"

namespace hsumset {

/// Resource guards for the sumset engine.
struct EngineLimits {
  /// Maximum number of h-subsets the naive oracle will enumerate.
  std::uint64_t naive_cap = 10'000'000;
  /// Maximum DP window h * (max - min).
  std::uint64_t window_cap = std::uint64_t{1} << 30;
};

/// Per-layer achievable sums of exactly j distinct elements, j = 0..h.
/// Bit b of layer j stands for the value b + j * base, where base = min(A).
struct SumLayers {
  std::int64_t base = 0;
  std::vector<Bitmap> layers;

  std::size_t depth() const noexcept { return layers.empty() ? 0 : layers.size() - 1; }
  IntSet values(std::size_t j) const;
};

/// h^A: sums of exactly h distinct elements. h = 0 gives {0}; h > |A| gives {}.
IntSet restricted_sumset(const IntSet& a, std::size_t h, const EngineLimits& limits = {});

/// |h^A| without materializing the set. Evaluates the smaller of h and |A|-h.
std::size_t restricted_cardinality(const IntSet& a, std::size_t h, const EngineLimits& limits = {});

/// hA: sums of h elements with repetition; requires |A| >= 1, h >= 1.
IntSet unrestricted_sumset(const IntSet& a, std::size_t h, const EngineLimits& limits = {});

/// Oracle: explicit enumeration of all C(|A|, h) subsets. Refuses (throws
/// ResourceGuardError) above limits.naive_cap.
IntSet restricted_sumset_naive(const IntSet& a, std::size_t h, const EngineLimits& limits = {});

/// All DP layers 0..h; layer j equals restricted_sumset(A, j).
SumLayers layer_table(const IntSet& a, std::size_t h, const EngineLimits& limits = {});

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) noexcept;

/// Lower bound hk - h^2 + 1 for |h^A|.
std::int64_t restricted_lower_bound(std::int64_t h, std::int64_t k) noexcept;

/// (sum of h largest) - (sum of h smallest) + 1; the trivial upper bound on
/// |h^A| for 1 <= h <= |A|.
std::int64_t restricted_span_bound(const IntSet& a, std::size_t h);

}  // namespace hsumset
