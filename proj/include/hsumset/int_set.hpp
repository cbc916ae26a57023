#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsumset {

/// Raised when a computation would exceed a configured resource guard
/// (64-bit overflow risk, bit-window width, naive enumeration cap).
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite set of integers stored as a strictly increasing sequence.
class IntSet {
 public:
  IntSet() = default;
  IntSet(std::initializer_list<std::int64_t> values);

  /// Takes ownership of `sorted`; throws std::invalid_argument unless it is
  /// strictly increasing.
  static IntSet from_sorted(std::vector<std::int64_t> sorted);

  /// The interval [lo, hi] (empty when hi < lo).
  static IntSet interval(std::int64_t lo, std::int64_t hi);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  std::int64_t min() const;
  std::int64_t max() const;
  bool contains(std::int64_t v) const noexcept;

  std::span<const std::int64_t> elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  std::int64_t operator[](std::size_t i) const { return elems_[i]; }

  /// Sum of all elements (checked).
  std::int64_t total() const;

  IntSet without(std::span<const std::int64_t> removed) const;
  bool is_subset_of(const IntSet& other) const;

  /// Lexicographic on the element sequence.
  friend std::strong_ordering operator<=>(const IntSet&, const IntSet&) = default;
  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  std::vector<std::int64_t> elems_;
};

struct MadeSet {
  IntSet set;
  bool dropped_duplicates = false;
};

/// Sorts and deduplicates raw values.
MadeSet make_set(std::span<const std::int64_t> values);

/// x -> scale * x + shift, scale != 0.
class AffineMap {
 public:
  AffineMap(std::int64_t scale, std::int64_t shift);
  static AffineMap identity() { return {1, 0}; }

  std::int64_t scale() const noexcept { return scale_; }
  std::int64_t shift() const noexcept { return shift_; }
  std::int64_t operator()(std::int64_t x) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  std::int64_t scale_;
  std::int64_t shift_;
};

IntSet apply_affine(const IntSet& a, const AffineMap& m);

/// c - A.
IntSet reflect(const IntSet& a, std::int64_t c);

/// `set` has min 0 and gcd 1; map(set) reproduces the original set.
struct NormalForm {
  IntSet set;
  AffineMap map = AffineMap::identity();
};

NormalForm normalize(const IntSet& a);

/// gcd of {a_i - a_0}; requires |A| >= 2.
std::int64_t gcd_of_differences(const IntSet& a);

/// True when A has min 0 and element gcd 1 (|A| >= 2), or A == {0}.
bool is_normalized(const IntSet& a);

/// Canonical textual form: "0,1,3,7"; the empty set renders as "".
std::string to_string(const IntSet& a);

/// Parses `int(,int)*` (whitespace around items tolerated). Unsorted input is
/// sorted; duplicates are dropped and reported through `dropped_duplicates`.
/// Throws std::invalid_argument on malformed text.
MadeSet parse_set(std::string_view text);

// Checked 64-bit arithmetic; throw ResourceGuardError on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace hsumset
