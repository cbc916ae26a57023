#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsumset/int_set.hpp"
#include "hsumset/sumset.hpp"

namespace hsumset {

/// Normalized k-sets: min 0, max <= dmax, optionally gcd 1.
struct EnumerationSpec {
  std::size_t k = 0;
  std::int64_t dmax = 0;
  bool gcd_filter = true;
};

/// Visits every set of `spec` once: grouped by diameter m ascending, then
/// lexicographically by the k-2 interior elements. k = 1 yields {0}.
void enumerate_normalized_sets(const EnumerationSpec& spec, const std::function<void(const IntSet&)>& visit);

std::uint64_t count_normalized_sets(const EnumerationSpec& spec);

enum class Verdict { ExactMatch, Missing, Extra, MissingAndExtra };

std::string_view to_string(Verdict v);

struct ClassificationReport {
  std::string theorem;
  std::int64_t h = 0;
  std::int64_t k = 0;
  std::int64_t dmax = 0;
  std::int64_t target = 0;
  /// Sorted, duplicate-free.
  std::vector<IntSet> found;
  std::vector<IntSet> expected;
  Verdict verdict = Verdict::ExactMatch;
  /// Normalized sets whose cardinality was decided (leaves reached).
  std::uint64_t scanned = 0;
  /// Subtrees cut by the prefix bound plus leaves cut by the span bound.
  std::uint64_t pruned = 0;
  double wall_ms = 0;

  std::vector<IntSet> missing() const;
  std::vector<IntSet> extra() const;
};

struct ClassifyOptions {
  unsigned threads = 1;
  bool prune = true;
  EngineLimits limits{};
};

/// Every normalized k-set with diameter <= dmax and |h^A| == target.
/// Results are independent of the thread count.
ClassificationReport classify_by_cardinality(std::int64_t h, std::int64_t k, std::int64_t target, std::int64_t dmax,
                                             const ClassifyOptions& opts = {});

Verdict compare_sets(const std::vector<IntSet>& found, const std::vector<IntSet>& expected);

/// A classification theorem: |h^A| = hk - h^2 + c forces A into a finite list
/// of sets [0, k+c-2] \ D.
struct TheoremInfo {
  std::string id;
  std::int64_t c = 0;
  std::int64_t h_min = 3;
  /// 0 means unbounded.
  std::int64_t h_max = 0;
  std::string k_min_text;
  std::int64_t k_min_const = 0;
  std::int64_t k_min_h_coeff = 0;
  std::string summary;

  std::int64_t min_k(std::int64_t h) const noexcept { return k_min_h_coeff * h + k_min_const; }
  bool admits(std::int64_t h, std::int64_t k) const noexcept;
};

const std::vector<TheoremInfo>& theorems();
/// Throws std::invalid_argument for an unknown id.
const TheoremInfo& theorem(std::string_view id);

std::int64_t theorem_target(const TheoremInfo& t, std::int64_t h, std::int64_t k);
/// k + c - 2 + 3: the containment bound plus a margin of three.
std::int64_t default_dmax(std::int64_t k, std::int64_t c);

/// The theorem's list at (h,k), sorted. Throws std::invalid_argument when
/// (h,k) violates the hypotheses.
std::vector<IntSet> expected_sets(std::string_view theorem_id, std::int64_t h, std::int64_t k);

ClassificationReport verify_classification(std::string_view theorem_id, std::int64_t h, std::int64_t k,
                                           std::optional<std::int64_t> dmax = std::nullopt,
                                           const ClassifyOptions& opts = {});

/// Sets with |h^A| = hk - h^2 + c and max(A) > k + c - 2 are reported in
/// `found`; `expected` is empty. c in {2,3,4} with the matching k threshold.
ClassificationReport verify_containment(std::int64_t h, std::int64_t k, std::int64_t c,
                                        std::optional<std::int64_t> dmax = std::nullopt,
                                        const ClassifyOptions& opts = {});

struct BoundViolation {
  IntSet set;
  std::int64_t h = 0;
  std::int64_t observed = 0;
  std::string bound;
  double bound_value = 0;
};

struct DirectBoundCheck {
  std::int64_t observed = 0;
  std::int64_t bound = 0;
  /// observed == hk - h^2 + 1.
  bool extremal = false;
  /// The arithmetic-progression conclusion applies (k >= 5, 2 <= h <= k-2).
  bool ap_asserted = false;
  std::optional<BoundViolation> violation;
};

/// |h^A| >= hk - h^2 + 1, and equality only for arithmetic progressions when
/// k >= 5 and 2 <= h <= k-2. Requires 1 <= h <= |A|.
DirectBoundCheck check_direct_bounds(const IntSet& a, std::int64_t h);

struct TwoFoldCheck {
  std::int64_t observed = 0;
  double golden_bound = 0;
  std::int64_t conjecture_bound = 0;
  bool golden_holds = true;
  /// Only meaningful for k > 7.
  bool conjecture_holds = true;
};

/// |2^A| against the golden-mean bound and the conjectured 3k-7 bound.
/// Requires a normalized set with k >= 3.
TwoFoldCheck check_two_fold_bounds(const IntSet& a);

struct ScanSummary {
  std::uint64_t sets = 0;
  std::vector<BoundViolation> violations;
};

/// check_direct_bounds over every normalized k-set with diameter <= dmax and
/// every 2 <= h <= k-2.
ScanSummary scan_direct_bounds(std::size_t k, std::int64_t dmax);

/// check_two_fold_bounds over every normalized k-set with diameter <= dmax.
ScanSummary scan_two_fold_bounds(std::size_t k, std::int64_t dmax);

/// {0, 1, ..., k-3} u {a-1, a}.
IntSet conjecture_extremal_set(std::int64_t k, std::int64_t a);

}  // namespace hsumset
