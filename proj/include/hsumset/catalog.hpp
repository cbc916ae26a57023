#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsumset/expr.hpp"
#include "hsumset/int_set.hpp"
#include "hsumset/sumset.hpp"

namespace hsumset::catalog {

using Params = std::vector<std::int64_t>;

/// One case of a deletion-family proposition: where it applies and the
/// closed form it claims for |h^A| there.
struct CaseFormula {
  std::string family;
  std::string label;
  expr::Condition domain;
  std::string formula_text;
  expr::Poly formula;
  /// The formula fragment exactly as printed in the source statement.
  std::string anchor;
  /// Set when the encoded formula or domain differs from the printed one.
  std::string erratum;
};

enum class HRegime { ExactlyThree, AtLeastThree, AtLeastFour, AtLeastFive };

std::string_view to_string(HRegime r);

/// A family [0, k+e] \ D with symbolic deleted positions.
struct DeletionFamily {
  std::string id;
  /// Deleted positions, e.g. "{x,x+1,k+1}".
  std::string shape;
  int extension = 0;
  /// Parameter names, one letter each, e.g. "xz".
  std::string params;
  HRegime h_regime = HRegime::AtLeastThree;
  /// Minimum k as a polynomial in h ("3h+3", "13").
  std::string k_min_text;
  expr::Poly k_min;
  expr::Condition param_domain;
  std::vector<expr::Poly> deleted;
  /// Family whose members are the reflections (k+e) - A of this one.
  std::string dual;
  std::vector<CaseFormula> cases;

  bool admits_h(std::int64_t h) const noexcept;
  std::int64_t min_k(std::int64_t h) const;
  std::vector<std::int64_t> deleted_positions(std::int64_t k, const Params& p) const;
};

const std::vector<DeletionFamily>& families();
/// Throws std::invalid_argument for an unknown id.
const DeletionFamily& family(std::string_view id);

/// Throws std::invalid_argument if (h,k) is outside the family's regime or
/// threshold, or if p is outside the parameter domain.
void check_admissible(const DeletionFamily& f, std::int64_t h, std::int64_t k, const Params& p);

IntSet instantiate(const DeletionFamily& f, std::int64_t k, const Params& p);

enum class PredictionStatus { Covered, Uncovered, Ambiguous };

struct CaseHit {
  std::string label;
  std::int64_t value;
};

struct Prediction {
  PredictionStatus status = PredictionStatus::Uncovered;
  /// Valid when Covered.
  std::int64_t value = 0;
  /// Every case whose domain holds (with its value).
  std::vector<CaseHit> matched;
  /// For Uncovered: labels of the cases whose domains are closest.
  std::vector<std::string> nearest;

  /// Matched labels joined with '+'.
  std::string label() const;
};

Prediction predicted_cardinality(const DeletionFamily& f, std::int64_t h, std::int64_t k, const Params& p);

/// Every tuple in the family's parameter domain, lexicographic.
std::vector<Params> enumerate_params(const DeletionFamily& f, std::int64_t h, std::int64_t k);

struct Mismatch {
  Params params;
  std::string label;
  std::int64_t predicted;
  std::int64_t actual;
};

struct Finding {
  Params params;
  std::int64_t actual;
  /// Nearest labels (uncovered) or conflicting hits (ambiguous).
  std::vector<CaseHit> cases;
};

struct CoverageReport {
  std::string family;
  std::int64_t h = 0;
  std::int64_t k = 0;
  std::size_t tuples = 0;
  std::size_t covered = 0;
  std::vector<Mismatch> mismatches;
  std::vector<Finding> uncovered;
  std::vector<Finding> ambiguous;

  bool verified() const noexcept { return mismatches.empty(); }
  bool tiles() const noexcept { return uncovered.empty() && ambiguous.empty(); }
};

/// Compares every prediction with the engine's |h^A| on the instantiated set.
CoverageReport crosscheck(const DeletionFamily& f, std::int64_t h, std::int64_t k, const EngineLimits& limits = {});

/// Parameter tuple of `to` whose instance is the reflection of f's instance
/// at `p`, if one exists.
std::optional<Params> reflect_params(const DeletionFamily& from, const DeletionFamily& to, std::int64_t k,
                                     const Params& p);

std::string render_params(const DeletionFamily& f, const Params& p);

}  // namespace hsumset::catalog
