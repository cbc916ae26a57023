#include "hsumset/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hsumset {

namespace {

void enumerate_interior(const EnumerationSpec& spec, std::int64_t m, std::vector<std::int64_t>& cur,
                        std::int64_t g, const std::function<void(const IntSet&)>& visit) {
  const std::size_t need = spec.k - 2;
  const std::size_t have = cur.size() - 1;
  if (have == need) {
    if (spec.gcd_filter && g != 1) return;
    cur.push_back(m);
    visit(IntSet::from_sorted(cur));
    cur.pop_back();
    return;
  }
  const std::int64_t remaining = static_cast<std::int64_t>(need - have);
  for (std::int64_t a = cur.back() + 1; a <= m - remaining; ++a) {
    cur.push_back(a);
    enumerate_interior(spec, m, cur, std::gcd(g, a), visit);
    cur.pop_back();
  }
}

}  // namespace

void enumerate_normalized_sets(const EnumerationSpec& spec, const std::function<void(const IntSet&)>& visit) {
  if (spec.k == 0) return;
  if (spec.k == 1) {
    if (spec.dmax >= 0) visit(IntSet{0});
    return;
  }
  for (std::int64_t m = static_cast<std::int64_t>(spec.k) - 1; m <= spec.dmax; ++m) {
    std::vector<std::int64_t> cur{0};
    enumerate_interior(spec, m, cur, m, visit);
  }
}

std::uint64_t count_normalized_sets(const EnumerationSpec& spec) {
  std::uint64_t n = 0;
  enumerate_normalized_sets(spec, [&](const IntSet&) { ++n; });
  return n;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactMatch: return "exact-match";
    case Verdict::Missing: return "missing";
    case Verdict::Extra: return "extra";
    case Verdict::MissingAndExtra: return "missing-and-extra";
  }
  return "?";
}

std::vector<IntSet> ClassificationReport::missing() const {
  std::vector<IntSet> out;
  std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(), std::back_inserter(out));
  return out;
}

std::vector<IntSet> ClassificationReport::extra() const {
  std::vector<IntSet> out;
  std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(), std::back_inserter(out));
  return out;
}

Verdict compare_sets(const std::vector<IntSet>& found, const std::vector<IntSet>& expected) {
  ClassificationReport r;
  r.found = found;
  r.expected = expected;
  std::sort(r.found.begin(), r.found.end());
  std::sort(r.expected.begin(), r.expected.end());
  const bool miss = !r.missing().empty();
  const bool extra = !r.extra().empty();
  if (miss && extra) return Verdict::MissingAndExtra;
  if (miss) return Verdict::Missing;
  if (extra) return Verdict::Extra;
  return Verdict::ExactMatch;
}

namespace {

// Depth-first search over the interior elements of sets {0, ..., m} with the
// 0/1 DP layers carried along, so each node costs one layer update.
class Searcher {
 public:
  Searcher(std::size_t h, std::size_t k, std::int64_t target, bool prune)
      : h_(h), k_(k), target_(target), prune_(prune) {}

  struct Result {
    std::vector<IntSet> found;
    std::uint64_t scanned = 0;
    std::uint64_t pruned = 0;
  };

  // All sets with diameter m whose first interior element is `first` (or
  // with no interior elements when k == 2).
  Result run(std::int64_t m, std::optional<std::int64_t> first) {
    m_ = m;
    res_ = Result{};
    const std::size_t width = h_ * static_cast<std::size_t>(m) + 1;
    stack_.assign(k_ + 1, std::vector<Bitmap>(h_ + 1, Bitmap(width)));
    auto& base = stack_[0];
    base[0].set(0);
    elems_.clear();
    push(0, 0);
    push(m, 1);
    std::size_t depth = 2;
    if (!first) {
      leaf(depth, m);
      return res_;
    }
    descend(depth, *first, std::gcd(m, *first));
    return res_;
  }

 private:
  // Layers for prefix + {a}, written into stack_[depth].
  void push(std::int64_t a, std::size_t depth) {
    auto& dst = stack_[depth + 1];
    const auto& src = stack_[depth];
    dst = src;
    const std::size_t count = depth + 1;
    for (std::size_t j = std::min(count, h_); j >= 1; --j) dst[j].or_shifted(src[j - 1], static_cast<std::size_t>(a));
    elems_.push_back(a);
  }

  void pop() { elems_.pop_back(); }

  // Adds interior element a at stack position depth, then continues.
  void descend(std::size_t depth, std::int64_t a, std::int64_t g) {
    const bool last = elems_.size() + 1 == k_;
    if (last) {
      if (g != 1) return;
      ++res_.scanned;
      if (prune_ && span_bound_with(a) < target_) {
        ++res_.pruned;
        return;
      }
      push(a, depth);
      if (static_cast<std::int64_t>(stack_[depth + 1][h_].count()) == target_) record();
      pop();
      return;
    }
    push(a, depth);
    if (prune_ && elems_.size() >= h_ && static_cast<std::int64_t>(stack_[depth + 1][h_].count()) > target_) {
      ++res_.pruned;
      pop();
      return;
    }
    const std::int64_t remaining = static_cast<std::int64_t>(k_ - elems_.size());
    for (std::int64_t b = a + 1; b <= m_ - remaining; ++b) descend(depth + 1, b, std::gcd(g, b));
    pop();
  }

  void leaf(std::size_t depth, std::int64_t g) {
    if (g != 1) return;
    ++res_.scanned;
    if (static_cast<std::int64_t>(stack_[depth][h_].count()) == target_) record();
  }

  // Span bound for the set elems_ + {a}; elems_ holds 0, m, then interior.
  std::int64_t span_bound_with(std::int64_t a) {
    scratch_.assign(elems_.begin(), elems_.end());
    scratch_.push_back(a);
    std::sort(scratch_.begin(), scratch_.end());
    if (h_ == 0) return 1;
    std::int64_t low = 0, high = 0;
    for (std::size_t i = 0; i < h_; ++i) {
      low += scratch_[i];
      high += scratch_[scratch_.size() - 1 - i];
    }
    return high - low + 1;
  }

  void record() {
    std::vector<std::int64_t> v(elems_.begin(), elems_.end());
    std::sort(v.begin(), v.end());
    res_.found.push_back(IntSet::from_sorted(v));
  }

  std::size_t h_, k_;
  std::int64_t target_;
  bool prune_;
  std::int64_t m_ = 0;
  std::vector<std::vector<Bitmap>> stack_;
  std::vector<std::int64_t> elems_;
  std::vector<std::int64_t> scratch_;
  Result res_;
};

struct WorkUnit {
  std::int64_t m;
  std::optional<std::int64_t> first;
};

}  // namespace

ClassificationReport classify_by_cardinality(std::int64_t h, std::int64_t k, std::int64_t target, std::int64_t dmax,
                                             const ClassifyOptions& opts) {
  if (k < 1) throw std::invalid_argument("classify: k must be >= 1");
  if (h < 0 || h > k) throw std::invalid_argument("classify: need 0 <= h <= k");
  if (dmax < k - 1) throw std::invalid_argument("classify: dmax must be >= k-1");
  const auto start = std::chrono::steady_clock::now();
  ClassificationReport rep;
  rep.h = h;
  rep.k = k;
  rep.dmax = dmax;
  rep.target = target;
  if (static_cast<std::uint64_t>(checked_add(checked_mul(h, dmax), 1)) > opts.limits.window_cap) {
    throw ResourceGuardError("classify: DP window h*dmax exceeds the bitmap cap");
  }

  if (k == 1) {
    ++rep.scanned;
    if (target == 1) rep.found.push_back(IntSet{0});
  } else {
    std::vector<WorkUnit> units;
    for (std::int64_t m = k - 1; m <= dmax; ++m) {
      if (k == 2) {
        units.push_back({m, std::nullopt});
        continue;
      }
      for (std::int64_t a = 1; a <= m - (k - 2); ++a) units.push_back({m, a});
    }
    std::vector<Searcher::Result> results(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      Searcher s(static_cast<std::size_t>(h), static_cast<std::size_t>(k), target, opts.prune);
      for (std::size_t i = next++; i < units.size(); i = next++) results[i] = s.run(units[i].m, units[i].first);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(units.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& r : results) {
      rep.scanned += r.scanned;
      rep.pruned += r.pruned;
      rep.found.insert(rep.found.end(), std::make_move_iterator(r.found.begin()),
                       std::make_move_iterator(r.found.end()));
    }
    std::sort(rep.found.begin(), rep.found.end());
  }
  rep.verdict = Verdict::ExactMatch;
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

bool TheoremInfo::admits(std::int64_t h, std::int64_t k) const noexcept {
  if (h < h_min) return false;
  if (h_max != 0 && h > h_max) return false;
  return k >= min_k(h);
}

const std::vector<TheoremInfo>& theorems() {
  static const std::vector<TheoremInfo> all = {
      {"one-element", 2, 3, 0, "3h+1", 1, 3, "|h^A| = hk-h^2+2 => A = [0,k] minus one element"},
      {"two-element-h3", 3, 3, 3, "12", 12, 0, "|3^A| = 3k-6 => A = [0,k+1] minus two elements"},
      {"two-element", 3, 4, 0, "3h+3", 3, 3, "|h^A| = hk-h^2+3 (h>=4) => A = [0,k+1] minus two elements"},
      {"three-element-h3", 4, 3, 3, "13", 13, 0, "|3^A| = 3k-5 => A = [0,k+2] minus three elements"},
      {"three-element-h4", 4, 4, 4, "16", 16, 0, "|4^A| = 4k-12 => A = [0,k+2] minus three elements"},
      {"three-element", 4, 5, 0, "3h+4", 4, 3, "|h^A| = hk-h^2+4 (h>=5) => A = [0,k+2] minus three elements"},
  };
  return all;
}

const TheoremInfo& theorem(std::string_view id) {
  for (auto& t : theorems()) {
    if (t.id == id) return t;
  }
  throw std::invalid_argument("unknown theorem '" + std::string(id) + "'");
}

std::int64_t theorem_target(const TheoremInfo& t, std::int64_t h, std::int64_t k) {
  return checked_add(checked_add(checked_mul(h, k), -checked_mul(h, h)), t.c);
}

std::int64_t default_dmax(std::int64_t k, std::int64_t c) { return k + c - 2 + 3; }

namespace {

void require_hypotheses(const TheoremInfo& t, std::int64_t h, std::int64_t k) {
  if (!t.admits(h, k)) {
    std::string hs = "h >= " + std::to_string(t.h_min);
    if (t.h_max == t.h_min) hs = "h = " + std::to_string(t.h_min);
    throw std::invalid_argument(t.id + ": hypotheses require " + hs + " and k >= " + t.k_min_text + " (got h=" +
                                std::to_string(h) + ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

std::vector<IntSet> expected_sets(std::string_view theorem_id, std::int64_t h, std::int64_t k) {
  const auto& t = theorem(theorem_id);
  require_hypotheses(t, h, k);
  using D = std::vector<std::int64_t>;
  std::vector<D> del;
  if (t.id == "one-element") {
    del = {{1}, {k - 1}};
  } else if (t.id == "two-element-h3") {
    del = {{1, 2}, {k - 1, k}, {1, k}, {2, k + 1}, {3, k + 1}, {k - 2, k + 1}, {k - 3, k + 1}};
  } else if (t.id == "two-element") {
    del = {{1, 2}, {k - 1, k}, {1, k}, {2, k + 1}, {k - 2, k + 1}};
  } else if (t.id == "three-element-h3") {
    del = {{1, 2, 3},      {k - 1, k, k + 1}, {1, 2, k + 1}, {1, k, k + 1},     {1, 3, k + 2},     {k - 2, k, k + 2},
           {1, 4, k + 2},  {k - 3, k, k + 2}, {2, k, k + 2}, {1, k - 1, k + 2}, {1, k - 2, k + 2}, {3, k, k + 2}};
    for (std::int64_t r = 4; r <= k - 4; ++r) del.push_back({r, k + 1, k + 2});
  } else if (t.id == "three-element-h4") {
    del = {{1, 2, 3},         {k - 1, k, k + 1}, {1, 2, k + 1},     {1, k, k + 1},
           {1, 3, k + 2},     {k - 2, k, k + 2}, {2, k, k + 2},     {1, k - 1, k + 2},
           {3, k + 1, k + 2}, {k - 3, k + 1, k + 2}, {4, k + 1, k + 2}, {k - 4, k + 1, k + 2}};
  } else {
    del = {{1, 2, 3},     {k - 1, k, k + 1},  {1, 2, k + 1},     {1, k, k + 1},     {1, 3, k + 2},
           {k - 2, k, k + 2}, {2, k, k + 2}, {1, k - 1, k + 2}, {3, k + 1, k + 2}, {k - 3, k + 1, k + 2}};
  }
  std::vector<IntSet> out;
  for (auto& d : del) {
    std::sort(d.begin(), d.end());
    out.push_back(IntSet::interval(0, k + t.c - 2).without(d));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClassificationReport verify_classification(std::string_view theorem_id, std::int64_t h, std::int64_t k,
                                           std::optional<std::int64_t> dmax, const ClassifyOptions& opts) {
  const auto& t = theorem(theorem_id);
  auto expected = expected_sets(theorem_id, h, k);
  auto rep = classify_by_cardinality(h, k, theorem_target(t, h, k), dmax.value_or(default_dmax(k, t.c)), opts);
  rep.theorem = t.id;
  rep.expected = std::move(expected);
  rep.verdict = compare_sets(rep.found, rep.expected);
  return rep;
}

ClassificationReport verify_containment(std::int64_t h, std::int64_t k, std::int64_t c,
                                        std::optional<std::int64_t> dmax, const ClassifyOptions& opts) {
  if (c < 2 || c > 4) throw std::invalid_argument("containment: c must be 2, 3 or 4");
  const std::int64_t k_min = c == 2 ? 3 * h + 1 : c == 3 ? 3 * h + 3 : 3 * h + 4;
  if (h < 3 || k < k_min) {
    throw std::invalid_argument("containment: hypotheses require h >= 3 and k >= " + std::to_string(k_min));
  }
  const std::int64_t target = h * k - h * h + c;
  auto rep = classify_by_cardinality(h, k, target, dmax.value_or(default_dmax(k, c)), opts);
  rep.theorem = "containment-c" + std::to_string(c);
  const std::int64_t bound = k + c - 2;
  std::erase_if(rep.found, [&](const IntSet& a) { return a.max() <= bound; });
  rep.verdict = rep.found.empty() ? Verdict::ExactMatch : Verdict::Extra;
  return rep;
}

namespace {

bool is_arithmetic_progression(const IntSet& a) {
  if (a.size() < 3) return true;
  const auto d = a[1] - a[0];
  for (std::size_t i = 2; i < a.size(); ++i) {
    if (a[i] - a[i - 1] != d) return false;
  }
  return true;
}

}  // namespace

DirectBoundCheck check_direct_bounds(const IntSet& a, std::int64_t h) {
  const auto k = static_cast<std::int64_t>(a.size());
  if (h < 1 || h > k) throw std::invalid_argument("check_direct_bounds: need 1 <= h <= |A|");
  DirectBoundCheck c;
  c.observed = static_cast<std::int64_t>(restricted_cardinality(a, static_cast<std::size_t>(h)));
  c.bound = restricted_lower_bound(h, k);
  c.extremal = c.observed == c.bound;
  c.ap_asserted = k >= 5 && h >= 2 && h <= k - 2;
  if (c.observed < c.bound) {
    c.violation = BoundViolation{a, h, c.observed, "lower bound hk-h^2+1", static_cast<double>(c.bound)};
  } else if (c.extremal && c.ap_asserted && !is_arithmetic_progression(a)) {
    c.violation = BoundViolation{a, h, c.observed, "equality only for arithmetic progressions",
                                 static_cast<double>(c.bound)};
  }
  return c;
}

TwoFoldCheck check_two_fold_bounds(const IntSet& a) {
  const auto k = static_cast<std::int64_t>(a.size());
  if (k < 3 || !is_normalized(a)) throw std::invalid_argument("two-fold check: need a normalized set with k >= 3");
  TwoFoldCheck c;
  c.observed = static_cast<std::int64_t>(restricted_cardinality(a, 2));
  const std::int64_t top = a.max();
  const long double theta = (1.0L + std::sqrt(5.0L)) / 2.0L;
  if (top <= 2 * k - 5) {
    c.golden_bound = static_cast<double>(top + k - 2);
    c.conjecture_bound = top + k - 2;
    c.golden_holds = c.observed >= top + k - 2;
  } else {
    const long double b = (theta + 1.0L) * static_cast<long double>(k) - 6.0L;
    c.golden_bound = static_cast<double>(b);
    c.conjecture_bound = 3 * k - 7;
    c.golden_holds = static_cast<long double>(c.observed) >= b;
  }
  c.conjecture_holds = k <= 7 || c.observed >= c.conjecture_bound;
  return c;
}

ScanSummary scan_direct_bounds(std::size_t k, std::int64_t dmax) {
  ScanSummary s;
  enumerate_normalized_sets({k, dmax, true}, [&](const IntSet& a) {
    ++s.sets;
    for (std::int64_t h = 2; h <= static_cast<std::int64_t>(k) - 2; ++h) {
      if (auto c = check_direct_bounds(a, h); c.violation) s.violations.push_back(std::move(*c.violation));
    }
  });
  return s;
}

ScanSummary scan_two_fold_bounds(std::size_t k, std::int64_t dmax) {
  ScanSummary s;
  enumerate_normalized_sets({k, dmax, true}, [&](const IntSet& a) {
    ++s.sets;
    const auto c = check_two_fold_bounds(a);
    if (!c.golden_holds) s.violations.push_back({a, 2, c.observed, "golden-mean lower bound", c.golden_bound});
    if (!c.conjecture_holds) {
      s.violations.push_back({a, 2, c.observed, "conjectured lower bound", static_cast<double>(c.conjecture_bound)});
    }
  });
  return s;
}

IntSet conjecture_extremal_set(std::int64_t k, std::int64_t a) {
  if (k < 4 || a - 1 <= k - 3) throw std::invalid_argument("conjecture_extremal_set: need k >= 4 and a > k-2");
  std::vector<std::int64_t> v;
  for (std::int64_t i = 0; i <= k - 3; ++i) v.push_back(i);
  v.push_back(a - 1);
  v.push_back(a);
  return IntSet::from_sorted(v);
}

}  // namespace hsumset
