#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hsumset/catalog.hpp"
#include "hsumset/sumset.hpp"

#include "print_int_set.hpp"

using namespace hsumset;
using namespace hsumset::catalog;

namespace {

const std::set<std::string> kFamiliesWithFindings{"general-pair",      "h4-adjacent-first", "h4-adjacent-last",
                                                  "h4-general-triple", "h4-one-first",      "h4-last-k1",
                                                  "h3-one-first",      "h3-last-k1"};

std::int64_t first_h(const DeletionFamily& f) {
  for (std::int64_t h = 3; h <= 6; ++h)
    if (f.admits_h(h)) return h;
  return 0;
}

}  // namespace

TEST(Catalog, FamiliesAreWellFormed) {
  const auto& fams = families();
  ASSERT_GE(fams.size(), 20u);
  std::set<std::string> ids;
  for (const auto& f : fams) {
    EXPECT_TRUE(ids.insert(f.id).second) << "duplicate " << f.id;
    EXPECT_FALSE(f.cases.empty()) << f.id;
    EXPECT_EQ(f.deleted.size(), static_cast<std::size_t>(f.extension + 1)) << f.id;
    EXPECT_NE(first_h(f), 0) << f.id;
  }
  for (const auto& f : fams) {
    if (f.dual.empty()) continue;
    const auto& d = family(f.dual);
    EXPECT_EQ(d.dual, f.id) << f.id << " dual is not reciprocal";
    EXPECT_EQ(d.extension, f.extension);
  }
  EXPECT_THROW(family("no-such-family"), std::invalid_argument);
}

TEST(Catalog, InstantiateOneDeletion) {
  const auto& f = family("one-deletion");
  const std::vector<std::int64_t> del{3};
  EXPECT_EQ(instantiate(f, 10, {3}), IntSet::interval(0, 10).without(del));
  EXPECT_THROW(check_admissible(f, 3, 9, {3}), std::invalid_argument);   // k below 3h+1
  EXPECT_THROW(check_admissible(f, 3, 10, {10}), std::invalid_argument);  // x outside [1,k-1]
  EXPECT_NO_THROW(check_admissible(f, 3, 10, {9}));
}

TEST(Catalog, OneDeletionPredictions) {
  const auto& f = family("one-deletion");
  const struct {
    std::int64_t x, value;
    const char* label;
  } cases[] = {{1, 23, "i"}, {3, 24, "iii"}, {5, 25, "iv"}};
  for (const auto& c : cases) {
    const auto p = predicted_cardinality(f, 3, 10, {c.x});
    ASSERT_EQ(p.status, PredictionStatus::Covered) << c.x;
    EXPECT_EQ(p.value, c.value) << c.x;
    EXPECT_EQ(p.label(), c.label) << c.x;
  }
}

TEST(Catalog, PairXKm1Prediction) {
  const auto p = predicted_cardinality(family("pair-x-km1"), 3, 13, {9});
  ASSERT_EQ(p.status, PredictionStatus::Covered);
  EXPECT_EQ(p.value, 35);
  EXPECT_EQ(p.label(), "iv.2");  // second sub-case of case iv
  EXPECT_EQ(restricted_cardinality(instantiate(family("pair-x-km1"), 13, {9}), 3), 35u);
}

TEST(Catalog, EnumerateParamsRespectsDomain) {
  const auto& f = family("pair-adjacent");
  const auto ps = enumerate_params(f, 3, 12);
  EXPECT_EQ(ps.size(), 11u);  // x in [1,k-1]
  EXPECT_EQ(ps.front(), Params{1});
  EXPECT_EQ(ps.back(), Params{11});
  EXPECT_EQ(render_params(f, {4}), "x=4");
}

// Reflecting an instance across its span lands in the dual family; outside the
// families with findings, predictions on both sides agree wherever both are
// covered.
TEST(Catalog, DualFamiliesAreConsistent) {
  for (const auto& f : families()) {
    if (f.dual.empty()) continue;
    const auto& d = family(f.dual);
    const auto h = first_h(f);
    if (!d.admits_h(h)) continue;
    const auto k = std::max(f.min_k(h), d.min_k(h));
    const auto top = k + f.extension;
    for (const auto& p : enumerate_params(f, h, k)) {
      const auto q = reflect_params(f, d, k, p);
      ASSERT_TRUE(q.has_value()) << f.id << " " << render_params(f, p);
      EXPECT_EQ(instantiate(d, k, *q), reflect(instantiate(f, k, p), top)) << f.id << " " << render_params(f, p);
      const auto pf = predicted_cardinality(f, h, k, p);
      const auto pd = predicted_cardinality(d, h, k, *q);
      EXPECT_EQ(restricted_cardinality(instantiate(f, k, p), h), restricted_cardinality(instantiate(d, k, *q), h));
      if (kFamiliesWithFindings.count(f.id)) continue;
      if (pf.status == PredictionStatus::Covered && pd.status == PredictionStatus::Covered) {
        EXPECT_EQ(pf.value, pd.value) << f.id << " " << render_params(f, p) << " vs " << d.id << " "
                                      << render_params(d, *q);
      }
    }
  }
}

// Families without known findings reproduce the engine exactly and their cases
// tile the parameter domain.
TEST(Catalog, CleanFamiliesMatchEngineAndTile) {
  for (const auto& f : families()) {
    if (kFamiliesWithFindings.count(f.id)) continue;
    for (std::int64_t h = 3; h <= 6; ++h) {
      if (!f.admits_h(h)) continue;
      for (std::int64_t k = f.min_k(h); k <= f.min_k(h) + 2; ++k) {
        const auto r = crosscheck(f, h, k);
        EXPECT_TRUE(r.verified()) << f.id << " h=" << h << " k=" << k << ": " << r.mismatches.size()
                                  << " mismatches";
        EXPECT_TRUE(r.tiles()) << f.id << " h=" << h << " k=" << k;
        EXPECT_EQ(r.covered, r.tuples);
      }
    }
  }
}

// Pins the findings on the threshold grid so any change to them is deliberate.
TEST(Catalog, KnownFindingsOnThresholdGrid) {
  std::map<std::string, std::size_t> mismatches, gaps;
  for (const auto& f : families()) {
    for (std::int64_t h = 3; h <= 6; ++h) {
      if (!f.admits_h(h)) continue;
      for (std::int64_t k = f.min_k(h); k <= f.min_k(h) + 2; ++k) {
        const auto r = crosscheck(f, h, k);
        if (!r.mismatches.empty()) mismatches[f.id] += r.mismatches.size();
        if (!r.tiles()) gaps[f.id] += r.uncovered.size() + r.ambiguous.size();
      }
    }
  }
  const std::map<std::string, std::size_t> want_mismatches{
      {"general-pair", 18},      {"h4-adjacent-first", 18}, {"h4-adjacent-last", 18},
      {"h4-general-triple", 450}, {"h4-last-k1", 45},       {"h4-one-first", 45}};
  EXPECT_EQ(mismatches, want_mismatches);
  for (const auto& [id, n] : gaps) EXPECT_TRUE(kFamiliesWithFindings.count(id)) << id << " has " << n << " gaps";
}

TEST(Catalog, GeneralPairFindingIsAtHMinusOne) {
  // Case iii overestimates [0,k+1] \ {h-1,h+2} by one, and its reflection
  // (case x) does the same.
  const auto& f = family("general-pair");
  for (std::int64_t h = 4; h <= 6; ++h) {
    const auto k = f.min_k(h);
    const auto r = crosscheck(f, h, k);
    ASSERT_EQ(r.mismatches.size(), 2u) << h;
    EXPECT_EQ(r.mismatches[0].params, (Params{h - 1, h + 2}));
    EXPECT_EQ(r.mismatches[0].predicted, r.mismatches[0].actual + 1);
    EXPECT_EQ(r.mismatches[1].params, (Params{k - h - 1, k - h + 2}));
  }
}
