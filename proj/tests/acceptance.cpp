// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--only 1,5,...] [--skip 4,...] [--threads N]
//
// Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hsumset/catalog.hpp"
#include "hsumset/classifier.hpp"
#include "hsumset/report.hpp"
#include "hsumset/sumset.hpp"

using namespace hsumset;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(std::string why) {
    pass = false;
    notes.push_back(std::move(why));
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

unsigned g_threads = 4;

using Deletion = std::vector<std::int64_t>;

// [0, top] minus each deletion, sorted.
std::vector<IntSet> from_deletions(std::int64_t top, const std::vector<Deletion>& dels) {
  std::vector<IntSet> out;
  for (const auto& d : dels) out.push_back(IntSet::interval(0, top).without(d));
  std::sort(out.begin(), out.end());
  return out;
}

// The lists as stated by the classification theorems, with k substituted.
std::vector<IntSet> stated_one_element(std::int64_t k) { return from_deletions(k, {{1}, {k - 1}}); }

std::vector<IntSet> stated_two_element_h3(std::int64_t k) {
  return from_deletions(k + 1, {{1, 2}, {k - 1, k}, {1, k}, {2, k + 1}, {3, k + 1}, {k - 2, k + 1}, {k - 3, k + 1}});
}

std::vector<IntSet> stated_two_element(std::int64_t k) {
  return from_deletions(k + 1, {{1, 2}, {k - 1, k}, {1, k}, {2, k + 1}, {k - 2, k + 1}});
}

std::vector<IntSet> stated_three_element_h3(std::int64_t k) {
  std::vector<Deletion> d{{1, 2, 3},     {k - 1, k, k + 1}, {1, 2, k + 1},     {1, k, k + 1},
                          {1, 3, k + 2}, {k - 2, k, k + 2}, {1, 4, k + 2},     {k - 3, k, k + 2},
                          {2, k, k + 2}, {1, k - 1, k + 2}, {1, k - 2, k + 2}, {3, k, k + 2}};
  for (std::int64_t r = 4; r <= k - 4; ++r) d.push_back({r, k + 1, k + 2});
  return from_deletions(k + 2, d);
}

std::vector<IntSet> stated_three_element_h4(std::int64_t k) {
  return from_deletions(k + 2, {{1, 2, 3},
                                {k - 1, k, k + 1},
                                {1, 2, k + 1},
                                {1, k, k + 1},
                                {1, 3, k + 2},
                                {k - 2, k, k + 2},
                                {2, k, k + 2},
                                {1, k - 1, k + 2},
                                {3, k + 1, k + 2},
                                {k - 3, k + 1, k + 2},
                                {4, k + 1, k + 2},
                                {k - 4, k + 1, k + 2}});
}

std::vector<IntSet> stated_three_element(std::int64_t k) {
  return from_deletions(k + 2, {{1, 2, 3},
                                {k - 1, k, k + 1},
                                {1, 2, k + 1},
                                {1, k, k + 1},
                                {1, 3, k + 2},
                                {k - 2, k, k + 2},
                                {2, k, k + 2},
                                {1, k - 1, k + 2},
                                {3, k + 1, k + 2},
                                {k - 3, k + 1, k + 2}});
}

struct TheoremCase {
  const char* id;
  std::int64_t h, k, target, dmax;
  std::vector<IntSet> stated;
};

ClassifyOptions opts(unsigned threads, bool prune = true) {
  ClassifyOptions o;
  o.threads = threads;
  o.prune = prune;
  return o;
}

// Runs each case, compares the search result with the stated list.
void check_theorem_cases(const std::vector<TheoremCase>& cases, Outcome& out) {
  for (const auto& c : cases) {
    const auto rep = verify_classification(c.id, c.h, c.k, c.dmax, opts(g_threads));
    std::ostringstream tag;
    tag << c.id << " h=" << c.h << " k=" << c.k;
    if (rep.target != c.target) out.fail(tag.str() + ": target " + std::to_string(rep.target));
    if (rep.found != c.stated)
      out.fail(tag.str() + ": found " + std::to_string(rep.found.size()) + " sets, stated list has " +
               std::to_string(c.stated.size()) + ", verdict " + std::string(to_string(compare_sets(rep.found, c.stated))));
    else
      out.note(tag.str() + ": " + std::to_string(rep.found.size()) + " sets");
    if (rep.expected != c.stated) out.fail(tag.str() + ": built-in expected list differs from the stated list");
  }
}

std::vector<TheoremCase> criterion5_cases() {
  std::vector<TheoremCase> v;
  for (std::int64_t h : {3, 4, 5}) {
    const auto k = 3 * h + 1;
    v.push_back({"one-element", h, k, h * k - h * h + 2, k + 3, stated_one_element(k)});
  }
  return v;
}

std::vector<TheoremCase> criterion6_cases() {
  return {{"two-element-h3", 3, 12, 30, 16, stated_two_element_h3(12)},
          {"two-element", 4, 15, 47, 19, stated_two_element(15)},
          {"two-element", 5, 18, 68, 22, stated_two_element(18)}};
}

std::vector<TheoremCase> criterion7_cases() {
  return {{"three-element-h3", 3, 13, 34, 18, stated_three_element_h3(13)},
          {"three-element-h4", 4, 16, 52, 21, stated_three_element_h4(16)},
          {"three-element", 5, 19, 74, 24, stated_three_element(19)}};
}

Outcome criterion1() {
  Outcome out;
  std::uint64_t sets = 0, comparisons = 0;
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    if (std::popcount(mask) > 9) continue;
    std::vector<std::int64_t> v{0};
    for (int i = 0; i < 12; ++i)
      if (mask & (1u << i)) v.push_back(i + 1);
    const IntSet a = IntSet::from_sorted(v);
    ++sets;
    for (std::size_t h = 0; h <= a.size(); ++h, ++comparisons) {
      if (restricted_sumset(a, h) != restricted_sumset_naive(a, h)) {
        out.fail("mismatch at A={" + to_string(a) + "} h=" + std::to_string(h));
        return out;
      }
    }
  }
  out.note(std::to_string(sets) + " sets, " + std::to_string(comparisons) + " comparisons");
  return out;
}

Outcome criterion2() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> kdist(2, 14);
  int done = 0;
  while (done < 1000) {
    const int k = kdist(rng);
    std::uniform_int_distribution<std::int64_t> ddist(k - 1, 25);
    const auto d = ddist(rng);
    // 0 and d plus k-2 distinct interior points of [1, d-1].
    std::vector<std::int64_t> pool;
    for (std::int64_t i = 1; i < d; ++i) pool.push_back(i);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::int64_t> v{0, d};
    v.insert(v.end(), pool.begin(), pool.begin() + (k - 2));
    std::sort(v.begin(), v.end());
    const IntSet a = normalize(IntSet::from_sorted(v)).set;
    ++done;
    const auto sigma = a.total();
    const auto kk = a.size();
    for (std::size_t h = 0; h <= kk; ++h) {
      const IntSet s = restricted_sumset(a, h);
      const IntSet dual = restricted_sumset(a, kk - h);
      std::vector<std::int64_t> mirrored;
      for (auto x : s) mirrored.push_back(sigma - x);
      std::sort(mirrored.begin(), mirrored.end());
      if (s.size() != dual.size() || dual != IntSet::from_sorted(mirrored)) {
        out.fail("duality fails at A={" + to_string(a) + "} h=" + std::to_string(h));
        return out;
      }
    }
  }
  out.note(std::to_string(done) + " random normalized sets");
  return out;
}

Outcome criterion3() {
  Outcome out;
  for (std::size_t k : {5, 6, 7}) {
    const auto dmax = static_cast<std::int64_t>(k) + 4;
    const auto scan = scan_direct_bounds(k, dmax);
    for (const auto& v : scan.violations)
      out.fail("k=" + std::to_string(k) + " h=" + std::to_string(v.h) + " A={" + to_string(v.set) + "}: " + v.bound);
    // The arithmetic progression itself must attain the bound.
    const IntSet ap = IntSet::interval(0, static_cast<std::int64_t>(k) - 1);
    for (std::int64_t h = 2; h <= static_cast<std::int64_t>(k) - 2; ++h)
      if (!check_direct_bounds(ap, h).extremal) out.fail("[0,k-1] not extremal at k=" + std::to_string(k));
    out.note("k=" + std::to_string(k) + ": " + std::to_string(scan.sets) + " sets");
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  std::size_t grids = 0, tuples = 0, mismatches = 0, uncovered = 0, ambiguous = 0;
  for (const auto& f : catalog::families()) {
    for (std::int64_t h = 3; h <= 6; ++h) {
      if (!f.admits_h(h)) continue;
      const auto kmin = f.min_k(h);
      for (std::int64_t k = kmin; k <= kmin + 2; ++k) {
        const auto r = catalog::crosscheck(f, h, k);
        ++grids;
        tuples += r.tuples;
        mismatches += r.mismatches.size();
        uncovered += r.uncovered.size();
        ambiguous += r.ambiguous.size();
        for (const auto& m : r.mismatches)
          out.fail(f.id + " h=" + std::to_string(h) + " k=" + std::to_string(k) + " " +
                   catalog::render_params(f, m.params) + " case " + m.label + ": predicted " +
                   std::to_string(m.predicted) + ", actual " + std::to_string(m.actual));
        if (!r.uncovered.empty() || !r.ambiguous.empty())
          out.note(f.id + " h=" + std::to_string(h) + " k=" + std::to_string(k) + ": " +
                   std::to_string(r.uncovered.size()) + " uncovered, " + std::to_string(r.ambiguous.size()) +
                   " ambiguous");
      }
    }
  }
  out.note(std::to_string(grids) + " grid points, " + std::to_string(tuples) + " tuples, " +
           std::to_string(mismatches) + " mismatches, " + std::to_string(uncovered) + " uncovered, " +
           std::to_string(ambiguous) + " ambiguous");
  return out;
}

Outcome criterion5() {
  Outcome out;
  check_theorem_cases(criterion5_cases(), out);
  return out;
}

Outcome criterion6() {
  Outcome out;
  check_theorem_cases(criterion6_cases(), out);
  return out;
}

Outcome criterion7() {
  Outcome out;
  check_theorem_cases(criterion7_cases(), out);
  const auto pruned = classify_by_cardinality(3, 13, 34, 18, opts(g_threads, true));
  const auto full = classify_by_cardinality(3, 13, 34, 18, opts(g_threads, false));
  if (pruned.found != full.found)
    out.fail("pruning changed the found list at h=3 k=13");
  else
    out.note("pruning lossless at h=3 k=13 (" + std::to_string(pruned.pruned) + " cuts)");
  return out;
}

Outcome criterion8() {
  Outcome out;
  const std::int64_t offsets[] = {0, 0, 1, 3, 4};  // k >= 3h + offsets[c]
  for (std::int64_t c : {2, 3, 4}) {
    for (std::int64_t h : {3, 4, 5}) {
      const auto k = 3 * h + offsets[c];
      const auto rep = verify_containment(h, k, c, std::nullopt, opts(g_threads));
      if (!rep.found.empty())
        out.fail("c=" + std::to_string(c) + " h=" + std::to_string(h) + " k=" + std::to_string(k) + ": " +
                 std::to_string(rep.found.size()) + " violators, first {" + to_string(rep.found.front()) + "}");
    }
  }
  if (out.pass) out.note("9 (c,h,k) points, no violators");
  return out;
}

Outcome criterion9() {
  Outcome out;
  for (std::size_t k : {8, 9, 10}) {
    const auto scan = scan_two_fold_bounds(k, static_cast<std::int64_t>(k) + 8);
    for (const auto& v : scan.violations)
      out.fail("k=" + std::to_string(k) + " A={" + to_string(v.set) + "}: " + v.bound);
    out.note("k=" + std::to_string(k) + ": " + std::to_string(scan.sets) + " sets");
  }
  const IntSet ext = conjecture_extremal_set(10, 20);
  const auto n = restricted_cardinality(ext, 2);
  if (n != 3 * 10 - 7) out.fail("extremal set at k=10, a=20 has |2^A| = " + std::to_string(n));
  return out;
}

Outcome criterion10() {
  Outcome out;
  std::vector<TheoremCase> all = criterion5_cases();
  for (auto&& v : {criterion6_cases(), criterion7_cases()}) all.insert(all.end(), v.begin(), v.end());
  const unsigned n = std::max(2u, g_threads);
  for (const auto& c : all) {
    const auto one = render_report(verify_classification(c.id, c.h, c.k, c.dmax, opts(1)), OutputFormat::Json,
                                   {false});
    const auto many = render_report(verify_classification(c.id, c.h, c.k, c.dmax, opts(n)), OutputFormat::Json,
                                    {false});
    if (one != many) out.fail(std::string(c.id) + " h=" + std::to_string(c.h) + ": JSON differs at " +
                              std::to_string(n) + " threads");
  }
  if (out.pass) out.note(std::to_string(all.size()) + " reports identical at 1 and " + std::to_string(n) + " threads");
  return out;
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, skip;
  g_threads = std::max(4u, std::thread::hardware_concurrency());
  try {
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (i + 1 >= argc) throw std::invalid_argument(arg);
      if (arg == "--only") only = parse_list(argv[++i]);
      else if (arg == "--skip") skip = parse_list(argv[++i]);
      else if (arg == "--threads") g_threads = static_cast<unsigned>(std::stoul(argv[++i]));
      else throw std::invalid_argument(arg);
    }
  } catch (const std::exception& e) {
    std::cerr << "usage: acceptance [--only 1,2] [--skip 4] [--threads N] (bad argument " << e.what() << ")\n";
    return 2;
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle equivalence", criterion1},
      {"duality", criterion2},
      {"direct bound", criterion3},
      {"catalog reproduction", criterion4},
      {"one-element classification", criterion5},
      {"two-element classification", criterion6},
      {"three-element classification", criterion7},
      {"containment", criterion8},
      {"golden-mean bound, 3k-7 conjecture", criterion9},
      {"determinism across thread counts", criterion10},
  };

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if ((!only.empty() && !only.count(id)) || skip.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_pass = all_pass && o.pass;
    std::printf("criterion %2d %-34s %s  (%.2f s)\n", id, criteria[i].first, o.pass ? "PASS" : "FAIL", secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
