// hsumset: restricted sumsets, the deletion-family catalog and the
// classification verifier from the command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "hsumset/catalog.hpp"
#include "hsumset/classifier.hpp"
#include "hsumset/report.hpp"
#include "hsumset/sumset.hpp"

namespace {

using namespace hsumset;

struct Range {
  std::int64_t lo, hi;
};

// "7" or "3..5".
Range parse_range(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    if (auto dots = text.find(".."); dots != std::string::npos) {
      const auto lo = std::stoll(text.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(text);
      const auto rest = text.substr(dots + 2);
      const auto hi = std::stoll(rest, &used);
      if (used != rest.size() || hi < lo) throw std::invalid_argument(text);
      return {lo, hi};
    }
    const auto v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return {v, v};
  } catch (const std::logic_error&) {
    throw UsageError(std::string("bad ") + what + " range '" + text + "' (use N or LO..HI)");
  }
}

class Writer {
 public:
  explicit Writer(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  void write(const std::string& s) {
    std::ostream& os = file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout;
    os << s;
    os.flush();
  }

 private:
  std::ofstream file_;
};

struct GlobalFlags {
  std::string config;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> naive_cap;
  std::optional<std::uint64_t> window_cap;
  std::optional<std::string> format;
  std::optional<std::string> output;
};

RunConfig load_config(const GlobalFlags& g) {
  Settings flags;
  if (g.threads) flags["threads"] = std::to_string(*g.threads);
  if (g.naive_cap) flags["naive_cap"] = std::to_string(*g.naive_cap);
  if (g.window_cap) flags["window_cap"] = std::to_string(*g.window_cap);
  if (g.format) flags["format"] = *g.format;
  if (g.output) flags["output"] = *g.output;
  const Settings file = g.config.empty() ? Settings{} : read_config_file(g.config);
  return resolve_config(file, settings_from_env(process_env()), flags);
}

ClassifyOptions classify_options(const RunConfig& cfg, bool prune) {
  ClassifyOptions o;
  o.threads = cfg.threads;
  o.prune = prune;
  o.limits = cfg.limits();
  return o;
}

int cmd_compute(const RunConfig& cfg, const std::string& set_text, std::int64_t h, bool unrestricted) {
  if (h < 0) throw UsageError("--h must be >= 0");
  IntSet a;
  try {
    auto made = parse_set(set_text);
    if (made.dropped_duplicates) std::cerr << "note: duplicate elements dropped\n";
    a = std::move(made.set);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto hh = static_cast<std::size_t>(h);
  const IntSet s = unrestricted ? unrestricted_sumset(a, hh, cfg.limits()) : restricted_sumset(a, hh, cfg.limits());
  Writer out(cfg.output);
  switch (cfg.format) {
    case OutputFormat::Plain: out.write(render_sumset_plain(s) + "\n"); break;
    case OutputFormat::Json: {
      std::string elems;
      for (auto v : s) elems += (elems.empty() ? "" : ", ") + std::to_string(v);
      out.write("{\"set\": \"" + to_string(a) + "\", \"h\": " + std::to_string(h) + ", \"restricted\": " +
                (unrestricted ? "false" : "true") + ", \"sumset\": [" + elems +
                "], \"cardinality\": " + std::to_string(s.size()) + "}\n");
      break;
    }
    case OutputFormat::Csv: {
      std::string rows = "value\n";
      for (auto v : s) rows += std::to_string(v) + "\n";
      out.write(rows);
      break;
    }
  }
  return kExitOk;
}

int cmd_catalog(const RunConfig& cfg, const std::string& family_id, const std::string& h_text,
                const std::string& k_text, std::optional<std::int64_t> k_max) {
  std::vector<const catalog::DeletionFamily*> fams;
  if (family_id.empty()) {
    for (auto& f : catalog::families()) fams.push_back(&f);
  } else {
    try {
      fams.push_back(&catalog::family(family_id));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const Range hr = parse_range(h_text, "h");
  std::optional<Range> kr;
  if (!k_text.empty()) kr = parse_range(k_text, "k");
  std::vector<catalog::CoverageReport> reports;
  for (auto* f : fams) {
    for (std::int64_t h = hr.lo; h <= hr.hi; ++h) {
      if (!f->admits_h(h)) {
        if (!family_id.empty()) std::cerr << "skip " << f->id << " h=" << h << ": outside regime\n";
        continue;
      }
      const auto kmin = f->min_k(h);
      const std::int64_t lo = kr ? kr->lo : kmin;
      const std::int64_t hi = kr ? kr->hi : k_max.value_or(kmin + 2);
      for (std::int64_t k = lo; k <= hi; ++k) {
        if (k < kmin) {
          std::cerr << "skip " << f->id << " h=" << h << " k=" << k << ": below threshold k >= " << f->k_min_text
                    << "\n";
          continue;
        }
        reports.push_back(catalog::crosscheck(*f, h, k, cfg.limits()));
      }
    }
  }
  Writer(cfg.output).write(render_coverage(reports, cfg.format));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](auto& r) { return r.verified(); });
  return ok ? kExitOk : kExitMismatch;
}

int cmd_verify(const RunConfig& cfg, const std::string& id, std::optional<std::int64_t> h,
               std::optional<std::int64_t> k, std::optional<std::int64_t> dmax, std::optional<std::int64_t> c,
               bool prune, bool timing) {
  ClassificationReport rep;
  try {
    if (id == "containment") {
      if (!c) throw UsageError("containment needs --c (2, 3 or 4)");
      const auto hh = h.value_or(3);
      const auto kk = k.value_or(*c == 2 ? 3 * hh + 1 : *c == 3 ? 3 * hh + 3 : 3 * hh + 4);
      rep = verify_containment(hh, kk, *c, dmax, classify_options(cfg, prune));
    } else {
      const auto& t = theorem(id);
      const auto hh = h.value_or(t.h_min);
      const auto kk = k.value_or(t.min_k(hh));
      rep = verify_classification(id, hh, kk, dmax, classify_options(cfg, prune));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Writer(cfg.output).write(render_report(rep, cfg.format, {timing}));
  return rep.verdict == Verdict::ExactMatch ? kExitOk : kExitMismatch;
}

int cmd_classify(const RunConfig& cfg, std::int64_t h, std::int64_t k, const std::string& target_text,
                 std::optional<std::int64_t> dmax, bool prune) {
  const auto target = evaluate_target(target_text, h, k);
  ClassificationReport rep;
  try {
    rep = classify_by_cardinality(h, k, target, dmax.value_or(k + 5), classify_options(cfg, prune));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Writer(cfg.output).write(render_set_list(rep.found, cfg.format));
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::int64_t k, std::int64_t dmax, bool no_gcd, bool count_only) {
  if (k < 1) throw UsageError("--k must be >= 1");
  const EnumerationSpec spec{static_cast<std::size_t>(k), dmax, !no_gcd};
  Writer out(cfg.output);
  if (count_only) {
    out.write(std::to_string(count_normalized_sets(spec)) + "\n");
    return kExitOk;
  }
  std::vector<IntSet> sets;
  enumerate_normalized_sets(spec, [&](const IntSet& a) { sets.push_back(a); });
  out.write(render_set_list(sets, cfg.format));
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Restricted h-fold sumsets: engine, formula catalog and classification verifier"};
  // --h is a real option, so help is long-only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--config", g.config, "key=value config file");
  app.add_option("--threads", g.threads, "worker threads (env HSUMSET_THREADS)");
  app.add_option("--naive-cap", g.naive_cap, "naive oracle subset cap (env HSUMSET_NAIVE_CAP)");
  app.add_option("--window-cap", g.window_cap, "DP bitmap window cap (env HSUMSET_BITWINDOW_CAP)");
  app.add_option("--format", g.format, "json, csv or plain");
  app.add_option("--output", g.output, "write to this file instead of stdout");

  std::string set_text;
  std::int64_t compute_h = 0;
  bool unrestricted = false;
  auto* compute = app.add_subcommand("compute", "print h^A (or hA) and its size");
  compute->add_option("--set", set_text, "comma-separated integers")->required();
  compute->add_option("--h", compute_h, "number of summands")->required();
  compute->add_flag("--unrestricted", unrestricted, "allow repeated summands (hA)");

  std::string fam_id, h_range = "3..6", k_range;
  std::optional<std::int64_t> k_max;
  auto* cat = app.add_subcommand("catalog", "check catalog formulas against the engine");
  cat->add_option("--family", fam_id, "family id (default: all)");
  cat->add_option("--h", h_range, "h or LO..HI");
  cat->add_option("--k", k_range, "k or LO..HI (default: threshold..threshold+2)");
  cat->add_option("--k-max", k_max, "upper k when --k is absent");

  std::string theorem_id;
  std::optional<std::int64_t> vh, vk, vdmax, vc;
  bool no_prune = false, no_timing = false;
  auto* ver = app.add_subcommand("verify", "reproduce a classification or containment theorem");
  ver->add_option("--theorem", theorem_id, "theorem id or 'containment'")->required();
  ver->add_option("--h", vh);
  ver->add_option("--k", vk);
  ver->add_option("--dmax", vdmax, "largest diameter searched (default k+c-2+3)");
  ver->add_option("--c", vc, "containment part: 2, 3 or 4");
  ver->add_flag("--no-prune", no_prune, "disable search pruning");
  ver->add_flag("--no-timing", no_timing, "omit wall-clock time from the report");

  std::int64_t ch = 0, ck = 0;
  std::string target_text;
  std::optional<std::int64_t> cdmax;
  auto* cls = app.add_subcommand("classify", "list normalized k-sets with |h^A| = target");
  cls->add_option("--h", ch)->required();
  cls->add_option("--k", ck)->required();
  cls->add_option("--target", target_text, "integer or expression such as hk-h2+2")->required();
  cls->add_option("--dmax", cdmax, "largest diameter (default k+5)");
  cls->add_flag("--no-prune", no_prune, "disable search pruning");

  std::int64_t ek = 0, edmax = 0;
  bool no_gcd = false, count_only = false;
  auto* en = app.add_subcommand("enumerate", "list normalized k-sets up to a diameter");
  en->add_option("--k", ek)->required();
  en->add_option("--dmax", edmax)->required();
  en->add_flag("--no-gcd-filter", no_gcd, "keep sets whose elements share a factor");
  en->add_flag("--count", count_only, "print only the number of sets");

  auto* dump = app.add_subcommand("dump-catalog", "print every catalog case as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const RunConfig cfg = load_config(g);
    if (*compute) return cmd_compute(cfg, set_text, compute_h, unrestricted);
    if (*cat) return cmd_catalog(cfg, fam_id, h_range, k_range, k_max);
    if (*ver) return cmd_verify(cfg, theorem_id, vh, vk, vdmax, vc, !no_prune, !no_timing);
    if (*cls) return cmd_classify(cfg, ch, ck, target_text, cdmax, !no_prune);
    if (*en) return cmd_enumerate(cfg, ek, edmax, no_gcd, count_only);
    if (*dump) {
      Writer(cfg.output).write(render_catalog_dump());
      return kExitOk;
    }
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
