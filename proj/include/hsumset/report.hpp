#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hsumset/catalog.hpp"
#include "hsumset/classifier.hpp"
#include "hsumset/int_set.hpp"

namespace hsumset {

enum class OutputFormat { Json, Csv, Plain };

/// Throws std::invalid_argument for anything other than json, csv, plain.
OutputFormat parse_format(std::string_view text);
std::string_view to_string(OutputFormat f);

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitGuard = 3 };

/// Signals a bad command line or config; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned threads = 1;
  std::uint64_t naive_cap = EngineLimits{}.naive_cap;
  std::uint64_t window_cap = EngineLimits{}.window_cap;
  OutputFormat format = OutputFormat::Plain;
  /// Empty means stdout.
  std::string output;

  EngineLimits limits() const { return {naive_cap, window_cap}; }
};

/// Keys threads, naive_cap, window_cap (alias bitwindow_cap), format, output.
using Settings = std::map<std::string, std::string>;

/// `key = value` lines; '#' starts a comment. Throws UsageError on bad lines.
Settings parse_config_text(std::string_view text);
Settings read_config_file(const std::string& path);

/// HSUMSET_THREADS, HSUMSET_NAIVE_CAP, HSUMSET_BITWINDOW_CAP (and
/// HSUMSET_FORMAT, HSUMSET_OUTPUT) from an environment snapshot.
Settings settings_from_env(const std::map<std::string, std::string>& env);
std::map<std::string, std::string> process_env();

/// Defaults, then config file, then environment, then flags; later layers
/// override earlier ones. Throws UsageError on invalid values.
RunConfig resolve_config(const Settings& file, const Settings& env, const Settings& flags);

/// Literal integer or polynomial in h and k; `h2` means h^2, so "hk-h2+2"
/// reads as hk - h^2 + 2. Throws UsageError when malformed.
std::int64_t evaluate_target(std::string_view text, std::int64_t h, std::int64_t k);

/// "1..7" for a run of three or more, "{3,5..42}" otherwise, "{}" when empty.
std::string render_compact(const IntSet& s);
/// render_compact plus " (|S|)".
std::string render_sumset_plain(const IntSet& s);

struct RenderOptions {
  bool include_timing = true;
};

std::string render_report(const ClassificationReport& r, OutputFormat f, const RenderOptions& opts = {});
std::string render_coverage(const std::vector<catalog::CoverageReport>& reports, OutputFormat f);
std::string render_catalog_dump();
std::string render_set_list(const std::vector<IntSet>& sets, OutputFormat f);

}  // namespace hsumset
