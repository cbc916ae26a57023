#include "hsumset/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include "hsumset/expr.hpp"
#include "json.hpp"

extern char** environ;

namespace hsumset {

using ojson = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "plain") return OutputFormat::Plain;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (json, csv, plain)");
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Plain: return "plain";
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::uint64_t parse_positive(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc{} || ptr != end || v == 0) {
    throw UsageError(key + " must be a positive integer (got '" + value + "')");
  }
  return v;
}

std::string canonical_key(std::string key) {
  for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "bitwindow_cap" || key == "bit_window_cap") key = "window_cap";
  return key;
}

}  // namespace

Settings parse_config_text(std::string_view text) {
  Settings out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    out[canonical_key(trim(std::string_view(body).substr(0, eq)))] = trim(std::string_view(body).substr(eq + 1));
  }
  return out;
}

Settings read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

Settings settings_from_env(const std::map<std::string, std::string>& env) {
  static const std::pair<const char*, const char*> names[] = {
      {"HSUMSET_THREADS", "threads"},         {"HSUMSET_NAIVE_CAP", "naive_cap"},
      {"HSUMSET_BITWINDOW_CAP", "window_cap"}, {"HSUMSET_FORMAT", "format"},
      {"HSUMSET_OUTPUT", "output"},
  };
  Settings out;
  for (auto [var, key] : names) {
    if (auto it = env.find(var); it != env.end()) out[key] = it->second;
  }
  return out;
}

std::map<std::string, std::string> process_env() {
  std::map<std::string, std::string> env;
  for (char** e = environ; e && *e; ++e) {
    std::string_view kv(*e);
    if (auto eq = kv.find('='); eq != std::string_view::npos) {
      env.emplace(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
    }
  }
  return env;
}

RunConfig resolve_config(const Settings& file, const Settings& env, const Settings& flags) {
  Settings merged;
  for (const Settings* layer : {&file, &env, &flags}) {
    for (auto& [k, v] : *layer) merged[canonical_key(k)] = v;
  }
  RunConfig cfg;
  for (auto& [key, value] : merged) {
    if (key == "threads") {
      const auto t = parse_positive(key, value);
      if (t > 4096) throw UsageError("threads must be at most 4096");
      cfg.threads = static_cast<unsigned>(t);
    } else if (key == "naive_cap") {
      cfg.naive_cap = parse_positive(key, value);
    } else if (key == "window_cap") {
      cfg.window_cap = parse_positive(key, value);
    } else if (key == "format") {
      try {
        cfg.format = parse_format(value);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (key == "output") {
      cfg.output = value;
    } else {
      throw UsageError("unknown setting '" + key + "'");
    }
  }
  return cfg;
}

std::int64_t evaluate_target(std::string_view text, std::int64_t h, std::int64_t k) {
  static const std::regex power(R"(([hk])(\d+))");
  const std::string rewritten = std::regex_replace(std::string(text), power, "$1^$2");
  try {
    const auto poly = expr::Poly::parse(rewritten);
    for (char v : poly.variables()) {
      if (v != 'h' && v != 'k') throw UsageError("target may only use h and k (found '" + std::string(1, v) + "')");
    }
    expr::Bindings b;
    b.set('h', h);
    b.set('k', k);
    return poly.eval(b);
  } catch (const std::invalid_argument& e) {
    throw UsageError("malformed target '" + std::string(text) + "': " + e.what());
  }
}

std::string render_compact(const IntSet& s) {
  if (s.empty()) return "{}";
  std::vector<std::string> parts;
  bool single_run = true;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j + 1 < s.size() && s[j + 1] == s[j] + 1) ++j;
    if (j - i >= 2) {
      parts.push_back(std::to_string(s[i]) + ".." + std::to_string(s[j]));
    } else {
      for (std::size_t t = i; t <= j; ++t) parts.push_back(std::to_string(s[t]));
    }
    if (i != 0 || j + 1 != s.size() || j - i < 2) single_run = false;
    i = j + 1;
  }
  if (single_run) return parts.front();
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out + "}";
}

std::string render_sumset_plain(const IntSet& s) { return render_compact(s) + " (" + std::to_string(s.size()) + ")"; }

namespace {

ojson set_array(const std::vector<IntSet>& sets) {
  ojson a = ojson::array();
  for (auto& s : sets) a.push_back(to_string(s));
  return a;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

}  // namespace

std::string render_report(const ClassificationReport& r, OutputFormat f, const RenderOptions& opts) {
  switch (f) {
    case OutputFormat::Json: {
      ojson j;
      j["theorem"] = r.theorem;
      j["h"] = r.h;
      j["k"] = r.k;
      j["dmax"] = r.dmax;
      j["target"] = r.target;
      j["found"] = set_array(r.found);
      j["expected"] = set_array(r.expected);
      j["verdict"] = std::string(to_string(r.verdict));
      j["scanned"] = r.scanned;
      j["pruned"] = r.pruned;
      if (opts.include_timing) j["wall_ms"] = r.wall_ms;
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "theorem,h,k,dmax,target,set,status\n";
      const auto extra = r.extra();
      for (auto& s : r.found) {
        const bool is_extra = std::binary_search(extra.begin(), extra.end(), s);
        out += csv_quote(r.theorem) + ',' + std::to_string(r.h) + ',' + std::to_string(r.k) + ',' +
               std::to_string(r.dmax) + ',' + std::to_string(r.target) + ',' + csv_quote(to_string(s)) + ',' +
               (is_extra ? "extra" : "expected") + '\n';
      }
      return out;
    }
    case OutputFormat::Plain: {
      std::ostringstream os;
      os << "verdict: " << to_string(r.verdict) << " (" << r.found.size() << " found, " << r.expected.size()
         << " expected)\n";
      os << "theorem " << (r.theorem.empty() ? "-" : r.theorem) << "  h=" << r.h << " k=" << r.k
         << " target=" << r.target << " dmax=" << r.dmax << "\n";
      os << "scanned " << r.scanned << ", pruned " << r.pruned;
      if (opts.include_timing) os << ", " << format_ms(r.wall_ms) << " ms";
      os << "\n";
      for (auto& s : r.found) os << "  " << render_compact(s) << "\n";
      for (auto& s : r.missing()) os << "  missing " << render_compact(s) << "\n";
      for (auto& s : r.extra()) {
        if (!r.expected.empty()) os << "  extra " << render_compact(s) << "\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string render_coverage(const std::vector<catalog::CoverageReport>& reports, OutputFormat f) {
  using catalog::family;
  using catalog::render_params;
  switch (f) {
    case OutputFormat::Json: {
      ojson arr = ojson::array();
      for (auto& r : reports) {
        const auto& fam = family(r.family);
        ojson j;
        j["family"] = r.family;
        j["h"] = r.h;
        j["k"] = r.k;
        j["k_min"] = fam.k_min_text;
        j["tuples"] = r.tuples;
        j["covered"] = r.covered;
        ojson mism = ojson::array();
        for (auto& m : r.mismatches) {
          mism.push_back({{"params", render_params(fam, m.params)},
                          {"case", m.label},
                          {"predicted", m.predicted},
                          {"actual", m.actual}});
        }
        j["mismatches"] = mism;
        ojson unc = ojson::array();
        for (auto& u : r.uncovered) {
          ojson near = ojson::array();
          for (auto& c : u.cases) near.push_back(c.label);
          unc.push_back({{"params", render_params(fam, u.params)}, {"actual", u.actual}, {"nearest", near}});
        }
        j["uncovered"] = unc;
        ojson amb = ojson::array();
        for (auto& a : r.ambiguous) {
          ojson hits = ojson::array();
          for (auto& c : a.cases) hits.push_back({{"case", c.label}, {"value", c.value}});
          amb.push_back({{"params", render_params(fam, a.params)}, {"actual", a.actual}, {"cases", hits}});
        }
        j["ambiguous"] = amb;
        j["verified"] = r.verified();
        j["tiles"] = r.tiles();
        arr.push_back(std::move(j));
      }
      return arr.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "family,h,k,params,kind,case,predicted,actual\n";
      for (auto& r : reports) {
        const auto& fam = family(r.family);
        const auto head = r.family + ',' + std::to_string(r.h) + ',' + std::to_string(r.k) + ',';
        for (auto& m : r.mismatches) {
          out += head + csv_quote(render_params(fam, m.params)) + ",mismatch," + m.label + ',' +
                 std::to_string(m.predicted) + ',' + std::to_string(m.actual) + '\n';
        }
        for (auto& u : r.uncovered) {
          out += head + csv_quote(render_params(fam, u.params)) + ",uncovered,,," + std::to_string(u.actual) + '\n';
        }
        for (auto& a : r.ambiguous) {
          std::string labels;
          for (auto& c : a.cases) labels += (labels.empty() ? "" : "+") + c.label;
          out += head + csv_quote(render_params(fam, a.params)) + ",ambiguous," + labels + ",," +
                 std::to_string(a.actual) + '\n';
        }
      }
      return out;
    }
    case OutputFormat::Plain: {
      std::ostringstream os;
      for (auto& r : reports) {
        const auto& fam = family(r.family);
        os << (r.verified() ? (r.tiles() ? "PASS " : "PASS*") : "FAIL ") << ' ' << r.family << " h=" << r.h
           << " k=" << r.k << ": " << r.tuples << " tuples, " << r.mismatches.size() << " mismatches, "
           << r.uncovered.size() << " uncovered, " << r.ambiguous.size() << " ambiguous\n";
        for (auto& m : r.mismatches) {
          os << "    mismatch " << render_params(fam, m.params) << " case " << m.label << ": predicted "
             << m.predicted << ", actual " << m.actual << "\n";
        }
        for (auto& u : r.uncovered) {
          os << "    uncovered " << render_params(fam, u.params) << ": actual " << u.actual << ", nearest";
          for (auto& c : u.cases) os << ' ' << c.label;
          os << "\n";
        }
        for (auto& a : r.ambiguous) {
          os << "    ambiguous " << render_params(fam, a.params) << ": actual " << a.actual << ",";
          for (auto& c : a.cases) os << ' ' << c.label << '=' << c.value;
          os << "\n";
        }
      }
      return os.str();
    }
  }
  return {};
}

std::string render_catalog_dump() {
  ojson arr = ojson::array();
  for (auto& f : catalog::families()) {
    for (auto& c : f.cases) {
      ojson j;
      j["family"] = f.id;
      j["case"] = c.label;
      j["h_regime"] = std::string(catalog::to_string(f.h_regime));
      j["k_min"] = f.k_min_text;
      j["domain"] = f.param_domain.source + " & (" + c.domain.source + ")";
      j["formula"] = c.formula_text;
      j["anchor"] = c.anchor;
      if (!c.erratum.empty()) j["erratum"] = c.erratum;
      arr.push_back(std::move(j));
    }
  }
  return arr.dump(2) + "\n";
}

std::string render_set_list(const std::vector<IntSet>& sets, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return set_array(sets).dump(2) + "\n";
    case OutputFormat::Csv: {
      std::string out = "set\n";
      for (auto& s : sets) out += csv_quote(to_string(s)) + '\n';
      return out;
    }
    case OutputFormat::Plain: {
      std::string out;
      for (auto& s : sets) out += to_string(s) + '\n';
      return out;
    }
  }
  return {};
}

}  // namespace hsumset
