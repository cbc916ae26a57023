#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "hsumset/report.hpp"

#include "print_int_set.hpp"
#include "json.hpp"

using namespace hsumset;

TEST(Format, ParseAndPrint) {
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_EQ(parse_format("plain"), OutputFormat::Plain);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
  EXPECT_EQ(to_string(OutputFormat::Csv), "csv");
}

TEST(Config, ParseText) {
  const auto s = parse_config_text("# comment\nthreads = 4\n\nformat=json  # trailing\n");
  EXPECT_EQ(s.at("threads"), "4");
  EXPECT_EQ(s.at("format"), "json");
  EXPECT_THROW(parse_config_text("threads"), UsageError);
  EXPECT_THROW(resolve_config(parse_config_text("colour = red"), {}, {}), UsageError);
}

TEST(Config, EnvironmentNames) {
  const auto s = settings_from_env(
      {{"HSUMSET_THREADS", "3"}, {"HSUMSET_NAIVE_CAP", "50"}, {"HSUMSET_BITWINDOW_CAP", "99"}, {"PATH", "/bin"}});
  EXPECT_EQ(s.at("threads"), "3");
  EXPECT_EQ(s.at("naive_cap"), "50");
  EXPECT_EQ(s.at("window_cap"), "99");
  EXPECT_EQ(s.size(), 3u);
}

TEST(Config, PrecedenceFlagsOverEnvOverFileOverDefaults) {
  const RunConfig d = resolve_config({}, {}, {});
  EXPECT_EQ(d.threads, 1u);
  EXPECT_EQ(d.format, OutputFormat::Plain);
  EXPECT_EQ(d.naive_cap, EngineLimits{}.naive_cap);

  const Settings file{{"threads", "2"}, {"naive_cap", "10"}, {"window_cap", "20"}, {"format", "csv"}};
  const Settings env{{"threads", "3"}, {"naive_cap", "11"}};
  const Settings flags{{"threads", "4"}};
  const RunConfig c = resolve_config(file, env, flags);
  EXPECT_EQ(c.threads, 4u);
  EXPECT_EQ(c.naive_cap, 11u);
  EXPECT_EQ(c.window_cap, 20u);
  EXPECT_EQ(c.format, OutputFormat::Csv);
}

TEST(Config, RejectsNonPositiveAndGarbage) {
  EXPECT_THROW(resolve_config({}, {}, {{"threads", "0"}}), UsageError);
  EXPECT_THROW(resolve_config({}, {}, {{"naive_cap", "-1"}}), UsageError);
  EXPECT_THROW(resolve_config({}, {{"window_cap", "lots"}}, {}), UsageError);
  EXPECT_THROW(resolve_config({{"format", "xml"}}, {}, {}), UsageError);
}

TEST(Config, ReadFile) {
  const std::string path = ::testing::TempDir() + "hsumset_cfg.txt";
  {
    std::ofstream f(path);
    f << "threads = 6\noutput = out.json\n";
  }
  const auto s = read_config_file(path);
  EXPECT_EQ(s.at("threads"), "6");
  EXPECT_EQ(s.at("output"), "out.json");
  std::remove(path.c_str());
  EXPECT_THROW(read_config_file(path), UsageError);
}

TEST(Target, LiteralsAndSymbolicForms) {
  EXPECT_EQ(evaluate_target("100", 2, 5), 100);
  EXPECT_EQ(evaluate_target("hk-h2+2", 3, 10), 23);
  EXPECT_EQ(evaluate_target("hk-h2+1", 3, 10), 22);
  EXPECT_EQ(evaluate_target("hk-h^2+4", 5, 19), 74);
  EXPECT_EQ(evaluate_target("3k-6", 3, 12), 30);
  EXPECT_EQ(evaluate_target(" hk - h2 + 3 ", 4, 15), 47);
  EXPECT_THROW(evaluate_target("hk-x", 3, 10), UsageError);
  EXPECT_THROW(evaluate_target("hk-", 3, 10), UsageError);
  EXPECT_THROW(evaluate_target("", 3, 10), UsageError);
}

TEST(Render, CompactForms) {
  EXPECT_EQ(render_compact(IntSet::interval(1, 7)), "1..7");
  EXPECT_EQ(render_compact(IntSet{0}), "{0}");
  EXPECT_EQ(render_compact(IntSet{}), "{}");
  EXPECT_EQ(render_compact(IntSet{3, 5, 6, 7}), "{3,5..7}");
  EXPECT_EQ(render_compact(IntSet{0, 1, 3}), "{0,1,3}");
  EXPECT_EQ(render_sumset_plain(IntSet::interval(1, 7)), "1..7 (7)");
  EXPECT_EQ(render_sumset_plain(IntSet{}), "{} (0)");
}

TEST(Render, ReportJsonSchema) {
  ClassificationReport r;
  r.theorem = "one-element";
  r.h = 3;
  r.k = 10;
  r.dmax = 13;
  r.target = 23;
  r.found = {IntSet{0, 1}, IntSet{0, 2}};
  r.expected = {IntSet{0, 1}};
  r.verdict = Verdict::Extra;
  r.scanned = 5;
  r.pruned = 2;
  r.wall_ms = 1.5;
  const auto j = nlohmann::json::parse(render_report(r, OutputFormat::Json));
  for (const char* key : {"theorem", "h", "k", "dmax", "target", "found", "expected", "verdict", "scanned", "pruned",
                          "wall_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["found"][1], "0,2");
  EXPECT_EQ(j["verdict"], "extra");
  const auto untimed = nlohmann::json::parse(render_report(r, OutputFormat::Json, {false}));
  EXPECT_FALSE(untimed.contains("wall_ms"));

  const auto csv = render_report(r, OutputFormat::Csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "theorem,h,k,dmax,target,set,status");
  EXPECT_NE(render_report(r, OutputFormat::Plain).find("verdict: extra"), std::string::npos);
}

TEST(Render, SetListFormats) {
  const std::vector<IntSet> sets{IntSet{0, 1, 3}, IntSet{0, 2, 3}};
  EXPECT_EQ(render_set_list(sets, OutputFormat::Plain), "0,1,3\n0,2,3\n");
  const auto j = nlohmann::json::parse(render_set_list(sets, OutputFormat::Json));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(render_set_list({}, OutputFormat::Plain), "");
}

TEST(Render, CatalogDumpListsEveryFamily) {
  const auto j = nlohmann::json::parse(render_catalog_dump());
  ASSERT_TRUE(j.is_array());
  std::set<std::string> fams;
  for (auto& row : j) {
    fams.insert(row["family"].get<std::string>());
    EXPECT_TRUE(row.contains("formula"));
    EXPECT_TRUE(row.contains("domain"));
  }
  EXPECT_EQ(fams.size(), catalog::families().size());
}
