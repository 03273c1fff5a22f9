// Copyright 2026 The wiktmrd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.h"
#include "wiktmrd/mrd_store.h"

namespace wiktmrd {
namespace {

using testing::TempDir;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "wiktmrd");
  std::vector<char *> argv;
  for (std::string &a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Parses the fixture pages of one edition into dir/<code>.db.
std::string fixture_store(const TempDir &dir, Dialect dialect) {
  std::string code(dialect_code(dialect));
  std::filesystem::path dump = dir / (code + ".xml");
  testing::write_dump_file(dump, testing::fixture_pages(dialect));
  std::string store = (dir / (code + ".db")).string();
  CliResult r = run_cli({"parse", "--dialect", code, "--dump", dump.string(), "--store", store});
  EXPECT_EQ(r.code, 0) << r.err;
  return store;
}

TEST(CliTest, ParseReportsCountersAndLogsSkips) {
  TempDir dir;
  std::filesystem::path dump = dir / "en.xml";
  testing::write_dump_file(dump, testing::fixture_pages(Dialect::kEnglish));
  CliResult r = run_cli({"parse", "--dialect", "en", "--dump", dump.string(), "--store",
                         (dir / "en.db").string(), "--workers", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pages_parsed"), std::string::npos);
  EXPECT_NE(r.err.find("\"doggie\": redirect"), std::string::npos) << r.err;

  r = run_cli({"parse", "--dialect", "en", "--dump", dump.string(), "--store",
               (dir / "quiet.db").string(), "--quiet"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.err.find("redirect"), std::string::npos);
}

TEST(CliTest, LookupPrintsDefinitionsRelationsAndTranslations) {
  TempDir dir;
  std::string store = fixture_store(dir, Dialect::kEnglish);
  CliResult r = run_cli({"lookup", "--store", store, "nationality"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("nationality [en] noun"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("  1. Membership of a particular nation"), std::string::npos);
  EXPECT_NE(r.out.find("  4. "), std::string::npos);
  EXPECT_NE(r.out.find("synonym: citizenship"), std::string::npos);
  EXPECT_NE(r.out.find("hypernym: group"), std::string::npos);
  EXPECT_NE(r.out.find("translations ["), std::string::npos);
  EXPECT_NE(r.out.find("fr: nationalité"), std::string::npos);
}

TEST(CliTest, LookupLanguageFilter) {
  TempDir dir;
  std::string store = fixture_store(dir, Dialect::kEnglish);
  CliResult r = run_cli({"lookup", "--store", store, "bush", "--lang", "sq"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bush [sq]"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("bush [en]"), std::string::npos);
}

TEST(CliTest, LookupAbsentWordExitsOne) {
  TempDir dir;
  std::string store = fixture_store(dir, Dialect::kEnglish);
  CliResult r = run_cli({"lookup", "--store", store, "zzyzx"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("no entry"), std::string::npos);
}

TEST(CliTest, ReverseLookupFindsTheRussianEntry) {
  TempDir dir;
  std::string store = fixture_store(dir, Dialect::kRussian);
  CliResult r = run_cli({"lookup", "--store", store, "--reverse", "enkeli"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ангел"), std::string::npos) << r.out;
}

TEST(CliTest, StatsOnEmptyStoreIsAllZero) {
  TempDir dir;
  std::string store = (dir / "empty.db").string();
  MrdStore::open(store);
  CliResult r = run_cli({"stats", "--store", store, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int metrics = 0;
  while (std::getline(lines, line)) {
    ++metrics;
    // The relation type vocabulary is seeded when a store is created.
    if (line.find("table.relation_type") != std::string::npos) continue;
    EXPECT_NE(line.find("\"value\":0"), std::string::npos) << line;
  }
  EXPECT_GT(metrics, 10);
}

TEST(CliTest, StatsPlainText) {
  TempDir dir;
  std::string store = fixture_store(dir, Dialect::kEnglish);
  CliResult r = run_cli({"stats", "--store", store});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("avg_relations_per_native_word"), std::string::npos);
  EXPECT_NE(r.out.find("relation_histogram.13+"), std::string::npos);
}

TEST(CliTest, CompareStoreWithItself) {
  TempDir dir;
  std::string store = fixture_store(dir, Dialect::kEnglish);
  CliResult r = run_cli({"compare", "--store-a", store, "--store-b", store});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("red list (0)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("en\t0\t0\t"), std::string::npos);
  EXPECT_EQ(r.out.find("\t0\t0\t0\t"), std::string::npos);
}

TEST(CliTest, LanguagesCount) {
  CliResult r = run_cli({"languages"});
  ASSERT_EQ(r.code, 0);
  int count = std::stoi(r.out.substr(0, r.out.find(' ')));
  EXPECT_GE(count, 540);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), count + 1);
}

TEST(CliTest, LanguagesWithRegistryFile) {
  TempDir dir;
  testing::write_file(dir / "extra.tsv", "qqz\tQqzish\t\n");
  CliResult r = run_cli({"languages", "--registry", (dir / "extra.tsv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("qqz\tQqzish"), std::string::npos);
  testing::write_file(dir / "bad.tsv", "only-one-column\n");
  r = run_cli({"languages", "--registry", (dir / "bad.tsv").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad.tsv:1:"), std::string::npos) << r.err;
}

TEST(CliTest, ExportImportRoundTrip) {
  TempDir dir;
  std::string store = fixture_store(dir, Dialect::kEnglish);
  ASSERT_EQ(run_cli({"export", "--store", store, "--dir", (dir / "a").string()}).code, 0);
  std::string copy = (dir / "copy.db").string();
  ASSERT_EQ(run_cli({"import", "--store", copy, "--dir", (dir / "a").string()}).code, 0);
  ASSERT_EQ(run_cli({"export", "--store", copy, "--dir", (dir / "b").string()}).code, 0);
  EXPECT_TRUE(testing::diff_dirs(dir / "a", dir / "b").empty());
  EXPECT_EQ(run_cli({"import", "--store", copy, "--dir", (dir / "a").string()}).code, 1);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"parse", "--dialect", "de", "--dump", "x", "--store", "y"}).code, 2);
  EXPECT_EQ(run_cli({"lookup"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliTest, MissingStoreIsAnError) {
  CliResult r = run_cli({"stats", "--store", "/nonexistent/store.db"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
}  // namespace wiktmrd
