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

#include "synth.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.h"
#include "wiktmrd/analyzer.h"
#include "wiktmrd/dump_reader.h"
#include "wiktmrd/mrd_store.h"
#include "wiktmrd/pipeline.h"
#include "wiktmrd/text_util.h"

namespace wiktmrd {
namespace {

using testing::TempDir;

synth::SynthTotals count_parsed(const ParsedPage &page) {
  synth::SynthTotals t;
  for (const ParsedLangPos &lp : page.lang_pos) {
    ++t.lang_pos;
    t.meanings += static_cast<int64_t>(lp.meanings.size());
    t.relations += static_cast<int64_t>(lp.relations.size());
    t.boxes += static_cast<int64_t>(lp.translations.size());
    for (const TranslationBox &box : lp.translations) {
      t.entries += static_cast<int64_t>(box.entries.size());
    }
  }
  return t;
}

class SynthRoundTrip : public ::testing::TestWithParam<Dialect> {};

TEST_P(SynthRoundTrip, ParserFindsWhatWasRendered) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    synth::SynthEntry entry = synth::random_entry(rng, GetParam(), synth::word(rng, i));
    Page page;
    page.title = entry.title;
    page.raw_text = synth::render(entry, GetParam());
    ParsedPage parsed = analyze_page(page, GetParam(), *Registry::builtin());
    ASSERT_EQ(count_parsed(parsed), synth::totals(entry)) << page.raw_text;
    EXPECT_TRUE(parsed.skipped_sections.empty());
    EXPECT_TRUE(parsed.skipped_lines.empty());
  }
}

TEST_P(SynthRoundTrip, StoreSizesMatchTotals) {
  TempDir dir;
  std::mt19937_64 rng(99);
  testing::SyntheticCorpus corpus = testing::synthetic_corpus(rng, GetParam(), 400);
  ParseConfig config;
  config.dialect = GetParam();
  config.dump_path = dir / "dump.xml";
  config.store_path = (dir / "store.db").string();
  testing::write_dump_file(config.dump_path, corpus.pages);
  ParseReport report = run_parse(config);
  EXPECT_EQ(report.pages_parsed, 400u);
  auto sizes = MrdStore::open(config.store_path)->table_sizes();
  EXPECT_EQ(sizes["page"], 400);
  EXPECT_EQ(sizes["lang_pos"], corpus.totals.lang_pos);
  EXPECT_EQ(sizes["meaning"], corpus.totals.meanings);
  EXPECT_EQ(sizes["relation"], corpus.totals.relations);
  EXPECT_EQ(sizes["translation"], corpus.totals.boxes);
  EXPECT_EQ(sizes["translation_entry"], corpus.totals.entries);
}

INSTANTIATE_TEST_SUITE_P(Dialects, SynthRoundTrip,
                         ::testing::Values(Dialect::kEnglish, Dialect::kRussian),
                         [](const auto &info) { return std::string(dialect_code(info.param)); });

TEST(Synth, WordsAreUnique) {
  std::mt19937_64 rng(1);
  std::set<std::string> seen;
  for (uint64_t i = 0; i < 5000; ++i) EXPECT_TRUE(seen.insert(synth::word(rng, i)).second);
}

TEST(Synth, FuzzTextSurvivesTheDumpFormat) {
  TempDir dir;
  std::mt19937_64 rng(3);
  std::vector<synth::DumpPage> pages;
  for (int i = 0; i < 40; ++i) {
    std::string text = synth::fuzz_text(rng, 1 + static_cast<size_t>(i) * 2500);
    EXPECT_TRUE(is_valid_utf8(text));
    pages.push_back({"p" + std::to_string(i), text});
  }
  testing::write_dump_file(dir / "dump.xml", pages);
  DumpReader reader(dir / "dump.xml");
  for (const synth::DumpPage &expected : pages) {
    std::optional<Page> page = reader.next();
    ASSERT_TRUE(page.has_value());
    EXPECT_EQ(page->title, expected.title);
    EXPECT_EQ(page->raw_text, expected.text);
  }
  EXPECT_FALSE(reader.next().has_value());
}

TEST(Synth, XmlEscape) {
  EXPECT_EQ(synth::xml_escape("a<b>&\"c'"), "a&lt;b&gt;&amp;&quot;c'");
}

}  // namespace
}  // namespace wiktmrd
