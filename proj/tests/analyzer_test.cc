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

#include "wiktmrd/analyzer.h"

#include <gtest/gtest.h>

#include "test_support.h"
#include "wiktmrd/errors.h"

namespace wiktmrd {
namespace {

const Registry &reg() { return *Registry::builtin(); }

ParsedPage analyze(Dialect d, const std::string &title) {
  Page page = testing::fixture_page(d, title);
  return analyze_page(page, d, reg());
}

TEST(Analyzer, DogsIsASoftRedirect) {
  ParsedPage p = analyze(Dialect::kEnglish, "dogs");
  ASSERT_EQ(p.lang_pos.size(), 2u);
  ASSERT_TRUE(p.lang_pos[0].soft_redirect.has_value());
  EXPECT_EQ(*p.lang_pos[0].soft_redirect, (SoftRedirect{"dogs", "dog", "plural of"}));
  EXPECT_TRUE(p.is_soft_redirect());
  EXPECT_FALSE(analyze(Dialect::kEnglish, "dog").is_soft_redirect());
}

TEST(Analyzer, BushTranslations) {
  ParsedPage p = analyze(Dialect::kEnglish, "bush");
  ASSERT_EQ(p.lang_pos.size(), 2u);
  const auto &boxes = p.lang_pos[0].translations;
  ASSERT_EQ(boxes.size(), 2u);
  ASSERT_EQ(boxes[0].entries.size(), 3u);
  EXPECT_EQ(boxes[0].entries[0].language.code, "fi");
  EXPECT_EQ(boxes[0].entries[0].target_word, "pensas");
  EXPECT_EQ(boxes[0].entries[1].language.code, "ko");
  EXPECT_EQ(boxes[0].entries[1].target_word, "수풀");
  EXPECT_EQ(boxes[0].entries[1].transliteration, "supul");
  EXPECT_EQ(p.lang_pos[1].language.code, "sq");
}

TEST(Analyzer, AngelTranslations) {
  ParsedPage p = analyze(Dialect::kRussian, "ангел");
  ASSERT_EQ(p.lang_pos.size(), 1u);
  const auto &entries = p.lang_pos[0].translations.at(0).entries;
  std::vector<std::pair<std::string, std::string>> got;
  for (const auto &e : entries) got.emplace_back(e.language.code, e.target_word);
  EXPECT_NE(std::find(got.begin(), got.end(), std::pair<std::string, std::string>{"fi", "enkeli"}),
            got.end());
  EXPECT_NE(std::find(got.begin(), got.end(), std::pair<std::string, std::string>{"ko", "천사"}),
            got.end());
  ASSERT_EQ(p.skipped_lines.size(), 1u);  // zz=
}

TEST(Analyzer, SkippedSectionsAndLinesAreCollected) {
  ParsedPage p = analyze(Dialect::kEnglish, "misprint");
  ASSERT_EQ(p.skipped_sections.size(), 1u);
  EXPECT_EQ(p.skipped_sections[0].heading, "Englsh");
  EXPECT_EQ(p.skipped_lines.size(), 3u);
  ASSERT_EQ(p.lang_pos.size(), 1u);
}

TEST(Analyzer, RedirectPagesCarryNoEntries) {
  Page page;
  page.title = "doggie";
  page.raw_text = "#REDIRECT [[dog]]";
  page.is_redirect = true;
  page.redirect_target = "dog";
  ParsedPage p = analyze_page(page, Dialect::kEnglish, reg());
  EXPECT_TRUE(p.is_redirect);
  EXPECT_EQ(p.redirect_target, "dog");
  EXPECT_TRUE(p.lang_pos.empty());
}

TEST(Analyzer, EmptyTitleIsAContractViolation) {
  Page page;
  page.raw_text = "==English==\n";
  EXPECT_THROW(analyze_page(page, Dialect::kEnglish, reg()), Error);
}

TEST(Analyzer, RepeatedPosSectionsMerge) {
  Page page;
  page.title = "x";
  page.raw_text =
      "==English==\n===Noun===\n# one\n====Synonyms====\n* [[a]]\n"
      "===Noun===\n# two\n# three\n====Synonyms====\n* {{sense|three}} [[b]]\n";
  ParsedPage p = analyze_page(page, Dialect::kEnglish, reg());
  ASSERT_EQ(p.lang_pos.size(), 1u);
  const ParsedLangPos &u = p.lang_pos[0];
  ASSERT_EQ(u.meanings.size(), 3u);
  EXPECT_EQ(u.meanings[2].ordinal, 3);
  EXPECT_EQ(u.meanings[2].definition_plain, "three");
  ASSERT_EQ(u.relations.size(), 2u);
  EXPECT_EQ(u.relations[0].meaning_ordinal, 1);
  EXPECT_EQ(u.relations[1].meaning_ordinal, 3);
}

TEST(Analyzer, EveryFixtureAnalyzes) {
  for (Dialect d : {Dialect::kEnglish, Dialect::kRussian}) {
    for (const auto &fp : testing::fixture_pages(d)) {
      Page page{fp.title, fp.text, false, {}, 0};
      EXPECT_NO_THROW(analyze_page(page, d, reg())) << fp.title;
    }
  }
}

}  // namespace
}  // namespace wiktmrd
