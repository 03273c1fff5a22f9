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

#include "wiktmrd/translation_extractor.h"

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace wiktmrd {
namespace {

const Registry &reg() { return *Registry::builtin(); }

PosSection section(std::string_view body, const char *lang = "en") {
  return PosSection{reg().lookup_code(lang), 0, PartOfSpeech::kNoun, body, {0, body.size()}};
}

TranslationResult en(std::string_view lines) {
  static thread_local std::string body;
  body = "====Translations====\n{{trans-top|gloss}}\n" + std::string(lines) +
         "\n{{trans-bottom}}\n";
  return extract_translations_en(section(body), reg());
}

TEST(TranslationsEn, FinnishTemplate) {
  auto r = en("* Finnish: {{t+|fi|pensas}}");
  ASSERT_EQ(r.boxes.size(), 1u);
  ASSERT_EQ(r.boxes[0].entries.size(), 1u);
  const TranslationEntry &e = r.boxes[0].entries[0];
  EXPECT_EQ(e.language.code, "fi");
  EXPECT_EQ(e.target_word, "pensas");
  EXPECT_EQ(e.target_wikitext, "[[pensas]]");
  EXPECT_EQ(e.transliteration, "");
  EXPECT_EQ(r.boxes[0].gloss, "gloss");
  EXPECT_TRUE(r.skipped.empty());
}

TEST(TranslationsEn, KoreanBareLinkWithTransliteration) {
  auto r = en("* Korean: [[수풀]] (supul)");
  ASSERT_EQ(r.boxes[0].entries.size(), 1u);
  const TranslationEntry &e = r.boxes[0].entries[0];
  EXPECT_EQ(e.language.code, "ko");
  EXPECT_EQ(e.target_word, "수풀");
  EXPECT_EQ(e.transliteration, "supul");
}

TEST(TranslationsEn, UnknownLanguageName) {
  auto r = en("* Qqzish: [[x]]");
  EXPECT_TRUE(r.boxes[0].entries.empty());
  ASSERT_EQ(r.skipped.size(), 1u);
  EXPECT_EQ(r.skipped[0].reason, "unknown language name");
  EXPECT_EQ(r.skipped[0].text, "* Qqzish: [[x]]");
}

TEST(TranslationsEn, CodeNameConflictKeepsTemplateCode) {
  auto r = en("* German: {{t|es|Druckfehler|m}}");
  ASSERT_EQ(r.boxes[0].entries.size(), 1u);
  EXPECT_EQ(r.boxes[0].entries[0].language.code, "es");
  ASSERT_EQ(r.skipped.size(), 1u);
  EXPECT_EQ(r.skipped[0].reason, kCodeNameConflict);
}

TEST(TranslationsEn, TemplateTransliterationAndSeveralEntries) {
  auto r = en("* Russian: {{t+|ru|собака|f|tr=sobáka}}, {{t+|ru|пёс|m|tr=pjos}}");
  ASSERT_EQ(r.boxes[0].entries.size(), 2u);
  EXPECT_EQ(r.boxes[0].entries[0].transliteration, "sobáka");
  EXPECT_EQ(r.boxes[0].entries[1].target_word, "пёс");
}

TEST(TranslationsEn, SubLinesInheritTheParentLanguage) {
  auto r = en("* Serbo-Croatian:\n*: Cyrillic: [[пас]]\n*: Roman: {{t|sh|pas}}");
  ASSERT_EQ(r.boxes[0].entries.size(), 2u);
  EXPECT_EQ(r.boxes[0].entries[0].language.code, "sh");
  EXPECT_EQ(r.boxes[0].entries[1].target_word, "pas");
  EXPECT_TRUE(r.skipped.empty());
}

TEST(TranslationsEn, BoxesAndEmptyBoxes) {
  std::string body =
      "====Translations====\n{{trans-top|a}}\n* Finnish: [[x]]\n{{trans-mid}}\n{{trans-bottom}}\n"
      "{{checktrans-top}}\n{{trans-bottom}}\n* German: [[y]]\n";
  auto r = extract_translations_en(section(body), reg());
  ASSERT_EQ(r.boxes.size(), 3u);
  EXPECT_EQ(r.boxes[0].gloss, "a");
  EXPECT_EQ(r.boxes[1].entries.size(), 0u);
  EXPECT_EQ(r.boxes[2].gloss, "");  // implicit box
  EXPECT_EQ(r.boxes[2].entries[0].language.code, "de");

  std::string empty = "====Translations====\n\n";
  r = extract_translations_en(section(empty), reg());
  ASSERT_EQ(r.boxes.size(), 1u);
  EXPECT_TRUE(r.boxes[0].entries.empty());
  EXPECT_EQ(r.boxes[0].source_span, (Span{0, 20}));
}

TEST(TranslationsEn, OnlyUnderTranslationsHeadings) {
  std::string body = "====Synonyms====\n* Finnish: [[x]]\n";
  EXPECT_TRUE(extract_translations_en(section(body), reg()).boxes.empty());
}

TEST(TranslationsRu, AngelBlock) {
  std::string body = "{{перев-блок||fi=[[enkeli]]|ko=[[천사]]}}";
  auto r = extract_translations_ru(section(body, "ru"), reg());
  ASSERT_EQ(r.boxes.size(), 1u);
  ASSERT_EQ(r.boxes[0].entries.size(), 2u);
  EXPECT_EQ(r.boxes[0].entries[0].language.code, "fi");
  EXPECT_EQ(r.boxes[0].entries[0].target_word, "enkeli");
  EXPECT_EQ(r.boxes[0].entries[1].language.code, "ko");
  EXPECT_EQ(r.boxes[0].entries[1].target_word, "천사");
  EXPECT_EQ(r.boxes[0].gloss, "");
}

TEST(TranslationsRu, EmptyBlock) {
  auto r = extract_translations_ru(section("{{перев-блок}}", "ru"), reg());
  ASSERT_EQ(r.boxes.size(), 1u);
  EXPECT_TRUE(r.boxes[0].entries.empty());
}

TEST(TranslationsRu, CodesAreTakenAtFaceValue) {
  auto r = extract_translations_ru(section("{{перев-блок|x|et=[[x]]|zz=[[y]]|ru=}}", "ru"), reg());
  ASSERT_EQ(r.boxes[0].entries.size(), 1u);
  EXPECT_EQ(r.boxes[0].entries[0].language.code, "et");
  ASSERT_EQ(r.skipped.size(), 1u);
  EXPECT_EQ(r.skipped[0].reason, "unknown language code");
}

TEST(Translations, FuzzNeverThrows) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::string body = "====Translations====\n" + synth::fuzz_text(rng, 2000);
    EXPECT_NO_THROW(extract_translations(section(body), Dialect::kEnglish, reg()));
    EXPECT_NO_THROW(extract_translations(section(body, "ru"), Dialect::kRussian, reg()));
  }
}

}  // namespace
}  // namespace wiktmrd
