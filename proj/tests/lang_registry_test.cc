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

#include "wiktmrd/lang_registry.h"

#include <gtest/gtest.h>

#include "wiktmrd/errors.h"

namespace wiktmrd {
namespace {

const Registry &reg() { return *Registry::builtin(); }

TEST(Registry, LookupCode) {
  EXPECT_EQ(reg().lookup_code("fi").english_name, "Finnish");
  EXPECT_EQ(reg().lookup_code("sq").english_name, "Albanian");
  EXPECT_THROW(reg().lookup_code("zz-bogus"), UnknownLanguage);
  EXPECT_EQ(reg().find_code("zz-bogus"), nullptr);
}

TEST(Registry, LookupEnglishName) {
  EXPECT_EQ(reg().lookup_english_name("Finnish").code, "fi");
  EXPECT_EQ(reg().lookup_english_name("Korean").code, "ko");
  EXPECT_EQ(reg().lookup_english_name("finnish").code, "fi");
  EXPECT_THROW(reg().lookup_english_name("Klingonish"), UnknownLanguage);
}

TEST(Registry, RussianNames) {
  const LanguageCode *fi = reg().find_russian_name("финский");
  ASSERT_NE(fi, nullptr);
  EXPECT_EQ(fi->code, "fi");
}

TEST(Registry, RelationHeadings) {
  EXPECT_EQ(reg().classify_relation_heading("Synonyms", Dialect::kEnglish),
            RelationType::kSynonym);
  EXPECT_EQ(reg().classify_relation_heading("Coordinate terms", Dialect::kEnglish),
            RelationType::kCoordinateTerm);
  EXPECT_EQ(reg().classify_relation_heading("Pronunciation", Dialect::kEnglish), std::nullopt);
  EXPECT_EQ(reg().classify_relation_heading("Согипонимы", Dialect::kRussian),
            RelationType::kCoordinateTerm);
  EXPECT_EQ(reg().classify_relation_heading("Синонимы", Dialect::kEnglish), std::nullopt);
}

TEST(Registry, PosAndTemplates) {
  EXPECT_EQ(reg().classify_pos_heading("Proper noun", Dialect::kEnglish),
            PartOfSpeech::kProperNoun);
  EXPECT_EQ(reg().classify_pos_heading("Translations", Dialect::kEnglish), std::nullopt);
  EXPECT_EQ(reg().classify_morphology_template("сущ ru m a 1a"), PartOfSpeech::kNoun);
  EXPECT_EQ(reg().classify_morphology_template("transcription"), std::nullopt);
  EXPECT_TRUE(reg().is_form_of_template("plural of"));
  EXPECT_TRUE(reg().is_translation_template("t+"));
  EXPECT_TRUE(reg().is_translations_heading("Translations", Dialect::kEnglish));
  EXPECT_TRUE(reg().is_translations_heading("Перевод", Dialect::kRussian));
}

TEST(Registry, NameTablesRoundTrip) {
  for (RelationType t : kAllRelationTypes) {
    EXPECT_EQ(parse_relation_type(relation_type_name(t)), t);
  }
  for (int i = 0; i < kPartOfSpeechCount; ++i) {
    auto p = static_cast<PartOfSpeech>(i);
    EXPECT_EQ(parse_pos(pos_name(p)), p);
  }
  EXPECT_EQ(parse_dialect("ru"), Dialect::kRussian);
  EXPECT_EQ(parse_dialect("de"), std::nullopt);
}

TEST(Registry, BuiltinCoversAtLeast540Codes) {
  EXPECT_GE(reg().size(), 540u);
  for (const LanguageCode &lang : reg().languages()) {
    EXPECT_EQ(&reg().lookup_code(lang.code), &lang);
  }
}

TEST(Registry, FileExtendsBuiltin) {
  auto r = Registry::load_text("fi\tFinnish\tФинский\nqqa\tQqish\n", "test");
  EXPECT_EQ(r->lookup_code("fi").russian_name, "Финский");
  EXPECT_EQ(r->lookup_english_name("Qqish").code, "qqa");
  EXPECT_EQ(r->size(), reg().size() + 1);
}

TEST(Registry, EmptyFileEqualsBuiltin) {
  auto r = Registry::load_text("", "test");
  EXPECT_EQ(r->languages(), reg().languages());
}

TEST(Registry, Directives) {
  auto r = Registry::load_text(
      "@relation\ten\tsynonym\tSynonymes\n@pos\tru\tnoun\tСуществительное\n", "test");
  EXPECT_EQ(r->classify_relation_heading("synonymes", Dialect::kEnglish),
            RelationType::kSynonym);
  EXPECT_EQ(r->classify_pos_heading("Существительное", Dialect::kRussian),
            PartOfSpeech::kNoun);
}

TEST(Registry, MalformedFiles) {
  EXPECT_THROW(Registry::load_text("fi\n", "test"), MalformedRegistryFile);
  EXPECT_THROW(Registry::load_text("F!\tBad\n", "test"), MalformedRegistryFile);
  EXPECT_THROW(Registry::load_text("@relation\ten\tnope\tX\n", "test"), MalformedRegistryFile);
  try {
    Registry::load_text("# comment\nfi\tFinnish\n@pos\txx\tnoun\tN\n", "f.tsv");
    FAIL();
  } catch (const MalformedRegistryFile &e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(Registry::load("/nonexistent/registry.tsv"), MalformedRegistryFile);
}

}  // namespace
}  // namespace wiktmrd
