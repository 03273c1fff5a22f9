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

#ifndef WIKTMRD_LANG_REGISTRY_H_
#define WIKTMRD_LANG_REGISTRY_H_

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace wiktmrd {

enum class Dialect { kEnglish, kRussian };

std::string_view dialect_code(Dialect d);
std::optional<Dialect> parse_dialect(std::string_view code);

struct LanguageCode {
  std::string code;          // lowercase
  std::string english_name;
  std::string russian_name;  // may be empty

  bool operator==(const LanguageCode &) const = default;
};

// The nine thesaurus relation types. Ids in the store follow this order.
enum class RelationType {
  kSynonym,
  kAntonym,
  kHypernym,
  kHyponym,
  kHolonym,
  kMeronym,
  kTroponym,
  kCoordinateTerm,
  kSeeAlso,
};
inline constexpr int kRelationTypeCount = 9;
inline constexpr std::array<RelationType, kRelationTypeCount> kAllRelationTypes = {
    RelationType::kSynonym,  RelationType::kAntonym,  RelationType::kHypernym,
    RelationType::kHyponym,  RelationType::kHolonym,  RelationType::kMeronym,
    RelationType::kTroponym, RelationType::kCoordinateTerm, RelationType::kSeeAlso,
};

std::string_view relation_type_name(RelationType t);
std::optional<RelationType> parse_relation_type(std::string_view name);

enum class PartOfSpeech {
  kNoun,
  kVerb,
  kAdjective,
  kAdverb,
  kPronoun,
  kPreposition,
  kConjunction,
  kInterjection,
  kNumeral,
  kParticle,
  kProperNoun,
  kPhrase,
  kUnknown,
};
inline constexpr int kPartOfSpeechCount = 13;

std::string_view pos_name(PartOfSpeech p);
std::optional<PartOfSpeech> parse_pos(std::string_view name);

struct DialectConfig {
  Dialect dialect;
  LanguageCode native_language;
};

// Section names the Russian-dialect layout relies on.
struct RuSectionNames {
  std::string definitions = "Значение";
  std::string semantic_properties = "Семантические свойства";
  std::string morphology = "Морфологические и синтаксические свойства";
  std::string translation_block = "перев-блок";
};

// Language codes plus the per-dialect alias data used by the extractors.
// Immutable once built; share it as `std::shared_ptr<const Registry>`.
class Registry {
 public:
  // Built-in data: the embedded language table and default aliases.
  static std::shared_ptr<const Registry> builtin();

  // Built-in data extended or overridden by a registry TSV file.
  static std::shared_ptr<const Registry> load(const std::filesystem::path &path);

  // Same, from file contents already in memory; `origin` names the source
  // in error messages.
  static std::shared_ptr<const Registry> load_text(std::string_view text,
                                                   std::string_view origin);

  // Throwing lookups (UnknownLanguage).
  const LanguageCode &lookup_code(std::string_view code) const;
  const LanguageCode &lookup_english_name(std::string_view name) const;

  // Non-throwing variants; nullptr when absent.
  const LanguageCode *find_code(std::string_view code) const;
  const LanguageCode *find_english_name(std::string_view name) const;
  const LanguageCode *find_russian_name(std::string_view name) const;

  // Heading text (already trimmed) to relation type; nullopt means the
  // heading does not start thesaurus content.
  std::optional<RelationType> classify_relation_heading(std::string_view inner,
                                                        Dialect dialect) const;

  // Heading text to a part of speech, or nullopt if not a POS heading.
  std::optional<PartOfSpeech> classify_pos_heading(std::string_view inner,
                                                   Dialect dialect) const;

  // Russian morphology templates ("сущ ru m a 1a") to a POS via the first
  // word of the template name.
  std::optional<PartOfSpeech> classify_morphology_template(std::string_view name) const;

  bool is_form_of_template(std::string_view name) const;
  bool is_translation_template(std::string_view name) const;

  // English headings that are neither language, etymology, POS nor relation
  // sections ("Pronunciation", "Translations", ...).
  bool is_auxiliary_heading(std::string_view inner) const;
  bool is_translations_heading(std::string_view inner, Dialect dialect) const;

  const RuSectionNames &ru_sections() const { return ru_sections_; }

  DialectConfig dialect_config(Dialect dialect) const;

  const std::vector<LanguageCode> &languages() const { return languages_; }
  size_t size() const { return languages_.size(); }

 private:
  Registry() = default;
  void add_language(LanguageCode lang);
  void apply_text(std::string_view text, std::string_view origin);
  void add_defaults();

  std::vector<LanguageCode> languages_;  // insertion order
  std::map<std::string, size_t, std::less<>> by_code_;
  std::map<std::string, size_t, std::less<>> by_english_;
  std::map<std::string, size_t, std::less<>> by_russian_;

  // Keys are case-folded aliases.
  std::map<std::string, RelationType, std::less<>> relation_alias_[2];
  std::map<std::string, PartOfSpeech, std::less<>> pos_alias_[2];
  std::map<std::string, PartOfSpeech, std::less<>> morphology_alias_;
  std::set<std::string, std::less<>> form_of_;
  std::set<std::string, std::less<>> translation_templates_;
  std::set<std::string, std::less<>> auxiliary_headings_;
  std::set<std::string, std::less<>> translations_headings_[2];
  RuSectionNames ru_sections_;
};

}  // namespace wiktmrd

#endif  // WIKTMRD_LANG_REGISTRY_H_
