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

#include <fstream>
#include <sstream>

#include "wiktmrd/errors.h"
#include "wiktmrd/text_util.h"

namespace wiktmrd {

// Generated from core/data/languages.tsv at build time.
extern const char kBuiltinLanguagesTsv[];

namespace {

struct RelationAlias {
  Dialect dialect;
  RelationType type;
  const char *alias;
};

const RelationAlias kRelationAliases[] = {
    {Dialect::kEnglish, RelationType::kSynonym, "Synonyms"},
    {Dialect::kEnglish, RelationType::kSynonym, "Synonym"},
    {Dialect::kEnglish, RelationType::kAntonym, "Antonyms"},
    {Dialect::kEnglish, RelationType::kAntonym, "Antonym"},
    {Dialect::kEnglish, RelationType::kHypernym, "Hypernyms"},
    {Dialect::kEnglish, RelationType::kHypernym, "Hypernym"},
    {Dialect::kEnglish, RelationType::kHyponym, "Hyponyms"},
    {Dialect::kEnglish, RelationType::kHyponym, "Hyponym"},
    {Dialect::kEnglish, RelationType::kHolonym, "Holonyms"},
    {Dialect::kEnglish, RelationType::kHolonym, "Holonym"},
    {Dialect::kEnglish, RelationType::kMeronym, "Meronyms"},
    {Dialect::kEnglish, RelationType::kMeronym, "Meronym"},
    {Dialect::kEnglish, RelationType::kTroponym, "Troponyms"},
    {Dialect::kEnglish, RelationType::kTroponym, "Troponym"},
    {Dialect::kEnglish, RelationType::kCoordinateTerm, "Coordinate terms"},
    {Dialect::kEnglish, RelationType::kCoordinateTerm, "Coordinate term"},
    {Dialect::kEnglish, RelationType::kSeeAlso, "See also"},
    {Dialect::kRussian, RelationType::kSynonym, "Синонимы"},
    {Dialect::kRussian, RelationType::kSynonym, "Синоним"},
    {Dialect::kRussian, RelationType::kAntonym, "Антонимы"},
    {Dialect::kRussian, RelationType::kAntonym, "Антоним"},
    {Dialect::kRussian, RelationType::kHypernym, "Гиперонимы"},
    {Dialect::kRussian, RelationType::kHypernym, "Гипероним"},
    {Dialect::kRussian, RelationType::kHyponym, "Гипонимы"},
    {Dialect::kRussian, RelationType::kHyponym, "Гипоним"},
    {Dialect::kRussian, RelationType::kHolonym, "Холонимы"},
    {Dialect::kRussian, RelationType::kHolonym, "Холоним"},
    {Dialect::kRussian, RelationType::kMeronym, "Меронимы"},
    {Dialect::kRussian, RelationType::kMeronym, "Мероним"},
    {Dialect::kRussian, RelationType::kTroponym, "Тропонимы"},
    {Dialect::kRussian, RelationType::kTroponym, "Тропоним"},
    {Dialect::kRussian, RelationType::kCoordinateTerm, "Согипонимы"},
    {Dialect::kRussian, RelationType::kCoordinateTerm, "Согипоним"},
    {Dialect::kRussian, RelationType::kSeeAlso, "См. также"},
};

struct PosAlias {
  Dialect dialect;
  PartOfSpeech pos;
  const char *alias;
};

const PosAlias kPosAliases[] = {
    {Dialect::kEnglish, PartOfSpeech::kNoun, "Noun"},
    {Dialect::kEnglish, PartOfSpeech::kVerb, "Verb"},
    {Dialect::kEnglish, PartOfSpeech::kAdjective, "Adjective"},
    {Dialect::kEnglish, PartOfSpeech::kAdverb, "Adverb"},
    {Dialect::kEnglish, PartOfSpeech::kPronoun, "Pronoun"},
    {Dialect::kEnglish, PartOfSpeech::kPreposition, "Preposition"},
    {Dialect::kEnglish, PartOfSpeech::kConjunction, "Conjunction"},
    {Dialect::kEnglish, PartOfSpeech::kInterjection, "Interjection"},
    {Dialect::kEnglish, PartOfSpeech::kNumeral, "Numeral"},
    {Dialect::kEnglish, PartOfSpeech::kNumeral, "Number"},
    {Dialect::kEnglish, PartOfSpeech::kNumeral, "Cardinal number"},
    {Dialect::kEnglish, PartOfSpeech::kNumeral, "Ordinal number"},
    {Dialect::kEnglish, PartOfSpeech::kParticle, "Particle"},
    {Dialect::kEnglish, PartOfSpeech::kProperNoun, "Proper noun"},
    {Dialect::kEnglish, PartOfSpeech::kPhrase, "Phrase"},
    {Dialect::kEnglish, PartOfSpeech::kPhrase, "Idiom"},
    {Dialect::kEnglish, PartOfSpeech::kPhrase, "Proverb"},
};

const std::pair<const char *, PartOfSpeech> kMorphologyAliases[] = {
    {"сущ", PartOfSpeech::kNoun},         {"гл", PartOfSpeech::kVerb},
    {"прил", PartOfSpeech::kAdjective},   {"adv", PartOfSpeech::kAdverb},
    {"нареч", PartOfSpeech::kAdverb},     {"мест", PartOfSpeech::kPronoun},
    {"prep", PartOfSpeech::kPreposition}, {"предл", PartOfSpeech::kPreposition},
    {"conj", PartOfSpeech::kConjunction}, {"союз", PartOfSpeech::kConjunction},
    {"interj", PartOfSpeech::kInterjection}, {"межд", PartOfSpeech::kInterjection},
    {"числ", PartOfSpeech::kNumeral},     {"part", PartOfSpeech::kParticle},
    {"частица", PartOfSpeech::kParticle}, {"phrase", PartOfSpeech::kPhrase},
    {"фраз", PartOfSpeech::kPhrase},
};

const char *const kFormOfTemplates[] = {
    "plural of",      "past of",    "present participle of", "third-person singular of",
    "comparative of", "superlative of", "form of",
};

const char *const kTranslationTemplates[] = {"t", "t+", "t-", "tø"};

const char *const kAuxiliaryHeadings[] = {
    "Pronunciation", "Alternative forms", "Alternative spellings", "Usage notes",
    "Derived terms", "Related terms", "Translations", "Descendants", "References",
    "External links", "Anagrams", "Quotations", "Conjugation", "Declension",
    "Inflection", "Trivia", "Statistics", "Hyphenation", "Homophones", "Notes",
    "Gallery", "Compounds", "Further reading", "Sources", "Paronyms", "Mutation",
};

const char *const kRelationNames[] = {
    "synonym", "antonym", "hypernym", "hyponym", "holonym",
    "meronym", "troponym", "coordinate_term", "see_also",
};

const char *const kPosNames[] = {
    "noun",         "verb",    "adjective", "adverb",      "pronoun", "preposition", "conjunction",
    "interjection", "numeral", "particle",  "proper_noun", "phrase",  "unknown",
};

int dialect_index(Dialect d) { return d == Dialect::kEnglish ? 0 : 1; }

bool valid_code(std::string_view code) {
  if (code.size() < 2 || code.size() > 16) return false;
  for (char c : code) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok) return false;
  }
  return true;
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

std::string_view dialect_code(Dialect d) { return d == Dialect::kEnglish ? "en" : "ru"; }

std::optional<Dialect> parse_dialect(std::string_view code) {
  if (code == "en") return Dialect::kEnglish;
  if (code == "ru") return Dialect::kRussian;
  return std::nullopt;
}

std::string_view relation_type_name(RelationType t) { return kRelationNames[static_cast<int>(t)]; }

std::optional<RelationType> parse_relation_type(std::string_view name) {
  for (int i = 0; i < kRelationTypeCount; ++i) {
    if (name == kRelationNames[i]) return static_cast<RelationType>(i);
  }
  return std::nullopt;
}

std::string_view pos_name(PartOfSpeech p) { return kPosNames[static_cast<int>(p)]; }

std::optional<PartOfSpeech> parse_pos(std::string_view name) {
  for (int i = 0; i < kPartOfSpeechCount; ++i) {
    if (name == kPosNames[i]) return static_cast<PartOfSpeech>(i);
  }
  return std::nullopt;
}

std::shared_ptr<const Registry> Registry::builtin() {
  static const std::shared_ptr<const Registry> instance = [] {
    std::shared_ptr<Registry> r(new Registry());
    r->add_defaults();
    r->apply_text(kBuiltinLanguagesTsv, "<builtin>");
    return std::shared_ptr<const Registry>(std::move(r));
  }();
  return instance;
}

std::shared_ptr<const Registry> Registry::load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedRegistryFile(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str(), path.string());
}

std::shared_ptr<const Registry> Registry::load_text(std::string_view text,
                                                    std::string_view origin) {
  std::shared_ptr<Registry> r(new Registry(*builtin()));
  r->apply_text(text, origin);
  return r;
}

void Registry::add_defaults() {
  for (const auto &a : kRelationAliases) {
    relation_alias_[dialect_index(a.dialect)][fold_case(a.alias)] = a.type;
  }
  for (const auto &a : kPosAliases) {
    pos_alias_[dialect_index(a.dialect)][fold_case(a.alias)] = a.pos;
  }
  for (const auto &[alias, pos] : kMorphologyAliases) morphology_alias_[fold_case(alias)] = pos;
  for (const char *name : kFormOfTemplates) form_of_.insert(name);
  for (const char *name : kTranslationTemplates) translation_templates_.insert(name);
  for (const char *name : kAuxiliaryHeadings) auxiliary_headings_.insert(fold_case(name));
  translations_headings_[0].insert(fold_case("Translations"));
  translations_headings_[1].insert(fold_case("Перевод"));
}

void Registry::add_language(LanguageCode lang) {
  if (auto it = by_code_.find(lang.code); it != by_code_.end()) {
    LanguageCode &old = languages_[it->second];
    if (auto n = by_english_.find(fold_case(old.english_name));
        n != by_english_.end() && n->second == it->second) {
      by_english_.erase(n);
    }
    if (auto n = by_russian_.find(fold_case(old.russian_name));
        n != by_russian_.end() && n->second == it->second) {
      by_russian_.erase(n);
    }
    old = std::move(lang);
    by_english_[fold_case(old.english_name)] = it->second;
    if (!old.russian_name.empty()) by_russian_[fold_case(old.russian_name)] = it->second;
    return;
  }
  size_t index = languages_.size();
  by_code_[lang.code] = index;
  by_english_[fold_case(lang.english_name)] = index;
  if (!lang.russian_name.empty()) by_russian_[fold_case(lang.russian_name)] = index;
  languages_.push_back(std::move(lang));
}

void Registry::apply_text(std::string_view text, std::string_view origin) {
  const std::string where(origin);
  int line_no = 0;
  for (const Line &line : split_lines(text)) {
    ++line_no;
    std::string_view raw = line.text;
    if (trim(raw).empty() || raw.front() == '#') continue;
    std::vector<std::string_view> cols = split(raw, '\t');
    for (auto &c : cols) c = trim(c);

    if (cols[0].starts_with('@')) {
      std::string_view kind = cols[0].substr(1);
      auto need = [&](size_t n) {
        if (cols.size() != n) {
          throw MalformedRegistryFile(where, line_no,
                                      "@" + std::string(kind) + " expects " +
                                          std::to_string(n - 1) + " fields");
        }
      };
      auto dialect_at = [&](size_t i) {
        auto d = parse_dialect(cols[i]);
        if (!d) throw MalformedRegistryFile(where, line_no, "unknown dialect");
        return *d;
      };
      if (kind == "relation") {
        need(4);
        auto t = parse_relation_type(cols[2]);
        if (!t) throw MalformedRegistryFile(where, line_no, "unknown relation type");
        relation_alias_[dialect_index(dialect_at(1))][fold_case(cols[3])] = *t;
      } else if (kind == "pos") {
        need(4);
        auto p = parse_pos(cols[2]);
        if (!p) throw MalformedRegistryFile(where, line_no, "unknown part of speech");
        pos_alias_[dialect_index(dialect_at(1))][fold_case(cols[3])] = *p;
      } else if (kind == "morphology") {
        need(3);
        auto p = parse_pos(cols[2]);
        if (!p) throw MalformedRegistryFile(where, line_no, "unknown part of speech");
        morphology_alias_[fold_case(cols[1])] = *p;
      } else if (kind == "form_of") {
        need(2);
        form_of_.insert(std::string(cols[1]));
      } else if (kind == "translation_template") {
        need(2);
        translation_templates_.insert(std::string(cols[1]));
      } else if (kind == "auxiliary") {
        need(2);
        auxiliary_headings_.insert(fold_case(cols[1]));
      } else if (kind == "ru_section") {
        need(3);
        std::string value(cols[2]);
        if (cols[1] == "definitions") {
          ru_sections_.definitions = value;
        } else if (cols[1] == "semantic_properties") {
          ru_sections_.semantic_properties = value;
        } else if (cols[1] == "morphology") {
          ru_sections_.morphology = value;
        } else if (cols[1] == "translation_block") {
          ru_sections_.translation_block = value;
        } else {
          throw MalformedRegistryFile(where, line_no, "unknown ru_section key");
        }
      } else {
        throw MalformedRegistryFile(where, line_no, "unknown directive @" + std::string(kind));
      }
      continue;
    }

    if (cols.size() < 2 || cols.size() > 3) {
      throw MalformedRegistryFile(where, line_no, "expected 2 or 3 tab-separated columns, got " +
                                                      std::to_string(cols.size()));
    }
    std::string code = lower_ascii(cols[0]);
    if (!valid_code(code)) throw MalformedRegistryFile(where, line_no, "invalid language code");
    if (cols[1].empty()) throw MalformedRegistryFile(where, line_no, "empty English name");
    add_language({code, std::string(cols[1]), cols.size() == 3 ? std::string(cols[2]) : ""});
  }
}

const LanguageCode *Registry::find_code(std::string_view code) const {
  auto it = by_code_.find(lower_ascii(trim(code)));
  return it == by_code_.end() ? nullptr : &languages_[it->second];
}

const LanguageCode *Registry::find_english_name(std::string_view name) const {
  auto it = by_english_.find(fold_case(trim(name)));
  return it == by_english_.end() ? nullptr : &languages_[it->second];
}

const LanguageCode *Registry::find_russian_name(std::string_view name) const {
  auto it = by_russian_.find(fold_case(trim(name)));
  return it == by_russian_.end() ? nullptr : &languages_[it->second];
}

const LanguageCode &Registry::lookup_code(std::string_view code) const {
  if (const LanguageCode *lang = find_code(code)) return *lang;
  throw UnknownLanguage(std::string(code));
}

const LanguageCode &Registry::lookup_english_name(std::string_view name) const {
  if (const LanguageCode *lang = find_english_name(name)) return *lang;
  throw UnknownLanguage(std::string(name));
}

std::optional<RelationType> Registry::classify_relation_heading(std::string_view inner,
                                                                Dialect dialect) const {
  const auto &aliases = relation_alias_[dialect_index(dialect)];
  auto it = aliases.find(fold_case(trim(inner)));
  if (it == aliases.end()) return std::nullopt;
  return it->second;
}

std::optional<PartOfSpeech> Registry::classify_pos_heading(std::string_view inner,
                                                           Dialect dialect) const {
  const auto &aliases = pos_alias_[dialect_index(dialect)];
  auto it = aliases.find(fold_case(trim(inner)));
  if (it == aliases.end()) return std::nullopt;
  return it->second;
}

std::optional<PartOfSpeech> Registry::classify_morphology_template(std::string_view name) const {
  name = trim(name);
  std::string_view head = name.substr(0, name.find(' '));
  auto it = morphology_alias_.find(fold_case(head));
  if (it == morphology_alias_.end()) return std::nullopt;
  return it->second;
}

bool Registry::is_form_of_template(std::string_view name) const {
  return form_of_.contains(trim(name));
}

bool Registry::is_translation_template(std::string_view name) const {
  return translation_templates_.contains(trim(name));
}

bool Registry::is_auxiliary_heading(std::string_view inner) const {
  return auxiliary_headings_.contains(fold_case(trim(inner)));
}

bool Registry::is_translations_heading(std::string_view inner, Dialect dialect) const {
  return translations_headings_[dialect_index(dialect)].contains(fold_case(trim(inner)));
}

DialectConfig Registry::dialect_config(Dialect dialect) const {
  return {dialect, lookup_code(dialect_code(dialect))};
}

}  // namespace wiktmrd
