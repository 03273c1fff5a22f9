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

#ifndef WIKTMRD_TRANSLATION_EXTRACTOR_H_
#define WIKTMRD_TRANSLATION_EXTRACTOR_H_

#include <string>
#include <vector>

#include "wiktmrd/entry_parser.h"
#include "wiktmrd/lang_registry.h"

namespace wiktmrd {

struct TranslationEntry {
  LanguageCode language;
  std::string target_word;  // strip_markup(target_wikitext)
  std::string target_wikitext;
  std::string transliteration;

  bool operator==(const TranslationEntry &) const = default;
};

struct TranslationBox {
  std::string gloss;  // wikitext; may be empty
  Span source_span;   // relative to the PosSection body
  std::vector<TranslationEntry> entries;
};

// A line or parameter that yielded nothing usable, or that yielded an
// entry with a suspicious language.
struct SkippedLine {
  std::string text;
  std::string reason;
  size_t offset = 0;  // relative to the PosSection body
};

inline constexpr const char kCodeNameConflict[] = "code-name conflict";

struct TranslationResult {
  std::vector<TranslationBox> boxes;
  std::vector<SkippedLine> skipped;
};

TranslationResult extract_translations_en(const PosSection &section, const Registry &registry);
TranslationResult extract_translations_ru(const PosSection &section, const Registry &registry);

TranslationResult extract_translations(const PosSection &section, Dialect dialect,
                                       const Registry &registry);

}  // namespace wiktmrd

#endif  // WIKTMRD_TRANSLATION_EXTRACTOR_H_
