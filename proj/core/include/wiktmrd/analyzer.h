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

#ifndef WIKTMRD_ANALYZER_H_
#define WIKTMRD_ANALYZER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wiktmrd/entry_parser.h"
#include "wiktmrd/lang_registry.h"
#include "wiktmrd/relation_extractor.h"
#include "wiktmrd/translation_extractor.h"

namespace wiktmrd {

// Everything extracted for one (language, etymology, POS) unit. Owns its
// data, unlike PosSection, so it can outlive the page text.
struct ParsedLangPos {
  LanguageCode language;
  int etymology_ordinal = 0;
  PartOfSpeech pos = PartOfSpeech::kUnknown;
  std::vector<Meaning> meanings;
  std::vector<RelationRecord> relations;
  std::vector<TranslationBox> translations;
  std::optional<SoftRedirect> soft_redirect;
};

struct ParsedPage {
  std::string title;
  uint64_t record_id = 0;
  bool is_redirect = false;
  std::string redirect_target;
  std::vector<ParsedLangPos> lang_pos;
  std::vector<SkippedSection> skipped_sections;
  std::vector<SkippedLine> skipped_lines;

  // True when the page has entries and every one of them is a word form.
  bool is_soft_redirect() const;
};

// Runs the whole extraction chain over one page. Redirect pages come back
// with no lang_pos. Sections that share (language, etymology, POS) are
// merged, renumbering the later meanings. Throws Error on an empty title.
ParsedPage analyze_page(const Page &page, Dialect dialect, const Registry &registry);

}  // namespace wiktmrd

#endif  // WIKTMRD_ANALYZER_H_
