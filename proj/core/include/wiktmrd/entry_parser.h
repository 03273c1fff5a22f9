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

#ifndef WIKTMRD_ENTRY_PARSER_H_
#define WIKTMRD_ENTRY_PARSER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wiktmrd/lang_registry.h"
#include "wiktmrd/wikitext.h"

namespace wiktmrd {

struct Page {
  std::string title;
  std::string raw_text;
  bool is_redirect = false;
  std::string redirect_target;  // empty unless is_redirect
  uint64_t record_id = 0;
};

// Spans are offsets into Page::raw_text; `body` views the same bytes, so
// sections must not outlive the page they were split from.
struct LanguageSection {
  LanguageCode language;
  std::string_view body;
  Span span;
};

struct SkippedSection {
  std::string heading;
  std::string reason;
  Span span;  // the heading line
};

struct LanguageSplit {
  std::vector<LanguageSection> sections;
  std::vector<SkippedSection> skipped;
};

struct PosSection {
  LanguageCode language;
  int etymology_ordinal = 0;
  PartOfSpeech pos = PartOfSpeech::kUnknown;
  std::string_view body;
  Span span;
};

struct Meaning {
  int ordinal = 0;  // 1-based
  std::string definition_wikitext;
  std::string definition_plain;
};

// A word-form entry whose only definition points at its lemma.
struct SoftRedirect {
  std::string form_title;
  std::string lemma_title;
  std::string form_kind;  // form-of template name, e.g. "plural of"

  bool operator==(const SoftRedirect &) const = default;
};

// True when the title starts with a non-main namespace prefix such as
// "Wikisaurus:" or "Шаблон:".
bool has_namespace_prefix(std::string_view title);

LanguageSplit split_language_sections(const Page &page, Dialect dialect, const Registry &registry);

std::vector<PosSection> split_pos_sections(const LanguageSection &section, Dialect dialect,
                                           const Registry &registry);

std::vector<Meaning> extract_definitions(const PosSection &section, Dialect dialect,
                                         const Registry &registry);

std::optional<SoftRedirect> classify_soft_redirect(std::string_view page_title,
                                                   const PosSection &section,
                                                   const std::vector<Meaning> &meanings,
                                                   const Registry &registry);

// Headings inside the section body; spans are relative to `section.body`.
std::vector<Heading> section_headings(const PosSection &section);

// Text between heading `index` and the next heading of any level.
std::string_view heading_content(std::string_view text, const std::vector<Heading> &headings,
                                 size_t index);

}  // namespace wiktmrd

#endif  // WIKTMRD_ENTRY_PARSER_H_
