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

#include <algorithm>
#include <optional>

#include "wiktmrd/relation_extractor.h"
#include "wiktmrd/text_util.h"

namespace wiktmrd {

namespace {

struct Candidate {
  Span span;  // relative to the line content
  const LanguageCode *language;
  std::string word;
  std::string transliteration;
};

// "(supul)" right after an entry, before the next separator.
std::string trailing_parenthesized(std::string_view rest) {
  rest = trim(rest);
  if (rest.empty() || rest.front() != '(') return {};
  size_t close = rest.find(')');
  if (close == std::string_view::npos) return {};
  std::string_view after = trim(rest.substr(close + 1));
  if (!after.empty() && after.front() != ',' && after.front() != ';') return {};
  return std::string(trim(rest.substr(1, close - 1)));
}

// First ':' outside templates and links.
size_t find_name_colon(std::string_view s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 2, "{{") == 0 || s.compare(i, 2, "[[") == 0) {
      ++depth;
      ++i;
    } else if ((s.compare(i, 2, "}}") == 0 || s.compare(i, 2, "]]") == 0) && depth > 0) {
      --depth;
      ++i;
    } else if (s[i] == ':' && depth == 0) {
      return i;
    }
  }
  return std::string_view::npos;
}

class EnExtractor {
 public:
  EnExtractor(const PosSection &section, const Registry &registry)
      : section_(section), registry_(registry) {}

  TranslationResult run() {
    std::vector<Heading> headings = section_headings(section_);
    for (size_t i = 0; i < headings.size(); ++i) {
      if (!registry_.is_translations_heading(strip_markup(headings[i].inner_text),
                                             Dialect::kEnglish)) {
        continue;
      }
      std::string_view content = heading_content(section_.body, headings, i);
      size_t base = static_cast<size_t>(content.data() - section_.body.data());
      process_block(content, base, headings[i].span);
    }
    return std::move(result_);
  }

 private:
  void process_block(std::string_view content, size_t base, Span heading_span) {
    open_ = false;
    parent_ = nullptr;
    bool any_box = false;
    for (const Line &line : split_lines(content)) {
      size_t offset = base + line.offset;
      std::string_view text = trim(line.text);
      Template t;
      if (parse_template(text, t)) {
        if (t.name == "trans-top" || t.name == "checktrans-top") {
          std::string gloss;
          if (const std::string *g = t.positional_at(0)) gloss.assign(trim(*g));
          open_box(std::move(gloss), {offset, offset + line.text.size()});
          any_box = true;
          continue;
        }
        if (t.name == "trans-bottom") {
          open_ = false;
          continue;
        }
        if (t.name == "trans-mid") continue;
      }
      if (line.text.empty() || line.text.front() != '*') continue;
      if (!open_) {
        open_box({}, {offset, offset + line.text.size()});
        any_box = true;
      }
      process_line(line.text, offset);
    }
    if (!any_box) open_box({}, heading_span);
  }

  void open_box(std::string gloss, Span span) {
    result_.boxes.push_back({std::move(gloss), span, {}});
    open_ = true;
    parent_ = nullptr;
  }

  void skip(std::string_view text, std::string reason, size_t offset) {
    result_.skipped.push_back({std::string(text), std::move(reason), offset});
  }

  void process_line(std::string_view raw, size_t offset) {
    size_t marker_end = raw.find_first_not_of("*:");
    std::string_view marker = raw.substr(0, std::min(marker_end, raw.size()));
    bool sub_line = marker.find(':') != std::string_view::npos;
    std::string_view rest = marker_end == std::string_view::npos ? std::string_view{}
                                                                 : raw.substr(marker_end);

    const LanguageCode *language = nullptr;
    std::string_view content = rest;
    size_t colon = find_name_colon(rest);
    if (colon != std::string_view::npos) {
      std::string name = strip_markup(rest.substr(0, colon));
      language = registry_.find_english_name(name);
      if (language != nullptr || sub_line) {
        content = rest.substr(colon + 1);
      }
    }
    if (sub_line) {
      if (language == nullptr) language = parent_;
    } else {
      parent_ = language;
    }
    if (language == nullptr) {
      skip(raw, colon == std::string_view::npos ? "no language name" : "unknown language name",
           offset);
      return;
    }
    add_entries(content, *language, raw, offset);
  }

  void add_entries(std::string_view content, const LanguageCode &line_language,
                   std::string_view raw, size_t offset) {
    std::vector<Candidate> found;
    std::vector<Template> templates = scan_templates(content);
    for (const Template &t : templates) {
      if (!registry_.is_translation_template(t.name)) continue;
      const std::string *code = t.positional_at(0);
      const std::string *word = t.positional_at(1);
      if (code == nullptr || word == nullptr || trim(*word).empty()) {
        skip(raw, "translation template without word", offset);
        continue;
      }
      const LanguageCode *lang = registry_.find_code(trim(*code));
      if (lang == nullptr) {
        skip(raw, "unknown language code", offset);
        continue;
      }
      if (lang->code != line_language.code) skip(raw, kCodeNameConflict, offset);
      std::string translit;
      if (const std::string *tr = t.param("tr")) translit.assign(trim(*tr));
      found.push_back({t.span, lang, std::string(trim(*word)), std::move(translit)});
    }
    if (found.empty()) {
      for (const WikiLink &link : scan_wikilinks(content)) {
        bool nested = std::any_of(templates.begin(), templates.end(), [&](const Template &t) {
          return link.span.begin >= t.span.begin && link.span.end <= t.span.end;
        });
        if (nested || has_namespace_prefix(link.target)) continue;
        found.push_back({link.span, &line_language, link.target, {}});
      }
    }
    TranslationBox &box = result_.boxes.back();
    for (size_t k = 0; k < found.size(); ++k) {
      Candidate &c = found[k];
      if (c.transliteration.empty()) {
        size_t next = k + 1 < found.size() ? found[k + 1].span.begin : content.size();
        c.transliteration = trailing_parenthesized(content.substr(c.span.end, next - c.span.end));
      }
      std::string wikitext = link_wikitext(c.word);
      std::string word = strip_markup(wikitext);
      if (word.empty()) continue;
      box.entries.push_back({*c.language, std::move(word), std::move(wikitext),
                             std::move(c.transliteration)});
    }
  }

  const PosSection &section_;
  const Registry &registry_;
  TranslationResult result_;
  bool open_ = false;
  const LanguageCode *parent_ = nullptr;
};

}  // namespace

TranslationResult extract_translations_en(const PosSection &section, const Registry &registry) {
  return EnExtractor(section, registry).run();
}

TranslationResult extract_translations_ru(const PosSection &section, const Registry &registry) {
  TranslationResult result;
  const std::string &block = registry.ru_sections().translation_block;
  for (const Template &t : scan_templates(section.body)) {
    if (!iequals(t.name, block)) continue;
    TranslationBox box;
    if (const std::string *g = t.positional_at(0)) box.gloss.assign(trim(*g));
    box.source_span = t.span;
    for (const auto &[key, value] : t.named) {
      const LanguageCode *lang = registry.find_code(key);
      if (lang == nullptr) {
        result.skipped.push_back({key + "=" + value, "unknown language code", t.span.begin});
        continue;
      }
      for (const WikiLink &link : scan_wikilinks(value)) {
        if (has_namespace_prefix(link.target)) continue;
        std::string wikitext = link_wikitext(link.target);
        std::string word = strip_markup(wikitext);
        if (word.empty()) continue;
        box.entries.push_back({*lang, std::move(word), std::move(wikitext), {}});
      }
    }
    result.boxes.push_back(std::move(box));
  }
  return result;
}

TranslationResult extract_translations(const PosSection &section, Dialect dialect,
                                       const Registry &registry) {
  return dialect == Dialect::kEnglish ? extract_translations_en(section, registry)
                                      : extract_translations_ru(section, registry);
}

}  // namespace wiktmrd
