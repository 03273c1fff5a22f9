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

#include "wiktmrd/entry_parser.h"

#include <charconv>

#include "wiktmrd/text_util.h"

namespace wiktmrd {

namespace {

const char *const kNamespacePrefixes[] = {
    "Appendix",  "Category",      "Citations", "Concordance", "File",       "Help",
    "Image",     "Index",         "Media",     "MediaWiki",   "Module",     "Portal",
    "Reconstruction", "Rhymes",   "Special",   "Summary",     "Talk",       "Template",
    "Thesaurus", "Thread",        "Transwiki", "User",        "Wikisaurus", "Wiktionary",
    "Викисловарь", "Индекс",      "Категория", "Конкорданс",  "Медиа",      "Обсуждение",
    "Приложение", "Служебная",    "Справка",   "Тезаурус",    "Участник",   "Файл",
    "Шаблон",
};

// Offset just past the heading line and its line break.
size_t content_start(std::string_view text, const Heading &h) {
  size_t pos = h.span.end;
  if (pos < text.size() && text[pos] == '\r') ++pos;
  if (pos < text.size() && text[pos] == '\n') ++pos;
  return pos;
}

// "Etymology" -> 0, "Etymology 2" -> 2; nullopt for anything else.
std::optional<int> etymology_ordinal(std::string_view inner) {
  static constexpr std::string_view kWord = "etymology";
  std::string folded = fold_case(inner);
  std::string_view s = folded;
  if (!s.starts_with(kWord)) return std::nullopt;
  std::string_view rest = trim(s.substr(kWord.size()));
  if (rest.empty()) return 0;
  int n = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || n < 0) return std::nullopt;
  return n;
}

LanguageSplit split_en(const Page &page, const Registry &registry) {
  LanguageSplit out;
  std::string_view text = page.raw_text;
  std::vector<Heading> headings = scan_headings(text);
  std::vector<size_t> starts;  // indexes of language-level headings
  for (size_t i = 0; i < headings.size(); ++i) {
    if (headings[i].level <= 2) starts.push_back(i);
  }
  for (size_t k = 0; k < starts.size(); ++k) {
    const Heading &h = headings[starts[k]];
    size_t begin = content_start(text, h);
    size_t end = k + 1 < starts.size() ? headings[starts[k + 1]].span.begin : text.size();
    std::string name = strip_markup(h.inner_text);
    const LanguageCode *lang = registry.find_english_name(name);
    if (lang == nullptr) {
      out.skipped.push_back({std::string(trim(h.inner_text)), "unknown language name", h.span});
      continue;
    }
    out.sections.push_back({*lang, text.substr(begin, end - begin), {begin, end}});
  }
  return out;
}

// "= {{-en-}} =": the heading must hold exactly one template named "-XX-".
LanguageSplit split_ru(const Page &page, const Registry &registry) {
  LanguageSplit out;
  std::string_view text = page.raw_text;
  std::vector<Heading> headings = scan_headings(text);
  std::vector<size_t> starts;
  for (size_t i = 0; i < headings.size(); ++i) {
    if (headings[i].level == 1) starts.push_back(i);
  }
  for (size_t k = 0; k < starts.size(); ++k) {
    const Heading &h = headings[starts[k]];
    size_t begin = content_start(text, h);
    size_t end = k + 1 < starts.size() ? headings[starts[k + 1]].span.begin : text.size();
    std::string_view inner = trim(h.inner_text);
    Template t;
    std::string heading(inner);
    if (!parse_template(inner, t) || t.name.size() < 3 || t.name.front() != '-' ||
        t.name.back() != '-') {
      out.skipped.push_back({heading, "not a language template", h.span});
      continue;
    }
    const LanguageCode *lang = registry.find_code(t.name.substr(1, t.name.size() - 2));
    if (lang == nullptr) {
      out.skipped.push_back({heading, "unknown language code", h.span});
      continue;
    }
    out.sections.push_back({*lang, text.substr(begin, end - begin), {begin, end}});
  }
  return out;
}

std::vector<PosSection> pos_sections_en(const LanguageSection &section, const Registry &registry) {
  std::vector<PosSection> out;
  std::string_view body = section.body;
  std::vector<Heading> headings = scan_headings(body);

  int etym_ordinal = 0;
  bool numbered_etym = false;
  int etym_level = 0;
  std::optional<PosSection> current;
  size_t current_begin = 0;

  auto close = [&](size_t end) {
    if (!current) return;
    current->body = body.substr(current_begin, end - current_begin);
    current->span = {section.span.begin + current_begin, section.span.begin + end};
    out.push_back(std::move(*current));
    current.reset();
  };
  auto open = [&](const Heading &h, PartOfSpeech pos) {
    current = PosSection{section.language, etym_ordinal, pos, {}, {}};
    current_begin = content_start(body, h);
  };

  for (const Heading &h : headings) {
    std::string inner = strip_markup(h.inner_text);
    if (auto n = etymology_ordinal(inner)) {
      close(h.span.begin);
      etym_ordinal = *n;
      numbered_etym = *n > 0;
      etym_level = h.level;
      continue;
    }
    if (auto pos = registry.classify_pos_heading(inner, Dialect::kEnglish)) {
      close(h.span.begin);
      open(h, *pos);
      continue;
    }
    if (registry.classify_relation_heading(inner, Dialect::kEnglish) ||
        registry.is_auxiliary_heading(inner)) {
      continue;
    }
    int pos_level = numbered_etym ? etym_level + 1 : 3;
    if (h.level <= pos_level) {
      close(h.span.begin);
      open(h, PartOfSpeech::kUnknown);
    }
  }
  close(body.size());

  if (out.empty()) {
    out.push_back({section.language, 0, PartOfSpeech::kUnknown, body, section.span});
  }
  return out;
}

std::vector<PosSection> pos_sections_ru(const LanguageSection &section, const Registry &registry) {
  std::vector<PosSection> out;
  std::string_view body = section.body;
  std::vector<Heading> headings = scan_headings(body);

  // Level-2 headings split homonyms into numbered blocks.
  std::vector<size_t> block_heads;
  for (size_t i = 0; i < headings.size(); ++i) {
    if (headings[i].level == 2) block_heads.push_back(i);
  }
  struct Block {
    size_t begin, end;
    int ordinal;
  };
  std::vector<Block> blocks;
  if (block_heads.empty()) {
    blocks.push_back({0, body.size(), 0});
  } else {
    for (size_t k = 0; k < block_heads.size(); ++k) {
      size_t begin = content_start(body, headings[block_heads[k]]);
      size_t end =
          k + 1 < block_heads.size() ? headings[block_heads[k + 1]].span.begin : body.size();
      blocks.push_back({begin, end, block_heads.size() > 1 ? static_cast<int>(k) + 1 : 0});
    }
  }

  const RuSectionNames &names = registry.ru_sections();
  for (const Block &b : blocks) {
    std::string_view text = body.substr(b.begin, b.end - b.begin);
    std::vector<Heading> inner = scan_headings(text);
    PartOfSpeech pos = PartOfSpeech::kUnknown;
    bool found = false;
    for (size_t i = 0; i < inner.size() && !found; ++i) {
      if (!iequals(trim(inner[i].inner_text), names.morphology)) continue;
      for (const Template &t : scan_templates(heading_content(text, inner, i))) {
        if (auto p = registry.classify_morphology_template(t.name)) {
          pos = *p;
          found = true;
          break;
        }
      }
    }
    for (size_t i = 0; i < inner.size() && !found; ++i) {
      if (auto p = registry.classify_pos_heading(strip_markup(inner[i].inner_text),
                                                 Dialect::kRussian)) {
        pos = *p;
        found = true;
      }
    }
    out.push_back({section.language, b.ordinal, pos, text,
                   {section.span.begin + b.begin, section.span.begin + b.end}});
  }
  return out;
}

bool is_definition_line(std::string_view line) {
  if (line.empty() || line.front() != '#') return false;
  if (line.size() > 1 && (line[1] == ':' || line[1] == '*' || line[1] == '#')) return false;
  return true;
}

void collect_definitions(std::string_view text, std::vector<Meaning> &out) {
  for (const Line &line : split_lines(text)) {
    if (!is_definition_line(line.text)) continue;
    std::string_view wikitext = trim(line.text.substr(1));
    if (wikitext.empty()) continue;
    Meaning m;
    m.ordinal = static_cast<int>(out.size()) + 1;
    m.definition_wikitext.assign(wikitext);
    m.definition_plain = strip_markup(wikitext);
    out.push_back(std::move(m));
  }
}

}  // namespace

bool has_namespace_prefix(std::string_view title) {
  size_t colon = title.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  std::string_view prefix = trim(title.substr(0, colon));
  for (const char *ns : kNamespacePrefixes) {
    if (iequals(prefix, ns)) return true;
  }
  return false;
}

std::string_view heading_content(std::string_view text, const std::vector<Heading> &headings,
                                 size_t index) {
  size_t begin = content_start(text, headings[index]);
  size_t end = index + 1 < headings.size() ? headings[index + 1].span.begin : text.size();
  if (begin > end) return {};
  return text.substr(begin, end - begin);
}

std::vector<Heading> section_headings(const PosSection &section) {
  return scan_headings(section.body);
}

LanguageSplit split_language_sections(const Page &page, Dialect dialect,
                                      const Registry &registry) {
  return dialect == Dialect::kEnglish ? split_en(page, registry) : split_ru(page, registry);
}

std::vector<PosSection> split_pos_sections(const LanguageSection &section, Dialect dialect,
                                           const Registry &registry) {
  return dialect == Dialect::kEnglish ? pos_sections_en(section, registry)
                                      : pos_sections_ru(section, registry);
}

std::vector<Meaning> extract_definitions(const PosSection &section, Dialect dialect,
                                         const Registry &registry) {
  std::vector<Meaning> out;
  std::vector<Heading> headings = section_headings(section);
  if (dialect == Dialect::kEnglish) {
    // Definitions precede the first subsection heading.
    size_t end = headings.empty() ? section.body.size() : headings.front().span.begin;
    collect_definitions(section.body.substr(0, end), out);
    return out;
  }
  const std::string &name = registry.ru_sections().definitions;
  for (size_t i = 0; i < headings.size(); ++i) {
    if (iequals(trim(headings[i].inner_text), name)) {
      collect_definitions(heading_content(section.body, headings, i), out);
      break;
    }
  }
  return out;
}

std::optional<SoftRedirect> classify_soft_redirect(std::string_view page_title,
                                                   const PosSection &section,
                                                   const std::vector<Meaning> &meanings,
                                                   const Registry &registry) {
  (void)section;
  if (meanings.size() != 1) return std::nullopt;
  Template t;
  if (!parse_template(trim(meanings.front().definition_wikitext), t)) return std::nullopt;
  if (!registry.is_form_of_template(t.name)) return std::nullopt;
  std::string lemma;
  if (const std::string *p = t.positional_at(0)) {
    lemma.assign(trim(*p));
  } else if (const std::string *n = t.param("1")) {
    lemma.assign(trim(*n));
  }
  if (lemma.empty() || lemma == page_title) return std::nullopt;
  return SoftRedirect{std::string(page_title), std::move(lemma), t.name};
}

}  // namespace wiktmrd
