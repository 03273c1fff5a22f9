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

#include "wiktmrd/relation_extractor.h"

#include <algorithm>
#include <bitset>

#include "wiktmrd/text_util.h"

namespace wiktmrd {

namespace {

struct Target {
  size_t offset;
  std::string wikitext;
};

bool is_list_line(std::string_view line) {
  return !line.empty() && (line.front() == '*' || line.front() == '#');
}

std::string_view strip_list_marker(std::string_view line) {
  size_t i = line.find_first_not_of("*#:");
  return i == std::string_view::npos ? std::string_view{} : line.substr(i);
}

bool is_dash_line(std::string_view content) {
  std::string_view t = trim(content);
  return t == "-" || t == "—" || t == "–";
}

// Links and "{{l|xx|word}}" templates in source order. Links into other
// namespaces ("Wikisaurus:dog") are not targets.
std::vector<Target> linked_targets(std::string_view content, bool &saw_markup) {
  std::vector<Target> out;
  saw_markup = false;
  std::vector<Template> templates = scan_templates(content);
  for (const Template &t : templates) {
    if (t.name != "l" && t.name != "link") continue;
    saw_markup = true;
    const std::string *word = t.positional_at(1);
    if (word == nullptr || trim(*word).empty()) continue;
    out.push_back({t.span.begin, link_wikitext(*word)});
  }
  for (const WikiLink &link : scan_wikilinks(content)) {
    // Links nested in templates belong to the template.
    bool nested = std::any_of(templates.begin(), templates.end(), [&](const Template &t) {
      return link.span.begin >= t.span.begin && link.span.end <= t.span.end;
    });
    if (nested) continue;
    saw_markup = true;
    if (has_namespace_prefix(link.target)) continue;
    out.push_back({link.span.begin, link_wikitext(link.target)});
  }
  std::sort(out.begin(), out.end(),
            [](const Target &a, const Target &b) { return a.offset < b.offset; });
  return out;
}

bool has_markup_debris(std::string_view token) {
  for (std::string_view m : {"[[", "]]", "{{", "}}"}) {
    if (token.find(m) != std::string_view::npos) return true;
  }
  return false;
}

// Comma/semicolon-separated words on a line with no links at all. Tokens
// holding unbalanced link or template brackets are dropped.
std::vector<Target> bare_targets(std::string_view content) {
  std::vector<Target> out;
  size_t start = 0;
  for (size_t i = 0; i <= content.size(); ++i) {
    if (i == content.size() || content[i] == ',' || content[i] == ';') {
      std::string_view token = trim(content.substr(start, i - start));
      if (!token.empty() && !has_markup_debris(token)) out.push_back({start, std::string(token)});
      start = i + 1;
    }
  }
  return out;
}

void emit_line(std::string_view content, RelationType type, std::optional<int> ordinal,
               const std::string &gloss, std::vector<RelationRecord> &out) {
  bool saw_markup = false;
  std::vector<Target> targets = linked_targets(content, saw_markup);
  if (!saw_markup) {
    // Templates other than links (qualifiers, glosses) are not words.
    std::string plain_input;
    size_t pos = 0;
    for (const Template &t : scan_templates(content)) {
      plain_input.append(content.substr(pos, t.span.begin - pos));
      pos = t.span.end;
    }
    plain_input.append(content.substr(pos));
    targets = bare_targets(plain_input);
  }
  for (Target &t : targets) {
    std::string word = strip_markup(t.wikitext);
    if (word.empty()) continue;
    out.push_back({ordinal, type, std::move(word), std::move(t.wikitext), gloss});
  }
}

std::optional<int> align_by_gloss(std::string_view gloss, const std::vector<Meaning> &meanings) {
  if (gloss.empty()) {
    if (meanings.size() == 1) return meanings.front().ordinal;
    return std::nullopt;
  }
  for (const Meaning &m : meanings) {
    if (icontains(m.definition_plain, gloss)) return m.ordinal;
  }
  return std::nullopt;
}

void extract_en(std::string_view body, const std::vector<Heading> &headings, size_t index,
                RelationType type, const std::vector<Meaning> &meanings,
                std::vector<RelationRecord> &out) {
  for (const Line &line : split_lines(heading_content(body, headings, index))) {
    if (!is_list_line(line.text)) continue;
    std::string_view content = trim(strip_list_marker(line.text));
    std::string gloss;
    std::vector<Template> templates = scan_templates(content);
    if (!templates.empty() && templates.front().span.begin == 0 &&
        (templates.front().name == "sense" || templates.front().name == "s")) {
      if (const std::string *g = templates.front().positional_at(0)) gloss.assign(trim(*g));
      content = content.substr(templates.front().span.end);
    }
    emit_line(content, type, align_by_gloss(gloss, meanings), gloss, out);
  }
}

void extract_ru(std::string_view body, const std::vector<Heading> &headings, size_t index,
                RelationType type, const std::vector<Meaning> &meanings,
                std::vector<RelationRecord> &out) {
  int line_number = 0;
  for (const Line &line : split_lines(heading_content(body, headings, index))) {
    if (!is_list_line(line.text)) continue;
    ++line_number;
    std::string_view content = strip_list_marker(line.text);
    if (trim(content).empty() || is_dash_line(content)) continue;
    std::optional<int> ordinal;
    if (line_number <= static_cast<int>(meanings.size())) {
      ordinal = meanings[line_number - 1].ordinal;
    }
    emit_line(content, type, ordinal, std::string(), out);
  }
}

}  // namespace

std::string link_wikitext(std::string_view target) {
  std::string_view word = trim(target);
  size_t anchor = word.find('#');
  if (anchor != std::string_view::npos && anchor > 0) word = trim(word.substr(0, anchor));
  return "[[" + std::string(word) + "]]";
}

std::vector<RelationRecord> extract_relations(const PosSection &section,
                                              const std::vector<Meaning> &meanings,
                                              Dialect dialect, const Registry &registry) {
  std::vector<RelationRecord> out;
  std::vector<Heading> headings = section_headings(section);
  for (size_t i = 0; i < headings.size(); ++i) {
    std::optional<RelationType> type =
        registry.classify_relation_heading(strip_markup(headings[i].inner_text), dialect);
    if (!type) continue;
    if (dialect == Dialect::kEnglish) {
      extract_en(section.body, headings, i, *type, meanings, out);
    } else {
      extract_ru(section.body, headings, i, *type, meanings, out);
    }
  }
  return out;
}

RelationCounts count_relations_per_word(const std::vector<RelationRecord> &records) {
  std::bitset<kRelationTypeCount> seen;
  for (const RelationRecord &r : records) seen.set(static_cast<size_t>(r.relation_type));
  return {static_cast<int>(records.size()), static_cast<int>(seen.count())};
}

}  // namespace wiktmrd
