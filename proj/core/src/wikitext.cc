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

#include "wiktmrd/wikitext.h"

#include <algorithm>

#include "wiktmrd/text_util.h"

namespace wiktmrd {

namespace {

bool starts_at(std::string_view text, size_t i, std::string_view token) {
  return text.compare(i, token.size(), token) == 0;
}

// Matches "{{" with "}}" using an explicit stack; unmatched openers are
// literal text. Returns the outermost matched pairs in source order.
std::vector<Span> top_level_template_spans(std::string_view text) {
  std::vector<size_t> open;
  std::vector<Span> pairs;
  size_t i = 0;
  while (i + 1 < text.size()) {
    if (text[i] == '{' && text[i + 1] == '{') {
      open.push_back(i);
      i += 2;
    } else if (text[i] == '}' && text[i + 1] == '}') {
      if (!open.empty()) {
        pairs.push_back({open.back(), i + 2});
        open.pop_back();
      }
      i += 2;
    } else {
      ++i;
    }
  }
  // Pairs come out innermost-first; properly nested, so a sweep over the
  // start-sorted list keeps exactly the outermost ones.
  std::sort(pairs.begin(), pairs.end(),
            [](const Span &a, const Span &b) { return a.begin < b.begin; });
  std::vector<Span> top;
  size_t covered = 0;
  for (const Span &p : pairs) {
    if (top.empty() || p.begin >= covered) {
      top.push_back(p);
      covered = p.end;
    }
  }
  return top;
}

// Splits the inside of a template at '|' characters that are not nested in
// another template or link.
std::vector<std::string_view> split_params(std::string_view inner, bool track_links) {
  std::vector<std::string_view> parts;
  int braces = 0, brackets = 0;
  size_t start = 0;
  size_t i = 0;
  while (i < inner.size()) {
    if (starts_at(inner, i, "{{")) {
      ++braces;
      i += 2;
    } else if (starts_at(inner, i, "}}") && braces > 0) {
      --braces;
      i += 2;
    } else if (track_links && starts_at(inner, i, "[[")) {
      ++brackets;
      i += 2;
    } else if (track_links && starts_at(inner, i, "]]") && brackets > 0) {
      --brackets;
      i += 2;
    } else {
      if (inner[i] == '|' && braces == 0 && brackets == 0) {
        parts.push_back(inner.substr(start, i - start));
        start = i + 1;
      }
      ++i;
    }
  }
  parts.push_back(inner.substr(start));
  if (track_links && brackets != 0) return split_params(inner, false);
  return parts;
}

// Position of the first '=' outside nested templates and links, or npos.
size_t find_top_level_equals(std::string_view param) {
  int depth = 0;
  for (size_t i = 0; i < param.size(); ++i) {
    if (starts_at(param, i, "{{") || starts_at(param, i, "[[")) {
      ++depth;
      ++i;
    } else if ((starts_at(param, i, "}}") || starts_at(param, i, "]]")) && depth > 0) {
      --depth;
      ++i;
    } else if (param[i] == '=' && depth == 0) {
      return i;
    }
  }
  return std::string_view::npos;
}

std::string remove_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    size_t open = text.find("<!--", i);
    if (open == std::string_view::npos) {
      out.append(text.substr(i));
      break;
    }
    out.append(text.substr(i, open - i));
    size_t close = text.find("-->", open + 4);
    if (close == std::string_view::npos) break;
    i = close + 3;
  }
  return out;
}

}  // namespace

const std::string *Template::param(std::string_view key) const {
  for (const auto &[k, v] : named) {
    if (k == key) return &v;
  }
  return nullptr;
}

const std::string *Template::positional_at(size_t index) const {
  return index < positional.size() ? &positional[index] : nullptr;
}

bool Template::same_call(const Template &other) const {
  return name == other.name && positional == other.positional && named == other.named;
}

namespace {

bool parse_matched(std::string_view call, Template &out) {
  std::vector<std::string_view> parts = split_params(call.substr(2, call.size() - 4), true);
  std::string_view name = trim(parts.front());
  if (name.empty()) return false;
  out.name.assign(name);
  out.positional.clear();
  out.named.clear();
  for (size_t k = 1; k < parts.size(); ++k) {
    std::string_view p = parts[k];
    size_t eq = find_top_level_equals(p);
    if (eq == std::string_view::npos) {
      out.positional.emplace_back(p);
    } else {
      out.named.emplace_back(std::string(trim(p.substr(0, eq))),
                             std::string(trim(p.substr(eq + 1))));
    }
  }
  return true;
}

}  // namespace

bool parse_template(std::string_view call, Template &out) {
  if (call.size() < 4 || !starts_at(call, 0, "{{") ||
      call.substr(call.size() - 2) != "}}") {
    return false;
  }
  std::vector<Span> spans = top_level_template_spans(call);
  if (spans.size() != 1 || spans.front() != Span{0, call.size()}) return false;
  return parse_matched(call, out);
}

std::vector<Template> scan_templates(std::string_view text) {
  std::vector<Template> out;
  for (const Span &span : top_level_template_spans(text)) {
    Template t;
    if (parse_matched(span.slice(text), t)) {
      t.span = span;
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<WikiLink> scan_wikilinks(std::string_view text) {
  std::vector<WikiLink> out;
  size_t i = 0;
  while (i + 1 < text.size()) {
    size_t open = text.find("[[", i);
    if (open == std::string_view::npos) break;
    // Links never span lines; a later "[[" restarts the match.
    size_t j = open + 2;
    size_t close = std::string_view::npos;
    size_t restart = std::string_view::npos;
    while (j < text.size()) {
      if (text[j] == '\n') break;
      if (starts_at(text, j, "]]")) {
        close = j;
        break;
      }
      if (starts_at(text, j, "[[")) {
        restart = j;
        break;
      }
      ++j;
    }
    if (restart != std::string_view::npos) {
      i = restart;
      continue;
    }
    if (close == std::string_view::npos) {
      i = j;
      continue;
    }
    std::string_view inner = text.substr(open + 2, close - open - 2);
    size_t pipe = inner.find('|');
    std::string_view target = trim(inner.substr(0, pipe));
    std::string_view label =
        pipe == std::string_view::npos ? target : trim(inner.substr(pipe + 1));
    if (label.empty()) label = target;
    if (!target.empty()) {
      out.push_back({std::string(target), std::string(label), {open, close + 2}});
    }
    i = close + 2;
  }
  return out;
}

std::vector<Heading> scan_headings(std::string_view text) {
  std::vector<Heading> out;
  for (const Line &line : split_lines(text)) {
    if (line.text.empty() || line.text.front() != '=') continue;
    // Trailing whitespace and HTML comments after the closing run are ignored.
    std::string_view body = line.text;
    for (;;) {
      while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) body.remove_suffix(1);
      if (body.size() >= 3 && body.substr(body.size() - 3) == "-->") {
        size_t open = body.rfind("<!--");
        if (open == std::string_view::npos) break;
        body = body.substr(0, open);
        continue;
      }
      break;
    }
    if (body.empty() || body.back() != '=') continue;
    size_t n = body.size();
    size_t lead = body.find_first_not_of('=');
    int level;
    if (lead == std::string_view::npos) {
      if (n < 3) continue;
      level = static_cast<int>(std::min<size_t>((n - 1) / 2, 6));
    } else {
      size_t trail = n - 1 - body.find_last_not_of('=');
      level = static_cast<int>(std::min({lead, trail, size_t{6}}));
    }
    Heading h;
    h.level = level;
    h.inner_text.assign(body.substr(level, n - 2 * level));
    h.span = {line.offset, line.offset + line.text.size()};
    out.push_back(std::move(h));
  }
  return out;
}

std::string strip_markup(std::string_view text) {
  std::string no_comments = remove_comments(text);

  std::string no_templates;
  no_templates.reserve(no_comments.size());
  size_t pos = 0;
  for (const Span &span : top_level_template_spans(no_comments)) {
    no_templates.append(no_comments, pos, span.begin - pos);
    pos = span.end;
  }
  no_templates.append(no_comments, pos, std::string::npos);

  std::string linked;
  linked.reserve(no_templates.size());
  pos = 0;
  for (const WikiLink &link : scan_wikilinks(no_templates)) {
    linked.append(no_templates, pos, link.span.begin - pos);
    linked += link.label;
    pos = link.span.end;
  }
  linked.append(no_templates, pos, std::string::npos);

  std::string unquoted;
  unquoted.reserve(linked.size());
  for (size_t i = 0; i < linked.size();) {
    if (linked[i] == '\'') {
      size_t j = i;
      while (j < linked.size() && linked[j] == '\'') ++j;
      if (j - i == 1) unquoted += '\'';
      i = j;
    } else {
      unquoted += linked[i++];
    }
  }
  return collapse_whitespace(unquoted);
}

}  // namespace wiktmrd
