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

#ifndef WIKTMRD_WIKITEXT_H_
#define WIKTMRD_WIKITEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wiktmrd {

// Half-open byte range [begin, end) into a source text.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  std::string_view slice(std::string_view text) const {
    return text.substr(begin, end - begin);
  }
  bool operator==(const Span &) const = default;
};

// A "{{name|p1|key=value}}" template call. Nested templates stay verbatim
// inside the parameter strings.
struct Template {
  std::string name;
  std::vector<std::string> positional;
  std::vector<std::pair<std::string, std::string>> named;
  Span span;

  // Value of a named parameter, or nullptr.
  const std::string *param(std::string_view key) const;

  // Positional parameter `index` (0-based), or nullptr.
  const std::string *positional_at(size_t index) const;

  // Compares name and parameters; spans are ignored.
  bool same_call(const Template &other) const;
};

struct WikiLink {
  std::string target;
  std::string label;
  Span span;

  bool same_link(const WikiLink &other) const {
    return target == other.target && label == other.label;
  }
};

struct Heading {
  int level = 0;
  std::string inner_text;
  Span span;  // whole heading line, without the line break
};

std::vector<Template> scan_templates(std::string_view text);
std::vector<WikiLink> scan_wikilinks(std::string_view text);
std::vector<Heading> scan_headings(std::string_view text);

// Parses a single template occupying exactly `call` ("{{...}}").
// Returns false if `call` is not one well-formed top-level template.
bool parse_template(std::string_view call, Template &out);

// Plain-text rendering: links become labels, templates and HTML comments
// vanish, bold/italic quote runs are dropped, whitespace is collapsed.
std::string strip_markup(std::string_view text);

}  // namespace wiktmrd

#endif  // WIKTMRD_WIKITEXT_H_
