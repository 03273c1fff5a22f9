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

#ifndef WIKTMRD_TEXT_UTIL_H_
#define WIKTMRD_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace wiktmrd {

std::string_view trim(std::string_view s);

// Lowercases ASCII, Latin-1 supplement letters and the basic Cyrillic block.
// Other code points pass through unchanged.
std::string fold_case(std::string_view s);

bool iequals(std::string_view a, std::string_view b);

// Case-folded substring test.
bool icontains(std::string_view haystack, std::string_view needle);

// Replaces every run of ASCII whitespace with one space and trims the ends.
std::string collapse_whitespace(std::string_view s);

bool is_valid_utf8(std::string_view s);

// Longest prefix of `s` not exceeding `max_bytes` that does not split a
// UTF-8 sequence.
std::string_view truncate_utf8(std::string_view s, size_t max_bytes);

// Splits on `sep`, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char sep);

// Splits text into lines; a trailing "\r" is dropped from each line.
// Each entry carries the byte offset of the line start.
struct Line {
  std::string_view text;
  size_t offset;
};
std::vector<Line> split_lines(std::string_view s);

// TSV field escaping: backslash, tab, newline and carriage return become
// "\\", "\t", "\n" and "\r".
std::string tsv_escape(std::string_view s);
// Inverse of tsv_escape; false on an unknown or dangling escape.
bool tsv_unescape(std::string_view s, std::string &out);

}  // namespace wiktmrd

#endif  // WIKTMRD_TEXT_UTIL_H_
