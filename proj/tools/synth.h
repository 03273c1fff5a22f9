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

#ifndef WIKTMRD_TOOLS_SYNTH_H_
#define WIKTMRD_TOOLS_SYNTH_H_

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wiktmrd/lang_registry.h"

// Synthetic Wiktionary corpora for benchmarks, fuzzing and oracle tests.
namespace wiktmrd::synth {

struct SynthLangPos {
  std::string language_code;  // must be in the built-in registry
  int etymology_ordinal = 0;
  PartOfSpeech pos = PartOfSpeech::kNoun;
  int meanings = 1;
  std::vector<std::pair<RelationType, int>> relations;  // type -> target count
  std::vector<int> boxes;                               // entries per translation box
};

struct SynthEntry {
  std::string title;
  std::vector<SynthLangPos> lang_pos;
};

// What the parser must find in an entry rendered from a description.
struct SynthTotals {
  int64_t lang_pos = 0;
  int64_t meanings = 0;
  int64_t relations = 0;
  int64_t boxes = 0;
  int64_t entries = 0;

  SynthTotals &operator+=(const SynthTotals &o);
  bool operator==(const SynthTotals &) const = default;
};

SynthTotals totals(const SynthEntry &entry);

// Random but well-formed entry description. Lang_pos keys are unique.
SynthEntry random_entry(std::mt19937_64 &rng, Dialect dialect, const std::string &title);

// Renders an entry in the page layout of the given edition.
std::string render(const SynthEntry &entry, Dialect dialect);

// A pronounceable pseudo-word; `index` keeps titles unique.
std::string word(std::mt19937_64 &rng, uint64_t index);

// Hostile wikitext: unbalanced brackets, stray headings, very long lines,
// mixed scripts. Always valid UTF-8 and XML-safe.
std::string fuzz_text(std::mt19937_64 &rng, size_t approx_bytes);

struct DumpPage {
  std::string title;
  std::string text;
  int ns = 0;
};

// Writes a pages-articles XML export.
void write_dump(std::ostream &out, const std::vector<DumpPage> &pages);

std::string xml_escape(std::string_view s);

}  // namespace wiktmrd::synth

#endif  // WIKTMRD_TOOLS_SYNTH_H_
