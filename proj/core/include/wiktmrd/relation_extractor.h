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

#ifndef WIKTMRD_RELATION_EXTRACTOR_H_
#define WIKTMRD_RELATION_EXTRACTOR_H_

#include <optional>
#include <string>
#include <vector>

#include "wiktmrd/entry_parser.h"
#include "wiktmrd/lang_registry.h"

namespace wiktmrd {

// One thesaurus edge from the section's headword to `target_word`.
struct RelationRecord {
  std::optional<int> meaning_ordinal;  // nullopt when the line cannot be aligned
  RelationType relation_type = RelationType::kSynonym;
  std::string target_word;      // strip_markup(target_wikitext)
  std::string target_wikitext;
  std::string sense_gloss;

  bool operator==(const RelationRecord &) const = default;
};

std::vector<RelationRecord> extract_relations(const PosSection &section,
                                              const std::vector<Meaning> &meanings,
                                              Dialect dialect, const Registry &registry);

struct RelationCounts {
  int relation_count = 0;
  int distinct_type_count = 0;

  bool operator==(const RelationCounts &) const = default;
};

// Counts for the records of a single PosSection.
RelationCounts count_relations_per_word(const std::vector<RelationRecord> &records);

// Shared by the extractors: the word a link or link-like template points
// at, written back as "[[word]]" so that plain text and wikitext agree.
std::string link_wikitext(std::string_view target);

}  // namespace wiktmrd

#endif  // WIKTMRD_RELATION_EXTRACTOR_H_
