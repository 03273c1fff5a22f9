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

#ifndef WIKTMRD_MRD_STORE_H_
#define WIKTMRD_MRD_STORE_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wiktmrd/analyzer.h"
#include "wiktmrd/lang_registry.h"

namespace wiktmrd {

// Longest wiki_text value kept; longer texts are cut at a UTF-8 boundary.
inline constexpr size_t kMaxWikiTextBytes = 65535;

// Logical tables in export order. Index tables (index_native, index_XX)
// come on top of these and depend on the store contents.
const std::vector<std::string> &core_table_names();

// Column names of a logical table, or of any index table.
std::vector<std::string> table_columns(const std::string &table);

struct Checkpoint {
  uint64_t last_record_id = 0;  // next record to process
  std::string dump_identity;
  std::map<std::string, int64_t> counters;

  bool operator==(const Checkpoint &) const = default;
};

struct StoreMeta {
  Dialect dialect = Dialect::kEnglish;
  std::string native_language;  // code
};

struct SavedIds {
  int64_t page_id = 0;
  std::vector<int64_t> lang_pos_ids;  // parallel to ParsedPage::lang_pos
};

// Read-side views used by stats, comparison and lookup.
struct LangPosRow {
  int64_t id = 0;
  std::string title;
  std::string lang_code;
  PartOfSpeech pos = PartOfSpeech::kUnknown;
  int etymology_ordinal = 0;
  int64_t meaning_count = 0;
  int64_t translation_count = 0;
};

struct RelationRow {
  int64_t lang_pos_id = 0;
  RelationType type = RelationType::kSynonym;
  std::string target_word;
};

struct StoreSnapshot {
  std::string native_language;
  int64_t content_pages = 0;  // page rows that are not hard redirects
  int64_t translation_boxes = 0;
  int64_t empty_translation_boxes = 0;
  int64_t translation_entries = 0;
  std::vector<LangPosRow> lang_pos;     // sorted by id
  std::vector<RelationRow> relations;   // sorted by relation id
};

struct EntryRelation {
  std::optional<int> meaning_ordinal;
  RelationType type = RelationType::kSynonym;
  std::string target_wikitext;
};

struct EntryTranslation {
  std::string lang_code;
  std::string target_wikitext;
  std::string transliteration;
};

struct EntryBox {
  std::string gloss;
  std::vector<EntryTranslation> entries;
};

struct EntryView {
  std::string title;
  std::string lang_code;
  PartOfSpeech pos = PartOfSpeech::kUnknown;
  int etymology_ordinal = 0;
  std::vector<std::string> definitions;  // wikitext, ordinal order
  std::vector<EntryRelation> relations;
  std::vector<EntryBox> translations;
  std::optional<std::string> lemma;  // set for word-form entries
};

struct ReverseHit {
  std::string title;
  std::string lang_code;  // language of the entry holding the translation
  PartOfSpeech pos = PartOfSpeech::kUnknown;
  std::string translation_lang;
  std::string gloss;
};

struct IndexHit {
  std::string word;
  int64_t lang_pos_id = 0;
};

// The dictionary database. One writer at a time; every page is saved
// atomically and pages can be grouped into batches that commit together
// with a checkpoint.
class MrdStore {
 public:
  enum class Mode { kReadWrite, kReadOnly };

  // ":memory:" opens a private in-memory store. Read-only opening of a
  // missing file throws NotFound.
  static std::unique_ptr<MrdStore> open(const std::string &path, Mode mode = Mode::kReadWrite);

  ~MrdStore();
  MrdStore(const MrdStore &) = delete;
  MrdStore &operator=(const MrdStore &) = delete;

  // Dialect and native language; set once when a parse starts.
  std::optional<StoreMeta> meta() const;
  void set_meta(const StoreMeta &meta);

  // Drops every row, checkpoint and meta value.
  void reset();

  // Groups subsequent saves and the next checkpoint into one transaction.
  void begin_batch();
  void commit_batch();
  void rollback_batch();
  bool in_batch() const { return in_batch_; }

  // Replaces any rows previously saved under the same title.
  SavedIds save_word(const ParsedPage &page);

  std::map<std::string, int64_t> table_sizes() const;

  // Rebuilds index_native and one index_XX per entry language; returns the
  // row count of each table built.
  std::map<std::string, int64_t> build_index_tables();

  // Words starting with `prefix` in one index table, sorted.
  std::vector<IndexHit> lookup_prefix(const std::string &index_table, std::string_view prefix,
                                      size_t limit = 100) const;

  void save_checkpoint(const Checkpoint &cp);
  // Throws ChecksumMismatch when a checkpoint exists for another dump.
  Checkpoint load_checkpoint(const std::optional<std::string> &expected_identity = {}) const;

  // Housekeeping counters maintained by the store itself
  // ("wiki_text_truncated").
  std::map<std::string, int64_t> store_counters() const;

  // Foreign keys that do not resolve, as "table.column=value" strings.
  std::vector<std::string> integrity_violations() const;

  // One <table>.tsv per table plus meta.tsv. Throws CorruptStore if the
  // referential check fails.
  void export_tsv(const std::filesystem::path &dir) const;
  // Loads an export into this store, which must be empty.
  void import_tsv(const std::filesystem::path &dir);

  StoreSnapshot snapshot() const;
  std::vector<EntryView> find_entries(const std::string &title,
                                      const std::optional<std::string> &lang_code = {}) const;
  std::vector<ReverseHit> reverse_lookup(const std::string &word) const;

  // Test hook: runs after every row written by save_word.
  void set_row_hook(std::function<void()> hook) { row_hook_ = std::move(hook); }

 private:
  struct Impl;
  explicit MrdStore(std::unique_ptr<Impl> impl);

  std::unique_ptr<Impl> impl_;
  bool in_batch_ = false;
  std::function<void()> row_hook_;
};

}  // namespace wiktmrd

#endif  // WIKTMRD_MRD_STORE_H_
