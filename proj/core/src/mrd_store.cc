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

#include "wiktmrd/mrd_store.h"

#include <sqlite3.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <unordered_map>

#include "wiktmrd/errors.h"
#include "wiktmrd/text_util.h"

namespace wiktmrd {

namespace {

enum class ColType { kInt, kText };

struct Column {
  const char *name;
  ColType type;
  bool nullable;
};

struct TableDef {
  const char *name;
  std::vector<Column> columns;
};

const std::vector<TableDef> &table_defs() {
  static const std::vector<TableDef> defs = {
      {"page",
       {{"id", ColType::kInt, false},
        {"title", ColType::kText, false},
        {"record_id", ColType::kInt, false},
        {"is_soft_redirect", ColType::kInt, false},
        {"redirect_target", ColType::kText, true}}},
      {"lang", {{"id", ColType::kInt, false}, {"code", ColType::kText, false}}},
      {"pos", {{"id", ColType::kInt, false}, {"name", ColType::kText, false}}},
      {"lang_pos",
       {{"id", ColType::kInt, false},
        {"page_id", ColType::kInt, false},
        {"lang_id", ColType::kInt, false},
        {"pos_id", ColType::kInt, false},
        {"etymology_ordinal", ColType::kInt, false}}},
      {"wiki_text", {{"id", ColType::kInt, false}, {"text", ColType::kText, false}}},
      {"wiki_text_words",
       {{"id", ColType::kInt, false},
        {"wiki_text_id", ColType::kInt, false},
        {"page_ref_title", ColType::kText, false}}},
      {"meaning",
       {{"id", ColType::kInt, false},
        {"lang_pos_id", ColType::kInt, false},
        {"ordinal", ColType::kInt, false},
        {"wiki_text_id", ColType::kInt, false}}},
      {"relation_type", {{"id", ColType::kInt, false}, {"name", ColType::kText, false}}},
      {"relation",
       {{"id", ColType::kInt, false},
        {"meaning_id", ColType::kInt, true},
        {"lang_pos_id", ColType::kInt, false},
        {"relation_type_id", ColType::kInt, false},
        {"wiki_text_id", ColType::kInt, false}}},
      {"translation",
       {{"id", ColType::kInt, false},
        {"lang_pos_id", ColType::kInt, false},
        {"gloss_wiki_text_id", ColType::kInt, true}}},
      {"translation_entry",
       {{"id", ColType::kInt, false},
        {"translation_id", ColType::kInt, false},
        {"lang_id", ColType::kInt, false},
        {"wiki_text_id", ColType::kInt, false},
        {"transliteration", ColType::kText, true}}},
      {"inflection",
       {{"id", ColType::kInt, false},
        {"lang_pos_id", ColType::kInt, false},
        {"form_kind", ColType::kText, false},
        {"lemma_title", ColType::kText, false}}},
  };
  return defs;
}

const TableDef kIndexDef = {
    "index", {{"word", ColType::kText, false}, {"lang_pos_id", ColType::kInt, false}}};

const char kSchema[] = R"sql(
CREATE TABLE IF NOT EXISTS page(
  id INTEGER PRIMARY KEY, title TEXT NOT NULL UNIQUE, record_id INTEGER NOT NULL,
  is_soft_redirect INTEGER NOT NULL, redirect_target TEXT);
CREATE TABLE IF NOT EXISTS lang(id INTEGER PRIMARY KEY, code TEXT NOT NULL UNIQUE);
CREATE TABLE IF NOT EXISTS pos(id INTEGER PRIMARY KEY, name TEXT NOT NULL UNIQUE);
CREATE TABLE IF NOT EXISTS lang_pos(
  id INTEGER PRIMARY KEY, page_id INTEGER NOT NULL, lang_id INTEGER NOT NULL,
  pos_id INTEGER NOT NULL, etymology_ordinal INTEGER NOT NULL,
  UNIQUE(page_id, lang_id, pos_id, etymology_ordinal));
CREATE TABLE IF NOT EXISTS wiki_text(id INTEGER PRIMARY KEY, text TEXT NOT NULL UNIQUE);
CREATE TABLE IF NOT EXISTS wiki_text_words(
  id INTEGER PRIMARY KEY, wiki_text_id INTEGER NOT NULL, page_ref_title TEXT NOT NULL);
CREATE INDEX IF NOT EXISTS wiki_text_words_text ON wiki_text_words(wiki_text_id);
CREATE TABLE IF NOT EXISTS meaning(
  id INTEGER PRIMARY KEY, lang_pos_id INTEGER NOT NULL, ordinal INTEGER NOT NULL,
  wiki_text_id INTEGER NOT NULL);
CREATE INDEX IF NOT EXISTS meaning_lang_pos ON meaning(lang_pos_id);
CREATE INDEX IF NOT EXISTS meaning_text ON meaning(wiki_text_id);
CREATE TABLE IF NOT EXISTS relation_type(id INTEGER PRIMARY KEY, name TEXT NOT NULL UNIQUE);
CREATE TABLE IF NOT EXISTS relation(
  id INTEGER PRIMARY KEY, meaning_id INTEGER, lang_pos_id INTEGER NOT NULL,
  relation_type_id INTEGER NOT NULL, wiki_text_id INTEGER NOT NULL);
CREATE INDEX IF NOT EXISTS relation_lang_pos ON relation(lang_pos_id);
CREATE INDEX IF NOT EXISTS relation_text ON relation(wiki_text_id);
CREATE TABLE IF NOT EXISTS translation(
  id INTEGER PRIMARY KEY, lang_pos_id INTEGER NOT NULL, gloss_wiki_text_id INTEGER);
CREATE INDEX IF NOT EXISTS translation_lang_pos ON translation(lang_pos_id);
CREATE INDEX IF NOT EXISTS translation_text ON translation(gloss_wiki_text_id);
CREATE TABLE IF NOT EXISTS translation_entry(
  id INTEGER PRIMARY KEY, translation_id INTEGER NOT NULL, lang_id INTEGER NOT NULL,
  wiki_text_id INTEGER NOT NULL, transliteration TEXT);
CREATE INDEX IF NOT EXISTS translation_entry_box ON translation_entry(translation_id);
CREATE INDEX IF NOT EXISTS translation_entry_text ON translation_entry(wiki_text_id);
CREATE TABLE IF NOT EXISTS inflection(
  id INTEGER PRIMARY KEY, lang_pos_id INTEGER NOT NULL, form_kind TEXT NOT NULL,
  lemma_title TEXT NOT NULL);
CREATE INDEX IF NOT EXISTS inflection_lang_pos ON inflection(lang_pos_id);
CREATE TABLE IF NOT EXISTS wiktmrd_meta(key TEXT PRIMARY KEY, value TEXT NOT NULL);
CREATE TABLE IF NOT EXISTS wiktmrd_counter(
  scope TEXT NOT NULL, name TEXT NOT NULL, value INTEGER NOT NULL, PRIMARY KEY(scope, name));
CREATE TABLE IF NOT EXISTS wiktmrd_index(name TEXT PRIMARY KEY);
)sql";

// Foreign keys checked by integrity_violations: table, column, target.
const char *const kForeignKeys[][3] = {
    {"lang_pos", "page_id", "page"},
    {"lang_pos", "lang_id", "lang"},
    {"lang_pos", "pos_id", "pos"},
    {"wiki_text_words", "wiki_text_id", "wiki_text"},
    {"meaning", "lang_pos_id", "lang_pos"},
    {"meaning", "wiki_text_id", "wiki_text"},
    {"relation", "meaning_id", "meaning"},
    {"relation", "lang_pos_id", "lang_pos"},
    {"relation", "relation_type_id", "relation_type"},
    {"relation", "wiki_text_id", "wiki_text"},
    {"translation", "lang_pos_id", "lang_pos"},
    {"translation", "gloss_wiki_text_id", "wiki_text"},
    {"translation_entry", "translation_id", "translation"},
    {"translation_entry", "lang_id", "lang"},
    {"translation_entry", "wiki_text_id", "wiki_text"},
    {"inflection", "lang_pos_id", "lang_pos"},
};

const char kCheckpointScope[] = "checkpoint";
const char kStoreScope[] = "store";
const char kTruncatedCounter[] = "wiki_text_truncated";
const char kNativeIndex[] = "index_native";

[[noreturn]] void throw_sqlite(sqlite3 *db, int rc, const std::string &what) {
  std::string msg = what + ": " + (db != nullptr ? sqlite3_errmsg(db) : sqlite3_errstr(rc));
  switch (rc & 0xff) {
    case SQLITE_FULL:
      throw StorageFull(msg);
    case SQLITE_CORRUPT:
    case SQLITE_NOTADB:
      throw CorruptStore(msg);
    default:
      throw Error(msg);
  }
}

std::string quote_ident(std::string_view name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class Stmt {
 public:
  Stmt(sqlite3 *db, std::string_view sql) : db_(db) {
    int rc = sqlite3_prepare_v2(db, sql.data(), static_cast<int>(sql.size()), &stmt_, nullptr);
    if (rc != SQLITE_OK) throw_sqlite(db, rc, "prepare");
  }
  ~Stmt() { sqlite3_finalize(stmt_); }
  Stmt(const Stmt &) = delete;
  Stmt &operator=(const Stmt &) = delete;

  Stmt &bind(int index, int64_t v) {
    check(sqlite3_bind_int64(stmt_, index, v));
    return *this;
  }
  Stmt &bind(int index, std::string_view v) {
    check(sqlite3_bind_text(stmt_, index, v.data(), static_cast<int>(v.size()),
                            SQLITE_TRANSIENT));
    return *this;
  }
  Stmt &bind(int index, const std::optional<int64_t> &v) {
    return v ? bind(index, *v) : bind_null(index);
  }
  Stmt &bind_null(int index) {
    check(sqlite3_bind_null(stmt_, index));
    return *this;
  }

  // True while a row is available.
  bool step() {
    int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    sqlite3_reset(stmt_);
    throw_sqlite(db_, rc, "step");
  }
  void run() {
    while (step()) {
    }
    reset();
  }
  void reset() {
    sqlite3_reset(stmt_);
    sqlite3_clear_bindings(stmt_);
  }

  int columns() const { return sqlite3_column_count(stmt_); }
  bool is_null(int i) const { return sqlite3_column_type(stmt_, i) == SQLITE_NULL; }
  int64_t get_int(int i) const { return sqlite3_column_int64(stmt_, i); }
  std::string get_text(int i) const {
    const unsigned char *p = sqlite3_column_text(stmt_, i);
    return p == nullptr ? std::string()
                        : std::string(reinterpret_cast<const char *>(p),
                                      static_cast<size_t>(sqlite3_column_bytes(stmt_, i)));
  }

 private:
  void check(int rc) {
    if (rc != SQLITE_OK) throw_sqlite(db_, rc, "bind");
  }

  sqlite3 *db_;
  sqlite3_stmt *stmt_ = nullptr;
};

// Clears a statement's bindings when the scope ends, however it ends.
class Resetter {
 public:
  explicit Resetter(Stmt &s) : s_(s) {}
  ~Resetter() { s_.reset(); }

 private:
  Stmt &s_;
};

bool parse_int(std::string_view s, int64_t &out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

struct MrdStore::Impl {
  sqlite3 *db = nullptr;
  bool read_only = false;
  std::unordered_map<std::string, std::unique_ptr<Stmt>> cache;
  std::unordered_map<std::string, int64_t> lang_ids;
  std::unordered_map<std::string, int64_t> pos_ids;

  ~Impl() {
    cache.clear();
    if (db != nullptr) sqlite3_close(db);
  }

  Stmt &stmt(const std::string &sql) {
    auto it = cache.find(sql);
    if (it == cache.end()) it = cache.emplace(sql, std::make_unique<Stmt>(db, sql)).first;
    return *it->second;
  }

  void exec(const std::string &sql) {
    char *err = nullptr;
    int rc = sqlite3_exec(db, sql.c_str(), nullptr, nullptr, &err);
    if (rc != SQLITE_OK) {
      std::string msg = err != nullptr ? err : "";
      sqlite3_free(err);
      throw_sqlite(db, rc, "exec: " + msg);
    }
  }

  int64_t scalar(const std::string &sql) {
    Stmt &s = stmt(sql);
    Resetter r(s);
    return s.step() ? s.get_int(0) : 0;
  }

  std::optional<std::string> meta_value(const std::string &key) {
    Stmt &s = stmt("SELECT value FROM wiktmrd_meta WHERE key = ?1");
    Resetter r(s);
    s.bind(1, key);
    if (!s.step()) return std::nullopt;
    return s.get_text(0);
  }

  void set_meta_value(const std::string &key, const std::string &value) {
    Stmt &s = stmt("INSERT OR REPLACE INTO wiktmrd_meta(key, value) VALUES (?1, ?2)");
    s.bind(1, key).bind(2, value).run();
  }

  void bump_counter(const char *scope, const char *name, int64_t delta) {
    Stmt &s = stmt(
        "INSERT INTO wiktmrd_counter(scope, name, value) VALUES (?1, ?2, ?3) "
        "ON CONFLICT(scope, name) DO UPDATE SET value = value + excluded.value");
    s.bind(1, std::string_view(scope)).bind(2, std::string_view(name)).bind(3, delta).run();
  }

  std::map<std::string, int64_t> counters(const char *scope) {
    std::map<std::string, int64_t> out;
    Stmt &s = stmt("SELECT name, value FROM wiktmrd_counter WHERE scope = ?1");
    Resetter r(s);
    s.bind(1, std::string_view(scope));
    while (s.step()) out[s.get_text(0)] = s.get_int(1);
    return out;
  }

  std::vector<std::string> index_tables() {
    std::vector<std::string> out;
    Stmt &s = stmt("SELECT name FROM wiktmrd_index ORDER BY name");
    Resetter r(s);
    while (s.step()) out.push_back(s.get_text(0));
    return out;
  }

  void seed_relation_types() {
    Stmt &s = stmt("INSERT OR IGNORE INTO relation_type(id, name) VALUES (?1, ?2)");
    for (RelationType t : kAllRelationTypes) {
      s.bind(1, static_cast<int64_t>(t) + 1).bind(2, relation_type_name(t)).run();
    }
  }

  void clear_caches() {
    lang_ids.clear();
    pos_ids.clear();
  }

  int64_t lookup_or_insert(std::unordered_map<std::string, int64_t> &cache_map,
                           const std::string &select, const std::string &insert,
                           const std::string &key, const std::function<void()> &hook) {
    auto it = cache_map.find(key);
    if (it != cache_map.end()) return it->second;
    int64_t id = 0;
    {
      Stmt &s = stmt(select);
      Resetter r(s);
      s.bind(1, key);
      if (s.step()) id = s.get_int(0);
    }
    if (id == 0) {
      stmt(insert).bind(1, key).run();
      id = sqlite3_last_insert_rowid(db);
      if (hook) hook();
    }
    cache_map.emplace(key, id);
    return id;
  }

  int64_t lang_id(const std::string &code, const std::function<void()> &hook) {
    return lookup_or_insert(lang_ids, "SELECT id FROM lang WHERE code = ?1",
                            "INSERT INTO lang(code) VALUES (?1)", code, hook);
  }

  int64_t pos_id(PartOfSpeech pos, const std::function<void()> &hook) {
    return lookup_or_insert(pos_ids, "SELECT id FROM pos WHERE name = ?1",
                            "INSERT INTO pos(name) VALUES (?1)", std::string(pos_name(pos)),
                            hook);
  }

  int64_t intern_text(std::string_view text, const std::function<void()> &hook) {
    std::string_view kept = truncate_utf8(text, kMaxWikiTextBytes);
    if (kept.size() < text.size()) bump_counter(kStoreScope, kTruncatedCounter, 1);
    {
      Stmt &s = stmt("SELECT id FROM wiki_text WHERE text = ?1");
      Resetter r(s);
      s.bind(1, kept);
      if (s.step()) return s.get_int(0);
    }
    stmt("INSERT INTO wiki_text(text) VALUES (?1)").bind(1, kept).run();
    int64_t id = sqlite3_last_insert_rowid(db);
    if (hook) hook();
    std::set<std::string> seen;
    Stmt &words = stmt("INSERT INTO wiki_text_words(wiki_text_id, page_ref_title) VALUES (?1, ?2)");
    for (const WikiLink &link : scan_wikilinks(kept)) {
      std::string_view target = link.target;
      size_t anchor = target.find('#');
      if (anchor != std::string_view::npos) target = trim(target.substr(0, anchor));
      if (target.empty() || has_namespace_prefix(target)) continue;
      if (!seen.emplace(target).second) continue;
      words.bind(1, id).bind(2, target).run();
      if (hook) hook();
    }
    return id;
  }

  // Removes every row belonging to the page titled `title`, then any
  // wiki_text rows nothing refers to any more.
  void delete_page(const std::string &title) {
    int64_t page_id = 0;
    {
      Stmt &s = stmt("SELECT id FROM page WHERE title = ?1");
      Resetter r(s);
      s.bind(1, title);
      if (!s.step()) return;
      page_id = s.get_int(0);
    }
    std::vector<int64_t> lang_pos_ids;
    {
      Stmt &s = stmt("SELECT id FROM lang_pos WHERE page_id = ?1");
      Resetter r(s);
      s.bind(1, page_id);
      while (s.step()) lang_pos_ids.push_back(s.get_int(0));
    }
    std::set<int64_t> texts;
    auto collect = [&](const char *sql, int64_t lp) {
      Stmt &s = stmt(sql);
      Resetter r(s);
      s.bind(1, lp);
      while (s.step()) {
        if (!s.is_null(0)) texts.insert(s.get_int(0));
      }
    };
    std::vector<std::string> indexes = index_tables();
    for (int64_t lp : lang_pos_ids) {
      collect("SELECT wiki_text_id FROM meaning WHERE lang_pos_id = ?1", lp);
      collect("SELECT wiki_text_id FROM relation WHERE lang_pos_id = ?1", lp);
      collect("SELECT gloss_wiki_text_id FROM translation WHERE lang_pos_id = ?1", lp);
      collect(
          "SELECT e.wiki_text_id FROM translation_entry e JOIN translation t "
          "ON t.id = e.translation_id WHERE t.lang_pos_id = ?1",
          lp);
      stmt("DELETE FROM translation_entry WHERE translation_id IN "
           "(SELECT id FROM translation WHERE lang_pos_id = ?1)")
          .bind(1, lp)
          .run();
      stmt("DELETE FROM translation WHERE lang_pos_id = ?1").bind(1, lp).run();
      stmt("DELETE FROM relation WHERE lang_pos_id = ?1").bind(1, lp).run();
      stmt("DELETE FROM meaning WHERE lang_pos_id = ?1").bind(1, lp).run();
      stmt("DELETE FROM inflection WHERE lang_pos_id = ?1").bind(1, lp).run();
      for (const std::string &index : indexes) {
        stmt("DELETE FROM " + quote_ident(index) + " WHERE lang_pos_id = ?1").bind(1, lp).run();
      }
    }
    stmt("DELETE FROM lang_pos WHERE page_id = ?1").bind(1, page_id).run();
    stmt("DELETE FROM page WHERE id = ?1").bind(1, page_id).run();
    for (int64_t text_id : texts) {
      int64_t refs = 0;
      {
        Stmt &s = stmt(
            "SELECT (SELECT COUNT(*) FROM meaning WHERE wiki_text_id = ?1) + "
            "(SELECT COUNT(*) FROM relation WHERE wiki_text_id = ?1) + "
            "(SELECT COUNT(*) FROM translation WHERE gloss_wiki_text_id = ?1) + "
            "(SELECT COUNT(*) FROM translation_entry WHERE wiki_text_id = ?1)");
        Resetter r(s);
        s.bind(1, text_id);
        if (s.step()) refs = s.get_int(0);
      }
      if (refs != 0) continue;
      stmt("DELETE FROM wiki_text_words WHERE wiki_text_id = ?1").bind(1, text_id).run();
      stmt("DELETE FROM wiki_text WHERE id = ?1").bind(1, text_id).run();
    }
  }

  std::string native_language() { return meta_value("native_language").value_or(""); }
};

MrdStore::MrdStore(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
MrdStore::~MrdStore() {
  if (in_batch_) {
    // An unfinished batch never reaches the disk.
    sqlite3_exec(impl_->db, "ROLLBACK", nullptr, nullptr, nullptr);
  }
}

const std::vector<std::string> &core_table_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const TableDef &def : table_defs()) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

std::vector<std::string> table_columns(const std::string &table) {
  const TableDef *def = &kIndexDef;
  for (const TableDef &d : table_defs()) {
    if (table == d.name) def = &d;
  }
  if (def == &kIndexDef && !table.starts_with("index_")) {
    throw NotFound("no such table: " + table);
  }
  std::vector<std::string> out;
  for (const Column &c : def->columns) out.emplace_back(c.name);
  return out;
}

std::unique_ptr<MrdStore> MrdStore::open(const std::string &path, Mode mode) {
  auto impl = std::make_unique<Impl>();
  impl->read_only = mode == Mode::kReadOnly;
  bool memory = path == ":memory:";
  if (impl->read_only && !memory && !std::filesystem::exists(path)) {
    throw NotFound("store not found: " + path);
  }
  int flags = impl->read_only ? SQLITE_OPEN_READONLY : SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE;
  int rc = sqlite3_open_v2(path.c_str(), &impl->db, flags | SQLITE_OPEN_NOMUTEX, nullptr);
  if (rc != SQLITE_OK) throw_sqlite(impl->db, rc, "open " + path);
  sqlite3_extended_result_codes(impl->db, 0);
  sqlite3_busy_timeout(impl->db, 5000);
  if (impl->read_only) {
    if (impl->scalar("SELECT COUNT(*) FROM sqlite_master WHERE name = 'wiktmrd_meta'") == 0) {
      throw CorruptStore("not a wiktmrd store: " + path);
    }
  } else {
    if (!memory) impl->exec("PRAGMA journal_mode = WAL");
    impl->exec("PRAGMA synchronous = NORMAL");
    impl->exec("BEGIN");
    impl->exec(kSchema);
    impl->seed_relation_types();
    impl->set_meta_value("schema_version", "1");
    impl->exec("COMMIT");
  }
  return std::unique_ptr<MrdStore>(new MrdStore(std::move(impl)));
}

std::optional<StoreMeta> MrdStore::meta() const {
  std::optional<std::string> dialect = impl_->meta_value("dialect");
  if (!dialect) return std::nullopt;
  std::optional<Dialect> d = parse_dialect(*dialect);
  if (!d) throw CorruptStore("bad dialect in store: " + *dialect);
  return StoreMeta{*d, impl_->native_language()};
}

void MrdStore::set_meta(const StoreMeta &meta) {
  impl_->set_meta_value("dialect", std::string(dialect_code(meta.dialect)));
  impl_->set_meta_value("native_language", meta.native_language);
}

void MrdStore::reset() {
  if (in_batch_) throw Error("reset inside a batch");
  impl_->exec("BEGIN");
  try {
    impl_->cache.clear();
    for (const std::string &index : impl_->index_tables()) {
      impl_->exec("DROP TABLE IF EXISTS " + quote_ident(index));
    }
    impl_->exec("DELETE FROM wiktmrd_index");
    for (const std::string &table : core_table_names()) impl_->exec("DELETE FROM " + table);
    impl_->exec("DELETE FROM wiktmrd_counter");
    impl_->exec("DELETE FROM wiktmrd_meta WHERE key <> 'schema_version'");
    impl_->seed_relation_types();
    impl_->exec("COMMIT");
  } catch (...) {
    impl_->exec("ROLLBACK");
    throw;
  }
  impl_->clear_caches();
}

void MrdStore::begin_batch() {
  if (in_batch_) throw Error("batch already open");
  impl_->exec("BEGIN IMMEDIATE");
  in_batch_ = true;
}

void MrdStore::commit_batch() {
  if (!in_batch_) throw Error("no open batch");
  impl_->exec("COMMIT");
  in_batch_ = false;
}

void MrdStore::rollback_batch() {
  if (!in_batch_) return;
  in_batch_ = false;
  impl_->clear_caches();
  impl_->exec("ROLLBACK");
}

SavedIds MrdStore::save_word(const ParsedPage &page) {
  if (page.title.empty()) throw Error("save_word: empty title");
  Impl &db = *impl_;
  const std::function<void()> &hook = row_hook_;
  db.exec("SAVEPOINT save_word");
  SavedIds ids;
  try {
    db.delete_page(page.title);
    {
      Stmt &s = db.stmt(
          "INSERT INTO page(title, record_id, is_soft_redirect, redirect_target) "
          "VALUES (?1, ?2, ?3, ?4)");
      s.bind(1, page.title)
          .bind(2, static_cast<int64_t>(page.record_id))
          .bind(3, int64_t{page.is_soft_redirect() ? 1 : 0});
      if (page.is_redirect) {
        s.bind(4, std::string_view(page.redirect_target));
      } else {
        s.bind_null(4);
      }
      s.run();
      ids.page_id = sqlite3_last_insert_rowid(db.db);
      if (hook) hook();
    }
    for (const ParsedLangPos &lp : page.lang_pos) {
      int64_t lang_id = db.lang_id(lp.language.code, hook);
      int64_t pos_id = db.pos_id(lp.pos, hook);
      db.stmt("INSERT INTO lang_pos(page_id, lang_id, pos_id, etymology_ordinal) "
              "VALUES (?1, ?2, ?3, ?4)")
          .bind(1, ids.page_id)
          .bind(2, lang_id)
          .bind(3, pos_id)
          .bind(4, int64_t{lp.etymology_ordinal})
          .run();
      int64_t lang_pos_id = sqlite3_last_insert_rowid(db.db);
      ids.lang_pos_ids.push_back(lang_pos_id);
      if (hook) hook();

      std::map<int, int64_t> meaning_ids;
      for (const Meaning &m : lp.meanings) {
        int64_t text_id = db.intern_text(m.definition_wikitext, hook);
        db.stmt("INSERT INTO meaning(lang_pos_id, ordinal, wiki_text_id) VALUES (?1, ?2, ?3)")
            .bind(1, lang_pos_id)
            .bind(2, int64_t{m.ordinal})
            .bind(3, text_id)
            .run();
        meaning_ids[m.ordinal] = sqlite3_last_insert_rowid(db.db);
        if (hook) hook();
      }
      for (const RelationRecord &r : lp.relations) {
        std::optional<int64_t> meaning_id;
        if (r.meaning_ordinal) {
          auto it = meaning_ids.find(*r.meaning_ordinal);
          if (it != meaning_ids.end()) meaning_id = it->second;
        }
        int64_t text_id = db.intern_text(r.target_wikitext, hook);
        db.stmt("INSERT INTO relation(meaning_id, lang_pos_id, relation_type_id, wiki_text_id) "
                "VALUES (?1, ?2, ?3, ?4)")
            .bind(1, meaning_id)
            .bind(2, lang_pos_id)
            .bind(3, static_cast<int64_t>(r.relation_type) + 1)
            .bind(4, text_id)
            .run();
        if (hook) hook();
      }
      for (const TranslationBox &box : lp.translations) {
        std::optional<int64_t> gloss_id;
        if (!box.gloss.empty()) gloss_id = db.intern_text(box.gloss, hook);
        db.stmt("INSERT INTO translation(lang_pos_id, gloss_wiki_text_id) VALUES (?1, ?2)")
            .bind(1, lang_pos_id)
            .bind(2, gloss_id)
            .run();
        int64_t box_id = sqlite3_last_insert_rowid(db.db);
        if (hook) hook();
        for (const TranslationEntry &e : box.entries) {
          int64_t entry_lang = db.lang_id(e.language.code, hook);
          int64_t text_id = db.intern_text(e.target_wikitext, hook);
          Stmt &s = db.stmt(
              "INSERT INTO translation_entry(translation_id, lang_id, wiki_text_id, "
              "transliteration) VALUES (?1, ?2, ?3, ?4)");
          s.bind(1, box_id).bind(2, entry_lang).bind(3, text_id);
          if (e.transliteration.empty()) {
            s.bind_null(4);
          } else {
            s.bind(4, std::string_view(e.transliteration));
          }
          s.run();
          if (hook) hook();
        }
      }
      if (lp.soft_redirect) {
        db.stmt("INSERT INTO inflection(lang_pos_id, form_kind, lemma_title) VALUES (?1, ?2, ?3)")
            .bind(1, lang_pos_id)
            .bind(2, std::string_view(lp.soft_redirect->form_kind))
            .bind(3, std::string_view(lp.soft_redirect->lemma_title))
            .run();
        if (hook) hook();
      }
    }
    db.exec("RELEASE save_word");
  } catch (...) {
    try {
      db.exec("ROLLBACK TO save_word");
      db.exec("RELEASE save_word");
    } catch (const Error &) {
      // The original error is more useful than the rollback failure.
    }
    db.clear_caches();
    throw;
  }
  return ids;
}

std::map<std::string, int64_t> MrdStore::table_sizes() const {
  std::map<std::string, int64_t> out;
  for (const std::string &table : core_table_names()) {
    out[table] = impl_->scalar("SELECT COUNT(*) FROM " + table);
  }
  for (const std::string &index : impl_->index_tables()) {
    out[index] = impl_->scalar("SELECT COUNT(*) FROM " + quote_ident(index));
  }
  return out;
}

std::map<std::string, int64_t> MrdStore::build_index_tables() {
  Impl &db = *impl_;
  bool own = !in_batch_;
  if (own) db.exec("BEGIN IMMEDIATE");
  std::map<std::string, int64_t> counts;
  try {
    db.cache.clear();
    for (const std::string &index : db.index_tables()) {
      db.exec("DROP TABLE IF EXISTS " + quote_ident(index));
    }
    db.exec("DELETE FROM wiktmrd_index");

    std::string native = db.native_language();
    std::vector<std::string> codes;
    {
      Stmt &s = db.stmt(
          "SELECT DISTINCT l.code FROM lang_pos lp JOIN lang l ON l.id = lp.lang_id "
          "ORDER BY l.code");
      Resetter r(s);
      while (s.step()) codes.push_back(s.get_text(0));
    }
    auto build = [&](const std::string &table, const std::string &code) {
      std::string q = quote_ident(table);
      db.exec("CREATE TABLE " + q + "(word TEXT NOT NULL, lang_pos_id INTEGER NOT NULL)");
      db.stmt("INSERT INTO " + q +
              "(word, lang_pos_id) SELECT p.title, lp.id FROM lang_pos lp "
              "JOIN page p ON p.id = lp.page_id JOIN lang l ON l.id = lp.lang_id "
              "WHERE l.code = ?1 ORDER BY p.title, lp.id")
          .bind(1, code)
          .run();
      db.exec("CREATE INDEX " + quote_ident(table + "_word") + " ON " + q + "(word)");
      db.stmt("INSERT INTO wiktmrd_index(name) VALUES (?1)").bind(1, table).run();
      counts[table] = db.scalar("SELECT COUNT(*) FROM " + q);
    };
    build(kNativeIndex, native);
    for (const std::string &code : codes) {
      if (code != native) build("index_" + code, code);
    }
    if (own) db.exec("COMMIT");
  } catch (...) {
    if (own) db.exec("ROLLBACK");
    db.cache.clear();
    throw;
  }
  return counts;
}

std::vector<IndexHit> MrdStore::lookup_prefix(const std::string &index_table,
                                              std::string_view prefix, size_t limit) const {
  std::vector<std::string> tables = impl_->index_tables();
  if (std::find(tables.begin(), tables.end(), index_table) == tables.end()) {
    throw NotFound("no index table " + index_table);
  }
  // 0xFF never occurs in UTF-8, so prefix + "\xFF" bounds every extension.
  std::string upper = std::string(prefix) + "\xFF";
  Stmt &s = impl_->stmt("SELECT word, lang_pos_id FROM " + quote_ident(index_table) +
                        " WHERE word >= ?1 AND word < ?2 ORDER BY word, lang_pos_id LIMIT ?3");
  Resetter r(s);
  s.bind(1, prefix).bind(2, std::string_view(upper)).bind(3, static_cast<int64_t>(limit));
  std::vector<IndexHit> out;
  while (s.step()) out.push_back({s.get_text(0), s.get_int(1)});
  return out;
}

void MrdStore::save_checkpoint(const Checkpoint &cp) {
  Impl &db = *impl_;
  Checkpoint previous = load_checkpoint();
  if (cp.last_record_id < previous.last_record_id) {
    throw Error("checkpoint would move backwards from record " +
                std::to_string(previous.last_record_id) + " to " +
                std::to_string(cp.last_record_id));
  }
  bool own = !in_batch_;
  if (own) db.exec("BEGIN IMMEDIATE");
  try {
    db.set_meta_value("checkpoint.last_record_id", std::to_string(cp.last_record_id));
    db.set_meta_value("checkpoint.dump_identity", cp.dump_identity);
    db.stmt("DELETE FROM wiktmrd_counter WHERE scope = ?1")
        .bind(1, std::string_view(kCheckpointScope))
        .run();
    for (const auto &[name, value] : cp.counters) {
      db.stmt("INSERT INTO wiktmrd_counter(scope, name, value) VALUES (?1, ?2, ?3)")
          .bind(1, std::string_view(kCheckpointScope))
          .bind(2, name)
          .bind(3, value)
          .run();
    }
    if (own) db.exec("COMMIT");
  } catch (...) {
    if (own) db.exec("ROLLBACK");
    throw;
  }
}

Checkpoint MrdStore::load_checkpoint(const std::optional<std::string> &expected_identity) const {
  Checkpoint cp;
  std::optional<std::string> record = impl_->meta_value("checkpoint.last_record_id");
  if (!record) return cp;
  int64_t n = 0;
  if (!parse_int(*record, n) || n < 0) throw CorruptStore("bad checkpoint record: " + *record);
  cp.last_record_id = static_cast<uint64_t>(n);
  cp.dump_identity = impl_->meta_value("checkpoint.dump_identity").value_or("");
  cp.counters = impl_->counters(kCheckpointScope);
  if (expected_identity && !cp.dump_identity.empty() && cp.dump_identity != *expected_identity) {
    throw ChecksumMismatch("store was checkpointed against dump " + cp.dump_identity +
                           ", current dump is " + *expected_identity);
  }
  return cp;
}

std::map<std::string, int64_t> MrdStore::store_counters() const {
  return impl_->counters(kStoreScope);
}

std::vector<std::string> MrdStore::integrity_violations() const {
  std::vector<std::string> out;
  auto check = [&](const std::string &table, const std::string &column,
                   const std::string &target) {
    std::string q = quote_ident(table);
    Stmt &s = impl_->stmt("SELECT t." + column + " FROM " + q + " t LEFT JOIN " + target +
                          " r ON r.id = t." + column + " WHERE t." + column +
                          " IS NOT NULL AND r.id IS NULL ORDER BY t." + column + " LIMIT 20");
    Resetter r(s);
    while (s.step()) out.push_back(table + "." + column + "=" + std::to_string(s.get_int(0)));
  };
  for (const auto &fk : kForeignKeys) check(fk[0], fk[1], fk[2]);
  for (const std::string &index : impl_->index_tables()) check(index, "lang_pos_id", "lang_pos");
  if (impl_->scalar("SELECT COUNT(*) FROM relation_type") != kRelationTypeCount) {
    out.push_back("relation_type row count");
  }
  return out;
}

void MrdStore::export_tsv(const std::filesystem::path &dir) const {
  std::vector<std::string> violations = integrity_violations();
  if (!violations.empty()) {
    throw CorruptStore("referential integrity violated: " + violations.front());
  }
  std::filesystem::create_directories(dir);
  std::vector<std::string> indexes = impl_->index_tables();
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (name.starts_with("index_") && name.ends_with(".tsv") &&
        std::find(indexes.begin(), indexes.end(), name.substr(0, name.size() - 4)) ==
            indexes.end()) {
      std::filesystem::remove(entry.path());
    }
  }

  auto write_table = [&](const std::string &table, const TableDef &def,
                         const std::string &order) {
    std::ofstream out(dir / (table + ".tsv"), std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + (dir / (table + ".tsv")).string());
    std::string cols;
    for (size_t i = 0; i < def.columns.size(); ++i) {
      if (i > 0) cols += ", ";
      cols += def.columns[i].name;
      out << (i > 0 ? "\t" : "") << def.columns[i].name;
    }
    out << '\n';
    Stmt s(impl_->db, "SELECT " + cols + " FROM " + quote_ident(table) + " ORDER BY " + order);
    while (s.step()) {
      for (size_t i = 0; i < def.columns.size(); ++i) {
        if (i > 0) out << '\t';
        int c = static_cast<int>(i);
        if (s.is_null(c)) continue;
        if (def.columns[i].type == ColType::kInt) {
          out << s.get_int(c);
        } else {
          out << tsv_escape(s.get_text(c));
        }
      }
      out << '\n';
    }
    if (!out.flush()) throw Error("write failed: " + table + ".tsv");
  };
  for (const TableDef &def : table_defs()) write_table(def.name, def, "id");
  for (const std::string &index : indexes) write_table(index, kIndexDef, "word, lang_pos_id");

  std::ofstream meta(dir / "meta.tsv", std::ios::binary | std::ios::trunc);
  meta << "key\tvalue\n";
  if (std::optional<StoreMeta> m = this->meta()) {
    meta << "dialect\t" << dialect_code(m->dialect) << '\n';
    meta << "native_language\t" << tsv_escape(m->native_language) << '\n';
  }
  if (!meta.flush()) throw Error("write failed: meta.tsv");
}

void MrdStore::import_tsv(const std::filesystem::path &dir) {
  Impl &db = *impl_;
  if (in_batch_) throw Error("import inside a batch");
  if (db.scalar("SELECT COUNT(*) FROM page") != 0 || db.scalar("SELECT COUNT(*) FROM lang") != 0 ||
      db.scalar("SELECT COUNT(*) FROM wiki_text") != 0) {
    throw Error("import target store is not empty");
  }

  auto read_table = [&](const std::string &table, const TableDef &def) {
    std::filesystem::path path = dir / (table + ".tsv");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedRow(table, 0, "missing file " + path.string());
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw MalformedRow(table, 1, "missing header");
    ++line_no;
    std::string expected;
    for (size_t i = 0; i < def.columns.size(); ++i) {
      expected += (i > 0 ? "\t" : "") + std::string(def.columns[i].name);
    }
    if (line != expected) throw MalformedRow(table, 1, "header is not \"" + expected + "\"");

    std::string cols, params;
    for (size_t i = 0; i < def.columns.size(); ++i) {
      cols += (i > 0 ? ", " : "") + std::string(def.columns[i].name);
      params += (i > 0 ? ", ?" : "?") + std::to_string(i + 1);
    }
    Stmt insert(db.db,
                "INSERT INTO " + quote_ident(table) + "(" + cols + ") VALUES (" + params + ")");
    std::string value;
    while (std::getline(in, line)) {
      ++line_no;
      std::vector<std::string_view> fields = split(line, '\t');
      if (fields.size() != def.columns.size()) {
        throw MalformedRow(table, line_no,
                           "expected " + std::to_string(def.columns.size()) + " fields, got " +
                               std::to_string(fields.size()));
      }
      for (size_t i = 0; i < fields.size(); ++i) {
        const Column &col = def.columns[i];
        int idx = static_cast<int>(i) + 1;
        if (fields[i].empty() && col.nullable) {
          insert.bind_null(idx);
        } else if (col.type == ColType::kInt) {
          int64_t n = 0;
          if (!parse_int(fields[i], n)) {
            throw MalformedRow(table, line_no, std::string("bad integer in ") + col.name);
          }
          insert.bind(idx, n);
        } else {
          if (!tsv_unescape(fields[i], value)) {
            throw MalformedRow(table, line_no, std::string("bad escape in ") + col.name);
          }
          insert.bind(idx, std::string_view(value));
        }
      }
      try {
        insert.run();
      } catch (const Error &e) {
        throw MalformedRow(table, line_no, e.what());
      }
    }
  };

  db.exec("BEGIN IMMEDIATE");
  try {
    db.exec("DELETE FROM relation_type");
    for (const TableDef &def : table_defs()) read_table(def.name, def);

    std::ifstream meta(dir / "meta.tsv", std::ios::binary);
    if (meta) {
      std::string line, value;
      int line_no = 0;
      while (std::getline(meta, line)) {
        if (++line_no == 1) continue;
        std::vector<std::string_view> f = split(line, '\t');
        if (f.size() != 2 || !tsv_unescape(f[1], value)) {
          throw MalformedRow("meta", line_no, "expected key and value");
        }
        if (f[0] == "dialect" && !parse_dialect(value)) {
          throw MalformedRow("meta", line_no, "unknown dialect " + value);
        }
        if (f[0] == "dialect" || f[0] == "native_language") {
          db.set_meta_value(std::string(f[0]), value);
        }
      }
    }

    std::vector<std::string> indexes;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
      std::string name = entry.path().filename().string();
      if (name.starts_with("index_") && name.ends_with(".tsv")) {
        indexes.push_back(name.substr(0, name.size() - 4));
      }
    }
    std::sort(indexes.begin(), indexes.end());
    for (const std::string &index : indexes) {
      std::string q = quote_ident(index);
      db.exec("CREATE TABLE " + q + "(word TEXT NOT NULL, lang_pos_id INTEGER NOT NULL)");
      read_table(index, kIndexDef);
      db.exec("CREATE INDEX " + quote_ident(index + "_word") + " ON " + q + "(word)");
      db.stmt("INSERT INTO wiktmrd_index(name) VALUES (?1)").bind(1, index).run();
    }

    std::vector<std::string> violations = integrity_violations();
    if (!violations.empty()) {
      throw CorruptStore("imported data fails referential check: " + violations.front());
    }
    db.exec("COMMIT");
  } catch (...) {
    db.cache.clear();
    sqlite3_exec(db.db, "ROLLBACK", nullptr, nullptr, nullptr);
    db.clear_caches();
    throw;
  }
  db.clear_caches();
}

StoreSnapshot MrdStore::snapshot() const {
  StoreSnapshot snap;
  snap.native_language = impl_->native_language();
  snap.content_pages = impl_->scalar("SELECT COUNT(*) FROM page WHERE redirect_target IS NULL");
  snap.translation_boxes = impl_->scalar("SELECT COUNT(*) FROM translation");
  snap.empty_translation_boxes = impl_->scalar(
      "SELECT COUNT(*) FROM translation t WHERE NOT EXISTS "
      "(SELECT 1 FROM translation_entry e WHERE e.translation_id = t.id)");
  snap.translation_entries = impl_->scalar("SELECT COUNT(*) FROM translation_entry");
  {
    Stmt &s = impl_->stmt(
        "SELECT lp.id, p.title, l.code, po.name, lp.etymology_ordinal, "
        "(SELECT COUNT(*) FROM meaning m WHERE m.lang_pos_id = lp.id), "
        "(SELECT COUNT(*) FROM translation t WHERE t.lang_pos_id = lp.id) "
        "FROM lang_pos lp JOIN page p ON p.id = lp.page_id JOIN lang l ON l.id = lp.lang_id "
        "JOIN pos po ON po.id = lp.pos_id ORDER BY lp.id");
    Resetter r(s);
    while (s.step()) {
      LangPosRow row;
      row.id = s.get_int(0);
      row.title = s.get_text(1);
      row.lang_code = s.get_text(2);
      row.pos = parse_pos(s.get_text(3)).value_or(PartOfSpeech::kUnknown);
      row.etymology_ordinal = static_cast<int>(s.get_int(4));
      row.meaning_count = s.get_int(5);
      row.translation_count = s.get_int(6);
      snap.lang_pos.push_back(std::move(row));
    }
  }
  {
    Stmt &s = impl_->stmt(
        "SELECT r.lang_pos_id, rt.name, w.text FROM relation r "
        "JOIN relation_type rt ON rt.id = r.relation_type_id "
        "JOIN wiki_text w ON w.id = r.wiki_text_id ORDER BY r.id");
    Resetter r(s);
    while (s.step()) {
      std::optional<RelationType> type = parse_relation_type(s.get_text(1));
      if (!type) throw CorruptStore("unknown relation type " + s.get_text(1));
      snap.relations.push_back({s.get_int(0), *type, strip_markup(s.get_text(2))});
    }
  }
  return snap;
}

std::vector<EntryView> MrdStore::find_entries(const std::string &title,
                                              const std::optional<std::string> &lang_code) const {
  Impl &db = *impl_;
  std::vector<EntryView> out;
  std::vector<int64_t> ids;
  {
    Stmt &s = db.stmt(
        "SELECT lp.id, l.code, po.name, lp.etymology_ordinal FROM lang_pos lp "
        "JOIN page p ON p.id = lp.page_id JOIN lang l ON l.id = lp.lang_id "
        "JOIN pos po ON po.id = lp.pos_id WHERE p.title = ?1 ORDER BY lp.id");
    Resetter r(s);
    s.bind(1, title);
    while (s.step()) {
      std::string code = s.get_text(1);
      if (lang_code && code != *lang_code) continue;
      EntryView v;
      v.title = title;
      v.lang_code = std::move(code);
      v.pos = parse_pos(s.get_text(2)).value_or(PartOfSpeech::kUnknown);
      v.etymology_ordinal = static_cast<int>(s.get_int(3));
      ids.push_back(s.get_int(0));
      out.push_back(std::move(v));
    }
  }
  for (size_t k = 0; k < ids.size(); ++k) {
    EntryView &v = out[k];
    int64_t lp = ids[k];
    {
      Stmt &s = db.stmt(
          "SELECT w.text FROM meaning m JOIN wiki_text w ON w.id = m.wiki_text_id "
          "WHERE m.lang_pos_id = ?1 ORDER BY m.ordinal");
      Resetter r(s);
      s.bind(1, lp);
      while (s.step()) v.definitions.push_back(s.get_text(0));
    }
    {
      Stmt &s = db.stmt(
          "SELECT m.ordinal, rt.name, w.text FROM relation r "
          "LEFT JOIN meaning m ON m.id = r.meaning_id "
          "JOIN relation_type rt ON rt.id = r.relation_type_id "
          "JOIN wiki_text w ON w.id = r.wiki_text_id WHERE r.lang_pos_id = ?1 ORDER BY r.id");
      Resetter r(s);
      s.bind(1, lp);
      while (s.step()) {
        EntryRelation rel;
        if (!s.is_null(0)) rel.meaning_ordinal = static_cast<int>(s.get_int(0));
        rel.type = parse_relation_type(s.get_text(1)).value_or(RelationType::kSeeAlso);
        rel.target_wikitext = s.get_text(2);
        v.relations.push_back(std::move(rel));
      }
    }
    std::vector<int64_t> box_ids;
    {
      Stmt &s = db.stmt(
          "SELECT t.id, w.text FROM translation t LEFT JOIN wiki_text w "
          "ON w.id = t.gloss_wiki_text_id WHERE t.lang_pos_id = ?1 ORDER BY t.id");
      Resetter r(s);
      s.bind(1, lp);
      while (s.step()) {
        box_ids.push_back(s.get_int(0));
        v.translations.push_back({s.is_null(1) ? std::string() : s.get_text(1), {}});
      }
    }
    for (size_t b = 0; b < box_ids.size(); ++b) {
      Stmt &s = db.stmt(
          "SELECT l.code, w.text, e.transliteration FROM translation_entry e "
          "JOIN lang l ON l.id = e.lang_id JOIN wiki_text w ON w.id = e.wiki_text_id "
          "WHERE e.translation_id = ?1 ORDER BY e.id");
      Resetter r(s);
      s.bind(1, box_ids[b]);
      while (s.step()) {
        v.translations[b].entries.push_back(
            {s.get_text(0), s.get_text(1), s.is_null(2) ? std::string() : s.get_text(2)});
      }
    }
    {
      Stmt &s = db.stmt("SELECT lemma_title FROM inflection WHERE lang_pos_id = ?1 ORDER BY id");
      Resetter r(s);
      s.bind(1, lp);
      if (s.step()) v.lemma = s.get_text(0);
    }
  }
  return out;
}

std::vector<ReverseHit> MrdStore::reverse_lookup(const std::string &word) const {
  std::vector<ReverseHit> out;
  Stmt &s = impl_->stmt(
      "SELECT p.title, l.code, po.name, tl.code, g.text FROM translation_entry e "
      "JOIN wiki_text w ON w.id = e.wiki_text_id "
      "JOIN translation t ON t.id = e.translation_id "
      "LEFT JOIN wiki_text g ON g.id = t.gloss_wiki_text_id "
      "JOIN lang tl ON tl.id = e.lang_id "
      "JOIN lang_pos lp ON lp.id = t.lang_pos_id "
      "JOIN page p ON p.id = lp.page_id JOIN lang l ON l.id = lp.lang_id "
      "JOIN pos po ON po.id = lp.pos_id WHERE w.text = ?1 ORDER BY e.id");
  Resetter r(s);
  s.bind(1, std::string_view(link_wikitext(word)));
  while (s.step()) {
    ReverseHit hit;
    hit.title = s.get_text(0);
    hit.lang_code = s.get_text(1);
    hit.pos = parse_pos(s.get_text(2)).value_or(PartOfSpeech::kUnknown);
    hit.translation_lang = s.get_text(3);
    hit.gloss = s.is_null(4) ? std::string() : s.get_text(4);
    out.push_back(std::move(hit));
  }
  return out;
}

}  // namespace wiktmrd
