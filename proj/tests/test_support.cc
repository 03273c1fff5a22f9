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

#include "test_support.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wiktmrd::testing {

namespace fs = std::filesystem;

fs::path fixture_dir() { return WIKTMRD_FIXTURE_DIR; }

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("wiktmrd-test-" + std::to_string(getpid()) + "-" + std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::vector<synth::DumpPage> fixture_pages(Dialect dialect) {
  std::vector<synth::DumpPage> pages;
  for (const auto &entry : fs::directory_iterator(fixture_dir() / dialect_code(dialect))) {
    if (entry.path().extension() != ".wiki") continue;
    pages.push_back({entry.path().stem().string(), read_file(entry.path()), 0});
  }
  std::sort(pages.begin(), pages.end(),
            [](const auto &a, const auto &b) { return a.title < b.title; });
  return pages;
}

Page fixture_page(Dialect dialect, const std::string &title) {
  Page page;
  page.title = title;
  page.raw_text = read_file(fixture_dir() / dialect_code(dialect) / (title + ".wiki"));
  return page;
}

void write_dump_file(const fs::path &path, const std::vector<synth::DumpPage> &pages) {
  std::ofstream out(path, std::ios::binary);
  synth::write_dump(out, pages);
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::vector<std::string> diff_dirs(const fs::path &expected, const fs::path &actual) {
  std::set<std::string> names;
  for (const fs::path &dir : {expected, actual}) {
    for (const auto &entry : fs::directory_iterator(dir)) {
      names.insert(entry.path().filename().string());
    }
  }
  std::vector<std::string> out;
  for (const std::string &name : names) {
    fs::path e = expected / name;
    fs::path a = actual / name;
    if (!fs::exists(e)) {
      out.push_back(name + " (unexpected)");
    } else if (!fs::exists(a)) {
      out.push_back(name + " (missing)");
    } else if (read_file(e) != read_file(a)) {
      out.push_back(name);
    }
  }
  return out;
}

SyntheticCorpus synthetic_corpus(std::mt19937_64 &rng, Dialect dialect, int count) {
  SyntheticCorpus corpus;
  for (int i = 0; i < count; ++i) {
    synth::SynthEntry entry = synth::random_entry(rng, dialect, synth::word(rng, i));
    corpus.totals += synth::totals(entry);
    corpus.pages.push_back({entry.title, synth::render(entry, dialect)});
  }
  return corpus;
}

bool parse_killed_after_rows(const ParseConfig &config, int64_t rows) {
  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    try {
      auto store = MrdStore::open(config.store_path);
      int64_t written = 0;
      store->set_row_hook([&] {
        if (++written == rows) _exit(0);
      });
      run_parse(config, *store);
    } catch (...) {
      _exit(2);
    }
    _exit(3);
  }
  int status = 0;
  waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || (WEXITSTATUS(status) != 0 && WEXITSTATUS(status) != 3)) {
    throw std::runtime_error("parse child failed");
  }
  return WEXITSTATUS(status) == 0;
}

ParseReport parse_and_export(const ParseConfig &config, const fs::path &export_dir) {
  ParseReport report = run_parse(config);
  MrdStore::open(config.store_path, MrdStore::Mode::kReadOnly)->export_tsv(export_dir);
  return report;
}

std::vector<ParsedPage> random_pages(std::mt19937_64 &rng, const RandomPagesOptions &opts) {
  const Registry &registry = *Registry::builtin();
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int words = uniform(0, opts.max_words);
  std::vector<ParsedPage> pages;
  for (int i = 0; i < words; ++i) {
    ParsedPage page;
    page.title = "w" + std::to_string(i);
    page.record_id = static_cast<uint64_t>(i);
    std::vector<std::string> langs = opts.languages;
    std::shuffle(langs.begin(), langs.end(), rng);
    langs.resize(static_cast<size_t>(uniform(1, std::min<int>(2, static_cast<int>(langs.size())))));
    for (const std::string &code : langs) {
      ParsedLangPos u;
      u.language = registry.lookup_code(code);
      u.pos = static_cast<PartOfSpeech>(uniform(0, 3));
      int senses = uniform(1, 3);
      for (int m = 1; m <= senses; ++m) {
        u.meanings.push_back({m, page.title + " " + code + " " + std::to_string(m), ""});
      }
      int relations = uniform(0, opts.max_relations);
      for (int r = 0; r < relations; ++r) {
        std::string target = "w" + std::to_string(uniform(0, std::max(0, 2 * words)));
        RelationRecord rec;
        rec.meaning_ordinal = uniform(0, senses);
        if (*rec.meaning_ordinal == 0) rec.meaning_ordinal.reset();
        rec.relation_type = static_cast<RelationType>(uniform(0, opts.max_types - 1));
        rec.target_word = target;
        rec.target_wikitext = "[[" + target + "]]";
        u.relations.push_back(std::move(rec));
      }
      page.lang_pos.push_back(std::move(u));
    }
    pages.push_back(std::move(page));
  }
  return pages;
}

std::array<int64_t, 14> oracle_histogram(const std::vector<ParsedPage> &pages) {
  std::array<int64_t, 14> out{};
  for (const ParsedPage &p : pages) {
    for (const ParsedLangPos &u : p.lang_pos) {
      ++out[std::min<size_t>(u.relations.size(), 13)];
    }
  }
  return out;
}

std::array<int64_t, 10> oracle_type_counts(const std::vector<ParsedPage> &pages) {
  std::array<int64_t, 10> out{};
  for (const ParsedPage &p : pages) {
    for (const ParsedLangPos &u : p.lang_pos) {
      std::set<int> types;
      for (const RelationRecord &r : u.relations) types.insert(static_cast<int>(r.relation_type));
      if (!types.empty()) ++out[types.size()];
    }
  }
  return out;
}

OracleCoverage oracle_coverage(const std::vector<ParsedPage> &a, const std::vector<ParsedPage> &b) {
  auto titles = [](const std::vector<ParsedPage> &pages) {
    std::map<std::string, std::set<std::string>> out;
    for (const ParsedPage &p : pages) {
      for (const ParsedLangPos &u : p.lang_pos) out[u.language.code].insert(p.title);
    }
    return out;
  };
  auto ta = titles(a), tb = titles(b);
  std::set<std::string> codes;
  for (const auto &[code, s] : ta) codes.insert(code);
  for (const auto &[code, s] : tb) codes.insert(code);
  OracleCoverage out;
  for (const std::string &code : codes) {
    const std::set<std::string> &x = ta[code];
    const std::set<std::string> &y = tb[code];
    std::vector<std::string> both, only_a, only_b;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(only_a));
    std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(only_b));
    out.per_language[code] = {static_cast<int64_t>(only_a.size()),
                              static_cast<int64_t>(only_b.size()),
                              static_cast<int64_t>(both.size())};
    if (x.empty() != y.empty()) out.red_list.insert(code);
  }
  return out;
}

}  // namespace wiktmrd::testing
