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

#ifndef WIKTMRD_TESTS_TEST_SUPPORT_H_
#define WIKTMRD_TESTS_TEST_SUPPORT_H_

#include <array>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "synth.h"
#include "wiktmrd/analyzer.h"
#include "wiktmrd/entry_parser.h"
#include "wiktmrd/lang_registry.h"
#include "wiktmrd/pipeline.h"

namespace wiktmrd::testing {

std::filesystem::path fixture_dir();

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// Fixture pages of one edition, "<dir>/<title>.wiki", sorted by title bytes.
std::vector<synth::DumpPage> fixture_pages(Dialect dialect);

// One fixture as a Page (record id 0).
Page fixture_page(Dialect dialect, const std::string &title);

void write_dump_file(const std::filesystem::path &path, const std::vector<synth::DumpPage> &pages);

// Names of files that differ, are missing or are extra in `actual`
// compared with `expected`; empty when both hold the same bytes.
std::vector<std::string> diff_dirs(const std::filesystem::path &expected,
                                   const std::filesystem::path &actual);

// `count` well-formed synthetic entries with unique titles, plus what the
// parser must find in them.
struct SyntheticCorpus {
  std::vector<synth::DumpPage> pages;
  synth::SynthTotals totals;
};
SyntheticCorpus synthetic_corpus(std::mt19937_64 &rng, Dialect dialect, int count);

// Runs a parse in a child process that dies without cleanup once `rows`
// store rows have been written. Returns false if the parse finished first.
bool parse_killed_after_rows(const ParseConfig &config, int64_t rows);

// Parses into a fresh store file at config.store_path and exports it.
ParseReport parse_and_export(const ParseConfig &config, const std::filesystem::path &export_dir);

// Random analyzed pages for store-level properties. Titles are "w<i>";
// relation targets are drawn from the same titles so that some of them
// point at native entries.
struct RandomPagesOptions {
  int max_words = 500;
  int max_relations = 15;  // per lang_pos
  int max_types = 9;       // relation types drawn from the first N
  std::vector<std::string> languages = {"en", "fi", "de", "ko"};
};
std::vector<ParsedPage> random_pages(std::mt19937_64 &rng, const RandomPagesOptions &opts);

// Brute-force recounts over the generator output.
std::array<int64_t, 14> oracle_histogram(const std::vector<ParsedPage> &pages);
std::array<int64_t, 10> oracle_type_counts(const std::vector<ParsedPage> &pages);

struct OracleCoverage {
  std::map<std::string, std::array<int64_t, 3>> per_language;  // only_a, only_b, both
  std::set<std::string> red_list;
};
OracleCoverage oracle_coverage(const std::vector<ParsedPage> &a, const std::vector<ParsedPage> &b);

}  // namespace wiktmrd::testing

#endif  // WIKTMRD_TESTS_TEST_SUPPORT_H_
