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

#ifndef WIKTMRD_STATS_COMPARE_H_
#define WIKTMRD_STATS_COMPARE_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wiktmrd/mrd_store.h"

namespace wiktmrd {

struct NativeCounts {
  int64_t content_pages = 0;            // entries in the dictionary
  int64_t words_with_relations = 0;     // lang_pos rows with at least one relation
  int64_t native_words = 0;             // lang_pos rows in the native language
  int64_t native_native_relations = 0;  // native rows' relations to native words
};

struct NativeStats {
  NativeCounts counts;
  double native_fraction = 0;                 // native_words / content_pages
  double relations_fraction = 0;              // words_with_relations / content_pages
  double avg_relations_per_native_word = 0;   // native_native_relations / native_words
  bool empty = false;                         // no pages at all
};

NativeStats native_stats_from_counts(const NativeCounts &counts);

// `content_pages` replaces the default denominator (non-redirect page rows).
NativeStats compute_native_stats(const StoreSnapshot &snap,
                                 std::optional<int64_t> content_pages = {});
NativeStats compute_native_stats(const MrdStore &store,
                                 std::optional<int64_t> content_pages = {});

inline constexpr int kHistogramBuckets = 14;  // 0..12 and "13+"

struct RelationHistogram {
  std::array<int64_t, kHistogramBuckets> buckets{};

  int64_t total() const;
};

// Relation counts per lang_pos row, every row included.
RelationHistogram relation_histogram(const StoreSnapshot &snap);
RelationHistogram relation_histogram(const MrdStore &store);

struct TypeCountDistribution {
  // counts[k] = lang_pos rows using exactly k distinct relation types;
  // index 0 is unused.
  std::array<int64_t, kRelationTypeCount + 1> counts{};
};

TypeCountDistribution type_count_distribution(const StoreSnapshot &snap);
TypeCountDistribution type_count_distribution(const MrdStore &store);

struct RatioRow {
  std::string table;
  int64_t a = 0;
  int64_t b = 0;
  std::optional<double> ratio;  // a / b rounded to 2 decimals; nullopt if b = 0

  std::string text() const;  // "1.57" or "∞"
};

// Throws MismatchedTables unless both maps name the same tables.
std::vector<RatioRow> ratio_report(const std::map<std::string, int64_t> &sizes_a,
                                   const std::map<std::string, int64_t> &sizes_b);

struct LanguageCoverage {
  std::string code;
  int64_t only_a = 0;
  int64_t only_b = 0;
  int64_t both = 0;
  int64_t meanings_a = 0;
  int64_t meanings_b = 0;
  int64_t relations_a = 0;
  int64_t relations_b = 0;
};

struct RankedLanguage {
  std::string code;
  int64_t a = 0;
  int64_t b = 0;
};

struct CoverageReport {
  std::vector<LanguageCoverage> languages;  // sorted by code
  std::vector<std::string> only_in_a;       // languages absent from B
  std::vector<std::string> only_in_b;
  // Languages with more meanings (relations) in one dictionary than in the
  // other, largest difference first.
  std::vector<RankedLanguage> better_in_a_by_meanings;
  std::vector<RankedLanguage> better_in_b_by_meanings;
  std::vector<RankedLanguage> better_in_a_by_relations;
  std::vector<RankedLanguage> better_in_b_by_relations;

  // The Red List: languages present in exactly one of the dictionaries.
  std::vector<std::string> red_list() const;
};

CoverageReport compare_dictionaries(const StoreSnapshot &a, const StoreSnapshot &b);
CoverageReport compare_dictionaries(const MrdStore &a, const MrdStore &b);

// One named figure of a stats report.
struct Metric {
  std::string name;
  double value = 0;
  std::optional<int64_t> numerator;
  std::optional<int64_t> denominator;
};

// Everything `wiktmrd stats` prints, in print order.
std::vector<Metric> stats_metrics(const MrdStore &store,
                                  std::optional<int64_t> content_pages = {});

// Two-decimal rendering used by every report.
std::string format_fixed2(double v);

}  // namespace wiktmrd

#endif  // WIKTMRD_STATS_COMPARE_H_
