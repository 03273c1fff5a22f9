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

#include "wiktmrd/stats_compare.h"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "wiktmrd/errors.h"

namespace wiktmrd {

namespace {

double safe_div(int64_t num, int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::unordered_map<int64_t, int64_t> relations_per_lang_pos(const StoreSnapshot &snap) {
  std::unordered_map<int64_t, int64_t> out;
  for (const RelationRow &r : snap.relations) ++out[r.lang_pos_id];
  return out;
}

std::vector<RankedLanguage> rank(const std::vector<LanguageCoverage> &langs,
                                 int64_t LanguageCoverage::*a, int64_t LanguageCoverage::*b) {
  std::vector<RankedLanguage> out;
  for (const LanguageCoverage &l : langs) {
    if (l.*a > l.*b) out.push_back({l.code, l.*a, l.*b});
  }
  std::stable_sort(out.begin(), out.end(), [](const RankedLanguage &x, const RankedLanguage &y) {
    return x.a - x.b > y.a - y.b;
  });
  return out;
}

RankedLanguage swapped(const RankedLanguage &r) { return {r.code, r.b, r.a}; }

}  // namespace

NativeStats native_stats_from_counts(const NativeCounts &counts) {
  NativeStats s;
  s.counts = counts;
  s.empty = counts.content_pages == 0;
  s.native_fraction = safe_div(counts.native_words, counts.content_pages);
  s.relations_fraction = safe_div(counts.words_with_relations, counts.content_pages);
  s.avg_relations_per_native_word = safe_div(counts.native_native_relations, counts.native_words);
  return s;
}

NativeStats compute_native_stats(const StoreSnapshot &snap, std::optional<int64_t> content_pages) {
  NativeCounts c;
  c.content_pages = content_pages.value_or(snap.content_pages);
  std::unordered_map<int64_t, int64_t> per_lp = relations_per_lang_pos(snap);
  std::unordered_set<int64_t> native_ids;
  std::unordered_set<std::string> native_titles;
  for (const LangPosRow &lp : snap.lang_pos) {
    if (per_lp.count(lp.id) != 0) ++c.words_with_relations;
    if (lp.lang_code == snap.native_language) {
      ++c.native_words;
      native_ids.insert(lp.id);
      native_titles.insert(lp.title);
    }
  }
  for (const RelationRow &r : snap.relations) {
    if (native_ids.count(r.lang_pos_id) != 0 && native_titles.count(r.target_word) != 0) {
      ++c.native_native_relations;
    }
  }
  return native_stats_from_counts(c);
}

NativeStats compute_native_stats(const MrdStore &store, std::optional<int64_t> content_pages) {
  return compute_native_stats(store.snapshot(), content_pages);
}

int64_t RelationHistogram::total() const {
  int64_t sum = 0;
  for (int64_t b : buckets) sum += b;
  return sum;
}

RelationHistogram relation_histogram(const StoreSnapshot &snap) {
  RelationHistogram h;
  std::unordered_map<int64_t, int64_t> per_lp = relations_per_lang_pos(snap);
  for (const LangPosRow &lp : snap.lang_pos) {
    auto it = per_lp.find(lp.id);
    int64_t n = it == per_lp.end() ? 0 : it->second;
    ++h.buckets[static_cast<size_t>(std::min<int64_t>(n, kHistogramBuckets - 1))];
  }
  return h;
}

RelationHistogram relation_histogram(const MrdStore &store) {
  return relation_histogram(store.snapshot());
}

TypeCountDistribution type_count_distribution(const StoreSnapshot &snap) {
  std::unordered_map<int64_t, std::bitset<kRelationTypeCount>> types;
  for (const RelationRow &r : snap.relations) {
    types[r.lang_pos_id].set(static_cast<size_t>(r.type));
  }
  TypeCountDistribution d;
  for (const auto &[id, bits] : types) ++d.counts[bits.count()];
  return d;
}

TypeCountDistribution type_count_distribution(const MrdStore &store) {
  return type_count_distribution(store.snapshot());
}

std::string format_fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string RatioRow::text() const { return ratio ? format_fixed2(*ratio) : "∞"; }

std::vector<RatioRow> ratio_report(const std::map<std::string, int64_t> &sizes_a,
                                   const std::map<std::string, int64_t> &sizes_b) {
  std::vector<RatioRow> out;
  for (const auto &[table, a] : sizes_a) {
    auto it = sizes_b.find(table);
    if (it == sizes_b.end()) throw MismatchedTables("table " + table + " missing from B");
    RatioRow row{table, a, it->second, std::nullopt};
    if (it->second != 0) {
      row.ratio = std::round(static_cast<double>(a) / static_cast<double>(it->second) * 100.0) /
                  100.0;
    }
    out.push_back(std::move(row));
  }
  for (const auto &[table, b] : sizes_b) {
    if (sizes_a.count(table) == 0) throw MismatchedTables("table " + table + " missing from A");
  }
  return out;
}

std::vector<std::string> CoverageReport::red_list() const {
  std::vector<std::string> out = only_in_a;
  out.insert(out.end(), only_in_b.begin(), only_in_b.end());
  std::sort(out.begin(), out.end());
  return out;
}

CoverageReport compare_dictionaries(const StoreSnapshot &a, const StoreSnapshot &b) {
  struct Side {
    std::set<std::string> titles;
    int64_t meanings = 0;
    int64_t relations = 0;
  };
  auto collect = [](const StoreSnapshot &snap) {
    std::map<std::string, Side> out;
    std::unordered_map<int64_t, int64_t> per_lp = relations_per_lang_pos(snap);
    for (const LangPosRow &lp : snap.lang_pos) {
      Side &s = out[lp.lang_code];
      s.titles.insert(lp.title);
      s.meanings += lp.meaning_count;
      auto it = per_lp.find(lp.id);
      if (it != per_lp.end()) s.relations += it->second;
    }
    return out;
  };
  std::map<std::string, Side> sa = collect(a), sb = collect(b);
  std::set<std::string> codes;
  for (const auto &[code, side] : sa) codes.insert(code);
  for (const auto &[code, side] : sb) codes.insert(code);

  static const Side kEmpty;
  CoverageReport report;
  for (const std::string &code : codes) {
    auto ia = sa.find(code), ib = sb.find(code);
    const Side &x = ia == sa.end() ? kEmpty : ia->second;
    const Side &y = ib == sb.end() ? kEmpty : ib->second;
    if (ia == sa.end()) report.only_in_b.push_back(code);
    if (ib == sb.end()) report.only_in_a.push_back(code);
    LanguageCoverage c;
    c.code = code;
    for (const std::string &t : x.titles) {
      if (y.titles.count(t) != 0) {
        ++c.both;
      } else {
        ++c.only_a;
      }
    }
    c.only_b = static_cast<int64_t>(y.titles.size()) - c.both;
    c.meanings_a = x.meanings;
    c.meanings_b = y.meanings;
    c.relations_a = x.relations;
    c.relations_b = y.relations;
    report.languages.push_back(std::move(c));
  }
  report.better_in_a_by_meanings =
      rank(report.languages, &LanguageCoverage::meanings_a, &LanguageCoverage::meanings_b);
  report.better_in_a_by_relations =
      rank(report.languages, &LanguageCoverage::relations_a, &LanguageCoverage::relations_b);
  for (const RankedLanguage &r :
       rank(report.languages, &LanguageCoverage::meanings_b, &LanguageCoverage::meanings_a)) {
    report.better_in_b_by_meanings.push_back(swapped(r));
  }
  for (const RankedLanguage &r :
       rank(report.languages, &LanguageCoverage::relations_b, &LanguageCoverage::relations_a)) {
    report.better_in_b_by_relations.push_back(swapped(r));
  }
  return report;
}

CoverageReport compare_dictionaries(const MrdStore &a, const MrdStore &b) {
  return compare_dictionaries(a.snapshot(), b.snapshot());
}

std::vector<Metric> stats_metrics(const MrdStore &store, std::optional<int64_t> content_pages) {
  std::vector<Metric> out;
  auto count = [&](std::string name, int64_t v) {
    out.push_back({std::move(name), static_cast<double>(v), std::nullopt, std::nullopt});
  };
  for (const auto &[table, n] : store.table_sizes()) count("table." + table, n);

  StoreSnapshot snap = store.snapshot();
  NativeStats s = compute_native_stats(snap, content_pages);
  count("entries", s.counts.content_pages);
  count("words_with_relations", s.counts.words_with_relations);
  count("native_words", s.counts.native_words);
  count("native_native_relations", s.counts.native_native_relations);
  out.push_back({"native_fraction_percent", s.native_fraction * 100.0, s.counts.native_words,
                 s.counts.content_pages});
  out.push_back({"relations_fraction_percent", s.relations_fraction * 100.0,
                 s.counts.words_with_relations, s.counts.content_pages});
  out.push_back({"avg_relations_per_native_word", s.avg_relations_per_native_word,
                 s.counts.native_native_relations, s.counts.native_words});

  RelationHistogram h = relation_histogram(snap);
  for (int i = 0; i < kHistogramBuckets; ++i) {
    std::string label = i + 1 == kHistogramBuckets ? std::to_string(i) + "+" : std::to_string(i);
    count("relation_histogram." + label, h.buckets[static_cast<size_t>(i)]);
  }
  TypeCountDistribution d = type_count_distribution(snap);
  for (int k = 1; k <= kRelationTypeCount; ++k) {
    count("type_count." + std::to_string(k), d.counts[static_cast<size_t>(k)]);
  }
  count("translation_boxes", snap.translation_boxes);
  count("translation_boxes_empty", snap.empty_translation_boxes);
  count("translation_entries", snap.translation_entries);
  for (const auto &[name, n] : store.store_counters()) count("store." + name, n);
  return out;
}

}  // namespace wiktmrd
