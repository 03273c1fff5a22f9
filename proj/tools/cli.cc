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

#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <map>

#include "wiktmrd/errors.h"
#include "wiktmrd/lang_registry.h"
#include "wiktmrd/mrd_store.h"
#include "wiktmrd/stats_compare.h"

namespace wiktmrd::cli {

namespace {

using nlohmann::json;

std::unique_ptr<MrdStore> open_existing(const std::string &path) {
  return MrdStore::open(path, MrdStore::Mode::kReadOnly);
}

std::string metric_value(const Metric &m) {
  if (m.numerator) return format_fixed2(m.value);
  return std::to_string(static_cast<int64_t>(m.value));
}

// Runs `body`, turning library errors into a message and exit code 1.
template <typename F>
int guarded(std::ostream &err, F &&body) {
  try {
    return body();
  } catch (const std::exception &e) {
    err << "wiktmrd: " << e.what() << '\n';
    return 1;
  }
}

void print_ranked(std::ostream &out, const std::string &title,
                  const std::vector<RankedLanguage> &list) {
  out << title << " (" << list.size() << ")\n";
  for (const RankedLanguage &r : list) out << "  " << r.code << '\t' << r.a << '\t' << r.b << '\n';
}

json ranked_json(const std::vector<RankedLanguage> &list) {
  json arr = json::array();
  for (const RankedLanguage &r : list) arr.push_back({{"code", r.code}, {"a", r.a}, {"b", r.b}});
  return arr;
}

}  // namespace

int cmd_parse(const ParseConfig &config, bool quiet, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    ParseConfig cfg = config;
    if (!quiet) cfg.log = &err;
    ParseReport r = run_parse(cfg);
    out << "start_record\t" << r.start_record << '\n'
        << "pages_seen\t" << r.pages_seen << '\n'
        << "pages_parsed\t" << r.pages_parsed << '\n'
        << "pages_skipped_redirect\t" << r.pages_skipped_redirect << '\n'
        << "pages_failed\t" << r.pages_failed << '\n'
        << "pages_namespace_filtered\t" << r.pages_namespace_filtered << '\n'
        << "sections_skipped_unknown_language\t" << r.sections_skipped_unknown_language << '\n'
        << "lines_skipped\t" << r.lines_skipped << '\n'
        << "elapsed_seconds\t" << format_fixed2(r.elapsed_seconds) << '\n'
        << "pages_per_second\t" << format_fixed2(r.pages_per_second) << '\n';
    return 0;
  });
}

int cmd_stats(const std::string &store_path, bool json_output,
              std::optional<int64_t> content_pages, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    std::unique_ptr<MrdStore> store = open_existing(store_path);
    std::vector<Metric> metrics = stats_metrics(*store, content_pages);
    if (json_output) {
      for (const Metric &m : metrics) {
        json line = {{"name", m.name}, {"value", m.value}};
        line["numerator"] = m.numerator ? json(*m.numerator) : json(nullptr);
        line["denominator"] = m.denominator ? json(*m.denominator) : json(nullptr);
        out << line.dump() << '\n';
      }
      return 0;
    }
    size_t width = 0;
    for (const Metric &m : metrics) width = std::max(width, m.name.size());
    for (const Metric &m : metrics) {
      out << std::left << std::setw(static_cast<int>(width) + 2) << m.name << metric_value(m);
      if (m.numerator) out << "  (" << *m.numerator << " / " << *m.denominator << ")";
      out << '\n';
    }
    return 0;
  });
}

int cmd_lookup(const std::string &store_path, const std::string &word,
               const std::optional<std::string> &lang, bool reverse, std::ostream &out,
               std::ostream &err) {
  return guarded(err, [&] {
    std::unique_ptr<MrdStore> store = open_existing(store_path);
    if (reverse) {
      std::vector<ReverseHit> hits = store->reverse_lookup(word);
      if (lang) {
        std::erase_if(hits, [&](const ReverseHit &h) { return h.translation_lang != *lang; });
      }
      if (hits.empty()) throw NotFound("no translation entry \"" + word + "\"");
      for (const ReverseHit &h : hits) {
        out << h.title << " (" << h.lang_code << ", " << pos_name(h.pos) << ")  "
            << h.translation_lang << ": " << word;
        if (!h.gloss.empty()) out << "  [" << h.gloss << "]";
        out << '\n';
      }
      return 0;
    }
    std::vector<EntryView> entries = store->find_entries(word, lang);
    if (entries.empty()) throw NotFound("no entry \"" + word + "\"");
    for (const EntryView &e : entries) {
      out << e.title << " [" << e.lang_code << "] " << pos_name(e.pos);
      if (e.etymology_ordinal > 0) out << " (etymology " << e.etymology_ordinal << ")";
      out << '\n';
      if (e.lemma) out << "  form of: " << *e.lemma << '\n';
      for (size_t i = 0; i < e.definitions.size(); ++i) {
        // Form-of definitions are all template and strip to nothing.
        std::string plain = strip_markup(e.definitions[i]);
        out << "  " << i + 1 << ". " << (plain.empty() ? e.definitions[i] : plain) << '\n';
      }
      for (RelationType t : kAllRelationTypes) {
        std::string line;
        for (const EntryRelation &r : e.relations) {
          if (r.type != t) continue;
          if (!line.empty()) line += ", ";
          line += strip_markup(r.target_wikitext);
          if (r.meaning_ordinal) line += " (" + std::to_string(*r.meaning_ordinal) + ")";
        }
        if (!line.empty()) out << "  " << relation_type_name(t) << ": " << line << '\n';
      }
      for (const EntryBox &box : e.translations) {
        out << "  translations";
        if (!box.gloss.empty()) out << " [" << strip_markup(box.gloss) << "]";
        out << ":\n";
        for (const EntryTranslation &t : box.entries) {
          out << "    " << t.lang_code << ": " << strip_markup(t.target_wikitext);
          if (!t.transliteration.empty()) out << " (" << t.transliteration << ")";
          out << '\n';
        }
      }
    }
    return 0;
  });
}

int cmd_compare(const std::string &store_a, const std::string &store_b, bool json_output,
                std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    std::unique_ptr<MrdStore> a = open_existing(store_a);
    std::unique_ptr<MrdStore> b = open_existing(store_b);
    CoverageReport report = compare_dictionaries(*a, *b);
    std::map<std::string, int64_t> sa, sb;
    std::map<std::string, int64_t> all_a = a->table_sizes(), all_b = b->table_sizes();
    for (const std::string &t : core_table_names()) {
      sa[t] = all_a[t];
      sb[t] = all_b[t];
    }
    std::vector<RatioRow> ratios = ratio_report(sa, sb);

    if (json_output) {
      for (const RatioRow &r : ratios) {
        out << json{{"kind", "table_ratio"}, {"table", r.table}, {"a", r.a}, {"b", r.b},
                    {"ratio", r.text()}}
                   .dump()
            << '\n';
      }
      for (const LanguageCoverage &c : report.languages) {
        out << json{{"kind", "language"},       {"code", c.code},
                    {"only_a", c.only_a},       {"only_b", c.only_b},
                    {"both", c.both},           {"meanings_a", c.meanings_a},
                    {"meanings_b", c.meanings_b}, {"relations_a", c.relations_a},
                    {"relations_b", c.relations_b}}
                   .dump()
            << '\n';
      }
      out << json{{"kind", "red_list"}, {"only_in_a", report.only_in_a},
                  {"only_in_b", report.only_in_b}}
                 .dump()
          << '\n';
      out << json{{"kind", "better_presented"},
                  {"a_by_meanings", ranked_json(report.better_in_a_by_meanings)},
                  {"b_by_meanings", ranked_json(report.better_in_b_by_meanings)},
                  {"a_by_relations", ranked_json(report.better_in_a_by_relations)},
                  {"b_by_relations", ranked_json(report.better_in_b_by_relations)}}
                 .dump()
          << '\n';
      return 0;
    }

    out << "table\ta\tb\ta/b\n";
    for (const RatioRow &r : ratios) {
      out << r.table << '\t' << r.a << '\t' << r.b << '\t' << r.text() << '\n';
    }
    out << "\nlanguage\tonly_a\tonly_b\tboth\tmeanings_a\tmeanings_b\trelations_a\trelations_b\n";
    for (const LanguageCoverage &c : report.languages) {
      out << c.code << '\t' << c.only_a << '\t' << c.only_b << '\t' << c.both << '\t'
          << c.meanings_a << '\t' << c.meanings_b << '\t' << c.relations_a << '\t'
          << c.relations_b << '\n';
    }
    out << "\nred list (" << report.red_list().size() << ")\n";
    for (const std::string &code : report.only_in_a) out << "  " << code << "\tonly in A\n";
    for (const std::string &code : report.only_in_b) out << "  " << code << "\tonly in B\n";
    out << '\n';
    print_ranked(out, "better in A by meanings", report.better_in_a_by_meanings);
    print_ranked(out, "better in B by meanings", report.better_in_b_by_meanings);
    print_ranked(out, "better in A by relations", report.better_in_a_by_relations);
    print_ranked(out, "better in B by relations", report.better_in_b_by_relations);
    return 0;
  });
}

int cmd_languages(const std::optional<std::string> &registry_path, std::ostream &out,
                  std::ostream &err) {
  return guarded(err, [&] {
    std::shared_ptr<const Registry> registry =
        registry_path ? Registry::load(*registry_path) : Registry::builtin();
    out << registry->size() << " language codes\n";
    for (const LanguageCode &l : registry->languages()) {
      out << l.code << '\t' << l.english_name << '\t' << l.russian_name << '\n';
    }
    return 0;
  });
}

int cmd_export(const std::string &store_path, const std::string &dir, std::ostream &out,
               std::ostream &err) {
  return guarded(err, [&] {
    std::unique_ptr<MrdStore> store = open_existing(store_path);
    store->export_tsv(dir);
    out << "exported " << store_path << " to " << dir << '\n';
    return 0;
  });
}

int cmd_import(const std::string &store_path, const std::string &dir, std::ostream &out,
               std::ostream &err) {
  return guarded(err, [&] {
    std::unique_ptr<MrdStore> store = MrdStore::open(store_path);
    store->import_tsv(dir);
    out << "imported " << dir << " into " << store_path << '\n';
    return 0;
  });
}

int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Wiktionary to machine-readable dictionary parser"};
  app.require_subcommand(1);

  ParseConfig parse;
  std::string dialect = "en";
  std::string dump, registry_path;
  uint64_t start_record = 0;
  bool quiet = false;
  CLI::App *p = app.add_subcommand("parse", "Parse a dump into a store");
  p->add_option("--dialect", dialect, "Wiktionary edition")
      ->required()
      ->check(CLI::IsMember({"en", "ru"}));
  p->add_option("--dump", dump, "pages-articles XML (plain, .gz or .bz2)")->required();
  p->add_option("--store", parse.store_path, "Store file")->required();
  CLI::Option *start_opt = p->add_option("--start-record", start_record, "First record to parse");
  CLI::Option *registry_opt = p->add_option("--registry", registry_path, "Registry TSV");
  p->add_option("--workers", parse.worker_count, "Analyzer threads")
      ->check(CLI::Range(1, 256));
  p->add_option("--checkpoint-interval", parse.checkpoint_interval, "Pages per checkpoint")
      ->check(CLI::PositiveNumber);
  p->add_flag("--restart", parse.restart, "Discard the store contents and checkpoint first");
  p->add_flag("--quiet", quiet, "Do not log skipped pages");

  std::string store_path;
  bool json_output = false;
  int64_t content_pages = 0;
  CLI::App *s = app.add_subcommand("stats", "Dictionary statistics");
  s->add_option("--store", store_path, "Store file")->required();
  s->add_flag("--json", json_output, "JSON lines, one metric per line");
  CLI::Option *content_opt =
      s->add_option("--content-pages", content_pages, "Entry count to use as denominator")
          ->check(CLI::NonNegativeNumber);

  std::string word, lang;
  bool reverse = false;
  CLI::App *l = app.add_subcommand("lookup", "Show an entry");
  l->add_option("--store", store_path, "Store file")->required();
  l->add_option("word", word, "Entry title, or translation with --reverse")->required();
  CLI::Option *lang_opt = l->add_option("--lang", lang, "Language code filter");
  l->add_flag("--reverse", reverse, "Find entries translated by WORD");

  std::string store_a, store_b;
  CLI::App *c = app.add_subcommand("compare", "Compare two dictionaries");
  c->add_option("--store-a", store_a, "First store")->required();
  c->add_option("--store-b", store_b, "Second store")->required();
  c->add_flag("--json", json_output, "JSON lines output");

  CLI::App *g = app.add_subcommand("languages", "List known language codes");
  CLI::Option *g_registry = g->add_option("--registry", registry_path, "Registry TSV");

  std::string dir;
  CLI::App *e = app.add_subcommand("export", "Write the store as TSV files");
  e->add_option("--store", store_path, "Store file")->required();
  e->add_option("--dir", dir, "Output directory")->required();
  CLI::App *i = app.add_subcommand("import", "Load TSV files into an empty store");
  i->add_option("--store", store_path, "Store file")->required();
  i->add_option("--dir", dir, "Input directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &pe) {
    // --help and --version exit 0; every other usage error exits 2.
    return app.exit(pe, out, err) == 0 ? 0 : 2;
  }

  if (p->parsed()) {
    parse.dialect = *parse_dialect(dialect);
    parse.dump_path = dump;
    if (*start_opt) parse.start_record = start_record;
    if (*registry_opt) parse.registry_path = registry_path;
    return cmd_parse(parse, quiet, out, err);
  }
  if (s->parsed()) {
    return cmd_stats(store_path, json_output,
                     *content_opt ? std::optional<int64_t>(content_pages) : std::nullopt, out, err);
  }
  if (l->parsed()) {
    return cmd_lookup(store_path, word, *lang_opt ? std::optional<std::string>(lang) : std::nullopt,
                      reverse, out, err);
  }
  if (c->parsed()) return cmd_compare(store_a, store_b, json_output, out, err);
  if (g->parsed()) {
    return cmd_languages(*g_registry ? std::optional<std::string>(registry_path) : std::nullopt,
                         out, err);
  }
  if (e->parsed()) return cmd_export(store_path, dir, out, err);
  if (i->parsed()) return cmd_import(store_path, dir, out, err);
  err << app.help();
  return 2;
}

}  // namespace wiktmrd::cli
