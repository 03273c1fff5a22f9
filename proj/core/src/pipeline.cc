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

#include "wiktmrd/pipeline.h"

#include <atomic>
#include <chrono>
#include <exception>
#include <thread>
#include <variant>
#include <vector>

#include "wiktmrd/analyzer.h"
#include "wiktmrd/dump_reader.h"
#include "wiktmrd/errors.h"

namespace wiktmrd {

namespace {

constexpr size_t kMaxChunk = 256;

struct Outcome {
  Page page;
  std::variant<ParsedPage, std::string> result;  // parsed page or failure reason
};

void analyze_chunk(std::vector<Outcome> &chunk, Dialect dialect, const Registry &registry,
                   int workers) {
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < chunk.size(); i = next++) {
      Outcome &o = chunk[i];
      try {
        o.result = analyze_page(o.page, dialect, registry);
      } catch (const std::exception &e) {
        o.result = std::string(e.what());
      }
    }
  };
  size_t n = std::min<size_t>(static_cast<size_t>(std::max(workers, 1)), chunk.size());
  if (n <= 1) {
    work();
    return;
  }
  std::vector<std::thread> threads;
  for (size_t t = 0; t < n; ++t) threads.emplace_back(work);
  for (std::thread &t : threads) t.join();
}

void log_line(const ParseConfig &config, uint64_t record, const std::string &title,
              const std::string &what) {
  if (config.log != nullptr) {
    *config.log << "record " << record << " \"" << title << "\": " << what << '\n';
  }
}

ParseReport parse_into(const ParseConfig &config, MrdStore &store);

}  // namespace

ParseReport run_parse(const ParseConfig &config) {
  std::unique_ptr<MrdStore> store = MrdStore::open(config.store_path);
  return run_parse(config, *store);
}

ParseReport run_parse(const ParseConfig &config, MrdStore &store) {
  try {
    return parse_into(config, store);
  } catch (...) {
    // Whatever was not checkpointed is redone on the next run.
    store.rollback_batch();
    throw;
  }
}

namespace {

ParseReport parse_into(const ParseConfig &config, MrdStore &store) {
  auto started = std::chrono::steady_clock::now();
  std::shared_ptr<const Registry> registry =
      config.registry_path ? Registry::load(*config.registry_path) : Registry::builtin();
  DialectConfig dialect_config = registry->dialect_config(config.dialect);

  if (config.restart) store.reset();
  if (std::optional<StoreMeta> meta = store.meta()) {
    if (meta->dialect != config.dialect) {
      throw Error("store holds a " + std::string(dialect_code(meta->dialect)) +
                  " dictionary; use --restart to replace it");
    }
  }
  store.set_meta({config.dialect, dialect_config.native_language.code});

  std::string identity = dump_identity(config.dump_path);
  Checkpoint cp = store.load_checkpoint(identity);
  uint64_t start = cp.last_record_id;
  if (config.start_record) {
    if (*config.start_record < start) {
      throw Error("start record " + std::to_string(*config.start_record) +
                  " precedes the checkpoint at " + std::to_string(start) +
                  "; use --restart to parse again from the beginning");
    }
    start = *config.start_record;
  }

  ParseReport report;
  report.start_record = start;
  uint64_t interval = std::max<uint64_t>(config.checkpoint_interval, 1);
  uint64_t next_record = start;
  uint64_t in_batch = 0;

  auto checkpoint = [&] {
    Checkpoint out = cp;
    out.last_record_id = next_record;
    out.dump_identity = identity;
    auto add = [&](const char *name, uint64_t v) { out.counters[name] += static_cast<int64_t>(v); };
    add("pages_seen", report.pages_seen);
    add("pages_parsed", report.pages_parsed);
    add("pages_skipped_redirect", report.pages_skipped_redirect);
    add("pages_failed", report.pages_failed);
    add("pages_namespace_filtered", report.pages_namespace_filtered);
    add("sections_skipped_unknown_language", report.sections_skipped_unknown_language);
    add("lines_skipped", report.lines_skipped);
    if (!store.in_batch()) store.begin_batch();
    store.save_checkpoint(out);
    store.commit_batch();
    in_batch = 0;
  };

  DumpReader reader(config.dump_path);
  bool done = false;
  while (!done) {
    std::vector<Outcome> chunk;
    size_t want = static_cast<size_t>(std::min<uint64_t>(kMaxChunk, interval - in_batch));
    while (chunk.size() < want) {
      std::optional<Page> page = reader.next();
      if (!page) {
        done = true;
        break;
      }
      if (page->record_id < start) continue;
      chunk.push_back({std::move(*page), std::string()});
    }
    analyze_chunk(chunk, config.dialect, *registry, config.worker_count);

    if (!chunk.empty() && !store.in_batch()) store.begin_batch();
    for (Outcome &o : chunk) {
      next_record = o.page.record_id + 1;
      ++in_batch;
      if (has_namespace_prefix(o.page.title)) {
        ++report.pages_namespace_filtered;
        continue;
      }
      ++report.pages_seen;
      if (const std::string *failure = std::get_if<std::string>(&o.result)) {
        ++report.pages_failed;
        log_line(config, o.page.record_id, o.page.title, "failed: " + *failure);
        continue;
      }
      ParsedPage &parsed = std::get<ParsedPage>(o.result);
      try {
        store.save_word(parsed);
      } catch (const StorageFull &) {
        throw;
      } catch (const CorruptStore &) {
        throw;
      } catch (const Error &e) {
        ++report.pages_failed;
        log_line(config, o.page.record_id, o.page.title, std::string("failed: ") + e.what());
        continue;
      }
      report.sections_skipped_unknown_language += parsed.skipped_sections.size();
      report.lines_skipped += parsed.skipped_lines.size();
      for (const SkippedSection &s : parsed.skipped_sections) {
        log_line(config, o.page.record_id, o.page.title,
                 "skipped section \"" + s.heading + "\": " + s.reason);
      }
      if (parsed.is_redirect) {
        ++report.pages_skipped_redirect;
        log_line(config, o.page.record_id, o.page.title, "redirect");
      } else {
        ++report.pages_parsed;
      }
    }
    if (in_batch >= interval) checkpoint();
  }
  if (store.in_batch() || next_record != cp.last_record_id) checkpoint();
  store.build_index_tables();

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (report.elapsed_seconds > 0) {
    report.pages_per_second = static_cast<double>(report.pages_seen) / report.elapsed_seconds;
  }
  return report;
}

}  // namespace

}  // namespace wiktmrd
