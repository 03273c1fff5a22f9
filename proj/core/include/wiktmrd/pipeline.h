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

#ifndef WIKTMRD_PIPELINE_H_
#define WIKTMRD_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "wiktmrd/lang_registry.h"
#include "wiktmrd/mrd_store.h"

namespace wiktmrd {

struct ParseConfig {
  Dialect dialect = Dialect::kEnglish;
  std::filesystem::path dump_path;
  std::string store_path;
  // Resume point; defaults to the store's checkpoint (0 on a fresh store).
  std::optional<uint64_t> start_record;
  std::optional<std::filesystem::path> registry_path;
  int worker_count = 1;
  uint64_t checkpoint_interval = 1000;
  // Wipe the store first, including a checkpoint for a different dump.
  bool restart = false;
  // One line per skipped or failed page; nullptr silences it.
  std::ostream *log = nullptr;
};

struct ParseReport {
  uint64_t start_record = 0;
  uint64_t pages_seen = 0;  // = parsed + skipped_redirect + failed
  uint64_t pages_parsed = 0;
  uint64_t pages_skipped_redirect = 0;
  uint64_t pages_failed = 0;
  uint64_t pages_namespace_filtered = 0;
  uint64_t sections_skipped_unknown_language = 0;
  uint64_t lines_skipped = 0;
  double elapsed_seconds = 0;
  double pages_per_second = 0;
};

// Parses the dump into the store at config.store_path.
ParseReport run_parse(const ParseConfig &config);

// Same, into an already open store (config.store_path is ignored).
ParseReport run_parse(const ParseConfig &config, MrdStore &store);

}  // namespace wiktmrd

#endif  // WIKTMRD_PIPELINE_H_
