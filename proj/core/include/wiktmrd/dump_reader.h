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

#ifndef WIKTMRD_DUMP_READER_H_
#define WIKTMRD_DUMP_READER_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "wiktmrd/entry_parser.h"

namespace wiktmrd {

// Streams pages out of a MediaWiki pages-articles XML export. Plain,
// gzip and bzip2 files are accepted; compression is detected from the
// leading bytes. Pages outside namespace 0 are dropped and counted.
class DumpReader {
 public:
  explicit DumpReader(const std::filesystem::path &path);
  ~DumpReader();
  DumpReader(const DumpReader &) = delete;
  DumpReader &operator=(const DumpReader &) = delete;

  // Next main-namespace page, record ids counting from 0; nullopt at the
  // end of the dump. Throws MalformedDump on broken XML.
  std::optional<Page> next();

  uint64_t namespace_filtered() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Identifies a dump file cheaply: a hash of its first MiB plus its size.
std::string dump_identity(const std::filesystem::path &path);

// Redirect detection on page text ("#REDIRECT [[x]]", "#перенаправление").
// Returns the target, or nullopt when the text is not a redirect.
std::optional<std::string> redirect_target(std::string_view text);

}  // namespace wiktmrd

#endif  // WIKTMRD_DUMP_READER_H_
