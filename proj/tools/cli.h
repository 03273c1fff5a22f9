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

#ifndef WIKTMRD_TOOLS_CLI_H_
#define WIKTMRD_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "wiktmrd/pipeline.h"

namespace wiktmrd::cli {

// Each command returns the process exit code. Results go to `out`,
// diagnostics to `err`.

int cmd_parse(const ParseConfig &config, bool quiet, std::ostream &out, std::ostream &err);

int cmd_stats(const std::string &store_path, bool json, std::optional<int64_t> content_pages,
              std::ostream &out, std::ostream &err);

int cmd_lookup(const std::string &store_path, const std::string &word,
               const std::optional<std::string> &lang, bool reverse, std::ostream &out,
               std::ostream &err);

int cmd_compare(const std::string &store_a, const std::string &store_b, bool json,
                std::ostream &out, std::ostream &err);

int cmd_languages(const std::optional<std::string> &registry_path, std::ostream &out,
                  std::ostream &err);

int cmd_export(const std::string &store_path, const std::string &dir, std::ostream &out,
               std::ostream &err);

int cmd_import(const std::string &store_path, const std::string &dir, std::ostream &out,
               std::ostream &err);

// Parses argv and dispatches to the commands above.
int run(int argc, char **argv, std::ostream &out, std::ostream &err);

}  // namespace wiktmrd::cli

#endif  // WIKTMRD_TOOLS_CLI_H_
