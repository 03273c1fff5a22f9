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

// Writes a synthetic pages-articles dump for benchmarking.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "synth.h"

int main(int argc, char **argv) {
  CLI::App app{"Generate a synthetic Wiktionary dump"};
  std::string out_path, dialect = "en";
  uint64_t pages = 10000, seed = 1;
  bool fuzz = false;
  app.add_option("--out", out_path, "Output XML file")->required();
  app.add_option("--pages", pages, "Number of pages");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--dialect", dialect, "en or ru")->check(CLI::IsMember({"en", "ru"}));
  app.add_flag("--fuzz", fuzz, "Random hostile wikitext instead of entries");
  CLI11_PARSE(app, argc, argv);

  wiktmrd::Dialect d = *wiktmrd::parse_dialect(dialect);
  std::mt19937_64 rng(seed);
  std::vector<wiktmrd::synth::DumpPage> out;
  for (uint64_t i = 0; i < pages; ++i) {
    std::string title = wiktmrd::synth::word(rng, i);
    std::string text =
        fuzz ? wiktmrd::synth::fuzz_text(rng, 2000)
             : wiktmrd::synth::render(wiktmrd::synth::random_entry(rng, d, title), d);
    out.push_back({title, text, 0});
  }
  std::ofstream file(out_path, std::ios::binary);
  wiktmrd::synth::write_dump(file, out);
  if (!file) {
    std::cerr << "synth_dump: cannot write " << out_path << '\n';
    return 1;
  }
  return 0;
}
