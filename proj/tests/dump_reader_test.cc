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

#include "wiktmrd/dump_reader.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <regex>

#include "test_support.h"
#include "wiktmrd/errors.h"

namespace wiktmrd {
namespace {

using testing::TempDir;

std::vector<Page> read_all(const std::filesystem::path &path, uint64_t *filtered = nullptr) {
  DumpReader reader(path);
  std::vector<Page> out;
  while (auto page = reader.next()) out.push_back(std::move(*page));
  if (filtered != nullptr) *filtered = reader.namespace_filtered();
  return out;
}

std::vector<synth::DumpPage> three_pages() {
  return {{"toe", "==English==\n# a <b> & \"c\"", 0},
          {"ангел", "= {{-ru-}} =\n# дух", 0},
          {"doggie", "#REDIRECT [[dog]]", 0}};
}

TEST(DumpReader, PagesInFileOrder) {
  TempDir tmp;
  testing::write_dump_file(tmp / "d.xml", three_pages());
  auto pages = read_all(tmp / "d.xml");
  ASSERT_EQ(pages.size(), 3u);
  for (uint64_t i = 0; i < 3; ++i) {
    EXPECT_EQ(pages[i].record_id, i);
    EXPECT_EQ(pages[i].title, three_pages()[i].title);
    EXPECT_EQ(pages[i].raw_text, three_pages()[i].text);
  }
  EXPECT_FALSE(pages[0].is_redirect);
  EXPECT_TRUE(pages[2].is_redirect);
  EXPECT_EQ(pages[2].redirect_target, "dog");
}

TEST(DumpReader, RedirectElementAndNamespaces) {
  TempDir tmp;
  testing::write_file(tmp / "d.xml",
                      "<mediawiki><page><title>Template:x</title><ns>10</ns>"
                      "<revision><text>t</text></revision></page>"
                      "<page><title>colour</title><ns>0</ns><redirect title=\"color\" />"
                      "<revision><text>old</text></revision>"
                      "<revision><text>#redirect [[color]]</text></revision></page>"
                      "<page><title>empty</title><ns>0</ns><revision><text /></revision></page>"
                      "</mediawiki>");
  uint64_t filtered = 0;
  auto pages = read_all(tmp / "d.xml", &filtered);
  EXPECT_EQ(filtered, 1u);
  ASSERT_EQ(pages.size(), 2u);
  EXPECT_EQ(pages[0].record_id, 0u);
  EXPECT_TRUE(pages[0].is_redirect);
  EXPECT_EQ(pages[0].redirect_target, "color");
  EXPECT_EQ(pages[0].raw_text, "#redirect [[color]]");  // the last revision
  EXPECT_EQ(pages[1].record_id, 1u);
  EXPECT_EQ(pages[1].raw_text, "");
}

TEST(DumpReader, TruncatedDumpReportsTheOffset) {
  TempDir tmp;
  testing::write_dump_file(tmp / "full.xml", three_pages());
  std::string xml = testing::read_file(tmp / "full.xml");
  size_t cut = xml.find("ангел") + 4;  // inside the second title, on a character boundary
  testing::write_file(tmp / "cut.xml", xml.substr(0, cut));
  DumpReader reader(tmp / "cut.xml");
  try {
    while (reader.next()) {
    }
    FAIL() << "no error";
  } catch (const MalformedDump &e) {
    EXPECT_EQ(e.offset(), cut);
  }
}

TEST(DumpReader, MismatchedTagReportsItsOffset) {
  TempDir tmp;
  testing::write_dump_file(tmp / "full.xml", three_pages());
  std::string xml = testing::read_file(tmp / "full.xml");
  size_t bad = xml.find("</title>", xml.find("ангел"));
  xml.replace(bad, 8, "</titel>");
  testing::write_file(tmp / "bad.xml", xml);
  try {
    read_all(tmp / "bad.xml");
    FAIL() << "no error";
  } catch (const MalformedDump &e) {
    EXPECT_EQ(e.offset(), bad + 2);  // the offending tag name
  }
}

TEST(DumpReader, CompressedInputs) {
  TempDir tmp;
  testing::write_dump_file(tmp / "d.xml", three_pages());
  auto plain = read_all(tmp / "d.xml");
  std::string dir = tmp.path().string();
  ASSERT_EQ(std::system(("gzip -c " + dir + "/d.xml > " + dir + "/d.xml.gz").c_str()), 0);
  ASSERT_EQ(std::system(("bzip2 -c " + dir + "/d.xml > " + dir + "/d.xml.bz2").c_str()), 0);
  for (const char *name : {"d.xml.gz", "d.xml.bz2"}) {
    auto pages = read_all(tmp / name);
    ASSERT_EQ(pages.size(), plain.size()) << name;
    for (size_t i = 0; i < pages.size(); ++i) {
      EXPECT_EQ(pages[i].title, plain[i].title);
      EXPECT_EQ(pages[i].raw_text, plain[i].raw_text);
    }
  }
}

TEST(DumpReader, BrokenBzip2IsMalformed) {
  TempDir tmp;
  testing::write_file(tmp / "d.bz2", "BZh91AY&SYgarbage-garbage-garbage");
  EXPECT_THROW(read_all(tmp / "d.bz2"), MalformedDump);
}

TEST(DumpReader, MissingFile) { EXPECT_THROW(DumpReader("/nonexistent/dump.xml"), Error); }

TEST(DumpIdentity, ChangesWithContent) {
  TempDir tmp;
  testing::write_file(tmp / "a", "abc");
  testing::write_file(tmp / "b", "abd");
  std::string a = dump_identity(tmp / "a");
  EXPECT_TRUE(std::regex_match(a, std::regex("fnv1a64:[0-9a-f]{16}:3"))) << a;
  EXPECT_EQ(a, dump_identity(tmp / "a"));
  EXPECT_NE(a, dump_identity(tmp / "b"));
}

TEST(RedirectTarget, Markers) {
  EXPECT_EQ(redirect_target("#REDIRECT [[dog]]"), "dog");
  EXPECT_EQ(redirect_target("  #Redirect:[[dog#Noun|x]]"), "dog#Noun");
  EXPECT_EQ(redirect_target("#ПЕРЕНАПРАВЛЕНИЕ [[собака]]"), "собака");
  EXPECT_EQ(redirect_target("# a definition [[dog]]"), std::nullopt);
  EXPECT_EQ(redirect_target("==English==\n#REDIRECT [[dog]]"), std::nullopt);
}

}  // namespace
}  // namespace wiktmrd
