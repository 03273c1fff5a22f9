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

#include "wiktmrd/analyzer.h"

#include "wiktmrd/errors.h"

namespace wiktmrd {

namespace {

void merge_into(ParsedLangPos &dst, ParsedLangPos &&src) {
  int offset = static_cast<int>(dst.meanings.size());
  for (Meaning &m : src.meanings) {
    m.ordinal += offset;
    dst.meanings.push_back(std::move(m));
  }
  for (RelationRecord &r : src.relations) {
    if (r.meaning_ordinal) *r.meaning_ordinal += offset;
    dst.relations.push_back(std::move(r));
  }
  for (TranslationBox &b : src.translations) dst.translations.push_back(std::move(b));
  // A merged unit with several definitions is a full entry.
  if (dst.meanings.size() != 1) {
    dst.soft_redirect.reset();
  } else if (!dst.soft_redirect) {
    dst.soft_redirect = std::move(src.soft_redirect);
  }
}

}  // namespace

bool ParsedPage::is_soft_redirect() const {
  if (lang_pos.empty()) return false;
  for (const ParsedLangPos &lp : lang_pos) {
    if (!lp.soft_redirect) return false;
  }
  return true;
}

ParsedPage analyze_page(const Page &page, Dialect dialect, const Registry &registry) {
  if (page.title.empty()) throw Error("page " + std::to_string(page.record_id) + " has no title");
  ParsedPage out;
  out.title = page.title;
  out.record_id = page.record_id;
  out.is_redirect = page.is_redirect;
  out.redirect_target = page.redirect_target;
  if (page.is_redirect) return out;

  LanguageSplit split = split_language_sections(page, dialect, registry);
  out.skipped_sections = std::move(split.skipped);
  for (const LanguageSection &lang : split.sections) {
    for (const PosSection &section : split_pos_sections(lang, dialect, registry)) {
      ParsedLangPos lp;
      lp.language = section.language;
      lp.etymology_ordinal = section.etymology_ordinal;
      lp.pos = section.pos;
      lp.meanings = extract_definitions(section, dialect, registry);
      lp.relations = extract_relations(section, lp.meanings, dialect, registry);
      TranslationResult tr = extract_translations(section, dialect, registry);
      lp.translations = std::move(tr.boxes);
      for (SkippedLine &s : tr.skipped) out.skipped_lines.push_back(std::move(s));
      lp.soft_redirect = classify_soft_redirect(page.title, section, lp.meanings, registry);

      ParsedLangPos *existing = nullptr;
      for (ParsedLangPos &e : out.lang_pos) {
        if (e.language.code == lp.language.code && e.pos == lp.pos &&
            e.etymology_ordinal == lp.etymology_ordinal) {
          existing = &e;
          break;
        }
      }
      if (existing != nullptr) {
        merge_into(*existing, std::move(lp));
      } else {
        out.lang_pos.push_back(std::move(lp));
      }
    }
  }
  return out;
}

}  // namespace wiktmrd
