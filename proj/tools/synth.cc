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

#include "synth.h"

#include <algorithm>
#include <map>
#include <set>

namespace wiktmrd::synth {

namespace {

struct LangName {
  const char *code;
  const char *english;
};

const LangName kLanguages[] = {
    {"en", "English"}, {"fr", "French"}, {"de", "German"},  {"fi", "Finnish"},
    {"es", "Spanish"}, {"it", "Italian"}, {"ru", "Russian"}, {"sv", "Swedish"},
    {"pl", "Polish"},  {"nl", "Dutch"},   {"cs", "Czech"},   {"pt", "Portuguese"},
};

const char *english_name(const std::string &code) {
  for (const LangName &l : kLanguages) {
    if (code == l.code) return l.english;
  }
  return "English";
}

const char *en_pos_heading(PartOfSpeech p) {
  switch (p) {
    case PartOfSpeech::kNoun: return "Noun";
    case PartOfSpeech::kVerb: return "Verb";
    case PartOfSpeech::kAdjective: return "Adjective";
    case PartOfSpeech::kAdverb: return "Adverb";
    case PartOfSpeech::kPronoun: return "Pronoun";
    case PartOfSpeech::kPreposition: return "Preposition";
    case PartOfSpeech::kConjunction: return "Conjunction";
    case PartOfSpeech::kInterjection: return "Interjection";
    case PartOfSpeech::kNumeral: return "Numeral";
    case PartOfSpeech::kParticle: return "Particle";
    case PartOfSpeech::kProperNoun: return "Proper noun";
    case PartOfSpeech::kPhrase: return "Phrase";
    case PartOfSpeech::kUnknown: return "Letter";
  }
  return "Noun";
}

const char *ru_morphology(PartOfSpeech p) {
  switch (p) {
    case PartOfSpeech::kNoun: return "сущ ru m a 1a";
    case PartOfSpeech::kVerb: return "гл ru 1a";
    case PartOfSpeech::kAdjective: return "прил ru 1a";
    case PartOfSpeech::kAdverb: return "adv ru";
    case PartOfSpeech::kPronoun: return "мест ru";
    case PartOfSpeech::kPreposition: return "prep ru";
    case PartOfSpeech::kConjunction: return "conj ru";
    case PartOfSpeech::kInterjection: return "interj ru";
    case PartOfSpeech::kNumeral: return "числ ru";
    case PartOfSpeech::kParticle: return "part ru";
    case PartOfSpeech::kPhrase: return "phrase ru";
    case PartOfSpeech::kProperNoun:
    case PartOfSpeech::kUnknown: return "буква";
  }
  return "сущ ru";
}

const char *en_relation_heading(RelationType t) {
  switch (t) {
    case RelationType::kSynonym: return "Synonyms";
    case RelationType::kAntonym: return "Antonyms";
    case RelationType::kHypernym: return "Hypernyms";
    case RelationType::kHyponym: return "Hyponyms";
    case RelationType::kHolonym: return "Holonyms";
    case RelationType::kMeronym: return "Meronyms";
    case RelationType::kTroponym: return "Troponyms";
    case RelationType::kCoordinateTerm: return "Coordinate terms";
    case RelationType::kSeeAlso: return "See also";
  }
  return "Synonyms";
}

const char *ru_relation_heading(RelationType t) {
  switch (t) {
    case RelationType::kSynonym: return "Синонимы";
    case RelationType::kAntonym: return "Антонимы";
    case RelationType::kHypernym: return "Гиперонимы";
    case RelationType::kHyponym: return "Гипонимы";
    case RelationType::kHolonym: return "Холонимы";
    case RelationType::kMeronym: return "Меронимы";
    case RelationType::kTroponym: return "Тропонимы";
    case RelationType::kCoordinateTerm: return "Согипонимы";
    case RelationType::kSeeAlso: return "См. также";
  }
  return "Синонимы";
}

const char *const kSyllables[] = {"ka", "lo", "mi", "ne", "ru", "ta", "vo", "sen",
                                  "dar", "pel", "qui", "zo", "bri", "gan", "hu", "ix"};
const char *const kCyrSyllables[] = {"ка", "ло", "ми", "не", "ру", "та", "во", "сен"};

std::string syllables(std::mt19937_64 &rng, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += kSyllables[rng() % std::size(kSyllables)];
  return out;
}

std::string cyr_syllables(std::mt19937_64 &rng, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += kCyrSyllables[rng() % std::size(kCyrSyllables)];
  return out;
}

int uniform(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Splits `n` targets into list lines of one to three links.
std::vector<int> line_sizes(int n) {
  std::vector<int> out;
  int i = 0;
  while (n > 0) {
    int k = std::min(n, 1 + (i++ % 3));
    out.push_back(k);
    n -= k;
  }
  return out;
}

std::string render_en(const SynthEntry &entry) {
  std::string out;
  std::vector<std::string> order;
  std::map<std::string, std::vector<const SynthLangPos *>> by_lang;
  for (const SynthLangPos &lp : entry.lang_pos) {
    if (by_lang[lp.language_code].empty()) order.push_back(lp.language_code);
    by_lang[lp.language_code].push_back(&lp);
  }
  int word_no = 0;
  for (size_t li = 0; li < order.size(); ++li) {
    const std::string &code = order[li];
    std::vector<const SynthLangPos *> items = by_lang[code];
    std::stable_sort(items.begin(), items.end(), [](const SynthLangPos *a, const SynthLangPos *b) {
      return a->etymology_ordinal < b->etymology_ordinal;
    });
    bool numbered = std::any_of(items.begin(), items.end(),
                                [](const SynthLangPos *p) { return p->etymology_ordinal > 0; });
    if (li > 0) out += "\n----\n\n";
    out += "==" + std::string(english_name(code)) + "==\n";
    std::string pos_eq = numbered ? "====" : "===";
    std::string sub_eq = numbered ? "=====" : "====";
    int current_etym = -1;
    for (const SynthLangPos *lp : items) {
      if (lp->etymology_ordinal != current_etym) {
        current_etym = lp->etymology_ordinal;
        out += numbered ? "\n===Etymology " + std::to_string(current_etym) + "===\n"
                        : "\n===Etymology===\n";
        out += "From {{etyl|la|en}} ''" + entry.title + "us''.\n";
        out += "\n===Pronunciation===\n* {{IPA|/" + entry.title + "/}}\n";
      }
      out += "\n" + pos_eq + en_pos_heading(lp->pos) + pos_eq + "\n";
      out += "{{en-noun}}\n\n";
      for (int m = 1; m <= lp->meanings; ++m) {
        out += "# {{context|rare}} A [[thing]] of kind " + std::to_string(m) + ", like ''" +
               entry.title + "''.\n";
        if (m % 2 == 1) out += "#: ''An example of sense " + std::to_string(m) + ".''\n";
      }
      for (const auto &[type, n] : lp->relations) {
        out += "\n" + sub_eq + en_relation_heading(type) + sub_eq + "\n";
        int line = 0;
        for (int k : line_sizes(n)) {
          out += "* {{sense|kind " + std::to_string(1 + line++ % std::max(lp->meanings, 1)) + "}} ";
          for (int j = 0; j < k; ++j) {
            if (j > 0) out += ", ";
            out += "[[rel" + std::to_string(word_no++) + "]]";
          }
          out += "\n";
        }
      }
      if (!lp->boxes.empty()) {
        out += "\n" + sub_eq + "Translations" + sub_eq + "\n";
        for (size_t b = 0; b < lp->boxes.size(); ++b) {
          out += "{{trans-top|kind " + std::to_string(b + 1) + "}}\n";
          for (int j = 0; j < lp->boxes[b]; ++j) {
            const LangName &l = kLanguages[1 + j % (std::size(kLanguages) - 1)];
            out += "* " + std::string(l.english) + ": {{t+|" + l.code + "|tr" +
                   std::to_string(word_no++) + "}}\n";
            if (j + 1 == (lp->boxes[b] + 1) / 2) out += "{{trans-mid}}\n";
          }
          out += "{{trans-bottom}}\n";
        }
      }
    }
  }
  return out;
}

std::string render_ru(const SynthEntry &entry) {
  std::string out;
  std::vector<std::string> order;
  std::map<std::string, std::vector<const SynthLangPos *>> by_lang;
  for (const SynthLangPos &lp : entry.lang_pos) {
    if (by_lang[lp.language_code].empty()) order.push_back(lp.language_code);
    by_lang[lp.language_code].push_back(&lp);
  }
  int word_no = 0;
  for (const std::string &code : order) {
    const std::vector<const SynthLangPos *> &items = by_lang[code];
    out += "= {{-" + code + "-}} =\n";
    bool homonyms = items.size() > 1;
    for (size_t h = 0; h < items.size(); ++h) {
      const SynthLangPos *lp = items[h];
      if (homonyms) out += "\n== " + entry.title + " " + std::to_string(h + 1) + " ==\n";
      out += "\n=== Морфологические и синтаксические свойства ===\n";
      out += "{{" + std::string(ru_morphology(lp->pos)) + "|основа=" + entry.title + "}}\n";
      out += "\n=== Произношение ===\n{{transcription|" + entry.title + "}}\n";
      out += "\n=== Семантические свойства ===\n\n==== Значение ====\n";
      for (int m = 1; m <= lp->meanings; ++m) {
        out += "# [[предмет]] вида " + std::to_string(m) + " {{пример|" + entry.title + "}}\n";
      }
      // The ru layout keeps every relation heading, empty or not.
      for (RelationType t : {RelationType::kSynonym, RelationType::kAntonym,
                             RelationType::kHypernym, RelationType::kHyponym}) {
        bool present = std::any_of(lp->relations.begin(), lp->relations.end(),
                                   [&](const auto &r) { return r.first == t; });
        if (!present) out += "\n==== " + std::string(ru_relation_heading(t)) + " ====\n";
      }
      for (const auto &[type, n] : lp->relations) {
        out += "\n==== " + std::string(ru_relation_heading(type)) + " ====\n";
        std::vector<int> sizes = line_sizes(n);
        for (size_t line = 0; line < sizes.size(); ++line) {
          out += "# ";
          for (int j = 0; j < sizes[line]; ++j) {
            if (j > 0) out += ", ";
            out += "[[отн" + std::to_string(word_no++) + "]]";
          }
          out += "\n";
          if (line == 0 && lp->meanings > 2) out += "# -\n";
        }
      }
      out += "\n=== Родственные слова ===\n\n=== Этимология ===\nОт {{этимология:" + entry.title +
             "}}\n";
      if (!lp->boxes.empty()) {
        out += "\n=== Перевод ===\n";
        for (size_t b = 0; b < lp->boxes.size(); ++b) {
          out += "{{перев-блок|вид " + std::to_string(b + 1) + "\n";
          // Every box lists an empty native slot, as real blocks do.
          out += "|ru=\n";
          for (int j = 0; j < lp->boxes[b]; ++j) {
            const LangName &l = kLanguages[j % std::size(kLanguages)];
            if (std::string(l.code) == "ru") {
              out += "|orv=[[пер" + std::to_string(word_no++) + "]]\n";
              continue;
            }
            out += "|" + std::string(l.code) + "=[[пер" + std::to_string(word_no++) + "]]\n";
          }
          out += "}}\n";
        }
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace

SynthTotals &SynthTotals::operator+=(const SynthTotals &o) {
  lang_pos += o.lang_pos;
  meanings += o.meanings;
  relations += o.relations;
  boxes += o.boxes;
  entries += o.entries;
  return *this;
}

SynthTotals totals(const SynthEntry &entry) {
  SynthTotals t;
  for (const SynthLangPos &lp : entry.lang_pos) {
    ++t.lang_pos;
    t.meanings += lp.meanings;
    for (const auto &r : lp.relations) t.relations += r.second;
    t.boxes += static_cast<int64_t>(lp.boxes.size());
    for (int e : lp.boxes) t.entries += e;
  }
  return t;
}

SynthEntry random_entry(std::mt19937_64 &rng, Dialect dialect, const std::string &title) {
  SynthEntry entry;
  entry.title = title;
  int languages = uniform(rng, 1, 3);
  std::vector<size_t> picks;
  picks.push_back(dialect == Dialect::kEnglish ? 0 : 6);  // native language first
  while (static_cast<int>(picks.size()) < languages) {
    size_t k = rng() % std::size(kLanguages);
    if (std::find(picks.begin(), picks.end(), k) == picks.end()) picks.push_back(k);
  }
  for (size_t k : picks) {
    std::string code = kLanguages[k].code;
    int etymologies = dialect == Dialect::kEnglish ? uniform(rng, 1, 2) : 1;
    int homonyms = dialect == Dialect::kRussian ? uniform(rng, 1, 2) : 1;
    std::set<std::pair<int, PartOfSpeech>> used;
    for (int e = 1; e <= etymologies; ++e) {
      int pos_count = dialect == Dialect::kEnglish ? uniform(rng, 1, 2) : homonyms;
      for (int p = 0; p < pos_count; ++p) {
        SynthLangPos lp;
        lp.language_code = code;
        if (dialect == Dialect::kEnglish) {
          lp.etymology_ordinal = etymologies > 1 ? e : 0;
        } else {
          lp.etymology_ordinal = homonyms > 1 ? p + 1 : 0;
        }
        lp.pos = static_cast<PartOfSpeech>(rng() % 12);
        if (dialect == Dialect::kRussian && lp.pos == PartOfSpeech::kProperNoun) {
          lp.pos = PartOfSpeech::kNoun;
        }
        if (!used.emplace(lp.etymology_ordinal, lp.pos).second) continue;
        lp.meanings = uniform(rng, 1, 5);
        int types = uniform(rng, 0, 4);
        std::set<RelationType> seen;
        for (int t = 0; t < types; ++t) {
          auto type = static_cast<RelationType>(rng() % kRelationTypeCount);
          if (!seen.insert(type).second) continue;
          lp.relations.emplace_back(type, uniform(rng, 1, 5));
        }
        int boxes = uniform(rng, 0, 2);
        for (int b = 0; b < boxes; ++b) lp.boxes.push_back(uniform(rng, 0, 8));
        entry.lang_pos.push_back(std::move(lp));
      }
    }
  }
  return entry;
}

std::string render(const SynthEntry &entry, Dialect dialect) {
  return dialect == Dialect::kEnglish ? render_en(entry) : render_ru(entry);
}

std::string word(std::mt19937_64 &rng, uint64_t index) {
  std::string w = (index % 3 == 0) ? cyr_syllables(rng, uniform(rng, 1, 3))
                                   : syllables(rng, uniform(rng, 1, 3));
  return w + std::to_string(index);
}

std::string fuzz_text(std::mt19937_64 &rng, size_t approx_bytes) {
  static const char *const kPieces[] = {
      "{{", "}}", "[[", "]]", "|", "=", "==", "===English===", "==Qqzish==", "= {{-ru-}} =",
      "\n", "\n#", "\n# ", "\n#:", "\n*", "\n* Finnish: ", "{{t+|fi|", "{{trans-top|",
      "{{sense|", "====Synonyms====", "==== Синонимы ====", "==== Значение ====",
      "{{перев-блок|", "|fi=[[", "<!--", "-->", "''", "'''", "собака", "수풀", "é", "—",
      "{{plural of|", "===Etymology 2===", "====Noun====", "\n=", "=\n", "Wikisaurus:", ":",
      "&", "<", ">", "\"", " ", "  ", "\t", "x", "word", "-", "(", ")", ",", ";", "#REDIRECT",
  };
  std::string out;
  out.reserve(approx_bytes + 64);
  while (out.size() < approx_bytes) {
    int mode = uniform(rng, 0, 19);
    if (mode == 0) {
      // A long run without line breaks.
      out.append(static_cast<size_t>(uniform(rng, 100, 2000)), "abc{[=|]}"[rng() % 9]);
    } else if (mode == 1) {
      out += "\n" + std::string(static_cast<size_t>(uniform(rng, 1, 8)), '=') + "h" +
             std::string(static_cast<size_t>(uniform(rng, 0, 8)), '=') + "\n";
    } else {
      out += kPieces[rng() % std::size(kPieces)];
    }
  }
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_dump(std::ostream &out, const std::vector<DumpPage> &pages) {
  out << "<mediawiki xmlns=\"http://www.mediawiki.org/xml/export-0.4/\" version=\"0.4\" "
         "xml:lang=\"en\">\n  <siteinfo>\n    <sitename>Wiktionary</sitename>\n"
         "  </siteinfo>\n";
  int64_t id = 1;
  for (const DumpPage &p : pages) {
    out << "  <page>\n    <title>" << xml_escape(p.title) << "</title>\n    <ns>" << p.ns
        << "</ns>\n    <id>" << id << "</id>\n    <revision>\n      <id>" << id + 100000
        << "</id>\n      <text xml:space=\"preserve\">" << xml_escape(p.text)
        << "</text>\n    </revision>\n  </page>\n";
    ++id;
  }
  out << "</mediawiki>\n";
}

}  // namespace wiktmrd::synth
