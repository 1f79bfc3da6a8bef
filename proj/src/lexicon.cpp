#include "ace/lexicon.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ace/error.hpp"

namespace ace {

namespace {

constexpr std::array kModalVerbs{"can", "could", "may", "might", "must", "shall", "should", "will", "would"};
constexpr std::array kModalAdjectives{"possible", "probable", "certain", "sure", "necessary"};

bool is_vowel(char c) { return std::string_view("aeiou").find(c) != std::string_view::npos; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::size_t word_count(std::string_view s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), ' ')) + 1;
}

struct SlotName {
  FormSlot slot;
  std::string_view key;
};
constexpr std::array kSlotKeys{
    SlotName{FormSlot::Sg, "sg"},          SlotName{FormSlot::Pl, "pl"},
    SlotName{FormSlot::ThirdSg, "3sg"},    SlotName{FormSlot::ThirdPl, "3pl"},
    SlotName{FormSlot::Base, "base"},      SlotName{FormSlot::Comparative, "comp"},
    SlotName{FormSlot::Superlative, "sup"},
};

bool is_content_class(WordClass c) {
  return c == WordClass::CommonNoun || c == WordClass::ProperNoun || c == WordClass::Verb ||
         c == WordClass::Adjective || c == WordClass::Adverb;
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view to_string(WordClass c) {
  switch (c) {
    case WordClass::CommonNoun: return "common-noun";
    case WordClass::ProperNoun: return "proper-noun";
    case WordClass::Verb: return "verb";
    case WordClass::Adjective: return "adjective";
    case WordClass::Adverb: return "adverb";
    case WordClass::Preposition: return "preposition";
    case WordClass::Determiner: return "determiner";
    case WordClass::Pronoun: return "pronoun";
    case WordClass::Conjunction: return "conjunction";
    case WordClass::NumberWord: return "number-word";
  }
  return "?";
}

std::optional<WordClass> word_class_from_string(std::string_view s) {
  for (auto c : {WordClass::CommonNoun, WordClass::ProperNoun, WordClass::Verb, WordClass::Adjective,
                 WordClass::Adverb, WordClass::Preposition, WordClass::Determiner, WordClass::Pronoun,
                 WordClass::Conjunction, WordClass::NumberWord}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::Masc: return "masc";
    case Gender::Fem: return "fem";
    case Gender::Neut: return "neut";
    case Gender::None: return "n/a";
  }
  return "?";
}

std::string_view to_string(FormSlot s) {
  for (const auto& k : kSlotKeys)
    if (k.slot == s) return k.key;
  return s == FormSlot::Synonym ? "synonym" : "abbreviation";
}

std::string LexEntry::predicate() const {
  std::string p = lemma;
  std::replace(p.begin(), p.end(), ' ', '_');
  return p;
}

std::string LexEntry::surface(FormSlot slot) const {
  auto it = forms.find(slot);
  return it == forms.end() ? lemma : it->second;
}

std::string regular_plural(std::string_view noun) {
  std::string w(noun);
  if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") || ends_with(w, "ch") || ends_with(w, "sh"))
    return w + "es";
  if (w.size() > 1 && w.back() == 'y' && !is_vowel(w[w.size() - 2])) return w.substr(0, w.size() - 1) + "ies";
  return w + "s";
}

std::string regular_third_singular(std::string_view verb) {
  std::string w(verb);
  if (w.size() > 1 && w.back() == 'o' && !is_vowel(w[w.size() - 2])) return w + "es";
  return regular_plural(w);
}

int syllable_count(std::string_view word) {
  int groups = 0;
  bool in_vowel = false;
  for (char c : word) {
    bool v = is_vowel(c) || c == 'y';
    if (v && !in_vowel) ++groups;
    in_vowel = v;
  }
  if (groups > 1 && ends_with(word, "e") && !ends_with(word, "le")) --groups;
  return std::max(groups, 1);
}

std::pair<std::string, std::string> regular_comparison(std::string_view adjective) {
  std::string w(adjective);
  if (syllable_count(w) > 1 || w.find(' ') != std::string::npos) return {"more " + w, "most " + w};
  if (ends_with(w, "e")) return {w + "r", w + "st"};
  std::size_t n = w.size();
  if (n >= 2 && w.back() == 'y' && !is_vowel(w[n - 2])) {
    auto stem = w.substr(0, n - 1);
    return {stem + "ier", stem + "iest"};
  }
  if (n >= 3 && !is_vowel(w[n - 1]) && std::string_view("wxy").find(w[n - 1]) == std::string_view::npos &&
      is_vowel(w[n - 2]) && !is_vowel(w[n - 3])) {
    auto stem = w + w.back();
    return {stem + "er", stem + "est"};
  }
  return {w + "er", w + "est"};
}

bool is_modal_verb(std::string_view word) {
  auto w = to_lower(word);
  return std::find(kModalVerbs.begin(), kModalVerbs.end(), w) != kModalVerbs.end();
}

bool is_modal_adjective(std::string_view word) {
  auto w = to_lower(word);
  return std::find(kModalAdjectives.begin(), kModalAdjectives.end(), w) != kModalAdjectives.end();
}

Lexicon::Lexicon() {
  auto fw = [this](WordClass c, std::string lemma, std::map<FormSlot, std::string> forms = {},
                   Gender g = Gender::None, std::optional<long> value = std::nullopt) {
    LexEntry e;
    e.lemma = std::move(lemma);
    e.word_class = c;
    e.gender = g;
    e.forms = std::move(forms);
    if (e.forms.empty()) e.forms[FormSlot::Base] = e.lemma;
    e.value = value;
    e.builtin = true;
    add_builtin(std::move(e));
  };
  for (auto w : {"a", "an", "the", "no"}) fw(WordClass::Determiner, w);
  fw(WordClass::Pronoun, "it", {{FormSlot::Sg, "it"}}, Gender::Neut);
  fw(WordClass::Pronoun, "he", {{FormSlot::Sg, "he"}}, Gender::Masc);
  fw(WordClass::Pronoun, "him", {{FormSlot::Sg, "him"}}, Gender::Masc);
  fw(WordClass::Pronoun, "she", {{FormSlot::Sg, "she"}}, Gender::Fem);
  fw(WordClass::Pronoun, "her", {{FormSlot::Sg, "her"}}, Gender::Fem);
  fw(WordClass::Pronoun, "they", {{FormSlot::Pl, "they"}});
  fw(WordClass::Pronoun, "them", {{FormSlot::Pl, "them"}});
  for (auto w : {"who", "what", "which", "that"}) fw(WordClass::Pronoun, w);
  for (auto w : {"and", "or", "either", "neither", "nor", "if", "then"}) fw(WordClass::Conjunction, w);
  for (auto w : {"with", "to", "from", "in", "on", "at", "for", "into", "through", "by", "about"})
    fw(WordClass::Preposition, w);
  for (auto w : {"each", "together", "not"}) fw(WordClass::Adverb, w);
  fw(WordClass::Verb, "be", {{FormSlot::ThirdSg, "is"}, {FormSlot::ThirdPl, "are"}});
  fw(WordClass::Verb, "do", {{FormSlot::ThirdSg, "does"}, {FormSlot::ThirdPl, "do"}});
  constexpr std::array kNumbers{"one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten"};
  for (std::size_t i = 0; i < kNumbers.size(); ++i)
    fw(WordClass::NumberWord, kNumbers[i], {}, Gender::None, static_cast<long>(i + 1));
}

void Lexicon::add_builtin(LexEntry entry) {
  auto ptr = std::make_shared<const LexEntry>(std::move(entry));
  function_.push_back(ptr);
  index(ptr);
}

std::vector<std::pair<std::string, FormSlot>> Lexicon::surfaces(const LexEntry& e) const {
  std::vector<std::pair<std::string, FormSlot>> out;
  for (const auto& [slot, form] : e.forms) out.emplace_back(to_lower(form), slot);
  for (const auto& s : e.synonyms) out.emplace_back(to_lower(s), FormSlot::Synonym);
  for (const auto& a : e.abbreviations) out.emplace_back(to_lower(a), FormSlot::Abbreviation);
  return out;
}

void Lexicon::index(const EntryPtr& entry) {
  for (auto& [surface, slot] : surfaces(*entry)) {
    max_words_ = std::max(max_words_, word_count(surface));
    index_[surface].push_back({entry, slot});
  }
}

void Lexicon::unindex(const EntryPtr& entry) {
  for (auto it = index_.begin(); it != index_.end();) {
    auto& v = it->second;
    v.erase(std::remove_if(v.begin(), v.end(), [&](const LexMatch& m) { return m.entry == entry; }), v.end());
    it = v.empty() ? index_.erase(it) : std::next(it);
  }
  max_words_ = 1;
  for (const auto& [surface, matches] : index_) max_words_ = std::max(max_words_, word_count(surface));
}

void Lexicon::add_entry(LexEntry e) {
  e.lemma = to_lower(trim(e.lemma));
  if (e.lemma.empty()) throw Error(ErrorCode::MissingTemplateField, "entry has an empty lemma");
  if (!is_content_class(e.word_class))
    throw Error(ErrorCode::InvalidEntry,
                "'" + std::string(to_string(e.word_class)) + "' is a function word class and cannot be extended");
  e.builtin = false;

  switch (e.word_class) {
    case WordClass::CommonNoun: {
      if (e.kind == NounKind::None)
        throw Error(ErrorCode::MissingTemplateField, "noun '" + e.lemma + "' needs a type: count or mass");
      if (e.gender == Gender::None) e.gender = Gender::Neut;
      if (!e.forms.count(FormSlot::Sg)) e.forms[FormSlot::Sg] = e.lemma;
      if (e.kind == NounKind::Count && !e.forms.count(FormSlot::Pl))
        e.forms[FormSlot::Pl] = regular_plural(e.forms[FormSlot::Sg]);
      if (e.kind == NounKind::Mass && e.forms.count(FormSlot::Pl))
        throw Error(ErrorCode::InvalidEntry, "mass noun '" + e.lemma + "' cannot have a plural form");
      for (const auto& [slot, f] : e.forms)
        if (slot != FormSlot::Sg && slot != FormSlot::Pl)
          throw Error(ErrorCode::InvalidEntry, "noun '" + e.lemma + "' has a non-noun form slot");
      break;
    }
    case WordClass::ProperNoun:
      if (e.gender == Gender::None)
        throw Error(ErrorCode::MissingTemplateField, "proper noun '" + e.lemma + "' needs a gender");
      if (!e.forms.count(FormSlot::Sg)) e.forms[FormSlot::Sg] = e.lemma;
      if (e.forms.size() != 1) throw Error(ErrorCode::InvalidEntry, "proper nouns only have a singular form");
      break;
    case WordClass::Verb:
      if (!e.forms.count(FormSlot::ThirdPl)) e.forms[FormSlot::ThirdPl] = e.lemma;
      if (!e.forms.count(FormSlot::ThirdSg)) e.forms[FormSlot::ThirdSg] = regular_third_singular(e.lemma);
      if (e.forms.size() != 2)
        throw Error(ErrorCode::InvalidEntry, "verbs only have third person singular and plural present forms");
      break;
    case WordClass::Adjective: {
      if (!e.forms.count(FormSlot::Base)) e.forms[FormSlot::Base] = e.lemma;
      auto [comp, sup] = regular_comparison(e.lemma);
      if (!e.forms.count(FormSlot::Comparative)) e.forms[FormSlot::Comparative] = comp;
      if (!e.forms.count(FormSlot::Superlative)) e.forms[FormSlot::Superlative] = sup;
      if (e.forms.size() != 3) throw Error(ErrorCode::InvalidEntry, "adjectives have base, comp and sup forms");
      break;
    }
    case WordClass::Adverb:
      if (!e.forms.count(FormSlot::Base)) e.forms[FormSlot::Base] = e.lemma;
      if (e.forms.size() != 1) throw Error(ErrorCode::InvalidEntry, "adverbs only have a base form");
      break;
    default:
      break;
  }
  if (e.word_class != WordClass::CommonNoun && e.word_class != WordClass::ProperNoun) e.kind = NounKind::None;

  auto new_surfaces = surfaces(e);
  for (const auto& [surface, slot] : new_surfaces) {
    bool modal = is_modal_verb(surface) || (e.word_class == WordClass::Adjective && is_modal_adjective(surface));
    if (modal || is_modal_adjective(e.lemma))
      throw Error(ErrorCode::ModalRejected, "modal word '" + surface + "' is not admitted");
    auto it = index_.find(surface);
    if (it == index_.end()) continue;
    for (const auto& m : it->second) {
      if (slot == FormSlot::Abbreviation || m.slot == FormSlot::Abbreviation)
        throw Error(ErrorCode::DuplicateSurface,
                    "'" + surface + "' is already used by '" + m.entry->lemma + "'; abbreviations must be unique");
      if (m.entry->word_class == e.word_class)
        throw Error(ErrorCode::DuplicateSurface, "'" + surface + "' is already a " +
                                                     std::string(to_string(e.word_class)) + " form of '" +
                                                     m.entry->lemma + "'");
    }
  }
  auto ptr = std::make_shared<const LexEntry>(std::move(e));
  content_.push_back(ptr);
  index(ptr);
  ++version_;
}

bool Lexicon::remove_entry(std::string_view lemma) {
  auto key = to_lower(lemma);
  bool removed = false;
  for (auto it = content_.begin(); it != content_.end();) {
    if ((*it)->lemma == key) {
      unindex(*it);
      it = content_.erase(it);
      removed = true;
    } else {
      ++it;
    }
  }
  if (removed) ++version_;
  return removed;
}

std::vector<LexMatch> Lexicon::lookup(std::string_view surface) const {
  auto it = index_.find(to_lower(surface));
  if (it == index_.end()) return {};
  return it->second;
}

std::optional<LexMatch> Lexicon::lookup(std::string_view surface, WordClass cls) const {
  for (auto& m : lookup(surface))
    if (m.entry->word_class == cls) return m;
  return std::nullopt;
}

EntryPtr Lexicon::find(std::string_view lemma, WordClass cls) const {
  auto key = to_lower(lemma);
  for (const auto* list : {&function_, &content_})
    for (const auto& e : *list)
      if (e->lemma == key && e->word_class == cls) return e;
  return nullptr;
}

std::optional<VerbInflection> Lexicon::verb_inflection(std::string_view surface) const {
  auto w = to_lower(surface);
  auto verb_with_base = [&](const std::string& base) -> EntryPtr {
    if (base.empty()) return nullptr;
    auto m = lookup(base, WordClass::Verb);
    if (m && m->slot == FormSlot::ThirdPl && !m->entry->builtin) return m->entry;
    return nullptr;
  };
  auto try_stems = [&](std::string_view suffix, VerbInflection::Kind kind,
                       bool silent_e) -> std::optional<VerbInflection> {
    if (!ends_with(w, suffix) || w.size() <= suffix.size() + 1) return std::nullopt;
    std::string stem = w.substr(0, w.size() - suffix.size());
    std::vector<std::string> candidates{stem};
    if (silent_e) candidates.push_back(stem + "e");
    if (stem.size() >= 2 && stem.back() == stem[stem.size() - 2]) candidates.push_back(stem.substr(0, stem.size() - 1));
    if (suffix == "ed" && stem.back() == 'i') candidates.push_back(stem.substr(0, stem.size() - 1) + "y");
    for (const auto& c : candidates)
      if (auto v = verb_with_base(c)) return VerbInflection{v, kind};
    return std::nullopt;
  };
  if (auto r = try_stems("ed", VerbInflection::Kind::EdForm, true)) return r;
  if (auto r = try_stems("ing", VerbInflection::Kind::IngForm, true)) return r;
  return std::nullopt;
}

LexEntry Lexicon::parse_record(std::string_view line, std::size_t line_no) {
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorCode::LexiconParse, (line_no ? "line " + std::to_string(line_no) + ": " : std::string()) + msg);
  };
  auto fields = split(line, '|');
  if (fields.size() != 6) throw fail("expected 6 '|'-separated fields, found " + std::to_string(fields.size()));
  for (auto& f : fields) f = trim(f);

  LexEntry e;
  auto cls = word_class_from_string(fields[0]);
  if (!cls) throw fail("unknown word class '" + fields[0] + "'");
  e.word_class = *cls;
  e.lemma = to_lower(fields[1]);

  if (!fields[2].empty()) {
    for (auto& feat : split(fields[2], ',')) {
      auto f = trim(feat);
      if (f == "count") e.kind = NounKind::Count;
      else if (f == "mass") e.kind = NounKind::Mass;
      else if (f == "masc") e.gender = Gender::Masc;
      else if (f == "fem") e.gender = Gender::Fem;
      else if (f == "neut") e.gender = Gender::Neut;
      else throw fail("unknown feature '" + f + "'");
    }
  }
  if (!fields[3].empty()) {
    for (auto& pair : split(fields[3], ';')) {
      auto eq = pair.find('=');
      if (eq == std::string::npos) throw fail("form '" + pair + "' is not slot=surface");
      auto key = trim(pair.substr(0, eq));
      auto value = trim(pair.substr(eq + 1));
      auto slot = std::find_if(kSlotKeys.begin(), kSlotKeys.end(), [&](const SlotName& s) { return s.key == key; });
      if (slot == kSlotKeys.end()) throw fail("unknown form slot '" + key + "'");
      if (value.empty()) throw fail("empty surface for slot '" + key + "'");
      e.forms[slot->slot] = value;
    }
  }
  auto list = [](const std::string& f) {
    std::vector<std::string> out;
    if (f.empty()) return out;
    for (auto& s : split(f, ';'))
      if (auto t = trim(s); !t.empty()) out.push_back(t);
    return out;
  };
  e.synonyms = list(fields[4]);
  e.abbreviations = list(fields[5]);
  return e;
}

std::string Lexicon::format_record(const LexEntry& e) {
  std::vector<std::string> feats;
  if (e.kind == NounKind::Count) feats.emplace_back("count");
  if (e.kind == NounKind::Mass) feats.emplace_back("mass");
  if (e.gender != Gender::None) feats.emplace_back(to_string(e.gender));
  std::vector<std::string> forms;
  for (const auto& [slot, surface] : e.forms) forms.push_back(std::string(to_string(slot)) + "=" + surface);
  return std::string(to_string(e.word_class)) + "|" + e.lemma + "|" + join(feats, ',') + "|" + join(forms, ';') +
         "|" + join(e.synonyms, ';') + "|" + join(e.abbreviations, ';');
}

Lexicon Lexicon::read(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto entry = parse_record(t, line_no);
    try {
      lex.add_entry(std::move(entry));
    } catch (const Error& err) {
      throw Error(ErrorCode::LexiconParse, "line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::LexiconParse, "cannot open lexicon file " + path.string());
  return read(in);
}

void Lexicon::write(std::ostream& out) const {
  for (const auto& e : content_) out << format_record(*e) << '\n';
}

void Lexicon::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::LexiconParse, "cannot write lexicon file " + path.string());
  write(out);
}

bool operator==(const Lexicon& a, const Lexicon& b) {
  return std::equal(a.content_.begin(), a.content_.end(), b.content_.begin(), b.content_.end(),
                    [](const EntryPtr& x, const EntryPtr& y) { return *x == *y; });
}

}  // namespace ace
