#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ace {

enum class WordClass {
  CommonNoun,
  ProperNoun,
  Verb,
  Adjective,
  Adverb,
  Preposition,
  Determiner,
  Pronoun,
  Conjunction,
  NumberWord,
};

enum class NounKind { Count, Mass, None };
enum class Gender { Masc, Fem, Neut, None };
enum class Number { Sg, Pl };

// Slots of the inflection table. Synonym and Abbreviation are only ever
// returned by lookup; they are never stored in LexEntry::forms.
enum class FormSlot { Sg, Pl, ThirdSg, ThirdPl, Base, Comparative, Superlative, Synonym, Abbreviation };

std::string_view to_string(WordClass c);
std::string_view to_string(Gender g);
std::string_view to_string(FormSlot s);
std::optional<WordClass> word_class_from_string(std::string_view s);

struct LexEntry {
  std::string lemma;  // lowercase, may contain spaces for compounds
  WordClass word_class = WordClass::CommonNoun;
  NounKind kind = NounKind::None;
  Gender gender = Gender::None;
  std::map<FormSlot, std::string> forms;
  std::vector<std::string> synonyms;
  std::vector<std::string> abbreviations;
  std::optional<long> value;  // number words only
  bool builtin = false;

  bool compound() const { return lemma.find(' ') != std::string::npos; }
  // Predicate symbol used in conditions and clauses: "personal code" -> "personal_code".
  std::string predicate() const;
  // Surface for a slot, falling back to the lemma.
  std::string surface(FormSlot slot) const;

  friend bool operator==(const LexEntry&, const LexEntry&) = default;
};

using EntryPtr = std::shared_ptr<const LexEntry>;

struct LexMatch {
  EntryPtr entry;
  FormSlot slot;
};

// Inflected verb forms ACE does not admit, recognised so the parser can say why.
struct VerbInflection {
  enum class Kind { EdForm, IngForm };
  EntryPtr verb;
  Kind kind;
};

// Regular morphology used by the template interface.
std::string regular_plural(std::string_view noun);
std::string regular_third_singular(std::string_view verb);
int syllable_count(std::string_view word);
std::pair<std::string, std::string> regular_comparison(std::string_view adjective);

bool is_modal_verb(std::string_view word);
bool is_modal_adjective(std::string_view word);

std::string to_lower(std::string_view s);

// Function words are fixed at construction; content words are added through
// the template interface. Copies share entries, so a Lexicon is a cheap value.
class Lexicon {
 public:
  Lexicon();

  // Validates the entry against its template, fills regular forms and indexes
  // every surface. Throws Error on DuplicateSurface, MissingTemplateField,
  // ModalRejected or InvalidEntry.
  void add_entry(LexEntry entry);
  bool remove_entry(std::string_view lemma);

  std::vector<LexMatch> lookup(std::string_view surface) const;
  std::optional<LexMatch> lookup(std::string_view surface, WordClass cls) const;
  EntryPtr find(std::string_view lemma, WordClass cls) const;
  std::optional<VerbInflection> verb_inflection(std::string_view surface) const;

  const std::vector<EntryPtr>& content_words() const { return content_; }
  std::size_t max_surface_words() const { return max_words_; }
  long version() const { return version_; }

  // Line format: class|lemma|features|forms|synonyms|abbreviations
  static LexEntry parse_record(std::string_view line, std::size_t line_no = 0);
  static std::string format_record(const LexEntry& entry);

  static Lexicon read(std::istream& in);
  static Lexicon load(const std::filesystem::path& path);
  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;

  friend bool operator==(const Lexicon& a, const Lexicon& b);

 private:
  void index(const EntryPtr& entry);
  void unindex(const EntryPtr& entry);
  void add_builtin(LexEntry entry);
  std::vector<std::pair<std::string, FormSlot>> surfaces(const LexEntry& e) const;

  std::vector<EntryPtr> function_;
  std::vector<EntryPtr> content_;
  std::unordered_map<std::string, std::vector<LexMatch>> index_;
  std::size_t max_words_ = 1;
  long version_ = 0;
};

}  // namespace ace
