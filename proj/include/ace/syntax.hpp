#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ace/error.hpp"
#include "ace/lexicon.hpp"
#include "ace/tokenizer.hpp"

namespace ace {

// Owning, deep-copying, nullable pointer for recursive tree members.
template <class T>
class Box {
 public:
  Box() = default;
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  explicit operator bool() const { return static_cast<bool>(ptr_); }
  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

// A lexical leaf: the token as written plus the entry and slot it resolved to.
struct Word {
  std::string surface;
  Span span;
  EntryPtr entry;
  FormSlot slot = FormSlot::Base;

  std::string lower() const { return to_lower(surface); }
  const std::string& lemma() const { return entry->lemma; }
};

struct Features {
  Number number = Number::Sg;
  Gender gender = Gender::None;
  int person = 3;
};

enum class NpKind {
  Indefinite,  // a card, bare mass noun
  Definite,    // the card
  Negative,    // no card
  Proper,      // SimpleMat, SM
  Pronoun,     // it
  Numeral,     // 1234
  Cardinal,    // two cards, 3 cards
  Wh,          // who, what
};

enum class Connective { None, And, Or, EitherOr, NeitherNor };

struct RelativeClause;

struct NounPhrase {
  int id = -1;
  NpKind kind = NpKind::Indefinite;
  std::optional<Word> determiner;  // article, "no", number word
  std::vector<Word> adjectives;
  std::optional<Word> head;  // noun, proper noun, pronoun or wh-word
  std::string numeral;       // numeral text for Numeral and numeric Cardinal
  long count = 1;            // Cardinal only
  Features features;
  Span span;
  Box<RelativeClause> relative;
};

struct PrepPhrase {
  Word preposition;
  NounPhrase object;
};

enum class VpKind { Verb, CopulaAdjective, CopulaNoun };

struct VerbPhrase {
  int id = -1;
  VpKind kind = VpKind::Verb;
  bool negated = false;
  std::optional<Word> auxiliary;  // "does"/"do" before a negated or questioned verb
  Word verb;                      // main verb, or the copula for copula phrases
  Connective object_connective = Connective::None;
  std::vector<NounPhrase> objects;  // predicate nominal for CopulaNoun
  std::optional<Word> adjective;    // CopulaAdjective
  std::vector<PrepPhrase> modifiers;
  std::vector<Word> adverbs;
  bool attachment_ambiguous = false;  // PP after an object: could have gone to the NP
  Span span;
};

struct RelativeClause {
  Word pronoun;
  VerbPhrase body;
  bool attachment_ambiguous = false;  // more than one NP to the left could host it
};

enum class Distribution { Default, Each, Together };

struct SimpleSentence {
  int id = -1;
  std::vector<NounPhrase> subjects;  // joined by "and" when more than one
  Distribution distribution = Distribution::Default;
  std::optional<Word> distribution_word;
  Connective predicate_connective = Connective::None;
  std::vector<VerbPhrase> predicates;
};

struct Coordination {
  Connective connective = Connective::None;
  std::vector<SimpleSentence> sentences;
};

struct Conditional {
  Coordination antecedent;
  Coordination consequent;
};

enum class SentenceKind { Declarative, YesNoQuestion, WhQuestion };
enum class RootCategory { Decl, IfThen, Coord, Neg, YesNoQ, WhQ };

struct Attachment {
  enum class Kind { PrepositionalPhrase, RelativeClause };
  Kind kind;
  int host;  // VP id for prepositional phrases, NP id for relative clauses
  Span span;
  bool ambiguous;
  std::string rule;  // "minimal-attachment" or "right-association"
};

struct SyntaxTree {
  SentenceKind kind = SentenceKind::Declarative;
  std::variant<Coordination, Conditional> body;
  std::vector<Attachment> attachments;
  std::vector<Token> tokens;

  RootCategory root() const;
  bool is_question() const { return kind != SentenceKind::Declarative; }
};

// Structural dump used by determinism checks and `show tree`.
std::string to_string(const SyntaxTree& tree);

}  // namespace ace
