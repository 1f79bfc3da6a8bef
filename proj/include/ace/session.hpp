#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ace/discourse.hpp"
#include "ace/engine.hpp"
#include "ace/executor.hpp"
#include "ace/lexicon.hpp"
#include "ace/paraphrase.hpp"
#include "ace/translator.hpp"

namespace ace {

// Operation not allowed in the current state (decision without a pending
// sentence and the like).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Analysis {
  std::string text;
  SyntaxTree tree;
  ResolutionReport report;
  Paraphrase paraphrase;
  std::string drs_text;  // the whole DRS as it would be after acceptance
  std::vector<Diagnostic> diagnostics;
  Discourse extended;
};

class Session {
 public:
  explicit Session(Lexicon lexicon = {});

  const Lexicon& lexicon() const { return lexicon_; }
  void add_word(const LexEntry& entry);
  bool remove_word(std::string_view lemma);

  // Parses and interprets a declarative sentence and holds it pending,
  // replacing any previous pending sentence. Throws Error on linguistic
  // failure; the session is unchanged then.
  const Analysis& submit(std::string_view text);
  const std::optional<Analysis>& pending() const { return pending_; }
  // Both throw StateError without a pending sentence. accept() returns the
  // clause text of the whole session.
  std::string accept();
  void reject();

  QueryOutcome ask(std::string_view question) const;
  Execution start_execution(std::vector<Assertion> definitions = {}) const;

  const Discourse& discourse() const { return discourse_; }
  const KnowledgeBase& kb() const { return kb_; }
  const Translation& translation() const { return translation_; }
  const std::vector<std::string>& sentences() const { return sentences_; }
  const std::vector<std::string>& paraphrases() const { return paraphrases_; }
  std::string drs_text() const;
  std::string clauses_text() const;

  // {"lexicon":[{"add":record}|{"remove":lemma}...],"sentences":[...]};
  // loading replays both.
  std::string to_json() const;
  static Session from_json(std::string_view json, Lexicon base = {});
  void save(const std::filesystem::path& path) const;
  static Session load(const std::filesystem::path& path, Lexicon base = {});

 private:
  void rebuild_kb();

  Lexicon lexicon_;
  std::vector<std::pair<bool, std::string>> lexicon_edits_;  // add record / remove lemma
  Discourse discourse_;
  Translation translation_;
  KnowledgeBase kb_;
  std::vector<std::string> sentences_;
  std::vector<std::string> paraphrases_;
  std::optional<Analysis> pending_;
};

}  // namespace ace
