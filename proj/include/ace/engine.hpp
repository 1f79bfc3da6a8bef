#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ace/discourse.hpp"
#include "ace/logic.hpp"
#include "ace/syntax.hpp"
#include "ace/translator.hpp"

namespace ace {

class KnowledgeBase {
 public:
  // Replaces whatever the sentence contributed before.
  void assimilate(int sentence, std::vector<Clause> clauses, std::vector<Untranslated> untranslated = {});
  void retract(int sentence);
  void clear();

  std::vector<Clause> program() const;  // facts and rules, provenance order
  std::vector<Clause> denials() const;
  std::vector<Untranslated> untranslated() const;
  std::vector<Clause> all() const;
  std::size_t size() const;
  long version() const { return version_; }

 private:
  struct Part {
    std::vector<Clause> clauses;
    std::vector<Untranslated> untranslated;
  };
  std::map<int, Part> parts_;
  long version_ = 0;
};

struct Query {
  std::vector<Literal> goals;
  std::vector<std::string> distinguished;  // variable names; empty for yes/no
};

enum class Verdict { Yes, No, Unknown };

struct ProofResult {
  Verdict verdict = Verdict::No;
  std::optional<Diagnostic> diagnostic;
};

struct Solutions {
  std::vector<std::vector<Term>> bindings;  // one term per distinguished variable
  std::optional<Diagnostic> diagnostic;     // set when the search was cut short
};

constexpr int kDefaultDepthLimit = 512;

ProofResult prove(const Query& query, const KnowledgeBase& kb, int depth_limit = kDefaultDepthLimit);
Solutions solve(const Query& query, const KnowledgeBase& kb, int depth_limit = kDefaultDepthLimit);

struct PreparedQuery {
  SyntaxTree tree;
  QueryDrs drs;
  Query query;
};

// Resolves the question against the session discourse and turns its box into
// goals. Referents the question introduces become variables.
PreparedQuery build_query(const SyntaxTree& tree, const Discourse& discourse);

struct Answer {
  std::vector<Term> binding;
  std::string text;  // "Answer: ..."
};

class AnswerStream {
 public:
  AnswerStream() = default;
  explicit AnswerStream(std::vector<Answer> answers) : answers_(std::move(answers)) {}

  std::vector<Answer> next(std::size_t n = 1);
  bool exhausted() const { return pos_ >= answers_.size(); }
  std::size_t size() const { return answers_.size(); }
  std::size_t position() const { return pos_; }
  void seek(std::size_t pos) { pos_ = std::min(pos, answers_.size()); }

 private:
  std::vector<Answer> answers_;
  std::size_t pos_ = 0;
};

std::string render_verdict(Verdict v);

// "[a customer]", "[simplemat]", "[1234]".
std::string generate_answer(const Term& term, const Discourse& discourse);

struct QueryOutcome {
  SentenceKind kind = SentenceKind::YesNoQuestion;
  AnswerStream answers;  // yes/no questions carry exactly one answer
  std::optional<Diagnostic> diagnostic;
};

QueryOutcome answer_question(const SyntaxTree& tree, const Discourse& discourse, const KnowledgeBase& kb);

}  // namespace ace
