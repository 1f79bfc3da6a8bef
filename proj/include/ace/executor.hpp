#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ace/discourse.hpp"
#include "ace/engine.hpp"
#include "ace/lexicon.hpp"

namespace ace {

// "<name> is a <sort>", "<name> is not a <sort>", "<name> is [not] <adjective>".
struct Assertion {
  enum class Kind { Sort, Property };
  std::string name;
  Kind kind = Kind::Sort;
  std::string pred;
  bool positive = true;
  std::string text;
};

Assertion parse_assertion(std::string_view text, const Lexicon& lexicon);
std::vector<Assertion> load_definitions(std::istream& in, const Lexicon& lexicon);
std::vector<Assertion> load_definitions(const std::filesystem::path& path, const Lexicon& lexicon);

struct OracleRequest {
  enum class Kind { Instantiation, Truth };
  Kind kind = Kind::Instantiation;
  std::string sort;    // requested sort, e.g. "personal_code"
  std::string atom;    // Truth: the ground atom asked about, e.g. "valid(1234)"
  std::string prompt;  // human-readable question
};

struct TranscriptLine {
  enum class Kind { User, Event };
  Kind kind;
  std::string text;

  std::string str() const { return (kind == Kind::User ? "user: " : "event: ") + text; }
};

// Walks the specification in textual order. Whenever a fact about the
// situation is missing, run() stops with a pending request; reply() supplies
// the answer and continues. The run is a pure function of the specification,
// the definitions and the replies so far.
class Execution {
 public:
  Execution(Discourse discourse, KnowledgeBase kb, Lexicon lexicon, std::vector<Assertion> definitions = {});

  void run();
  const std::optional<OracleRequest>& pending() const { return pending_; }
  // Throws MalformedAssertion or InconsistentAssertion and keeps the state.
  void reply(const std::string& text);
  bool finished() const { return started_ && !pending_; }
  const std::vector<TranscriptLine>& transcript() const { return transcript_; }
  std::vector<std::string> unused_definitions() const;

 private:
  void rerun();

  Discourse discourse_;
  KnowledgeBase kb_;
  Lexicon lexicon_;
  std::vector<Assertion> definitions_;
  std::vector<bool> used_;
  std::vector<std::string> replies_;
  std::vector<TranscriptLine> transcript_;
  std::optional<OracleRequest> pending_;
  bool started_ = false;
};

class Oracle {
 public:
  virtual ~Oracle() = default;
  // nullopt when no more answers are available.
  virtual std::optional<std::string> answer(const OracleRequest& request) = 0;
};

class ScriptedOracle : public Oracle {
 public:
  explicit ScriptedOracle(std::vector<std::string> lines) : lines_(std::move(lines)) {}
  std::optional<std::string> answer(const OracleRequest&) override;

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

class ConsoleOracle : public Oracle {
 public:
  ConsoleOracle(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
  std::optional<std::string> answer(const OracleRequest& request) override;

 private:
  std::istream& in_;
  std::ostream& out_;
};

// Blocking run against an oracle. Throws OracleExhausted when the oracle has
// no answer for a pending request.
std::vector<TranscriptLine> execute(Execution& execution, Oracle& oracle);

}  // namespace ace
