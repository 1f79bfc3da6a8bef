#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ace {

// Byte offsets into the text a diagnostic refers to, half-open.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

enum class ErrorCode {
  // lexicon
  DuplicateSurface,
  MissingTemplateField,
  InvalidEntry,
  ModalRejected,
  LexiconParse,
  // parsing
  UnterminatedSentence,
  UnknownWords,
  SyntaxError,
  ModalVerbRejected,
  ParticipleRejected,
  NonPresentTenseRejected,
  PassiveRejected,
  NegatedQuestion,
  // discourse
  UnresolvedPronoun,
  NegatedDisjunctionAmbiguous,
  // translation
  UntranslatableDisjunction,
  NonAtomicNegation,
  // engine
  DepthLimitExceeded,
  Floundering,
  // execution
  InconsistentAssertion,
  MalformedAssertion,
  OracleExhausted,
  // sessions and files
  SessionFormat,
};

// Coarse grouping used for exit codes and HTTP status mapping.
enum class ErrorClass { Lexicon, Parse, Resolution, Translation, Engine, Execution, Input };

std::string_view code_name(ErrorCode code);
ErrorClass error_class(ErrorCode code);

struct Diagnostic {
  ErrorCode code;
  std::string message;
  std::optional<Span> span;
  std::vector<std::string> words;  // unknown words, offending literals
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::optional<Span> span = std::nullopt,
        std::vector<std::string> words = {});

  ErrorCode code() const noexcept { return diag_.code; }
  const Diagnostic& diagnostic() const noexcept { return diag_; }

 private:
  Diagnostic diag_;
};

}  // namespace ace
