#include "ace/error.hpp"

namespace ace {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateSurface: return "duplicate-surface";
    case ErrorCode::MissingTemplateField: return "missing-template-field";
    case ErrorCode::InvalidEntry: return "invalid-entry";
    case ErrorCode::ModalRejected: return "modal-rejected";
    case ErrorCode::LexiconParse: return "lexicon-parse";
    case ErrorCode::UnterminatedSentence: return "unterminated-sentence";
    case ErrorCode::UnknownWords: return "unknown-words";
    case ErrorCode::SyntaxError: return "syntax-error";
    case ErrorCode::ModalVerbRejected: return "modal-verb-rejected";
    case ErrorCode::ParticipleRejected: return "participle-rejected";
    case ErrorCode::NonPresentTenseRejected: return "non-present-tense-rejected";
    case ErrorCode::PassiveRejected: return "passive-rejected";
    case ErrorCode::NegatedQuestion: return "negated-question";
    case ErrorCode::UnresolvedPronoun: return "unresolved-pronoun";
    case ErrorCode::NegatedDisjunctionAmbiguous: return "negated-disjunction-ambiguous";
    case ErrorCode::UntranslatableDisjunction: return "untranslatable-disjunction";
    case ErrorCode::NonAtomicNegation: return "non-atomic-negation";
    case ErrorCode::DepthLimitExceeded: return "depth-limit-exceeded";
    case ErrorCode::Floundering: return "floundering";
    case ErrorCode::InconsistentAssertion: return "inconsistent-assertion";
    case ErrorCode::MalformedAssertion: return "malformed-assertion";
    case ErrorCode::OracleExhausted: return "oracle-exhausted";
    case ErrorCode::SessionFormat: return "session-format";
  }
  return "unknown";
}

ErrorClass error_class(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateSurface:
    case ErrorCode::MissingTemplateField:
    case ErrorCode::InvalidEntry:
    case ErrorCode::ModalRejected:
    case ErrorCode::LexiconParse:
      return ErrorClass::Lexicon;
    case ErrorCode::UnterminatedSentence:
    case ErrorCode::UnknownWords:
    case ErrorCode::SyntaxError:
    case ErrorCode::ModalVerbRejected:
    case ErrorCode::ParticipleRejected:
    case ErrorCode::NonPresentTenseRejected:
    case ErrorCode::PassiveRejected:
    case ErrorCode::NegatedQuestion:
      return ErrorClass::Parse;
    case ErrorCode::UnresolvedPronoun:
    case ErrorCode::NegatedDisjunctionAmbiguous:
      return ErrorClass::Resolution;
    case ErrorCode::UntranslatableDisjunction:
    case ErrorCode::NonAtomicNegation:
      return ErrorClass::Translation;
    case ErrorCode::DepthLimitExceeded:
    case ErrorCode::Floundering:
      return ErrorClass::Engine;
    case ErrorCode::InconsistentAssertion:
    case ErrorCode::MalformedAssertion:
    case ErrorCode::OracleExhausted:
      return ErrorClass::Execution;
    case ErrorCode::SessionFormat:
      return ErrorClass::Input;
  }
  return ErrorClass::Input;
}

Error::Error(ErrorCode code, const std::string& message, std::optional<Span> span,
             std::vector<std::string> words)
    : std::runtime_error(message), diag_{code, message, span, std::move(words)} {}

}  // namespace ace
