#pragma once

#include <string_view>
#include <vector>

#include "ace/error.hpp"
#include "ace/lexicon.hpp"
#include "ace/syntax.hpp"
#include "ace/tokenizer.hpp"

namespace ace {

struct ParseResult {
  SyntaxTree tree;
  SentenceKind kind;
  std::vector<Diagnostic> diagnostics;  // non-fatal notes; failures throw
};

// Deterministic recursive descent over one tokenized sentence. Throws Error
// with UnknownWords, ModalVerbRejected, ParticipleRejected,
// NonPresentTenseRejected, PassiveRejected, NegatedQuestion or SyntaxError.
ParseResult parse_sentence(const std::vector<Token>& tokens, const Lexicon& lexicon);

// tokenize + parse_sentence.
ParseResult parse_sentence(std::string_view sentence, const Lexicon& lexicon);

}  // namespace ace
