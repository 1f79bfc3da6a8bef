#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ace/error.hpp"
#include "ace/lexicon.hpp"

namespace ace {

enum class TokenKind { Word, Numeral, Punctuation };

struct Token {
  std::string surface;
  Span span;
  TokenKind kind = TokenKind::Word;

  friend bool operator==(const Token&, const Token&) = default;
};

// Splits one sentence into tokens. Multi-word lexicon surfaces (compound
// nouns, analytic comparatives) are merged longest-first into one word token.
// The last token must be '.' or '?'.
std::vector<Token> tokenize(std::string_view sentence, const Lexicon& lexicon);

// Splits a text into sentences at '.' and '?' (a '.' between digits is a
// decimal point). Throws UnterminatedSentence on trailing text.
std::vector<std::string> split_sentences(std::string_view text);

}  // namespace ace
